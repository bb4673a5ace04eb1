"""Independent ground truth: classical Lie algebras as explicit matrix
algebras, generic nilradical elements, and exact-arithmetic Jordan types
and centralizer dimensions.

Everything here is exact.  Jordan types come from ranks of integer matrix
powers via fraction-free elimination.  Centralizer dimensions (the
genericity certificate ``dim g^X = dim m``) use a rigorous two-sided
squeeze: ``dim m`` is always a lower bound for the kernel of ``ad(X)`` on
``g`` when X lies in the nilradical, and a modular rank gives an upper
bound, so agreement certifies the exact value; :meth:`ExactMatrix.rank`
(pure Bareiss over the integers) is the reference and the fallback.  No
floating point is used anywhere.
"""

from __future__ import annotations

import random
import warnings
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .core import (
    BlockVector,
    Coloring,
    LieKind,
    UnsupportedKindError,
    coloring_from_blocks,
)
from .partitions import partition_from_kernel_dims

__all__ = [
    "ExactMatrix",
    "NotNilpotentError",
    "MembershipError",
    "MatrixRealization",
    "realization",
    "nilradical_basis",
    "levi_dim",
    "orbit_dim_classical",
    "generic_nilradical_element",
    "jordan_partition",
    "centralizer_dim",
    "oracle_richardson_partition",
    "levi_blocks_from_matrices",
]

COEFF_RANGE = (1, 10**6)

# primes below 2**31 so GF(p) products fit in int64
_PRIMES = (2_147_483_647, 2_147_483_629)


class NotNilpotentError(ValueError):
    """Matrix fed to a Jordan-type computation is not nilpotent."""


class MembershipError(ValueError):
    """Matrix does not lie in the expected Lie algebra."""


class ExactMatrix:
    """Dense matrix over exact integers (or rationals), with exact rank."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data: Sequence[Sequence[int]]):
        self.data = tuple(tuple(x for x in row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"ExactMatrix({self.rows}x{self.cols})"

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def trace(self):
        return sum(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.data, other.data)
            ]
        )

    def scaled(self, c) -> "ExactMatrix":
        return ExactMatrix([[c * x for x in row] for row in self.data])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        bt = list(zip(*other.data))
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.data]
        )

    def transposed(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.data)))

    def rank(self) -> int:
        """Exact rank by fraction-free (Bareiss) elimination over Z."""
        return _int_rank(_integer_rows(self.data))

    def kernel_dim(self) -> int:
        return self.cols - self.rank()


def bracket(x: ExactMatrix, y: ExactMatrix) -> ExactMatrix:
    return (x @ y) + (y @ x).scaled(-1)


def _integer_rows(data: Iterable[Sequence]) -> list[list[int]]:
    """Clear denominators row by row (rank is unchanged)."""
    out: list[list[int]] = []
    for row in data:
        if any(isinstance(x, Fraction) for x in row):
            denom = 1
            for x in row:
                if isinstance(x, Fraction):
                    denom = denom * x.denominator // _gcd(denom, x.denominator)
            out.append([int(x * denom) for x in row])
        else:
            out.append([int(x) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _int_rank(m: list[list[int]]) -> int:
    """Rank of an integer matrix, fraction-free elimination, exact division."""
    nr = len(m)
    nc = len(m[0]) if nr else 0
    rank = 0
    prev = 1
    for col in range(nc):
        if rank == nr:
            break
        piv_row = next((i for i in range(rank, nr) if m[i][col]), None)
        if piv_row is None:
            continue
        if piv_row != rank:
            m[rank], m[piv_row] = m[piv_row], m[rank]
        piv = m[rank][col]
        top = m[rank]
        for i in range(rank + 1, nr):
            row = m[i]
            f = row[col]
            for j in range(col + 1, nc):
                row[j] = (piv * row[j] - f * top[j]) // prev
            row[col] = 0
        prev = piv
        rank += 1
    return rank


def _rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank over GF(p); a lower bound for the rank over Q."""
    a = np.mod(a.astype(np.int64), p)
    nr, nc = a.shape
    rank = 0
    for col in range(nc):
        if rank == nr:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        f = (a[rank + 1 :, col] * inv) % p
        a[rank + 1 :, col:] = (a[rank + 1 :, col:] - f[:, None] * a[rank, col:]) % p
        rank += 1
    return rank


# ---------------------------------------------------------------------------
# matrix realizations (skew-diagonal forms, upper-triangular Borel)


class MatrixRealization:
    """A classical Lie algebra realized inside gl_N.

    Type A: trace-zero matrices.  B/D: the orthogonal algebra of the
    symmetric form with 1s on the skew diagonal.  C: the symplectic algebra
    of the skew-diagonal form whose first n entries are 1 and last n are -1.
    """

    def __init__(self, kind: LieKind):
        if not kind.is_classical:
            raise UnsupportedKindError(f"no matrix realization for {kind.name}")
        self.kind = kind
        self.N = kind.matrix_size
        self.form = _form_matrix(kind)
        self.basis = tuple(_basis_matrices(kind))
        self._np_basis = np.array([m.data for m in self.basis], dtype=np.int64)
        assert len(self.basis) == kind.dim

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, x: ExactMatrix) -> bool:
        if x.rows != self.N or x.cols != self.N:
            return False
        if self.form is None:
            return x.trace() == 0
        return (x.transposed() @ self.form + self.form @ x).is_zero()


def _form_matrix(kind: LieKind) -> ExactMatrix | None:
    N = kind.matrix_size
    fam = kind.family
    if fam == "A":
        return None
    rows = [[0] * N for _ in range(N)]
    for i in range(N):
        if fam == "C":
            rows[i][N - 1 - i] = 1 if i < N // 2 else -1
        else:
            rows[i][N - 1 - i] = 1
    return ExactMatrix(rows)


def _single(N: int, i: int, j: int, v: int = 1) -> list[list[int]]:
    rows = [[0] * N for _ in range(N)]
    rows[i][j] = v
    return rows


def _sign(N: int, i: int) -> int:
    # symplectic form signs (0-based): +1 in the first half, -1 in the second
    return 1 if i < N // 2 else -1


def _pair_element(fam: str, N: int, i: int, j: int) -> ExactMatrix | None:
    """Basis element of so/sp with leading entry at (i, j), or None if zero."""
    pi, pj = N - 1 - j, N - 1 - i
    if (i, j) == (pi, pj):  # skew diagonal
        if fam == "C":
            return ExactMatrix(_single(N, i, j))
        return None
    rows = _single(N, i, j)
    rows[pi][pj] = -(_sign(N, i) * _sign(N, j)) if fam == "C" else -1
    return ExactMatrix(rows)


def _basis_matrices(kind: LieKind) -> list[ExactMatrix]:
    N = kind.matrix_size
    fam = kind.family
    out: list[ExactMatrix] = []
    if fam == "A":
        for i in range(N - 1):  # Cartan: E_ii - E_{i+1,i+1}
            rows = _single(N, i, i)
            rows[i + 1][i + 1] = -1
            out.append(ExactMatrix(rows))
        for i in range(N):
            for j in range(N):
                if i != j:
                    out.append(ExactMatrix(_single(N, i, j)))
        return out
    seen: set[tuple[int, int]] = set()
    for i in range(N):
        for j in range(N):
            if (i, j) in seen:
                continue
            seen.add((i, j))
            seen.add((N - 1 - j, N - 1 - i))
            elt = _pair_element(fam, N, i, j)
            if elt is not None:
                out.append(elt)
    return out


@lru_cache(maxsize=None)
def realization(kind: LieKind) -> MatrixRealization:
    return MatrixRealization(kind)


# ---------------------------------------------------------------------------
# nilradicals and Levi factors


def _block_index(blocks: Sequence[int]) -> list[int]:
    idx: list[int] = []
    for k, size in enumerate(blocks):
        idx += [k] * size
    return idx


def _region_basis(b: BlockVector, same_block: bool) -> list[ExactMatrix]:
    """Basis elements supported on the strict-upper-block (or diagonal-block)
    region, in row-major order of leading position."""
    kind = b.kind
    N = kind.matrix_size
    fam = kind.family
    blk = _block_index(b.full_blocks())

    def in_region(i: int, j: int) -> bool:
        return blk[i] == blk[j] if same_block else blk[i] < blk[j]

    out: list[ExactMatrix] = []
    if fam == "A":
        if same_block:
            for i in range(N - 1):
                rows = _single(N, i, i)
                rows[i + 1][i + 1] = -1
                out.append(ExactMatrix(rows))
        for i in range(N):
            for j in range(N):
                if i != j and in_region(i, j):
                    out.append(ExactMatrix(_single(N, i, j)))
        return out
    seen: set[tuple[int, int]] = set()
    for i in range(N):
        for j in range(N):
            if (i, j) in seen or not in_region(i, j):
                continue
            seen.add((i, j))
            seen.add((N - 1 - j, N - 1 - i))
            elt = _pair_element(fam, N, i, j)
            if elt is not None:
                out.append(elt)
    return out


def nilradical_basis(b: BlockVector) -> list[ExactMatrix]:
    """Basis of the nilradical (strictly upper-block part of g)."""
    return _region_basis(b, same_block=False)


def levi_dim(b: BlockVector) -> int:
    """dim m: block-diagonal part of g, counted from the realization."""
    return len(_region_basis(b, same_block=True))


def orbit_dim_classical(b: BlockVector) -> int:
    """Dimension of the Richardson orbit: dim g - dim m."""
    return b.kind.dim - levi_dim(b)


def generic_nilradical_element(b: BlockVector, seed: int) -> ExactMatrix:
    """Random integer combination of the nilradical basis, deterministic in seed."""
    rng = random.Random(seed)
    basis = nilradical_basis(b)
    N = b.kind.matrix_size
    total = [[0] * N for _ in range(N)]
    for elt in basis:
        c = rng.randint(*COEFF_RANGE)
        for i, row in enumerate(elt.data):
            for j, v in enumerate(row):
                if v:
                    total[i][j] += c * v
    return ExactMatrix(total)


# ---------------------------------------------------------------------------
# Jordan types and centralizers


def jordan_partition(x: ExactMatrix) -> tuple[int, ...]:
    """Jordan type of a nilpotent matrix from exact kernel dimensions of powers."""
    if x.rows != x.cols:
        raise ValueError("square matrix required")
    n = x.rows
    kdims = [0]
    power = ExactMatrix.identity(n)
    for _ in range(n):
        power = power @ x
        kdims.append(n - power.rank())
        if kdims[-1] == n:
            return partition_from_kernel_dims(kdims)
    raise NotNilpotentError(f"kernel dimensions stalled at {kdims[-1]} < {n}")


def _ad_rows(real: MatrixRealization, x: ExactMatrix) -> list[list[int]]:
    rows = []
    for elt in real.basis:
        rows.append([v for row in bracket(x, elt).data for v in row])
    return rows


def _ad_rows_np(real: MatrixRealization, x: ExactMatrix) -> np.ndarray:
    xn = np.array(x.data, dtype=np.int64)
    basis = real._np_basis
    ad = np.einsum("ab,kbc->kac", xn, basis) - np.einsum("kab,bc->kac", basis, xn)
    return ad.reshape(real.dim, real.N * real.N)


def centralizer_dim(real: MatrixRealization, x: ExactMatrix) -> int:
    """dim {Y in g : [X, Y] = 0}, via the exact rank of ad(X) on g."""
    if not real.contains(x):
        raise MembershipError(f"matrix is not in {real.kind.name}")
    return real.dim - _int_rank(_ad_rows(real, x))


def certified_centralizer_dim(
    real: MatrixRealization, x: ExactMatrix, lower_bound: int
) -> tuple[int, bool]:
    """Centralizer dimension with a fast certificate.

    ``lower_bound`` must be a proven lower bound for dim g^X (dim m works for
    any X in the nilradical).  A modular rank bounds the kernel from above;
    if the bounds meet, the value is exact and certified.  Otherwise the
    smallest modular kernel is returned uncertified.
    """
    ad = _ad_rows_np(real, x)
    best = real.dim
    for p in _PRIMES:
        kernel = real.dim - _rank_mod_p(ad, p)
        if kernel < lower_bound:
            raise AssertionError(
                f"modular kernel {kernel} below proven lower bound {lower_bound}"
            )
        best = min(best, kernel)
        if kernel == lower_bound:
            return kernel, True
    return best, False


def _partial_sums(lam: Sequence[int], length: int) -> tuple[int, ...]:
    out = []
    total = 0
    for i in range(length):
        total += lam[i] if i < len(lam) else 0
        out.append(total)
    return tuple(out)


def oracle_partition_detail(
    b: BlockVector, trials: int = 3, base_seed: int = 1
) -> tuple[tuple[int, ...], bool]:
    """Jordan type of a generic nilradical element plus a genericity flag.

    Runs seeds base_seed .. base_seed+trials-1, keeps the dominance-largest
    Jordan type, and certifies genericity of the winning sample by
    dim g^X = dim m.
    """
    if trials < 1:
        raise ValueError("trials must be positive")
    real = realization(b.kind)
    target = levi_dim(b)
    n = b.kind.matrix_size
    best: tuple[int, ...] | None = None
    best_cert = False
    for t in range(trials):
        x = generic_nilradical_element(b, base_seed + t)
        lam = jordan_partition(x)
        if best is None or _partial_sums(lam, n) > _partial_sums(best, n):
            _, cert = certified_centralizer_dim(real, x, target)
            best, best_cert = lam, cert
    assert best is not None
    return best, best_cert


def oracle_richardson_partition(
    b: BlockVector, trials: int = 3, base_seed: int = 1
) -> tuple[int, ...]:
    """Jordan type of a generic nilradical element, by randomized sampling.

    A warning is emitted when no sample certifies as generic.
    """
    best, best_cert = oracle_partition_detail(b, trials, base_seed)
    if not best_cert:
        warnings.warn(
            f"no sample certified generic for {b.kind.name} d={b.d} central={b.central}; "
            "returning the dominance-largest Jordan type found",
            RuntimeWarning,
            stacklevel=2,
        )
    return best


# ---------------------------------------------------------------------------
# independent Levi-block extraction


def _solve_fraction(system: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square linear system exactly (unique solution expected)."""
    n = len(system)
    m = [row[:] + [rhs[i]] for i, row in enumerate(system)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise ValueError("singular grading system")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def levi_blocks_from_matrices(descriptor: Coloring | BlockVector) -> BlockVector:
    """Blocks of the standard Levi, read off the realization's grading element.

    Solves alpha_i(H) = u_i for the diagonal of H by exact linear algebra
    (independently of the conversion in :mod:`.core`) and returns the maximal
    constant runs of diag(2H).
    """
    if isinstance(descriptor, BlockVector):
        col = coloring_from_blocks(descriptor)
    else:
        col = descriptor
    if not col.kind.is_classical:
        raise UnsupportedKindError(f"{col.kind.name} has no matrix realization")
    col = col.canonical()
    kind, u = col.kind, col.u
    n = kind.rank
    N = kind.matrix_size
    F = Fraction
    if kind.family == "A":
        system = [[F(0)] * N for _ in range(N)]
        rhs = [F(0) for _ in range(N)]
        for i in range(n):
            system[i][i] = F(1)
            system[i][i + 1] = F(-1)
            rhs[i] = F(u[i])
        system[n] = [F(1)] * N  # trace normalization
        a = _solve_fraction(system, rhs)
        diag = [2 * x for x in a]
    else:
        system = [[F(0)] * n for _ in range(n)]
        rhs = [F(0)] * n
        for i in range(n - 1):
            system[i][i] = F(1)
            system[i][i + 1] = F(-1)
            rhs[i] = F(u[i])
        if kind.family == "B":
            system[n - 1][n - 1] = F(1)
        elif kind.family == "C":
            system[n - 1][n - 1] = F(2)
        else:
            system[n - 1][n - 2] = F(1)
            system[n - 1][n - 1] = F(1)
        rhs[n - 1] = F(u[n - 1])
        a = _solve_fraction(system, rhs)
        half = [2 * x for x in a]
        mid = [F(0)] if kind.family == "B" else []
        diag = half + mid + [-x for x in reversed(half)]
    # in type A the grading element is defined only modulo the identity, so
    # the trace-zero solution may be fractional; runs are shift-invariant
    blocks: list[int] = []
    run = 1
    for prev, cur in zip(diag, diag[1:]):
        if cur == prev:
            run += 1
        else:
            blocks.append(run)
            run = 1
    blocks.append(run)
    if kind.family == "A":
        return BlockVector(kind, tuple(blocks))
    m = len(blocks)
    if m % 2:
        return BlockVector(kind, tuple(blocks[: m // 2]), blocks[m // 2])
    return BlockVector(kind, tuple(blocks[: m // 2]), None)
