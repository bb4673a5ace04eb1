"""Classification of classical parabolics: Richardson-in-g1, stabilizer
equality, sl2 origin, normality of the orbit closure, covering degree.

All predicates on B/C/D evaluate the ascending rearrangement of the half
block vector: conjugate Levi factors give conjugate Richardson elements, so
every property decided here depends only on the multiset of block sizes.
Type A keeps the given block order (its criteria are genuinely order
sensitive).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import (
    BlockVector,
    Coloring,
    LieKind,
    is_palindromic,
    is_unimodal,
    n_odd,
    parity_descents,
)
from .partitions import partition_type_a, richardson_partition

__all__ = [
    "NORMAL",
    "NOT_NORMAL",
    "OUT_OF_SCOPE",
    "PartitionMismatchError",
    "is_nice",
    "is_birational_by_blocks",
    "is_birational_by_partition",
    "is_sl2_given",
    "normal_closure",
    "covering_degree",
    "ClassificationReport",
    "classify",
]

NORMAL = "normal"
NOT_NORMAL = "not_normal"
OUT_OF_SCOPE = "out_of_scope"


class PartitionMismatchError(ValueError):
    """Partition size does not match the matrix size of the block vector."""


def _odd_values_once(s: tuple[int, ...]) -> bool:
    odd = [v for v in s if v % 2]
    return len(odd) == len(set(odd))


def is_nice(b: BlockVector) -> bool:
    """Does the parabolic carry a Richardson element in the first graded part?

    Criteria per family (d ascending, c the central block):
      A   - d unimodal (given order);
      Sp  - even blocks: always; odd blocks: d_r <= c and odd sizes distinct;
      SO  - odd blocks: d_r <= c, or c = d_r - 1 with d_r a strict maximum;
            even blocks: odd sizes distinct.
    """
    fam = b.kind.family
    if fam == "A":
        return is_unimodal(b.d)
    s, c = b.sorted_d(), b.central
    if fam == "C":
        if c is None:
            return True
        return (not s or s[-1] <= c) and _odd_values_once(s)
    # B, D (orthogonal)
    if c is None:
        return _odd_values_once(s)
    if not s or s[-1] <= c:
        return True
    return c == s[-1] - 1 and (len(s) == 1 or s[-2] < s[-1])


def is_birational_by_blocks(b: BlockVector) -> bool:
    """Nice with equal stabilizers (moment map birational), by block criteria.

    True iff (d ascending): A - unimodal; Sp - ascending, all sizes even when
    a central block is present; SO odd blocks - ascending through the center;
    SO even blocks - at most one odd size, and then <= d_r - 3 and not the
    largest.
    """
    fam = b.kind.family
    if fam == "A":
        return is_unimodal(b.d)
    s, c = b.sorted_d(), b.central
    if fam == "C":
        if c is None:
            return True
        return (not s or s[-1] <= c) and all(v % 2 == 0 for v in s)
    if c is not None:  # B always; D odd blocks
        return not s or s[-1] <= c
    odd = [v for v in s if v % 2]
    if not odd:
        return True
    return len(odd) == 1 and odd[0] <= s[-1] - 3


def is_birational_by_partition(kind: LieKind, b: BlockVector, lam) -> bool:
    """Stabilizer-equality test on the Jordan type of a Richardson element.

    Odd blocks: the number of odd parts equals the central block size.
    Even blocks: no odd parts (Sp), or for SO either no odd parts and no
    internal odd descent, or exactly two odd parts with one.
    """
    lam = tuple(lam)
    if sum(lam) != b.N:
        raise PartitionMismatchError(f"partition sums to {sum(lam)}, expected {b.N}")
    if kind.family == "A":
        return True
    c = b.central
    if c is not None:
        return n_odd(lam) == c
    if kind.family == "C":
        return n_odd(lam) == 0
    drops = parity_descents(lam, 0)
    if drops:
        return n_odd(lam) == 2
    return n_odd(lam) == 0


def is_sl2_given(b: BlockVector) -> bool:
    """Is the grading element the semisimple member of a Jacobson-Morozov
    triple through some element of the first graded part?

    A: unimodal palindromic.  B, C and odd-block D: equivalent to the block
    birationality test.  Even-block D: additionally all block sizes even.
    """
    fam = b.kind.family
    if fam == "A":
        return is_unimodal(b.d) and is_palindromic(b.d)
    if fam == "D" and b.central is None:
        return is_birational_by_blocks(b) and all(v % 2 == 0 for v in b.d)
    return is_birational_by_blocks(b)


def _all_equal(seq) -> bool:
    return len(set(seq)) <= 1


def normal_closure(b: BlockVector) -> str:
    """Normality of the Richardson orbit closure.

    Type A orbit closures are always normal.  For Sp/SO the answer is only
    defined on the birational family; everything else is out of scope.
    """
    fam = b.kind.family
    if fam == "A":
        return NORMAL
    if not is_birational_by_blocks(b):
        return OUT_OF_SCOPE
    s, c = b.sorted_d(), b.central
    if fam == "C":
        if c is None:
            return NORMAL
        return NORMAL if _all_equal(s) else NOT_NORMAL
    if c is not None:  # SO, odd number of blocks
        return NORMAL
    # SO, even number of blocks
    vals = sorted(set(s))
    if len(vals) == 1 and vals[0] % 2 == 0:
        return NORMAL
    if len(vals) == 2 and vals[1] - vals[0] == 2 and vals[0] % 2 == 0:
        return NORMAL
    odd = [v for v in s if v % 2]
    if len(odd) == 1:
        v = odd[0]
        i = s.index(v)  # unique
        prefix, suffix = s[:i], s[i + 1 :]
        if i == 0 and _all_equal(suffix):
            return NORMAL
        if i > 0 and _all_equal(prefix) and v - s[i - 1] == 1 and _all_equal(suffix):
            return NORMAL
    return NOT_NORMAL


def covering_degree(b: BlockVector) -> int | None:
    """Degree of the moment map onto its image, where a value is known.

    1 on the birational family (all of type A included).  2 on the orthogonal
    odd-block family whose peak exceeds the center by one.  2^(c/2 - #odd)
    on nice symplectic odd-block vectors with odd entries, except that a
    formula value of 1 contradicts non-birationality and is suppressed.
    Everything else: unknown (None).
    """
    degree, _ = _covering_degree_note(b)
    return degree


def _covering_degree_note(b: BlockVector) -> tuple[int | None, str | None]:
    fam = b.kind.family
    if fam == "A":
        return 1, None
    if not is_nice(b):
        return None, None
    if is_birational_by_blocks(b):
        return 1, None
    s, c = b.sorted_d(), b.central
    if fam == "C" and c is not None:
        k = 2 ** (c // 2 - sum(1 for v in s if v % 2))
        if k == 1:
            return None, (
                "covering-degree formula evaluates to 1 on a non-birational "
                f"symplectic vector d={b.d} central={c}; value suppressed"
            )
        return k, None
    if fam in "BD" and c is not None and s and s[-1] == c + 1:
        return 2, None
    return None, None


@dataclass(frozen=True)
class ClassificationReport:
    """All classification flags for one classical parabolic."""

    kind: LieKind
    blocks: BlockVector
    coloring: Coloring | None = None
    nice: bool = False
    birational: bool = False
    sl2_given: bool = False
    normal: str = OUT_OF_SCOPE
    partition: tuple[int, ...] | None = None
    birational_by_partition: bool | None = None
    orbit_dim: int | None = None
    covering_degree: int | None = None
    bala_carter_label: str | None = None
    diagnostics: tuple[str, ...] = field(default_factory=tuple)


def classify(
    b: BlockVector,
    coloring: Coloring | None = None,
    with_oracle: bool = False,
    trials: int = 3,
    seed: int = 1,
) -> ClassificationReport:
    """Full classification of one classical parabolic.

    The partition is the closed form whenever it applies (all of type A;
    nice B/C/D); otherwise the matrix oracle supplies it on request.  The
    stabilizer test on the partition is recorded as a cross-check next to
    the block-criteria answer.
    """
    from .oracle import levi_dim, oracle_richardson_partition

    kind = b.kind
    nice = is_nice(b)
    bir_blocks = is_birational_by_blocks(b)
    birational = True if kind.family == "A" else bir_blocks
    diagnostics: list[str] = []

    partition: tuple[int, ...] | None = None
    if kind.family == "A":
        partition = partition_type_a(b)
    elif nice:
        partition = richardson_partition(b)
    elif with_oracle:
        partition = oracle_richardson_partition(b, trials=trials, base_seed=seed)

    bir_part = None
    if partition is not None:
        bir_part = is_birational_by_partition(kind, b, partition)
        if kind.family != "A" and bir_part != bir_blocks:
            diagnostics.append(
                "stabilizer test on the computed partition disagrees with the "
                "block criteria (expected for non-nice inputs, where the block "
                "route answers nice-and-birational)"
            )

    degree, note = _covering_degree_note(b)
    if note:
        diagnostics.append(note)

    return ClassificationReport(
        kind=kind,
        blocks=b,
        coloring=coloring,
        nice=nice,
        birational=birational,
        sl2_given=is_sl2_given(b),
        normal=normal_closure(b),
        partition=partition,
        birational_by_partition=bir_part,
        orbit_dim=kind.dim - levi_dim(b),
        covering_degree=degree,
        diagnostics=tuple(diagnostics),
    )
