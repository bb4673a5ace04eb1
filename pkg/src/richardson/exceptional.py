"""Exceptional types: root systems from Cartan matrices, grading dimensions,
and the classification data for G2, F4, E6, E7, E8.

Which exceptional parabolics carry a Richardson element in the first graded
part (and whether its stabilizers in P and G agree) is not recomputed from
scratch; it is encoded data, checked against the graded dimensions where
reference values exist.  Orbit dimensions are always recomputable from the
root system as dim g - dim g_0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import Coloring, LieKind, UnsupportedKindError

__all__ = [
    "RootSystem",
    "root_system",
    "grading_dims",
    "dim_g0",
    "orbit_dim",
    "ExceptionalRecord",
    "exceptional_lookup",
    "appendix_colorings",
    "appendix_records",
    "NON_SL2_ORBITS",
    "E7_NON_BIRATIONAL",
]

# Cartan matrices, Bourbaki numbering; row i holds the pairings <alpha_j, alpha_i^vee>.
_CARTAN = {
    "G2": (
        (2, -3),
        (-1, 2),
    ),
    "F4": (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -2, 2, -1),
        (0, 0, -1, 2),
    ),
}


def _simply_laced(rank: int, edges: tuple[tuple[int, int], ...]) -> tuple[tuple[int, ...], ...]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in a)


_E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))
for _rank in (6, 7, 8):
    _CARTAN[f"E{_rank}"] = _simply_laced(
        _rank, tuple(e for e in _E_EDGES if max(e) <= _rank)
    )

_POSITIVE_COUNT = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@dataclass(frozen=True)
class RootSystem:
    """Positive roots of an exceptional type, as coefficient vectors over
    the simple roots."""

    kind: LieKind
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.kind.rank

    @property
    def dim(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def highest_root(self) -> tuple[int, ...]:
        return max(self.positive_roots, key=sum)


def _close_positive_roots(cartan: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Positive roots by root-string closure from the simple roots."""
    rank = len(cartan)
    simple = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    roots: set[tuple[int, ...]] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt: list[tuple[int, ...]] = []
        for alpha in frontier:
            for i in range(rank):
                pairing = sum(c * cartan[i][j] for j, c in enumerate(alpha))
                down = 0
                lower = list(alpha)
                while True:
                    lower[i] -= 1
                    if lower[i] < 0 or tuple(lower) not in roots:
                        break
                    down += 1
                if down - pairing >= 1:  # the string continues upward
                    up = list(alpha)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        nxt.append(cand)
        frontier = nxt
    return tuple(sorted(roots, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def root_system(kind: LieKind) -> RootSystem:
    if not kind.is_exceptional:
        raise UnsupportedKindError(f"root systems here are exceptional-only, got {kind.name}")
    cartan = _CARTAN[kind.name]
    pos = _close_positive_roots(cartan)
    assert len(pos) == _POSITIVE_COUNT[kind.name]
    return RootSystem(kind, cartan, pos)


def grading_dims(rs: RootSystem, coloring: Coloring) -> dict[int, int]:
    """Dimensions of the graded pieces g_i for the grading alpha_i(H) = u_i."""
    if coloring.kind != rs.kind:
        raise UnsupportedKindError(
            f"coloring is for {coloring.kind.name}, root system for {rs.kind.name}"
        )
    u = coloring.u
    counts: dict[int, int] = {}
    for root in rs.positive_roots:
        g = sum(c * x for c, x in zip(root, u))
        counts[g] = counts.get(g, 0) + 1
    dims = {0: rs.rank + 2 * counts.get(0, 0)}
    for g, k in counts.items():
        if g != 0:
            dims[g] = k
            dims[-g] = k
    return dims


def dim_g0(coloring: Coloring) -> int:
    return grading_dims(root_system(coloring.kind), coloring)[0]


def orbit_dim(rs: RootSystem, coloring: Coloring) -> int:
    """Richardson orbit dimension dim g - dim g_0."""
    return rs.dim - grading_dims(rs, coloring)[0]


# ---------------------------------------------------------------------------
# classification data
#
# Colorings whose parabolic has a Richardson element in the first graded part
# *and* equal stabilizers in P and G.  Shared row numbering for the E series;
# E7 rows 5, 20, 25 (and 30) and E8 rows 29, 30 are empty.

_G2_TABLE = (
    (1, 1),
    (1, 0),
    (0, 0),
)

_F4_TABLE = (
    (1, 1, 1, 1),
    (1, 1, 0, 1),
    (1, 1, 0, 0),
    (1, 0, 0, 1),
    (0, 1, 0, 1),
    (0, 1, 0, 0),
    (0, 0, 0, 1),
    (0, 0, 0, 0),
)

_E6_TABLE = (
    (1, 1, 1, 1, 1, 1),
    (1, 1, 1, 0, 1, 1),
    (1, 1, 1, 0, 1, 0),
    (1, 1, 0, 1, 0, 1),
    (1, 1, 0, 0, 1, 0),
    (1, 1, 0, 0, 0, 1),
    (1, 1, 0, 0, 0, 0),
    (1, 0, 1, 1, 0, 1),
    (1, 0, 1, 0, 0, 1),
    (1, 0, 1, 0, 0, 0),
    (1, 0, 0, 1, 1, 1),
    (1, 0, 0, 1, 0, 1),
    (1, 0, 0, 1, 0, 0),
    (1, 0, 0, 0, 1, 1),
    (1, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 0),
    (0, 1, 1, 0, 1, 1),
    (0, 1, 1, 0, 0, 1),
    (0, 1, 0, 1, 0, 0),
    (0, 1, 0, 0, 0, 1),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 1),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 1),
    (0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 1, 1),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0),
)

_E7_TABLE = (
    (1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 0, 1, 1, 1),
    (1, 1, 1, 0, 1, 0, 1),
    (1, 1, 0, 0, 1, 0, 1),
    (1, 0, 1, 1, 0, 1, 0),
    (1, 0, 1, 0, 0, 1, 0),
    (1, 0, 1, 0, 0, 0, 0),
    (1, 0, 0, 1, 0, 1, 1),
    (1, 0, 0, 1, 0, 1, 0),
    (1, 0, 0, 1, 0, 0, 1),
    (1, 0, 0, 0, 1, 0, 0),
    (1, 0, 0, 0, 0, 1, 1),
    (1, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 0, 0),
    (0, 1, 1, 0, 0, 1, 1),
    (0, 1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 0, 0),
    (0, 0, 0, 1, 0, 1, 0),
    (0, 0, 0, 1, 0, 0, 1),
    (0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0),
)

_E8_TABLE = (
    (1, 1, 1, 1, 1, 1, 1, 1),
    (1, 1, 1, 0, 1, 1, 1, 1),
    (1, 1, 1, 0, 1, 0, 1, 1),
    (1, 0, 0, 1, 0, 1, 1, 1),
    (1, 0, 0, 1, 0, 1, 0, 1),
    (1, 0, 0, 1, 0, 0, 1, 1),
    (1, 0, 0, 1, 0, 0, 1, 0),
    (1, 0, 0, 0, 1, 0, 0, 1),
    (1, 0, 0, 0, 0, 1, 1, 1),
    (1, 0, 0, 0, 0, 1, 0, 1),
    (1, 0, 0, 0, 0, 1, 0, 0),
    (1, 0, 0, 0, 0, 0, 1, 1),
    (1, 0, 0, 0, 0, 0, 1, 0),
    (1, 0, 0, 0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0, 0, 0, 1),
    (0, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 0, 1, 1),
    (0, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 0, 0, 0, 0, 0, 0),
)

_APPENDIX = {
    "G2": _G2_TABLE,
    "F4": _F4_TABLE,
    "E6": _E6_TABLE,
    "E7": _E7_TABLE,
    "E8": _E8_TABLE,
}

# E7 parabolics with a Richardson element in the first graded part whose
# stabilizer in G is strictly larger than in P.
E7_NON_BIRATIONAL = (
    (1, 1, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, 0, 0, 1),
    (0, 0, 0, 0, 1, 0, 1),
)

# Parabolics with a Richardson element in the first graded part that are not
# induced by an sl2-triple, with orbit dimension and Bala-Carter label.
NON_SL2_ORBITS = {
    ("E7", (1, 1, 0, 0, 1, 0, 1)): (118, "D_6"),
    ("E7", (1, 1, 0, 0, 0, 0, 1)): (106, "D_5(a_1)"),
    ("E7", (0, 1, 1, 0, 0, 1, 1)): (118, "D_6"),
    ("E7", (0, 0, 1, 0, 0, 0, 1)): (104, "A_4+A_1"),
    ("E7", (0, 0, 0, 0, 1, 0, 1)): (104, "A_4+A_1"),
    ("E8", (0, 0, 1, 0, 0, 0, 1, 0)): (216, "D_6"),
}


def appendix_colorings(kind: LieKind) -> tuple[Coloring, ...]:
    """The encoded birational-and-nice colorings for an exceptional kind."""
    if not kind.is_exceptional:
        raise UnsupportedKindError(f"appendix data is exceptional-only, got {kind.name}")
    return tuple(Coloring(kind, u) for u in _APPENDIX[kind.name])


@dataclass(frozen=True)
class ExceptionalRecord:
    """Classification data for one exceptional parabolic."""

    kind: LieKind
    coloring: Coloring
    in_appendix: bool
    nice: bool
    birational: bool
    sl2_given: bool
    orbit_dim: int | None
    bala_carter_label: str | None


def exceptional_lookup(coloring: Coloring) -> ExceptionalRecord:
    """Classify one exceptional parabolic from the encoded tables."""
    kind = coloring.kind
    if not kind.is_exceptional:
        raise UnsupportedKindError(f"exceptional lookup on classical kind {kind.name}")
    u = coloring.u
    in_appendix = u in _APPENDIX[kind.name]
    nice = in_appendix or (kind.name == "E7" and u in E7_NON_BIRATIONAL)
    listed = NON_SL2_ORBITS.get((kind.name, u))
    sl2 = nice and listed is None
    if listed is not None:
        dim, label = listed
    else:
        dim, label = orbit_dim(root_system(kind), coloring), None
    return ExceptionalRecord(
        kind=kind,
        coloring=coloring,
        in_appendix=in_appendix,
        nice=nice,
        birational=in_appendix,
        sl2_given=sl2,
        orbit_dim=dim,
        bala_carter_label=label,
    )


def appendix_records(kind: LieKind) -> tuple[ExceptionalRecord, ...]:
    return tuple(exceptional_lookup(c) for c in appendix_colorings(kind))
