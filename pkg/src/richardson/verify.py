"""Exhaustive verification sweeps.

For every nice classical block vector up to a matrix-size bound this module
compares the closed-form Richardson partition against the matrix oracle's
Jordan type (with the genericity certificate dim g^X = dim m), and the block
birationality criteria against the stabilizer test on the partition.  Zero
discrepancies is the acceptance gate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .classify import is_birational_by_blocks, is_birational_by_partition, is_nice
from .core import BlockVector, LieKind, all_block_vectors
from .oracle import oracle_partition_detail
from .partitions import richardson_partition

__all__ = ["VerificationResult", "classical_kinds_up_to", "iter_nice", "run_verification"]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass
class VerificationResult:
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def classical_kinds_up_to(families: Sequence[str], max_n: int) -> Iterator[LieKind]:
    """All classical kinds whose matrix size is at most max_n."""
    for fam in families:
        rank = _MIN_RANK[fam]
        while True:
            kind = LieKind(fam, rank)
            if kind.matrix_size > max_n:
                break
            yield kind
            rank += 1


def iter_nice(families: Sequence[str], max_n: int) -> Iterator[BlockVector]:
    for kind in classical_kinds_up_to(families, max_n):
        for b in all_block_vectors(kind):
            if is_nice(b):
                yield b


def run_verification(
    families: Sequence[str] = ("A", "B", "C", "D"),
    max_n: int = 12,
    trials: int = 3,
    base_seed: int = 1,
    with_oracle: bool = True,
    emit: Callable[[str], None] | None = None,
) -> VerificationResult:
    """Sweep all nice block vectors with matrix size <= max_n.

    Per case: closed-form partition == oracle partition, genericity
    certificate holds, and the two birationality routes agree.
    """
    result = VerificationResult()
    for b in iter_nice(families, max_n):
        label = f"{b.kind.name} d={','.join(map(str, b.d)) or '-'} central={b.central or '-'}"
        problems: list[str] = []
        lam = richardson_partition(b)
        bir_blocks = is_birational_by_blocks(b)
        bir_part = is_birational_by_partition(b.kind, b, lam)
        if bir_blocks != bir_part:
            problems.append(
                f"block criteria say birational={bir_blocks} but the partition test says {bir_part}"
            )
        if with_oracle:
            oracle_lam, certified = oracle_partition_detail(b, trials, base_seed)
            if oracle_lam != lam:
                problems.append(f"closed form {lam} != oracle {oracle_lam}")
            if not certified:
                problems.append("no sample certified generic (dim g^X != dim m)")
        result.checked += 1
        if problems:
            result.failures.append(f"{label}: " + "; ".join(problems))
            if emit:
                emit(f"FAIL {label}: " + "; ".join(problems))
        elif emit:
            emit(f"PASS {label} partition={','.join(map(str, lam))}")
    return result
