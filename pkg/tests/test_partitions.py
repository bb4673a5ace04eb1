import pytest

from richardson.classify import is_nice
from richardson.core import BlockVector, LieKind, n_odd, transpose
from richardson.partitions import (
    FormulaDomainError,
    InvalidKernelProfileError,
    dual_partition_bcd,
    partition_bcd,
    partition_from_kernel_dims,
    partition_type_a,
    rank_and_kernel,
    richardson_partition,
    so_even_single_odd_partition,
)
from richardson.verify import classical_kinds_up_to


def nice_bcd(max_n):
    from richardson.core import all_block_vectors

    for kind in classical_kinds_up_to(("B", "C", "D"), max_n):
        for b in all_block_vectors(kind):
            if is_nice(b):
                yield b


class TestTypeA:
    def test_borel_regular(self):
        assert partition_type_a(BlockVector(LieKind("A", 3), (1, 1, 1, 1))) == (4,)

    def test_middle_block(self):
        assert partition_type_a(BlockVector(LieKind("A", 3), (1, 2, 1))) == (3, 1)

    def test_full_levi(self):
        assert partition_type_a(BlockVector(LieKind("A", 3), (4,))) == (1, 1, 1, 1)

    def test_order_independent(self):
        a = partition_type_a(BlockVector(LieKind("A", 4), (1, 3, 1)))
        b = partition_type_a(BlockVector(LieKind("A", 4), (1, 1, 3)))
        assert a == b == (3, 1, 1)


class TestDual:
    def test_sp6(self):
        b = BlockVector(LieKind("C", 3), (2,), 2)
        assert dual_partition_bcd(b) == (2, 2, 2)
        assert partition_bcd(b) == (3, 3)

    def test_sp4_odd_entry(self):
        b = BlockVector(LieKind("C", 2), (1,), 2)
        assert dual_partition_bcd(b) == (2, 2)
        assert partition_bcd(b) == (2, 2)

    def test_so7(self):
        b = BlockVector(LieKind("B", 3), (2,), 3)
        assert dual_partition_bcd(b) == (3, 2, 2)
        assert partition_bcd(b) == (3, 3, 1)

    def test_refuses_non_nice(self):
        with pytest.raises(FormulaDomainError):
            dual_partition_bcd(BlockVector(LieKind("C", 3), (1, 1), 2))

    def test_refuses_peak_above_center(self):
        # handled by partition_bcd via the trimmed route, not by the dual
        b = BlockVector(LieKind("D", 4), (3,), 2)
        with pytest.raises(FormulaDomainError):
            dual_partition_bcd(b)
        assert partition_bcd(b) == (3, 3, 1, 1)


class TestPartitionBCD:
    def test_sp8_even(self):
        assert partition_bcd(BlockVector(LieKind("C", 4), (2, 2), None)) == (4, 4)

    def test_so10_one_odd(self):
        assert partition_bcd(BlockVector(LieKind("D", 5), (1, 4), None)) == (3, 3, 2, 2)

    def test_so8_even(self):
        assert partition_bcd(BlockVector(LieKind("D", 4), (2, 2), None)) == (4, 4)

    def test_full_levi_is_zero_orbit(self):
        assert partition_bcd(BlockVector(LieKind("B", 3), (), 7)) == (1,) * 7
        assert partition_bcd(BlockVector(LieKind("C", 3), (), 6)) == (1,) * 6

    def test_borels_are_regular(self):
        # regular nilpotent Jordan types: (2n) for sp_2n, (2n+1) for so_2n+1,
        # (2n-1, 1) for so_2n
        assert partition_bcd(BlockVector(LieKind("C", 3), (1, 1, 1), None)) == (6,)
        assert partition_bcd(BlockVector(LieKind("B", 3), (1, 1, 1), 1)) == (7,)
        assert partition_bcd(BlockVector(LieKind("D", 4), (1, 1, 1), 2)) == (7, 1)

    def test_refuses_non_nice(self):
        with pytest.raises(FormulaDomainError):
            partition_bcd(BlockVector(LieKind("C", 3), (1, 1), 2))

    def test_sum_is_matrix_size(self):
        for b in nice_bcd(14):
            assert sum(richardson_partition(b)) == b.N

    def test_transpose_of_dual_route(self):
        for b in nice_bcd(14):
            s, c = b.sorted_d(), b.central
            if b.kind.family in "BD" and c is not None and s and s[-1] > c:
                continue  # dual route does not apply
            assert partition_bcd(b) == transpose(dual_partition_bcd(b))

    def test_explicit_so_even_formula_agrees(self):
        checked = 0
        for b in nice_bcd(14):
            if b.kind.family != "D" or b.central is not None:
                continue
            s = b.sorted_d()
            if sum(1 for v in s if v % 2) != 1:
                continue
            assert so_even_single_odd_partition(s) == partition_bcd(b)
            checked += 1
        assert checked > 10

    def test_sp_odd_all_even_gives_all_odd_parts(self):
        for b in nice_bcd(14):
            if b.kind.family != "C" or b.central is None:
                continue
            if all(v % 2 == 0 for v in b.d):
                lam = partition_bcd(b)
                assert n_odd(lam) == len(lam) == b.central

    def test_so_odd_peak_above_center_profile(self):
        checked = 0
        for b in nice_bcd(14):
            if b.kind.family not in "BD" or b.central is None:
                continue
            s, c = b.sorted_d(), b.central
            if s and s[-1] == c + 1:
                lam = partition_bcd(b)
                assert len(lam) == c + 2
                assert n_odd(lam) == c + 2
                checked += 1
        assert checked > 5


class TestRankAndKernel:
    def test_so7(self):
        b = BlockVector(LieKind("B", 3), (2,), 3)
        assert rank_and_kernel(b) == (4, 3)
        assert len(partition_bcd(b)) == 3

    def test_peak_above_center(self):
        b = BlockVector(LieKind("D", 4), (3,), 2)
        rank, kernel = rank_and_kernel(b)
        assert (rank, kernel) == (4, 4)
        assert kernel == b.central + 2

    def test_so3_regular_values(self):
        # d=(1), central=1 lives in so_3, below the B-rank floor; the formula
        # gives rank 2, kernel 1, i.e. a single Jordan block of size 3 --
        # confirmed on the explicit so_3 nilradical element
        from richardson.oracle import ExactMatrix, jordan_partition

        s, c, N = (1,), 1, 3
        rank = 2 * min(s[-1], c)
        assert (rank, N - rank) == (2, 1)
        x = ExactMatrix([[0, 5, 0], [0, 0, -5], [0, 0, 0]])  # in so_3, blocks (1,1,1)
        assert x.rank() == rank
        assert jordan_partition(x) == (3,)

    def test_refuses_even_blocks(self):
        with pytest.raises(FormulaDomainError):
            rank_and_kernel(BlockVector(LieKind("C", 2), (2,), None))


class TestKernelProfile:
    def test_zero_map(self):
        assert partition_from_kernel_dims((0, 4)) == (1, 1, 1, 1)

    def test_regular(self):
        assert partition_from_kernel_dims((0, 1, 2, 3, 4)) == (4,)

    def test_two_blocks(self):
        assert partition_from_kernel_dims((0, 2, 4)) == (2, 2)

    def test_invalid(self):
        with pytest.raises(InvalidKernelProfileError):
            partition_from_kernel_dims((1, 2))
        with pytest.raises(InvalidKernelProfileError):
            partition_from_kernel_dims((0, 3, 2))
        with pytest.raises(InvalidKernelProfileError):
            partition_from_kernel_dims((0, 1, 3))  # increments increase
