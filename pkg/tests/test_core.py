
import pytest

from richardson.core import (
    BlockVector,
    Coloring,
    DescriptorError,
    LieKind,
    UnsupportedKindError,
    all_block_vectors,
    all_colorings,
    blocks_from_coloring,
    coloring_from_blocks,
    is_palindromic,
    is_unimodal,
    n_odd,
    parity_descents,
    partitions_of,
    transpose,
)

CLASSICAL_RANGES = (("A", 1), ("B", 2), ("C", 2), ("D", 3))


def brute_transpose(p):
    """Independent oracle: count Young-diagram cells column by column."""
    cells = {(i, j) for i, row in enumerate(p) for j in range(row)}
    cols = []
    j = 0
    while any(c[1] == j for c in cells):
        cols.append(sum(1 for c in cells if c[1] == j))
        j += 1
    return tuple(cols)


class TestLieKind:
    def test_parse(self):
        assert LieKind.parse("C3") == LieKind("C", 3)
        assert LieKind.parse("e7").name == "E7"
        assert LieKind.parse("G2").is_exceptional

    @pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H4", "C"])
    def test_invalid(self, bad):
        with pytest.raises(DescriptorError):
            LieKind.parse(bad)

    def test_matrix_size(self):
        assert LieKind("A", 3).matrix_size == 4
        assert LieKind("B", 3).matrix_size == 7
        assert LieKind("C", 2).matrix_size == 4
        assert LieKind("D", 5).matrix_size == 10
        with pytest.raises(UnsupportedKindError):
            LieKind.parse("E6").matrix_size

    def test_dim(self):
        assert LieKind("A", 3).dim == 15
        assert LieKind("B", 3).dim == 21
        assert LieKind("C", 3).dim == 21
        assert LieKind("D", 4).dim == 28
        assert LieKind.parse("E8").dim == 248


class TestPartitionOps:
    def test_transpose_examples(self):
        assert transpose((2, 2)) == (2, 2)
        assert transpose((3, 1)) == (2, 1, 1)
        # derived value frozen from the brute-force diagram count
        assert brute_transpose((4, 4)) == (2, 2, 2, 2)
        assert transpose((4, 4)) == (2, 2, 2, 2)

    def test_transpose_involution_up_to_30(self):
        for size in range(31):
            for p in partitions_of(size):
                assert transpose(transpose(p)) == p
                assert transpose(p) == brute_transpose(p)

    def test_n_odd(self):
        assert n_odd((3, 3, 1)) == 3
        assert n_odd((4, 4)) == 0
        assert n_odd((3, 3, 2, 2)) == 2

    def test_n_odd_plus_even_is_length(self):
        for size in range(16):
            for p in partitions_of(size):
                evens = sum(1 for x in p if x % 2 == 0)
                assert n_odd(p) + evens == len(p)

    def test_parity_descents(self):
        assert parity_descents((3, 3, 2, 2), 0) == {2}
        assert parity_descents((4, 4), 0) == set()
        assert parity_descents((3, 3), 1) == set()
        # trailing odd parts never count: only internal descents matter
        assert parity_descents((4, 4, 3, 3), 0) == set()
        assert parity_descents((2, 2, 1, 1), 0) == set()

    def test_invalid_partition(self):
        with pytest.raises(DescriptorError):
            transpose((1, 2))
        with pytest.raises(DescriptorError):
            n_odd((2, 0))

    def test_unimodal_palindromic(self):
        assert is_unimodal((1, 2, 2, 1))
        assert is_unimodal((3, 2, 1))
        assert not is_unimodal((2, 1, 2))
        assert is_palindromic((1, 2, 1))
        assert not is_palindromic((1, 2, 3))


class TestBlockVectorValidation:
    def test_type_a_sum(self):
        BlockVector(LieKind("A", 3), (1, 2, 1))
        with pytest.raises(DescriptorError):
            BlockVector(LieKind("A", 3), (2, 1, 2))
        with pytest.raises(DescriptorError):
            BlockVector(LieKind("A", 3), (2, 2), central=2)

    def test_b_central_required_odd(self):
        BlockVector(LieKind("B", 3), (2,), 3)
        with pytest.raises(DescriptorError):
            BlockVector(LieKind("B", 3), (2,), None)
        with pytest.raises(DescriptorError):
            BlockVector(LieKind("B", 3), (2, 1), 2)  # even central

    def test_c_central_even(self):
        BlockVector(LieKind("C", 2), (1,), 2)
        BlockVector(LieKind("C", 2), (2,), None)
        with pytest.raises(DescriptorError):
            BlockVector(LieKind("C", 3), (2,), 3)

    def test_d_inner_block(self):
        BlockVector(LieKind("D", 3), (1, 2), None)
        with pytest.raises(DescriptorError):
            BlockVector(LieKind("D", 3), (2, 1), None)  # aliases central so_2
        BlockVector(LieKind("D", 3), (2,), 2)

    def test_exceptional_rejected(self):
        with pytest.raises(UnsupportedKindError):
            BlockVector(LieKind.parse("F4"), (2, 2))

    def test_full_blocks(self):
        b = BlockVector(LieKind("C", 3), (2,), 2)
        assert b.full_blocks() == (2, 2, 2)
        b = BlockVector(LieKind("D", 5), (1, 4), None)
        assert b.full_blocks() == (1, 4, 4, 1)


class TestColoringBlocks:
    def test_examples(self):
        a = blocks_from_coloring(Coloring(LieKind("A", 3), (1, 1, 1)))
        assert (a.d, a.central) == ((1, 1, 1, 1), None)
        c = blocks_from_coloring(Coloring(LieKind("C", 2), (1, 0)))
        assert (c.d, c.central) == ((1,), 2)
        # value fixed by the matrix oracle (diag 2H = 1,1,0,0,0,0,-1,-1)
        d = blocks_from_coloring(Coloring(LieKind("D", 4), (0, 1, 0, 0)))
        assert (d.d, d.central) == ((2,), 4)

    def test_inverse_examples(self):
        assert coloring_from_blocks(BlockVector(LieKind("A", 3), (1, 1, 1, 1))).u == (1, 1, 1)
        assert coloring_from_blocks(BlockVector(LieKind("C", 2), (1,), 2)).u == (1, 0)
        assert coloring_from_blocks(BlockVector(LieKind("B", 3), (2,), 3)).u == (0, 1, 0)

    def test_exceptional_rejected(self):
        with pytest.raises(UnsupportedKindError):
            blocks_from_coloring(Coloring(LieKind.parse("G2"), (1, 0)))

    def test_d_canonicalization(self):
        c = Coloring(LieKind("D", 4), (0, 0, 1, 0))
        assert c.canonical().u == (0, 0, 0, 1)
        assert blocks_from_coloring(c) == blocks_from_coloring(c.canonical())

    def test_round_trip_all_ranks_up_to_8(self):
        for fam, lo in CLASSICAL_RANGES:
            for rank in range(lo, 9):
                kind = LieKind(fam, rank)
                for c in all_colorings(kind):
                    assert coloring_from_blocks(blocks_from_coloring(c)) == c.canonical()

    def test_palindrome_sums_to_matrix_size(self):
        for fam, lo in CLASSICAL_RANGES:
            for rank in range(lo, 9):
                kind = LieKind(fam, rank)
                for c in all_colorings(kind):
                    assert sum(blocks_from_coloring(c).full_blocks()) == kind.matrix_size


class TestEnumeration:
    def test_coloring_count(self):
        assert sum(1 for _ in all_colorings(LieKind("A", 5))) == 32

    def test_colorings_lexicographic(self):
        us = [c.u for c in all_colorings(LieKind("B", 2))]
        assert us == sorted(us)

    def test_block_vectors_valid_and_complete(self):
        # every enumerated vector validates; every coloring's blocks appear
        for fam, rank in (("A", 4), ("B", 3), ("C", 3), ("D", 4)):
            kind = LieKind(fam, rank)
            enumerated = set(all_block_vectors(kind))
            from_colorings = {blocks_from_coloring(c) for c in all_colorings(kind)}
            assert from_colorings <= enumerated

    def test_sp4_block_vectors(self):
        got = {(b.d, b.central) for b in all_block_vectors(LieKind("C", 2))}
        assert got == {((), 4), ((1,), 2), ((2,), None), ((1, 1), None)}
