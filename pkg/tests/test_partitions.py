import pytest

from qtsym.partitions import Partition, dominance_leq, parse_partition, partitions_of


def test_enumerate_basics():
    assert partitions_of(0) == (Partition(),)
    assert [tuple(p) for p in partitions_of(4)] == [
        (4,),
        (3, 1),
        (2, 2),
        (2, 1, 1),
        (1, 1, 1, 1),
    ]
    assert len(partitions_of(6)) == 11
    # brute-force recount for small n
    for n in range(1, 9):
        seen = set(partitions_of(n))
        assert len(seen) == len(partitions_of(n))
        assert all(p.size == n for p in seen)


def _brute_partitions(n):
    if n == 0:
        return {()}
    out = set()

    def rec(rest, maxp, acc):
        if rest == 0:
            out.add(tuple(acc))
            return
        for p in range(min(rest, maxp), 0, -1):
            rec(rest - p, p, acc + [p])

    rec(n, n, [])
    return out


def test_enumerate_matches_brute_force():
    for n in range(8):
        assert {tuple(p) for p in partitions_of(n)} == _brute_partitions(n)


def test_conjugate():
    assert Partition((6, 4, 2)).conjugate() == Partition((3, 3, 2, 2, 1, 1))
    assert Partition((5,)).conjugate() == Partition((1,) * 5)
    assert Partition().conjugate() == Partition()
    for n in range(11):
        for lam in partitions_of(n):
            assert lam.conjugate().conjugate() == lam


def test_dominance():
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    assert dominance_leq((2, 2), (2, 2))
    assert not dominance_leq((2, 1), (2, 2))  # different sizes
    # antisymmetry and transitivity on all pairs with n <= 8
    for n in range(9):
        parts = partitions_of(n)
        for a in parts:
            for b in parts:
                if dominance_leq(a, b) and dominance_leq(b, a):
                    assert a == b
                # conjugation reverses dominance
                assert dominance_leq(a, b) == dominance_leq(
                    b.conjugate(), a.conjugate()
                )
        for a in parts:
            for b in parts:
                for c in parts:
                    if dominance_leq(a, b) and dominance_leq(b, c):
                        assert dominance_leq(a, c)


def test_cell_stats():
    lam = Partition((6, 4, 2))
    assert lam.arm(1, 3) == 3
    assert lam.leg(1, 3) == 1
    assert Partition((2, 1)).z() == 2
    assert Partition((2, 1)).nstat() == 1
    assert Partition((3, 3, 1)).nstat() == 0 * 3 + 1 * 3 + 2 * 1
    with pytest.raises(ValueError):
        lam.arm(4, 1)
    with pytest.raises(ValueError):
        lam.leg(1, 7)


def test_cells_and_hooks():
    for n in range(1, 9):
        for lam in partitions_of(n):
            cells = list(lam.cells())
            assert len(cells) == n
            for (i, j) in cells:
                assert lam.hook(i, j) == lam.arm(i, j) + lam.leg(i, j) + 1


def test_z_sums_to_factorial():
    # sum over partitions of n of n!/z_lambda = number of permutations
    import math

    for n in range(1, 9):
        assert sum(math.factorial(n) // lam.z() for lam in partitions_of(n)) == math.factorial(n)


def test_validation_and_parse():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    assert Partition((3, 1, 0)) == Partition((3, 1))
    assert parse_partition("[3,1,1]") == Partition((3, 1, 1))
    assert parse_partition("[]") == Partition()
    assert parse_partition("2,1") == Partition((2, 1))
    assert str(Partition((3, 1))) == "[3,1]"
