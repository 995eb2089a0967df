import pytest

from invseries.partitions import MultiplicityVector, enumerate_multiplicity_vectors, partition_count


def ks(n):
    return [mv.k for mv in enumerate_multiplicity_vectors(n)]


def test_n4_listing_and_order():
    assert ks(4) == [(4, 0, 0, 0), (2, 1, 0, 0), (0, 2, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1)]


def test_small_cases():
    assert ks(1) == [(1,)]
    assert ks(0) == [()]


@pytest.mark.parametrize("n,p", [(0, 1), (1, 1), (4, 5), (6, 11), (10, 42), (30, 5604)])
def test_partition_count(n, p):
    assert partition_count(n) == p


@pytest.mark.parametrize("n", range(0, 41))
def test_enumeration_matches_count(n):
    vecs = list(enumerate_multiplicity_vectors(n))
    assert len(vecs) == partition_count(n)
    assert len({v.k for v in vecs}) == len(vecs)
    for v in vecs:
        assert sum(i * c for i, c in enumerate(v.k, start=1)) == n
        assert len(v.k) == n
        if n:
            assert 1 <= v.weight <= n


def test_order_is_colex_ascending():
    for n in range(1, 12):
        keys = [tuple(reversed(k)) for k in ks(n)]
        assert keys == sorted(keys)


def test_vector_validation():
    with pytest.raises(ValueError):
        MultiplicityVector(3, (1, 1, 1))
    with pytest.raises(ValueError):
        MultiplicityVector(2, (2,))
    assert str(MultiplicityVector(3, (1, 1, 0))) == "1,1,0"
