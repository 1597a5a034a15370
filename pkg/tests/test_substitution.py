import pytest
from hypothesis import given, settings, strategies as st

from ammann.dimension import fib
from ammann.errors import EmptyFractal, InvalidRange, TooManyTiles
from ammann.geometry import (
    BIG_CHILD, IDENTITY_SIM, PROTOTILE_AREA, SMALL_CHILD, Label, Similarity, area,
    verify_partition,
)
from ammann.golden import ONE, ZERO, half_power_of_phi
from ammann.substitution import (
    PlacedTile, SplitMix64, counts, deflate, expand, iterate, make_mask,
)


def label_counts(tiles):
    tiles = list(tiles)
    small = sum(1 for t in tiles if t.label is Label.SMALL)
    return small, len(tiles) - small


def test_expand_examples():
    e1 = expand(1)
    assert [(c.sim, c.label) for c in e1.children] == [(IDENTITY_SIM, Label.BIG)]
    assert label_counts(expand(5).children) == (3, 5)
    e2 = expand(2)
    assert [(c.label, c.sim.half_exp) for c in e2.children] == [(Label.BIG, -1), (Label.SMALL, -2)]
    with pytest.raises(InvalidRange):
        expand(0)


@pytest.mark.parametrize("n", range(1, 15))
def test_label_scale_coupling(n):
    for c in expand(n).children:
        expected = -n if c.label is Label.SMALL else -(n - 1)
        assert c.sim.half_exp == expected


def test_canonical_order_is_depth_first():
    # gen 3 from S: S -> B -> (B, S) -> ((B, S), B)
    e3 = expand(3)
    assert [c.label for c in e3.children] == [Label.BIG, Label.SMALL, Label.BIG]
    assert [c.sim for c in e3.children] == [BIG_CHILD @ BIG_CHILD, BIG_CHILD @ SMALL_CHILD,
                                            SMALL_CHILD]


def test_counts_examples():
    assert counts(5, 1, 0) == (3, 5)
    assert counts(0, 4, 7) == (4, 7)
    assert counts(10, 1, 0) == (34, 55)
    assert label_counts(expand(10).children) == (34, 55)


@pytest.mark.parametrize("s0,b0", [(1, 0), (0, 1), (2, 3)])
def test_counts_match_enumeration(s0, b0):
    seeds = [PlacedTile(IDENTITY_SIM, Label.SMALL)] * s0 + [PlacedTile(IDENTITY_SIM, Label.BIG)] * b0
    tiles = seeds
    for n in range(0, 13):
        assert counts(n, s0, b0) == label_counts(tiles)
        tiles = deflate(tiles)


def test_counts_recurrence():
    s, b = 3, 11
    for n in range(40):
        assert counts(n, 3, 11) == (s, b)
        s, b = b, s + b


def test_splitmix64_reference_vectors():
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821,
    ]
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_make_mask_first_and_last():
    e5 = expand(5)
    big = e5.indices(Label.BIG)
    small = e5.indices(Label.SMALL)
    m = make_mask(e5, 0, 1, "first")
    assert m.removed == (big[0],)
    m = make_mask(e5, 2, 1, "last")
    assert m.removed == tuple(sorted(small[-2:] + big[-1:]))


def test_make_mask_errors():
    e5 = expand(5)
    with pytest.raises(EmptyFractal):
        make_mask(e5, 3, 5)
    with pytest.raises(InvalidRange):
        make_mask(e5, 4, 0)
    with pytest.raises(InvalidRange):
        make_mask(e5, 0, -1)
    with pytest.raises(InvalidRange):
        make_mask(e5, 0, 1, "sideways")
    with pytest.raises(InvalidRange):
        make_mask(e5, 0, 1, "explicit", indices=[e5.indices(Label.SMALL)[0]])


def test_make_mask_random_is_deterministic():
    e8 = expand(8)
    m1 = make_mask(e8, 5, 7, "random", seed=42)
    m2 = make_mask(e8, 5, 7, "random", seed=42)
    assert m1 == m2
    assert label_counts(e8.children[i] for i in m1.removed) == (5, 7)
    assert make_mask(e8, 5, 7, "random", seed=43).removed != m1.removed


def test_make_mask_explicit():
    e5 = expand(5)
    idx = [e5.indices(Label.BIG)[2], e5.indices(Label.SMALL)[1]]
    m = make_mask(e5, 1, 1, "explicit", indices=idx)
    assert m.removed == tuple(sorted(idx))


@given(st.integers(2, 9), st.data())
@settings(max_examples=40, deadline=None)
def test_mask_counts_property(n, data):
    a = data.draw(st.integers(0, fib(n - 1)))
    b = data.draw(st.integers(0, fib(n)))
    if (a, b) == (fib(n - 1), fib(n)):
        return
    strategy = data.draw(st.sampled_from(["first", "last", "random"]))
    seed = data.draw(st.integers(0, 2**64 - 1))
    e = expand(n)
    m = make_mask(e, a, b, strategy, seed)
    assert len(set(m.removed)) == a + b
    assert label_counts(e.children[i] for i in m.removed) == (a, b)


def test_iterate_examples():
    assert len(iterate(5, 0, 1, 1)) == 7
    assert [t.sim for t in iterate(6, 0, 0, 1)] == [c.sim for c in expand(6).children]
    assert len(iterate(2, 1, 0, 3)) == 1
    assert len(iterate(5, 0, 1, 0)) == 1
    with pytest.raises(EmptyFractal):
        iterate(5, 3, 5, 1)
    with pytest.raises(TooManyTiles):
        iterate(5, 0, 1, 10, max_tiles=1000)


@pytest.mark.parametrize("n,a,b,k", [(5, 0, 1, 3), (4, 1, 0, 3), (7, 2, 3, 2), (3, 0, 0, 4)])
def test_iterate_area_decay(n, a, b, k):
    tiles = iterate(n, a, b, k)
    assert len(tiles) == (fib(n + 1) - a - b) ** k
    factor = ONE - a * half_power_of_phi(-2 * n) - b * half_power_of_phi(-2 * (n - 1))
    expected = PROTOTILE_AREA
    for _ in range(k):
        expected = expected * factor
    assert tiles.total_area() == expected


def test_unit_partition_identity():
    for n in range(1, 30):
        assert fib(n - 1) * half_power_of_phi(-2 * n) + fib(n) * half_power_of_phi(-2 * (n - 1)) == ONE


@pytest.mark.parametrize("n,k", [(2, 3), (3, 2), (5, 2), (12, 1)])
def test_unmasked_iteration_partitions_root(n, k):
    assert verify_partition(IDENTITY_SIM, [t.sim for t in iterate(n, 0, 0, k)])


def test_iterate_deterministic():
    a = iterate(6, 2, 3, 2, "random", seed=7)
    b = iterate(6, 2, 3, 2, "random", seed=7)
    assert a.tiles == b.tiles
    assert a.provenance == b.provenance


def test_uniform_rule_consistency():
    # the children of a big tile are the sqrt(phi)-scaled children of a small tile
    e = expand(5)
    big_parent = Similarity(half_exp=1)
    scaled = [big_parent @ c.sim for c in e.children]
    assert [s.half_exp for s in scaled] == [c.sim.half_exp + 1 for c in e.children]
    assert verify_partition(big_parent, scaled)
    assert sum((area(s) for s in scaled), ZERO) == area(big_parent)
