import pytest

from fibrun.barriers import distance_certified
from fibrun.constructions import (
    ConstructionSpec,
    complete_h_pair,
    complete_length,
    construct,
    h_type_pair,
    lemma310_gain,
    nh_bar1_pair,
    nh_bar2_pair,
    suffix_shape,
    thick_chain_pair,
)
from fibrun.errors import ConstructionError
from fibrun.graph_oracle import distance_bfs
from fibrun.strings import hamming, is_vertex


def rl(*pairs):
    return "".join(str(b) * k for b, k in pairs)


def test_complete_pairs():
    assert complete_h_pair(0) == ("1001", "0110")
    assert complete_h_pair(1) == ("1001110000110", "0110001111000")
    assert [complete_length(q) for q in range(3)] == [4, 13, 26]


def test_h_type_examples():
    w = h_type_pair(0, 4)
    assert (w.u, w.v) == ("1001", "0110")
    w = h_type_pair(1, 13)
    assert (w.u, w.v) == ("1001110000110", "0110001111000")
    w = h_type_pair(6, 91)
    assert w.u == rl((1, 1), (0, 8), (1, 9), (0, 10), (1, 11), (0, 12), (1, 13), (0, 14), (1, 7), (0, 6))
    assert w.certified_distance == 85


@pytest.mark.parametrize("q", range(0, 13))
def test_h_type_hamming_every_suffix(q):
    for n in range(q, complete_length(q) + 1):
        w = h_type_pair(q, n)
        assert hamming(w.u, w.v) == n - q
        assert not w.certificate.barriers


def test_h_type_too_long():
    with pytest.raises(ConstructionError):
        h_type_pair(2, 27)


def test_suffix_shape_matches_strings():
    for q in range(1, 8):
        for n in range(q, complete_length(q) + 1):
            shape = suffix_shape(q, n)
            if shape is None:
                continue
            w = h_type_pair(q, n)
            assert shape.zero_string() == (w.u if shape.zero_side == "mu" else w.v)


def test_example_37():
    w = nh_bar1_pair(ConstructionSpec("NH-Bar1", 91, 9, b=6))
    assert w.v == rl((1, 16), (0, 17), (1, 19), (0, 20), (1, 10), (0, 9))
    assert w.certified_distance == 86 and w.e == 1
    assert w.certificate.hamming == 76
    assert w.spec.params()["k"] == 15 and w.spec.params()["t"] == 5


def test_theorem_witnesses_p7():
    # n = 119..124 with q = 9, b = 5
    for n in range(119, 125):
        w = nh_bar1_pair(ConstructionSpec("NH-Bar1", n, 9, b=5))
        assert w.certified_distance == n - 7 + 1
    w = nh_bar1_pair(ConstructionSpec("NH-Bar1", 119, 9, b=5))
    assert w.u == "100" * 4 + rl((1, 15), (0, 16), (1, 18), (0, 19), (1, 20), (0, 19))
    w5 = nh_bar1_pair(ConstructionSpec("NH-Bar1", 123, 9, b=5))
    assert w5.case == "shifted"
    assert w5.u.startswith("11000" + "100" * 3 + "1" * 16 + "0" * 17)
    assert w5.v.startswith("01111" + "111" * 3 + "1" + "0" * 15 + "1" * 17)


def test_n94_witness():
    w = nh_bar2_pair(ConstructionSpec("NH-Bar2", 94, 7))
    assert w.u == "100" * 3 + rl((1, 12), (0, 13), (1, 14), (0, 15), (1, 16), (0, 15))
    assert w.certified_distance == 89


def test_bar2_rejects_wrong_shape():
    with pytest.raises(ConstructionError):
        nh_bar2_pair(ConstructionSpec("NH-Bar2", 92, 7))
    # drop 12 leaves 0^3 1^6 ..., i.e. t = 1
    with pytest.raises(ConstructionError, match="t >= 2"):
        nh_bar2_pair(ConstructionSpec("NH-Bar2", complete_length(3) - 12, 3))


def test_bar2_is_the_extend_case():
    for n, q in ((94, 7), (34, 4), (95, 8), (293, 17)):
        two = nh_bar2_pair(ConstructionSpec("NH-Bar2", n, q))
        t = two.spec.params()["k"] // 3
        one = nh_bar1_pair(ConstructionSpec("NH-Bar1", n, q, b=t + 1))
        assert (one.u, one.v, one.certified_distance) == (two.u, two.v, two.certified_distance)
        assert two.e == t + 1 - (two.spec.m + 2)


def test_example_46():
    w = thick_chain_pair(ConstructionSpec("ThickChain", 288, 21, w=2, c=8))
    assert w.u == "11000" * 7 + "11" + rl((1, 38), (0, 41), (1, 42), (0, 43), (1, 44), (0, 43))
    assert w.v == "11111" * 7 + "11" + rl((0, 38), (1, 41), (0, 42), (1, 43), (0, 44), (1, 22), (0, 21))
    assert w.certified_distance == 279
    assert lemma310_gain(w.certificate, h_type_pair(21, 288)) == 12


def test_example_47():
    w = thick_chain_pair(ConstructionSpec("ThickChain", 520, 23, w=2, c=7, prefix=True, join=False))
    assert w.u == "100" + "11000" * 7 + rl((1, 39), (0, 40), (1, 41), (0, 42), (1, 43), (0, 44), (1, 45), (0, 46), (1, 47), (0, 48), (1, 24), (0, 23))
    assert w.certified_distance == 508
    assert lemma310_gain(w.certificate, h_type_pair(23, 520)) == 11


def test_two_block_chain_has_no_gain():
    for w_, join in ((2, True), (2, False), (3, False), (4, False)):
        spec = ConstructionSpec("ThickChain", 288, 21, w=w_, c=2, join=join)
        assert construct(spec).certified_distance == 288 - 21


def test_join_needs_room_in_first_run():
    # the solid window would run 2w columns into a run of length N = k + 5
    with pytest.raises(ConstructionError, match="not vertices"):
        construct(ConstructionSpec("ThickChain", 288, 21, w=3, c=2, join=True))


def test_unit_barrier_gain_is_r_minus_2():
    w = nh_bar1_pair(ConstructionSpec("NH-Bar1", 91, 9, b=6))
    (bar,) = w.certificate.barriers
    assert len(bar.thicknesses) == 6
    assert lemma310_gain(w.certificate, h_type_pair(9, 91)) == 6 - 2


def test_gain_check_detects_inconsistency():
    w = nh_bar1_pair(ConstructionSpec("NH-Bar1", 91, 9, b=6))
    with pytest.raises(AssertionError):
        lemma310_gain(w.certificate, h_type_pair(8, 91))


def test_boundary_b_gives_zero_gain():
    # n at the edge of the feasibility inequality for q = 7, b = 4; there m = 2
    q, b = 7, 4
    n = complete_length(q) - (3 * b) * (3 * b - 1) // 2
    spec = ConstructionSpec("NH-Bar1", n, q, b=b)
    assert spec.m + 2 == b
    w = nh_bar1_pair(spec)
    assert w.e == 0 and w.certified_distance == n - spec.p


def test_unknown_family():
    with pytest.raises(ValueError):
        ConstructionSpec("Bogus", 10, 1)


def test_witness_json_keys():
    d = h_type_pair(6, 91).to_dict()
    assert list(d) == ["family", "params", "u", "v", "hamming", "certified_distance", "e"]
    assert list(d["params"]) == ["p", "m", "b", "k", "s", "t", "w", "c"]


def _small_specs(n, q):
    yield ConstructionSpec("H", n, q)
    for b in range(2, 8):
        yield ConstructionSpec("NH-Bar1", n, q, b=b)
    yield ConstructionSpec("NH-Bar2", n, q)
    for w in (1, 2, 3):
        for c in (2, 3, 4):
            for prefix in (False, True):
                for join in (True, False):
                    yield ConstructionSpec("ThickChain", n, q, w=w, c=c, prefix=prefix, join=join)


def test_small_instances_against_bfs(index_cache):
    seen = set()
    for n in range(4, 21):
        g = index_cache(n)
        for q in range(0, 12):
            if complete_length(q) < n or n < q:
                continue
            for spec in _small_specs(n, q):
                try:
                    w = construct(spec)
                except ConstructionError:
                    continue
                seen.add(spec.family)
                assert is_vertex(w.u, n) and is_vertex(w.v, n)
                assert w.certified_distance == distance_bfs(g, w.u, w.v)
                cert = distance_certified(w.u, w.v)
                assert cert.hamming + 2 * cert.detour == w.certified_distance
    # the smallest Bar2 shape (t = 2) needs n = 34, beyond BFS range
    assert seen == {"H", "NH-Bar1", "ThickChain"}
