import pytest
from hypothesis import given, strategies as st

from kgdf.diagram import (FOOT, HEAD, UNKNOT, BasedKnotDiagram, GaussCodeError, LinkStateDiagram,
                          canonical_key, from_key, isolated_arrows, move_base_point,
                          parse_gauss_code, reverse_all_arrows, serialize, singularize,
                          smooth_oriented, strip_signs, subdiagrams, switch_arrow, switch_crossing,
                          unsigned_key, with_signs)

from strategies import based_diagrams


def test_parse_trefoil(left_trefoil):
    assert left_trefoil.n_arrows == 3
    assert left_trefoil.writhe() == -3
    assert left_trefoil.endpoints[0] == (1, HEAD)
    assert left_trefoil.endpoints[1] == (2, FOOT)
    assert canonical_key(left_trefoil) == "H1- F2- H3- F1- H2- F3-"


def test_parse_empty_is_unknot():
    assert parse_gauss_code("") == UNKNOT
    assert canonical_key(UNKNOT) == ""
    assert serialize(UNKNOT) == ""


@pytest.mark.parametrize("bad", ["O1+", "O1+ O1+", "O1+ U1-", "X1+ U1+", "O0+ U0+", "O1 U1", "O1+ U1+ U1+"])
def test_parse_errors(bad):
    with pytest.raises(GaussCodeError):
        parse_gauss_code(bad)


@given(based_diagrams())
def test_serialize_round_trip(g):
    assert parse_gauss_code(serialize(g)) == g
    assert from_key(canonical_key(g)) == from_key(canonical_key(from_key(canonical_key(g))))


def test_canonical_key_renumbers():
    g = parse_gauss_code("U7+ O3- O7+ U3-")
    assert canonical_key(g) == "F1+ H2- H1+ F2-"
    assert unsigned_key(g) == "F1 H2 H1 F2"
    assert strip_signs(canonical_key(g)) == unsigned_key(g)


@given(based_diagrams(max_arrows=5))
def test_subdiagram_count(g):
    subs = list(subdiagrams(g, g.n_arrows))
    assert len(subs) == 2 ** g.n_arrows
    assert len(list(subdiagrams(g, 1))) == 1 + g.n_arrows


def test_move_base_point():
    assert move_base_point(UNKNOT) == UNKNOT
    assert move_base_point(parse_gauss_code("O1+ U1+")) == parse_gauss_code("U1+ O1+")


@given(based_diagrams(max_arrows=4))
def test_full_rotation_and_reversal_involution(g):
    r = g
    for _ in range(len(g.endpoints)):
        r = move_base_point(r)
    assert r == g
    assert canonical_key(reverse_all_arrows(reverse_all_arrows(g))) == canonical_key(g)


def test_reverse_all_arrows_kink():
    assert canonical_key(reverse_all_arrows(parse_gauss_code("O1+ U1+"))) == "F1+ H1+"


def test_switch_and_with_signs(left_trefoil):
    s = switch_arrow(left_trefoil, 2)
    assert s.sign_of[2] == 1
    assert switch_arrow(s, 2) == left_trefoil
    assert with_signs(left_trefoil, {1: -1, 2: 1}) == s


def test_isolated_arrows():
    assert isolated_arrows(parse_gauss_code("O1+ U1+ O2- U3+ O3+ U2-")) == [1, 3]
    # chord through the base point is not isolated
    assert isolated_arrows(parse_gauss_code("O1+ O2+ U2+ U1+")) == [2]


def _n_comps(L):
    return len(L.components)


def test_smooth_kink_splits():
    L = LinkStateDiagram.from_knot(parse_gauss_code("O1+ U1+"))
    out = smooth_oriented(L, 1)
    assert _n_comps(out) == 2
    assert not out.signs


def test_singularize_kink_single_circle():
    L = LinkStateDiagram.from_knot(parse_gauss_code("U1+ O1+"))
    out = singularize(L, 1)
    assert _n_comps(out) == 1 and not out.signs


def test_singularize_sign_rules():
    # arrow 2 has one endpoint between the endpoints of 1, arrow 3 has both
    L = LinkStateDiagram.from_knot(parse_gauss_code("U1+ O2+ O3+ U3+ O1+ U2+"))
    out = singularize(L, 1)
    assert out.sign_of == {2: -1, 3: 1}


def test_smooth_trefoil_crossing(left_trefoil):
    L = LinkStateDiagram.from_knot(left_trefoil)
    out = smooth_oriented(L, 1)
    assert _n_comps(out) == 2
    # arrows 2 and 3 now join the two circles
    assert sorted(len(c) for c in out.endpoint_lists()) == [2, 2]


@given(based_diagrams(min_arrows=1, max_arrows=5), st.data())
def test_surgeries_preserve_invariants(g, data):
    L = LinkStateDiagram.from_knot(g)
    aid = data.draw(st.sampled_from(sorted(g.sign_of)))
    for op in (switch_crossing, smooth_oriented, singularize):
        out = op(L, aid)
        out.validate()
    assert _n_comps(smooth_oriented(L, aid)) == 2
    assert _n_comps(singularize(L, aid)) == 1
    with pytest.raises(KeyError):
        smooth_oriented(L, 99)
