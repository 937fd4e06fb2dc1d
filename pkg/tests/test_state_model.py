from collections import Counter

import pytest
from hypothesis import given, settings

from kgdf.diagram import FOOT, HEAD, canonical_key, from_key, move_base_point, parse_gauss_code
from kgdf.gdf import enumerate_arrow_diagrams
from kgdf.poly import D, LaurentPoly2, exp_series, substitute_series
from kgdf.skein import dubrovnik_DK, homfly
from kgdf.state_model import (PHI, SINGULAR, SMOOTH, StateLabel, W_arrow, W_arrow_H,
                              arrow_weight_gdf, arrow_weight_homfly, arrow_weight_kauffman,
                              dk_state_sum, format_trace, homfly_state_sum, jones_weight_series,
                              run_process, state_contributions, w_kl)

from strategies import based_diagrams

P = LaurentPoly2.parse
# base point chosen so the first passages read F, H, F
TREFOIL_U_FIRST = "U1- O2- U3- O1- U2- O3-"

# (monomial, power of d) for the 17 contributing states of the left trefoil
CONTRIBUTING = [("a^4", 0), ("-a^3 z", 1), ("a^3 z", 0), ("-a^3 z", 1), ("a^4 z^2", 0),
                ("-a^3 z^3", 1), ("a^3 z^3", 0), ("-a^2 z^2", 0), ("-a^3 z^3", 1), ("a^3 z^3", 0),
                ("a^2 z^2", 1), ("a^3 z^3", 2), ("-a^3 z^3", 1), ("a^3 z", 0), ("-a^2 z^2", 0),
                ("-a^3 z^3", 1), ("a^3 z^3", 0)]


def test_kauffman_weight_table():
    for eps in (1, -1):
        assert arrow_weight_kauffman(eps, PHI, HEAD, 0) == LaurentPoly2.const(1)
        assert arrow_weight_kauffman(eps, PHI, FOOT, 0) == LaurentPoly2.monomial(1, -2 * eps, 0)
        assert arrow_weight_kauffman(eps, PHI, HEAD, 1) == LaurentPoly2.monomial(1, -2 * eps, 0)
        assert arrow_weight_kauffman(eps, PHI, FOOT, 1) == LaurentPoly2.const(1)
        for n in (0, 1):
            assert not arrow_weight_kauffman(eps, SMOOTH, HEAD, n)
            assert not arrow_weight_kauffman(eps, SINGULAR, HEAD, n)
        assert arrow_weight_kauffman(eps, SMOOTH, FOOT, 0) == LaurentPoly2.monomial(eps, -eps, 1)
        assert arrow_weight_kauffman(eps, SINGULAR, FOOT, 1) == LaurentPoly2.monomial(eps, -eps, 1)
        assert arrow_weight_gdf(eps, PHI, HEAD, 0) == LaurentPoly2()


def test_homfly_weight_table():
    for eps in (1, -1):
        assert arrow_weight_homfly(eps, PHI, HEAD, gdf=False) == LaurentPoly2.const(1)
        assert arrow_weight_homfly(eps, PHI, HEAD) == LaurentPoly2()
        assert arrow_weight_homfly(eps, PHI, FOOT) == LaurentPoly2.monomial(1, -2 * eps, 0) - 1
        assert arrow_weight_homfly(eps, SMOOTH, FOOT) == LaurentPoly2.monomial(eps, -eps, 1)
    with pytest.raises(ValueError):
        arrow_weight_homfly(1, SINGULAR, FOOT)


def test_contributing_states_of_trefoil():
    g = parse_gauss_code(TREFOIL_U_FIRST)
    got = Counter(str(w) for _, _, w in state_contributions(g))
    want = Counter(str(P(m) * D ** k) for m, k in CONTRIBUTING)
    assert got == want
    assert sum(got.values()) == 17


def test_worked_state_example():
    g = parse_gauss_code(TREFOIL_U_FIRST)
    sigma = {1: SINGULAR, 2: SMOOTH, 3: SINGULAR}
    lines = format_trace(g, sigma).splitlines()
    assert [ln.rsplit("w=", 1)[1] for ln in lines[:3]] == ["a z", "-a z", "a z"]
    assert lines[-1] == "c=2 valid=true weight=-a^3 z^3"


def test_all_phi_state(left_trefoil):
    t = run_process(left_trefoil, {a: PHI for a in (1, 2, 3)})
    assert t.components == 1 and t.valid
    assert set(t.change.values()) == {0}


def test_labeled_at_head_is_invalid(left_trefoil):
    # arrow 1 is first met at its head
    sigma = {1: SMOOTH, 2: PHI, 3: PHI}
    assert not run_process(left_trefoil, sigma).valid
    assert format_trace(left_trefoil, sigma).endswith("valid=false weight=0")


def test_state_label_parse():
    assert StateLabel.parse("inf") is SINGULAR and StateLabel.parse("∞") is SINGULAR
    assert StateLabel.parse("0") is SMOOTH and StateLabel.parse("φ") is PHI
    with pytest.raises(ValueError):
        StateLabel.parse("2")


@settings(max_examples=40)
@given(based_diagrams(max_arrows=4))
def test_state_sums_match_skein_on_arrow_diagrams(g):
    assert dk_state_sum(g) == dubrovnik_DK(g)
    assert homfly_state_sum(g) == homfly(g)


def test_state_sums_match_skein_on_corpus(corpus):
    for e in corpus:
        assert dk_state_sum(e.diagram) == dubrovnik_DK(e.diagram), e.name


def test_trefoil_rotations():
    g = parse_gauss_code(TREFOIL_U_FIRST)
    dk = dubrovnik_DK(g)
    for _ in range(6):
        g = move_base_point(g)
        assert dk_state_sum(g) == dk


def test_arrow_weights_small():
    assert W_arrow(parse_gauss_code("")) == LaurentPoly2.const(1)
    # a single arrow is isolated in every based position
    for key in ("H1+ F1+", "F1+ H1+", "H1- F1-", "F1- H1-"):
        assert not W_arrow(from_key(key))
        assert not W_arrow_H(from_key(key))


def test_w_kl_vanishes_below_arrow_count():
    g = from_key("F1+ H2+ H1+ F2+")
    assert w_kl(g, 1, 0) == 0
    assert w_kl(g, 2, 0) == -4
    assert w_kl(g, 1, 1) == 0
    assert w_kl(from_key("H1+ F2+ F1+ H2+"), 1, 1) == 2


@pytest.mark.parametrize("model, a_rate, z_rates", [("homfly", -4, (-2, 2)), ("kauffman", -3, (1, -1))])
def test_jones_substitution_routes_agree(model, a_rate, z_rates):
    cutoff = 4
    a_ser, a_inv = exp_series(a_rate, cutoff), exp_series(-a_rate, cutoff)
    z_ser = exp_series(z_rates[0], cutoff) - exp_series(z_rates[1], cutoff)
    for g in enumerate_arrow_diagrams(2):
        key = canonical_key(g)
        W = W_arrow_H(g) if model == "homfly" else W_arrow(g)
        assert jones_weight_series(key, model, cutoff) == substitute_series(W, a_ser, a_inv, z_ser), key
