"""Skein-recursion evaluators: Dubrovnik D/DK, HOMFLY-PT, and Jones specializations.

The descending algorithm walks each component from its base point. The first
time a crossing is met on its under strand it is expanded by the skein
relation; a diagram in which every crossing is first met on its over strand
is a stack of unknots and is evaluated in closed form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, Optional, Tuple

from .diagram import (
    FOOT,
    BasedKnotDiagram,
    LinkStateDiagram,
    singularize,
    smooth_oriented,
    switch_crossing,
)
from .poly import (
    DELTA,
    D,
    I,
    LaurentPoly1,
    LaurentPoly2,
    TruncatedSeries2,
    a_power,
    laurent1_to_series,
    substitute_exponential,
    substitute_monomial,
)

DEFAULT_CUTOFF = 5


@dataclass(frozen=True)
class SkeinNode:
    """A diagram in the recursion tree plus the walk position.

    ``component`` is the component being walked and ``passed`` the number of
    its endpoints already traversed.
    """

    diagram: LinkStateDiagram
    coefficient: LaurentPoly2
    component: int = 0
    passed: int = 0


def next_bottom_crossing(L: LinkStateDiagram, component: int = 0, passed: int = 0
                         ) -> Optional[Tuple[int, int, int]]:
    """First endpoint, from the frontier on, where a crossing is first met on its foot.

    Returns ``(component, endpoint index, arrowId)`` or ``None`` if the rest
    of the walk is descending.
    """
    eps = L.endpoint_lists()
    seen = set()
    for ci in range(component):
        seen.update(aid for aid, _ in eps[ci])
    seen.update(aid for aid, _ in eps[component][:passed])
    for ci in range(component, len(eps)):
        start = passed if ci == component else 0
        for k in range(start, len(eps[ci])):
            aid, role = eps[ci][k]
            if aid in seen:
                continue
            if role is FOOT:
                return ci, k, aid
            seen.add(aid)
    return None


def expand(node: SkeinNode, homfly: bool = False) -> Iterator[SkeinNode]:
    """Children of a non-terminal node (empty iterator when terminal)."""
    L = node.diagram
    hit = next_bottom_crossing(L, node.component, node.passed)
    if hit is None:
        return
    ci, k, aid = hit
    s = L.sign_of[aid]
    coeff = node.coefficient
    if homfly:
        # a H+ - 1/a H- = z H0
        yield SkeinNode(switch_crossing(L, aid), coeff * a_power(-2 * s), ci, k + 1)
        yield SkeinNode(smooth_oriented(L, aid),
                        coeff * LaurentPoly2.monomial(s, -s, 1), ci, k)
        return
    # D+ - D- = z (D0 - Dinf)
    yield SkeinNode(switch_crossing(L, aid), coeff, ci, k + 1)
    yield SkeinNode(smooth_oriented(L, aid), coeff * LaurentPoly2.monomial(s, 0, 1), ci, k)
    yield SkeinNode(singularize(L, aid), coeff * LaurentPoly2.monomial(-s, 0, 1), ci, k)


def terminal_value(L: LinkStateDiagram, homfly: bool = False) -> LaurentPoly2:
    c = len(L.components)
    if homfly:
        return DELTA ** (c - 1)
    return a_power(L.writhe()) * D ** (c - 1)


def _evaluate(L: LinkStateDiagram, component: int, passed: int, homfly: bool) -> LaurentPoly2:
    return _evaluate_cached(L, component, passed, homfly)


@lru_cache(maxsize=200_000)
def _evaluate_cached(L: LinkStateDiagram, component: int, passed: int, homfly: bool) -> LaurentPoly2:
    root = SkeinNode(L, LaurentPoly2.const(1), component, passed)
    children = list(expand(root, homfly))
    if not children:
        return terminal_value(L, homfly)
    total = LaurentPoly2()
    for ch in children:
        total = total + ch.coefficient * _evaluate(ch.diagram, ch.component, ch.passed, homfly)
    return total


def skein_tree(K: BasedKnotDiagram, homfly: bool = False) -> Iterator[Tuple[int, SkeinNode]]:
    """Depth-first ``(depth, node)`` listing of the whole recursion tree."""
    stack = [(0, SkeinNode(LinkStateDiagram.from_knot(K), LaurentPoly2.const(1)))]
    while stack:
        depth, node = stack.pop()
        yield depth, node
        children = list(expand(node, homfly))
        stack.extend((depth + 1, ch) for ch in reversed(children))


def dubrovnik_D(K: BasedKnotDiagram) -> LaurentPoly2:
    """Regular-isotopy Dubrovnik polynomial of the knot diagram."""
    return _evaluate(LinkStateDiagram.from_knot(K), 0, 0, False)


def dubrovnik_DK(K: BasedKnotDiagram) -> LaurentPoly2:
    """Oriented normalization ``a^(-writhe) D``."""
    return a_power(-K.writhe()) * dubrovnik_D(K)


def homfly(K: BasedKnotDiagram) -> LaurentPoly2:
    """HOMFLY-PT with ``a H+ - a^-1 H- = z H0`` and unknot = 1."""
    return _evaluate(LinkStateDiagram.from_knot(K), 0, 0, True)


# images of a and z in the variable s for J(s) = V(s^4)
DK_A_IMAGE = LaurentPoly1.monomial(-I, -3)
DK_Z_IMAGE = LaurentPoly1({(-1,): -I, (1,): -I})
H_A_IMAGE = LaurentPoly1.monomial(1, -4)
H_Z_IMAGE = LaurentPoly1({(2,): 1, (-2,): -1})


class NonRealJonesError(ArithmeticError):
    pass


def _check_jones(J: LaurentPoly1, route: str) -> LaurentPoly1:
    if not J.is_integral():
        raise NonRealJonesError(f"{route} route produced a non-integral Jones polynomial {J}")
    return J


def jones_from_dk(K: BasedKnotDiagram) -> LaurentPoly1:
    """``J(s) = DK(-i s^-3, -i (s^-1 + s))``."""
    return _check_jones(substitute_monomial(dubrovnik_DK(K), DK_A_IMAGE, DK_Z_IMAGE), "DK")


def jones_from_homfly(K: BasedKnotDiagram) -> LaurentPoly1:
    """``J(s) = H(s^-4, s^2 - s^-2)``."""
    return _check_jones(substitute_monomial(homfly(K), H_A_IMAGE, H_Z_IMAGE), "HOMFLY")


def jones_series(J: LaurentPoly1, cutoff: int = DEFAULT_CUTOFF) -> TruncatedSeries2:
    """``J(i e^h)`` as a series in ``h``."""
    return laurent1_to_series(J, I, cutoff)


def jones_coefficients(K: BasedKnotDiagram, cutoff: int = DEFAULT_CUTOFF) -> Dict[int, object]:
    ser = jones_series(jones_from_homfly(K), cutoff)
    return {k: ser.coefficient(k) for k in range(cutoff + 1)}


def _table(p: LaurentPoly2, cutoff: int) -> Dict[Tuple[int, int], object]:
    ser = substitute_exponential(p, cutoff)
    return {(k, l): ser.coefficient(k, l) for k in range(cutoff + 1) for l in range(cutoff + 1 - k)}


def p_table(K: BasedKnotDiagram, cutoff: int = DEFAULT_CUTOFF) -> Dict[Tuple[int, int], object]:
    """Coefficients of ``h^k z^l`` in ``DK(e^h, z)`` for ``k + l <= cutoff``."""
    return _table(dubrovnik_DK(K), cutoff)


def h_table(K: BasedKnotDiagram, cutoff: int = DEFAULT_CUTOFF) -> Dict[Tuple[int, int], object]:
    """Coefficients of ``h^k z^l`` in ``H(e^h, z)`` for ``k + l <= cutoff``."""
    return _table(homfly(K), cutoff)
