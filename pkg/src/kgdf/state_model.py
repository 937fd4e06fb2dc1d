"""State-sum model for DK and the arrow-diagram weight systems.

A state labels every arrow unlabeled (phi), smoothed (0) or singularized
(inf). The process walks the circle from the base point; the route is a
matching on the two sides of every endpoint that is rewired at the first
passage of a labeled arrow, so later passages simply follow it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Mapping, Sequence, Tuple

from .diagram import FOOT, HEAD, BasedKnotDiagram, EndpointRole, canonical_key, from_key, unsigned_key
from .poly import (
    DELTA,
    D,
    I,
    LaurentPoly2,
    TruncatedSeries2,
    a_power,
    laurent1_to_series,
    substitute_exponential,
    substitute_series,
)


class StateLabel(enum.Enum):
    PHI = "phi"
    SMOOTH = "0"
    SINGULAR = "inf"

    @classmethod
    def parse(cls, text: str) -> "StateLabel":
        t = text.strip().lower()
        for lab, names in ((cls.PHI, ("phi", "φ", "-", "")), (cls.SMOOTH, ("0", "smooth")),
                           (cls.SINGULAR, ("inf", "∞", "infinity", "singular"))):
            if t in names:
                return lab
        raise ValueError(f"unknown state label {text!r}")


PHI, SMOOTH, SINGULAR = StateLabel.PHI, StateLabel.SMOOTH, StateLabel.SINGULAR
KAUFFMAN_LABELS = (PHI, SMOOTH, SINGULAR)
HOMFLY_LABELS = (PHI, SMOOTH)


@dataclass(frozen=True)
class ProcessTrace:
    """Outcome of walking one state.

    ``change`` holds n(alpha): frozen at the first passage for labeled arrows,
    final for unlabeled ones. ``order`` lists arrows by first passage.
    """

    first_role: Dict[int, EndpointRole]
    change: Dict[int, int]
    order: Tuple[int, ...]
    components: int
    valid: bool


class _RouteError(RuntimeError):
    pass


def run_process(g: BasedKnotDiagram, sigma: Mapping[int, StateLabel]) -> ProcessTrace:
    """Walk the state ``sigma`` on ``g``.

    A labeled arrow first met at its head marks the state invalid; it is then
    passed straight so the rest of the trace is still filled in.
    """
    eps = g.endpoints
    m2 = len(eps)
    if set(sigma) != set(g.sign_of):
        raise ValueError("state must label exactly the arrows of the diagram")
    if m2 == 0:
        return ProcessTrace({}, {}, (), 1, True)
    arrow_at = [aid for aid, _ in eps]
    role_at = [r for _, r in eps]
    where: Dict[int, List[int]] = {}
    for p, aid in enumerate(arrow_at):
        where.setdefault(aid, []).append(p)
    partner = [0] * m2
    for p0, p1 in where.values():
        partner[p0], partner[p1] = p1, p0

    # node 2p is the side of endpoint p facing arc p, node 2p+1 faces arc p+1
    junction = [v ^ 1 for v in range(2 * m2)]
    orient = [1] * m2
    visited = [False] * m2
    n = {aid: 0 for aid in where}
    frozen = set()
    first_role: Dict[int, EndpointRole] = {}
    order: List[int] = []
    valid = True

    def arc_of(v):
        p, side = divmod(v, 2)
        return p if side == 0 else (p + 1) % m2

    def across(v):
        p, side = divmod(v, 2)
        return 2 * ((p - 1) % m2) + 1 if side == 0 else 2 * ((p + 1) % m2)

    components = 0
    next_unvisited = 0
    while True:
        while next_unvisited < m2 and visited[next_unvisited]:
            next_unvisited += 1
        if next_unvisited == m2:
            break
        start = next_unvisited
        components += 1
        visited[start] = True
        node = 2 * start if orient[start] == 1 else 2 * ((start - 1) % m2) + 1
        while True:
            p = node >> 1
            aid = arrow_at[p]
            if aid not in first_role:
                role = role_at[p]
                first_role[aid] = role
                order.append(aid)
                label = sigma[aid]
                if label is not PHI:
                    frozen.add(aid)
                    if role is HEAD:
                        valid = False
                    else:
                        q = partner[p]
                        in_p, out_p = node, node ^ 1
                        in_q = 2 * q if orient[q] == 1 else 2 * q + 1
                        out_q = in_q ^ 1
                        if label is SMOOTH:
                            junction[in_p], junction[out_q] = out_q, in_p
                            junction[in_q], junction[out_p] = out_p, in_q
                        else:
                            junction[in_p], junction[in_q] = in_q, in_p
                            junction[out_p], junction[out_q] = out_q, out_p
                            # the piece beyond q is now walked backwards
                            x = in_q
                            while True:
                                t = arc_of(x)
                                orient[t] = -orient[t]
                                y = across(x)
                                if y == out_p or y == out_q:
                                    break
                                other = arrow_at[y >> 1]
                                if other not in frozen:
                                    n[other] += 1
                                x = junction[y]
            y = junction[node]
            t = arc_of(y)
            if visited[t]:
                break
            step = 1 if y & 1 else -1
            if step != orient[t]:
                raise _RouteError("walk left the current orientation")
            visited[t] = True
            node = across(y)
        # a closed route must come back through its starting arc
    return ProcessTrace(first_role, n, tuple(order), components, valid)


# --------------------------------------------------------------------------
# weights
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def arrow_weight_kauffman(sign: int, label: StateLabel, role: EndpointRole, n: int) -> LaurentPoly2:
    par = 1 if n % 2 == 0 else -1
    if label is PHI:
        e = (par - 1) * sign if role is HEAD else (-par - 1) * sign
        return a_power(e)
    if role is HEAD:
        return LaurentPoly2()
    c = par * sign if label is SMOOTH else -par * sign
    return LaurentPoly2.monomial(c, -sign, 1)


@lru_cache(maxsize=None)
def arrow_weight_gdf(sign: int, label: StateLabel, role: EndpointRole, n: int) -> LaurentPoly2:
    """Kauffman weight with 1 subtracted from the unlabeled entries."""
    w = arrow_weight_kauffman(sign, label, role, n)
    return w - 1 if label is PHI else w


@lru_cache(maxsize=None)
def arrow_weight_homfly(sign: int, label: StateLabel, role: EndpointRole, gdf: bool = True) -> LaurentPoly2:
    """HOMFLY-PT weights; ``gdf=False`` gives the knot state-model variant."""
    if label is SINGULAR:
        raise ValueError("HOMFLY-PT states carry no singular labels")
    if label is PHI:
        w = LaurentPoly2.const(1) if role is HEAD else a_power(-2 * sign)
        return w - 1 if gdf else w
    if role is HEAD:
        return LaurentPoly2()
    return LaurentPoly2.monomial(sign, -sign, 1)


def state_weight(g: BasedKnotDiagram, sigma: Mapping[int, StateLabel], trace: ProcessTrace,
                 kind: str = "kauffman") -> LaurentPoly2:
    """Product of per-arrow weights (without the component factor)."""
    if not trace.valid:
        return LaurentPoly2()
    signs = g.sign_of
    w = LaurentPoly2.const(1)
    for aid in trace.order:
        if kind == "kauffman":
            f = arrow_weight_kauffman(signs[aid], sigma[aid], trace.first_role[aid], trace.change[aid])
        elif kind == "gdf":
            f = arrow_weight_gdf(signs[aid], sigma[aid], trace.first_role[aid], trace.change[aid])
        elif kind == "homfly":
            f = arrow_weight_homfly(signs[aid], sigma[aid], trace.first_role[aid], gdf=False)
        elif kind == "homfly-gdf":
            f = arrow_weight_homfly(signs[aid], sigma[aid], trace.first_role[aid], gdf=True)
        else:
            raise ValueError(f"unknown weight kind {kind!r}")
        if not f:
            return f
        w = w * f
    return w


def iter_states(g: BasedKnotDiagram, labels: Sequence[StateLabel] = KAUFFMAN_LABELS):
    """All states in lexicographic (arrowId, label) order with phi < 0 < inf."""
    arrows = sorted(g.sign_of)
    for combo in product(labels, repeat=len(arrows)):
        yield dict(zip(arrows, combo))


def state_contributions(g: BasedKnotDiagram, kind: str = "kauffman"):
    """``(sigma, trace, weight * factor^(c-1))`` for every nonzero state."""
    homfly_kind = kind.startswith("homfly")
    factor = DELTA if homfly_kind else D
    for sigma in iter_states(g, HOMFLY_LABELS if homfly_kind else KAUFFMAN_LABELS):
        trace = run_process(g, sigma)
        if not trace.valid:
            continue
        w = state_weight(g, sigma, trace, kind)
        if w:
            yield sigma, trace, w * factor ** (trace.components - 1)


def _state_sum(g: BasedKnotDiagram, kind: str) -> LaurentPoly2:
    total = LaurentPoly2()
    for _, _, contrib in state_contributions(g, kind):
        total = total + contrib
    return total


def dk_state_sum(g: BasedKnotDiagram) -> LaurentPoly2:
    """DK of a knot diagram as a sum over all 3^n states."""
    return _state_sum(g, "kauffman")


def homfly_state_sum(g: BasedKnotDiagram) -> LaurentPoly2:
    return _state_sum(g, "homfly")


# --------------------------------------------------------------------------
# arrow-diagram weight systems
# --------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _valid_traces(ukey: str, homfly: bool) -> Tuple[Tuple[Tuple[StateLabel, ...], ProcessTrace], ...]:
    """Valid states of an unsigned diagram; routes do not depend on signs."""
    g = from_key(" ".join(tok + "+" for tok in ukey.split()))
    arrows = sorted(g.sign_of)
    out = []
    for combo in product(HOMFLY_LABELS if homfly else KAUFFMAN_LABELS, repeat=len(arrows)):
        trace = run_process(g, dict(zip(arrows, combo)))
        if trace.valid:
            out.append((combo, trace))
    return tuple(out)


def _W(g: BasedKnotDiagram, homfly: bool) -> LaurentPoly2:
    key = canonical_key(g)
    g = from_key(key)
    arrows = sorted(g.sign_of)
    signs = g.sign_of
    factor = DELTA if homfly else D
    total = LaurentPoly2()
    for combo, trace in _valid_traces(unsigned_key(g), homfly):
        w = LaurentPoly2.const(1)
        for aid, label in zip(arrows, combo):
            role = trace.first_role[aid]
            if homfly:
                f = arrow_weight_homfly(signs[aid], label, role, True)
            else:
                f = arrow_weight_gdf(signs[aid], label, role, trace.change[aid])
            if not f:
                break
            w = w * f
        else:
            total = total + w * factor ** (trace.components - 1)
    return total


@lru_cache(maxsize=None)
def _W_by_key(key: str, homfly: bool) -> LaurentPoly2:
    return _W(from_key(key), homfly)


def W_arrow(A: BasedKnotDiagram) -> LaurentPoly2:
    """Weight polynomial of an arrow diagram (Kauffman GDF weights, d-factor)."""
    return _W_by_key(canonical_key(A), False)


def W_arrow_H(A: BasedKnotDiagram) -> LaurentPoly2:
    """HOMFLY-PT weight polynomial of an arrow diagram (delta-factor)."""
    return _W_by_key(canonical_key(A), True)


# --------------------------------------------------------------------------
# coefficient extraction
# --------------------------------------------------------------------------

DEFAULT_CUTOFF = 4


@lru_cache(maxsize=None)
def kauffman_series(key: str, cutoff: int = DEFAULT_CUTOFF) -> TruncatedSeries2:
    return substitute_exponential(_W_by_key(key, False), cutoff)


def w_kl(A: BasedKnotDiagram, k: int, l: int) -> object:
    """Coefficient of h^k z^l in W_A(e^h, z)."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    if A.n_arrows > k + l:
        return 0
    return kauffman_series(canonical_key(A), max(DEFAULT_CUTOFF, k + l)).coefficient(k, l)


def _jones_images(model: str, cutoff: int):
    """Series in h of a, 1/a and z after s -> i e^h, computed in Gaussian arithmetic."""
    from .skein import DK_A_IMAGE, DK_Z_IMAGE, H_A_IMAGE, H_Z_IMAGE
    if model == "homfly":
        a_img, z_img = H_A_IMAGE, H_Z_IMAGE
    elif model == "kauffman":
        a_img, z_img = DK_A_IMAGE, DK_Z_IMAGE
    else:
        raise ValueError(f"unknown model {model!r}")
    return (laurent1_to_series(a_img, I, cutoff), laurent1_to_series(a_img.inverse(), I, cutoff),
            laurent1_to_series(z_img, I, cutoff))


@lru_cache(maxsize=None)
def _jones_images_cached(model: str, cutoff: int):
    return _jones_images(model, cutoff)


@lru_cache(maxsize=None)
def jones_weight_series(key: str, model: str, cutoff: int = DEFAULT_CUTOFF) -> TruncatedSeries2:
    W = _W_by_key(key, model == "homfly")
    return substitute_series(W, *_jones_images_cached(model, cutoff))


def w_k_jones(A: BasedKnotDiagram, model: str, k: int) -> object:
    """Coefficient of h^k in W_A (model weights) under the Jones substitution s = i e^h."""
    if A.n_arrows > k:
        return 0
    c = jones_weight_series(canonical_key(A), model, max(DEFAULT_CUTOFF, k)).coefficient(k)
    if not isinstance(c, (int,)) and getattr(c, "im", 0) != 0:
        raise ArithmeticError(f"nonreal Jones weight {c} for {canonical_key(A)}")
    return c


# --------------------------------------------------------------------------
# debug trace
# --------------------------------------------------------------------------

def format_trace(g: BasedKnotDiagram, sigma: Mapping[int, StateLabel]) -> str:
    """Stable text rendering of one state's process and weight."""
    trace = run_process(g, sigma)
    signs = g.sign_of
    lines = []
    for aid in trace.order:
        role = trace.first_role[aid]
        w = arrow_weight_kauffman(signs[aid], sigma[aid], role, trace.change[aid])
        lines.append(f"arrow={aid} sign={'+' if signs[aid] > 0 else '-'} label={sigma[aid].value} "
                     f"first={role.value} n={trace.change[aid]} w={w}")
    weight = state_weight(g, sigma, trace)
    lines.append(f"c={trace.components} valid={'true' if trace.valid else 'false'} weight={weight}")
    return "\n".join(lines)
