"""Based Gauss/arrow diagrams and the surgery used by the skein recursion.

An arrow's head is its over-strand passage and its foot the under-strand
passage. Gauss diagrams and abstract arrow diagrams share one type; nothing
here checks realizability.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterator, List, Mapping, Sequence, Tuple


class GaussCodeError(ValueError):
    """Raised for malformed or inconsistent Gauss codes and diagram keys."""


class EndpointRole(enum.Enum):
    HEAD = "H"  # over strand
    FOOT = "F"  # under strand

    @property
    def other(self) -> "EndpointRole":
        return EndpointRole.FOOT if self is EndpointRole.HEAD else EndpointRole.HEAD


HEAD = EndpointRole.HEAD
FOOT = EndpointRole.FOOT

Endpoint = Tuple[int, EndpointRole]


def _sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


@dataclass(frozen=True)
class BasedKnotDiagram:
    """Endpoint sequence read from the base point, plus arrow signs.

    ``signs`` is stored as a sorted tuple of ``(arrowId, sign)`` pairs so the
    diagram is hashable; use :attr:`sign_of` for lookups.
    """

    endpoints: Tuple[Endpoint, ...]
    signs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        seen: Dict[int, set] = {}
        for aid, role in self.endpoints:
            if not isinstance(aid, int) or aid <= 0:
                raise GaussCodeError(f"arrow ids must be positive integers, got {aid!r}")
            roles = seen.setdefault(aid, set())
            if role in roles:
                raise GaussCodeError(f"arrow {aid} has two {role.name.lower()}s")
            roles.add(role)
        for aid, roles in seen.items():
            if len(roles) != 2:
                raise GaussCodeError(f"arrow {aid} must occur exactly twice")
        sign_ids = [aid for aid, _ in self.signs]
        if sorted(sign_ids) != sorted(seen) or len(set(sign_ids)) != len(sign_ids):
            raise GaussCodeError("sign map must cover exactly the arrows present")
        if any(s not in (1, -1) for _, s in self.signs):
            raise GaussCodeError("signs must be +1 or -1")

    @classmethod
    def build(cls, endpoints: Sequence[Endpoint], signs: Mapping[int, int]) -> "BasedKnotDiagram":
        return cls(tuple(endpoints), tuple(sorted(signs.items())))

    @property
    def sign_of(self) -> Dict[int, int]:
        return dict(self.signs)

    @property
    def arrows(self) -> List[int]:
        """Arrow ids in order of first occurrence from the base point."""
        out, seen = [], set()
        for aid, _ in self.endpoints:
            if aid not in seen:
                seen.add(aid)
                out.append(aid)
        return out

    @property
    def n_arrows(self) -> int:
        return len(self.endpoints) // 2

    def writhe(self) -> int:
        return sum(s for _, s in self.signs)

    def positions(self) -> Dict[int, Dict[EndpointRole, int]]:
        pos: Dict[int, Dict[EndpointRole, int]] = {}
        for i, (aid, role) in enumerate(self.endpoints):
            pos.setdefault(aid, {})[role] = i
        return pos

    def __str__(self):
        return serialize(self)


UNKNOT = BasedKnotDiagram((), ())

_TOKEN = re.compile(r"^([OUHF])(\d+)([+-])$")


def parse_gauss_code(text: str) -> BasedKnotDiagram:
    """Parse ``O<k><+|->`` / ``U<k><+|->`` tokens (``H``/``F`` also accepted).

    ``O`` and ``H`` map to the head (over), ``U`` and ``F`` to the foot (under).
    The base point precedes the first token.
    """
    endpoints: List[Endpoint] = []
    signs: Dict[int, int] = {}
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise GaussCodeError(f"malformed token {tok!r}")
        kind, num, sgn = m.groups()
        aid = int(num)
        if aid <= 0:
            raise GaussCodeError(f"arrow ids must be positive, got {tok!r}")
        role = HEAD if kind in "OH" else FOOT
        sign = 1 if sgn == "+" else -1
        if signs.setdefault(aid, sign) != sign:
            raise GaussCodeError(f"arrow {aid} has inconsistent signs")
        endpoints.append((aid, role))
    return BasedKnotDiagram.build(endpoints, signs)


def serialize(g: BasedKnotDiagram) -> str:
    """Inverse of :func:`parse_gauss_code` (O/U alphabet, ids kept)."""
    s = g.sign_of
    return " ".join(f"{'O' if r is HEAD else 'U'}{aid}{_sign_char(s[aid])}" for aid, r in g.endpoints)


def canonical_key(g: BasedKnotDiagram) -> str:
    """Based-diagram identity: ids renumbered by first occurrence, ``H``/``F`` tokens."""
    s = g.sign_of
    relabel: Dict[int, int] = {}
    toks = []
    for aid, role in g.endpoints:
        k = relabel.setdefault(aid, len(relabel) + 1)
        toks.append(f"{role.value}{k}{_sign_char(s[aid])}")
    return " ".join(toks)


def unsigned_key(g: BasedKnotDiagram) -> str:
    relabel: Dict[int, int] = {}
    return " ".join(f"{role.value}{relabel.setdefault(aid, len(relabel) + 1)}" for aid, role in g.endpoints)


def strip_signs(key: str) -> str:
    return " ".join(tok[:-1] for tok in key.split())


def from_key(key: str) -> BasedKnotDiagram:
    """Inverse of :func:`canonical_key`."""
    return parse_gauss_code(key)


def relabel_canonical(g: BasedKnotDiagram) -> BasedKnotDiagram:
    return from_key(canonical_key(g))


def subdiagrams(g: BasedKnotDiagram, max_arrows: int) -> Iterator[BasedKnotDiagram]:
    """Every subdiagram with at most ``max_arrows`` arrows, keeping the base point.

    Subsets are taken over arrows in first-occurrence order, by size and then
    lexicographically.
    """
    if max_arrows < 0:
        raise ValueError("max_arrows must be nonnegative")
    order = g.arrows
    s = g.sign_of
    for j in range(min(max_arrows, len(order)) + 1):
        for subset in combinations(order, j):
            keep = set(subset)
            yield BasedKnotDiagram.build([e for e in g.endpoints if e[0] in keep],
                                         {a: s[a] for a in keep})


def move_base_point(g: BasedKnotDiagram) -> BasedKnotDiagram:
    """Push the base point past one endpoint (cyclic rotation by one)."""
    if not g.endpoints:
        return g
    return BasedKnotDiagram(g.endpoints[1:] + g.endpoints[:1], g.signs)


def reverse_all_arrows(g: BasedKnotDiagram) -> BasedKnotDiagram:
    """Exchange head and foot of every arrow; signs are unchanged."""
    return BasedKnotDiagram(tuple((aid, role.other) for aid, role in g.endpoints), g.signs)


def switch_arrow(g: BasedKnotDiagram, arrow_id: int) -> BasedKnotDiagram:
    """Crossing change on a knot diagram: roles exchanged, sign negated."""
    if arrow_id not in g.sign_of:
        raise KeyError(f"unknown arrow {arrow_id}")
    eps = tuple((aid, role.other if aid == arrow_id else role) for aid, role in g.endpoints)
    s = g.sign_of
    s[arrow_id] = -s[arrow_id]
    return BasedKnotDiagram.build(eps, s)


def with_signs(g: BasedKnotDiagram, wanted: Mapping[int, int]) -> BasedKnotDiagram:
    """Switch the arrows whose sign differs from ``wanted``."""
    out = g
    for aid, sgn in wanted.items():
        if out.sign_of[aid] != sgn:
            out = switch_arrow(out, aid)
    return out


def isolated_arrows(g: BasedKnotDiagram) -> List[int]:
    """Arrows whose two endpoints are adjacent with no base point between them."""
    out = []
    for i in range(len(g.endpoints) - 1):
        if g.endpoints[i][0] == g.endpoints[i + 1][0]:
            out.append(g.endpoints[i][0])
    return out


# --------------------------------------------------------------------------
# Multi-component diagrams arising inside the skein recursion
# --------------------------------------------------------------------------

# A component is a cyclic tuple alternating arcs and endpoints, starting with
# its base arc: (arc, ep, arc, ep, ...). An arc is an int, the smallest
# original-order tag of the arc pieces it was merged from; the base point sits
# on the arc with the smallest tag, and components are ordered by that tag.
Item = object
Component = Tuple[Item, ...]


def _is_arc(x) -> bool:
    return isinstance(x, int)


def _normalize(items: Sequence[Item]) -> Component:
    """Merge adjacent arcs (cyclically) and rotate the minimal arc to the front."""
    out: List[Item] = []
    for x in items:
        if _is_arc(x) and out and _is_arc(out[-1]):
            out[-1] = min(out[-1], x)
        else:
            out.append(x)
    if len(out) > 1 and _is_arc(out[-1]) and _is_arc(out[0]):
        out[0] = min(out[0], out.pop())
    if not out:
        raise ValueError("empty component")
    arcs = [i for i, x in enumerate(out) if _is_arc(x)]
    start = min(arcs, key=lambda i: out[i])
    return tuple(out[start:] + out[:start])


@dataclass(frozen=True)
class LinkStateDiagram:
    """Based multi-component diagram; ``signs`` follow the current orientations."""

    components: Tuple[Component, ...]
    signs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        self.validate()

    @classmethod
    def from_knot(cls, g: BasedKnotDiagram) -> "LinkStateDiagram":
        items: List[Item] = []
        for i, ep in enumerate(g.endpoints):
            items.extend((i, ep))
        if not items:
            items = [0]
        return cls((tuple(items),), g.signs)

    @classmethod
    def _make(cls, comps: Sequence[Sequence[Item]], signs: Mapping[int, int]) -> "LinkStateDiagram":
        normed = sorted((_normalize(c) for c in comps), key=lambda c: c[0])
        return cls(tuple(normed), tuple(sorted(signs.items())))

    def validate(self):
        seen: Dict[int, set] = {}
        tags = []
        for comp in self.components:
            if not comp or not _is_arc(comp[0]):
                raise ValueError("component must start with its base arc")
            for i, x in enumerate(comp):
                if (i % 2 == 0) != _is_arc(x):
                    raise ValueError("arcs and endpoints must alternate")
                if _is_arc(x):
                    tags.append(x)
                else:
                    aid, role = x
                    if role in seen.setdefault(aid, set()):
                        raise ValueError(f"arrow {aid} has a repeated {role}")
                    seen[aid].add(role)
            if comp[0] != min(x for x in comp if _is_arc(x)):
                raise ValueError("base arc must carry the smallest tag")
        if any(len(r) != 2 for r in seen.values()):
            raise ValueError("every arrow needs a head and a foot")
        if sorted(seen) != [a for a, _ in self.signs]:
            raise ValueError("signs must cover exactly the arrows present")
        if len(set(tags)) != len(tags):
            raise ValueError("arc tags must be distinct")
        firsts = [c[0] for c in self.components]
        if firsts != sorted(firsts):
            raise ValueError("components must be ordered by base tag")

    @property
    def sign_of(self) -> Dict[int, int]:
        return dict(self.signs)

    def writhe(self) -> int:
        return sum(s for _, s in self.signs)

    def addresses(self) -> Dict[int, List[Tuple[int, int, EndpointRole]]]:
        """arrowId -> [(component, item index, role)] in traversal order."""
        out: Dict[int, List[Tuple[int, int, EndpointRole]]] = {}
        for ci, comp in enumerate(self.components):
            for ii, x in enumerate(comp):
                if not _is_arc(x):
                    out.setdefault(x[0], []).append((ci, ii, x[1]))
        return out

    def endpoint_lists(self) -> List[List[Endpoint]]:
        return [[x for x in comp if not _is_arc(x)] for comp in self.components]


def _locate(L: LinkStateDiagram, arrow_id: int):
    addr = L.addresses().get(arrow_id)
    if addr is None:
        raise KeyError(f"unknown arrow {arrow_id}")
    return addr


def switch_crossing(L: LinkStateDiagram, arrow_id: int) -> LinkStateDiagram:
    """Negate the sign and exchange head and foot of one arrow."""
    _locate(L, arrow_id)
    comps = [tuple((x[0], x[1].other) if not _is_arc(x) and x[0] == arrow_id else x for x in c)
             for c in L.components]
    signs = L.sign_of
    signs[arrow_id] = -signs[arrow_id]
    return LinkStateDiagram(tuple(comps), tuple(sorted(signs.items())))


def _drop(signs: Dict[int, int], arrow_id: int) -> Dict[int, int]:
    out = dict(signs)
    del out[arrow_id]
    return out


def smooth_oriented(L: LinkStateDiagram, arrow_id: int) -> LinkStateDiagram:
    """Orientation-respecting smoothing.

    A self-crossing splits its circle; the piece without the base point gets
    a base point on its smallest-tag arc. A crossing of two circles merges
    them, keeping the base point of the earlier one.
    """
    (c1, i, _), (c2, j, _) = _locate(L, arrow_id)
    comps = list(L.components)
    signs = _drop(L.sign_of, arrow_id)
    if c1 == c2:
        items = comps[c1]
        inner = items[i + 1:j]
        outer = items[:i] + items[j + 1:]
        comps[c1:c1 + 1] = [outer, inner]
    else:
        first, second = comps[c1], comps[c2]
        tail = second[j + 1:] + second[:j]
        merged = first[:i] + tail + first[i + 1:]
        comps = [c for k, c in enumerate(comps) if k not in (c1, c2)] + [merged]
    return LinkStateDiagram._make(comps, signs)


def singularize(L: LinkStateDiagram, arrow_id: int) -> LinkStateDiagram:
    """Orientation-violating reconnection.

    The part not reached from the base point before the arrow (the inner arc
    of a self-crossing, or the whole later circle) is traversed backwards;
    arrows with exactly one endpoint on it change sign.
    """
    (c1, i, _), (c2, j, _) = _locate(L, arrow_id)
    comps = list(L.components)
    signs = _drop(L.sign_of, arrow_id)
    if c1 == c2:
        items = comps[c1]
        flipped = items[i + 1:j]
        comps[c1] = items[:i] + tuple(reversed(flipped)) + items[j + 1:]
    else:
        first, second = comps[c1], comps[c2]
        flipped = second[j + 1:] + second[:j]
        merged = first[:i] + tuple(reversed(flipped)) + first[i + 1:]
        comps = [c for k, c in enumerate(comps) if k not in (c1, c2)] + [merged]
    count: Dict[int, int] = {}
    for x in flipped:
        if not _is_arc(x):
            count[x[0]] = count.get(x[0], 0) + 1
    for aid, k in count.items():
        if k == 1:
            signs[aid] = -signs[aid]
    return LinkStateDiagram._make(comps, signs)
