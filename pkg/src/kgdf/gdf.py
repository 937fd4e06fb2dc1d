"""Gauss diagram formulas: enumeration, universal formulas, pairing, unsigned form."""
from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple

from .diagram import BasedKnotDiagram, canonical_key, from_key, strip_signs, subdiagrams
from .poly import _real
from .state_model import jones_weight_series, kauffman_series

MAX_ORDER = 4


class CollapseError(ValueError):
    """A GDF has no unsigned form; ``diagram`` names the offending underlying diagram."""

    def __init__(self, diagram: str, msg: str):
        super().__init__(f"{diagram}: {msg}")
        self.diagram = diagram


class GDF:
    """Finite rational combination of based arrow diagrams, keyed canonically.

    ``unsigned=True`` marks the collapsed representation, whose keys carry no
    signs and stand for the alternating sum over all sign assignments.
    """

    __slots__ = ("terms", "unsigned")

    def __init__(self, terms: Mapping[str, object] | None = None, unsigned: bool = False):
        self.terms: Dict[str, object] = {}
        for k, v in (terms or {}).items():
            if v != 0:
                self.terms[k] = _real(Fraction(v))
        self.unsigned = unsigned

    def __add__(self, other: "GDF") -> "GDF":
        if self.unsigned != other.unsigned:
            raise ValueError("cannot add signed and unsigned GDFs")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return GDF(out, self.unsigned)

    def __mul__(self, c) -> "GDF":
        return GDF({k: v * c for k, v in self.terms.items()}, self.unsigned)

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, GDF):
            return NotImplemented
        return self.unsigned == other.unsigned and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def coefficient(self, key: str):
        return self.terms.get(key, 0)

    def map_keys(self, fn) -> "GDF":
        out: Dict[str, object] = {}
        for k, v in self.terms.items():
            nk = fn(k)
            out[nk] = out.get(nk, 0) + v
        return GDF(out, self.unsigned)

    def to_json(self) -> dict:
        return {"unsigned": self.unsigned,
                "terms": [{"key": k, "coeff": [Fraction(v).numerator, Fraction(v).denominator]}
                          for k, v in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, obj: dict) -> "GDF":
        return cls({t["key"]: Fraction(*t["coeff"]) for t in obj["terms"]}, bool(obj.get("unsigned")))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    def __repr__(self):
        body = ", ".join(f"{v}*[{k}]" for k, v in self)
        return f"GDF({'unsigned, ' if self.unsigned else ''}{body})"


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def _pairings(n: int) -> Iterator[Tuple[int, ...]]:
    """Perfect matchings of 2n points as label sequences, labels by first occurrence."""
    def rec(seq: List[int], open_ids: List[int], next_id: int):
        if len(seq) == 2 * n:
            yield tuple(seq)
            return
        remaining = 2 * n - len(seq)
        if next_id <= n and remaining > len(open_ids):
            seq.append(next_id)
            yield from rec(seq, open_ids + [next_id], next_id + 1)
            seq.pop()
        for i, a in enumerate(open_ids):
            seq.append(a)
            yield from rec(seq, open_ids[:i] + open_ids[i + 1:], next_id)
            seq.pop()
    yield from rec([], [], 1)


def enumerate_unsigned(m: int) -> Iterator[str]:
    """Unsigned keys of all based diagrams with ``m`` directed chords."""
    for seq in _pairings(m):
        for first_roles in product("HF", repeat=m):
            seen = set()
            toks = []
            for a in seq:
                r = first_roles[a - 1]
                if a in seen:
                    r = "F" if r == "H" else "H"
                seen.add(a)
                toks.append(f"{r}{a}")
            yield " ".join(toks)


def sign_variants(ukey: str) -> Iterator[Tuple[Tuple[int, ...], str]]:
    """``(signs, key)`` for every sign assignment of an unsigned key."""
    toks = ukey.split()
    m = len(toks) // 2
    for signs in product((1, -1), repeat=m):
        yield signs, " ".join(f"{t}{'+' if signs[int(t[1:]) - 1] > 0 else '-'}" for t in toks)


def enumerate_arrow_diagram_keys(m: int) -> Iterator[str]:
    for ukey in enumerate_unsigned(m):
        for _, key in sign_variants(ukey):
            yield key


def enumerate_arrow_diagrams(m: int) -> Iterator[BasedKnotDiagram]:
    """Every based arrow diagram with exactly ``m`` signed arrows, once each."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    for key in enumerate_arrow_diagram_keys(m):
        yield from_key(key)


# --------------------------------------------------------------------------
# universal formulas
# --------------------------------------------------------------------------

def _check_bound(order: int, bound: int):
    if order > bound:
        raise ValueError(f"order {order} exceeds the configured bound {bound}")


@lru_cache(maxsize=None)
def _kauffman_tables(order: int) -> Dict[Tuple[int, int], GDF]:
    """All A_{k,l} with k + l = order, sharing one pass over the diagrams."""
    acc: Dict[Tuple[int, int], Dict[str, object]] = {(k, order - k): {} for k in range(order + 1)}
    for m in range(order + 1):
        for key in enumerate_arrow_diagram_keys(m):
            ser = kauffman_series(key, max(MAX_ORDER, order))
            for kl, terms in acc.items():
                c = ser.coefficient(*kl)
                if c:
                    terms[key] = c
    return {kl: GDF(t) for kl, t in acc.items()}


def build_A_kl(k: int, l: int, bound: int = MAX_ORDER) -> GDF:
    """Sum of w_{k,l}(A) A over all arrow diagrams with at most k + l arrows."""
    if k < 0 or l < 0:
        raise ValueError("k and l must be nonnegative")
    _check_bound(k + l, bound)
    return _kauffman_tables(k + l)[(k, l)]


@lru_cache(maxsize=None)
def _jones_gdf(model: str, k: int) -> GDF:
    terms: Dict[str, object] = {}
    for m in range(k + 1):
        for key in enumerate_arrow_diagram_keys(m):
            c = jones_weight_series(key, model, max(MAX_ORDER, k)).coefficient(k)
            if c != 0:
                if not isinstance(c, (int, Fraction)):
                    raise ArithmeticError(f"nonreal Jones weight {c} for {key}")
                terms[key] = c
    return GDF(terms)


def build_A_jones(model: str, k: int, bound: int = MAX_ORDER) -> GDF:
    """GDF for the h^k coefficient of J(i e^h) from the HOMFLY-PT or Kauffman weights."""
    if model not in ("homfly", "kauffman"):
        raise ValueError(f"unknown model {model!r}")
    _check_bound(k, bound)
    return _jones_gdf(model, k)


# --------------------------------------------------------------------------
# pairing
# --------------------------------------------------------------------------

def subdiagram_counts(G: BasedKnotDiagram, max_arrows: int) -> Dict[str, int]:
    counts: Dict[str, int] = {}
    for B in subdiagrams(G, max_arrows):
        k = canonical_key(B)
        counts[k] = counts.get(k, 0) + 1
    return counts


def pair(F: GDF, G: BasedKnotDiagram):
    """<F, G>: sum over subdiagrams B of G of the coefficient of B in F."""
    if F.unsigned:
        F = expand_unsigned(F)
    if not F.terms:
        return 0
    m = max(len(k.split()) // 2 for k in F.terms)
    total = 0
    for key, cnt in subdiagram_counts(G, m).items():
        c = F.terms.get(key)
        if c:
            total += cnt * c
    return _real(Fraction(total))


def eval_pkl_direct(G: BasedKnotDiagram, k: int, l: int, bound: int = MAX_ORDER):
    """Sum of w_{k,l}(B) over subdiagrams B of G, without the universal formula."""
    _check_bound(k + l, bound)
    total = 0
    for B in subdiagrams(G, k + l):
        total += kauffman_series(canonical_key(B), max(MAX_ORDER, k + l)).coefficient(k, l)
    return _real(Fraction(total))


# --------------------------------------------------------------------------
# unsigned form
# --------------------------------------------------------------------------

def _sign_product(key: str) -> int:
    p = 1
    for tok in key.split():
        if tok.startswith("H"):
            p *= 1 if tok.endswith("+") else -1
    return p


def is_signed_key(key: str) -> bool:
    return bool(key) and key[-1] in "+-"


def unsigned_collapse(F: GDF, strict: bool = False) -> GDF:
    """Rewrite F with one unsigned term per underlying diagram where possible.

    An underlying diagram whose coefficients are ``c * eps_1 ... eps_m`` over
    its sign assignments becomes a single unsigned term. Any other class is
    kept as explicitly signed terms, unless ``strict`` is set, in which case
    :class:`CollapseError` names the offending underlying diagram.
    """
    if F.unsigned:
        return F
    groups: Dict[str, Dict[str, object]] = {}
    for key, c in F.terms.items():
        groups.setdefault(strip_signs(key), {})[key] = c
    out: Dict[str, object] = {}
    for ukey, members in groups.items():
        variants = list(sign_variants(ukey))
        c = members.get(variants[0][1], 0)
        bad = next((key for _, key in variants
                    if members.get(key, 0) != c * _sign_product(key)), None)
        if bad is None:
            out[ukey] = c
        elif strict:
            raise CollapseError(ukey, f"coefficient of {bad} is {members.get(bad, 0)}, "
                                      f"expected {c * _sign_product(bad)}")
        else:
            out.update(members)
    return GDF(out, unsigned=True)


def expand_unsigned(U: GDF) -> GDF:
    """Inverse of :func:`unsigned_collapse`; signed terms pass through."""
    if not U.unsigned:
        return U
    out: Dict[str, object] = {}
    for ukey, c in U.terms.items():
        if is_signed_key(ukey):
            out[ukey] = out.get(ukey, 0) + c
            continue
        for signs, key in sign_variants(ukey):
            p = 1
            for s in signs:
                p *= s
            out[key] = out.get(key, 0) + c * p
    return GDF(out)


def reverse_arrows_gdf(F: GDF) -> GDF:
    """Exchange head and foot in every term, then re-canonicalize."""
    def flip(key: str) -> str:
        toks = [("F" if t[0] == "H" else "H") + t[1:] for t in key.split()]
        if F.unsigned and not is_signed_key(key):
            return strip_signs(canonical_key(from_key(" ".join(t + "+" for t in toks))))
        return canonical_key(from_key(" ".join(toks)))
    return F.map_keys(flip)


def sign_multiset(U: GDF) -> Dict[int, int]:
    out: Dict[int, int] = {}
    for _, c in U.terms.items():
        s = 1 if c > 0 else -1
        out[s] = out.get(s, 0) + 1
    return out


def coefficient_multiset(U: GDF) -> List[object]:
    return sorted(U.terms.values())


def gdf_document(name: str, F: GDF, strict: bool = False) -> dict:
    """JSON document written by the CLI: the GDF and its collapse.

    Raises :class:`CollapseError` in strict mode.
    """
    return {"name": name, "gdf": F.to_json(), "collapsed": unsigned_collapse(F, strict).to_json()}


def load_gdf(obj: dict) -> GDF:
    """Accept a bare GDF object or a CLI document (prefers the signed GDF)."""
    if "terms" in obj:
        return GDF.from_json(obj)
    if obj.get("gdf"):
        return GDF.from_json(obj["gdf"])
    if obj.get("collapsed"):
        return GDF.from_json(obj["collapsed"])
    raise ValueError("no GDF found in document")


def iter_terms(F: GDF) -> Iterable[Tuple[str, object]]:
    return sorted(F.terms.items())
