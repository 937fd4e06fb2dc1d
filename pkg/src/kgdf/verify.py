"""Verification suites: oracle cross-checks and identity checks over a corpus.

Each suite maps a corpus entry to a list of :class:`Check` records; a report
is the concatenation, ordered by corpus position. Report lines read
``CHECK name knot PASS|FAIL expected actual``.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from .corpus import CorpusEntry
from .diagram import BasedKnotDiagram, move_base_point, parse_gauss_code, with_signs
from .gdf import (build_A_jones, build_A_kl, eval_pkl_direct, pair, reverse_arrows_gdf,
                  unsigned_collapse)
from .poly import LaurentPoly2
from .skein import (dubrovnik_D, dubrovnik_DK, h_table, homfly, jones_coefficients,
                    jones_from_dk, jones_from_homfly, p_table)
from .state_model import dk_state_sum, homfly_state_sum

SUITES = ("state-model", "representation", "identities", "vassiliev", "jones")
ROTATION_LIMIT = 5
ORDER4_LIMIT = 3
VASSILIEV_LIMIT = 5


def _fmt(x) -> str:
    return str(x).replace(" ", "")


@dataclass(frozen=True)
class Check:
    name: str
    knot: str
    passed: bool
    expected: str = "-"
    actual: str = "-"

    def line(self) -> str:
        return f"CHECK {self.name} {self.knot} {'PASS' if self.passed else 'FAIL'} {self.expected} {self.actual}"


def check_equal(name: str, knot: str, expected, actual) -> Check:
    return Check(name, knot, expected == actual, _fmt(expected), _fmt(actual))


@dataclass
class Report:
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def extend(self, checks: Iterable[Check]):
        self.checks.extend(checks)

    def lines(self) -> List[str]:
        return [c.line() for c in self.checks]

    def summary(self) -> str:
        n = len(self.checks)
        return f"{n - len(self.failures)}/{n} checks passed"


# --------------------------------------------------------------------------
# single-knot procedures
# --------------------------------------------------------------------------

def linking_counts(G: BasedKnotDiagram):
    """Sign-weighted linking numbers after smoothing each arrow, counted two ways.

    Smoothing arrow ``alpha`` splits the circle into the arc strictly between
    its endpoints and the rest. Returns ``(inner, outer)``: the sums over
    ``alpha`` of ``sign(alpha)`` times the signed count of crossing arrows
    whose head lies on the inner, respectively outer, arc.
    """
    pos = G.positions()
    sign = G.sign_of
    inner_total = outer_total = 0
    for a, ends in pos.items():
        lo, hi = sorted(ends.values())
        inner = outer = 0
        for b, bends in pos.items():
            if b == a:
                continue
            inside = {r: lo < p < hi for r, p in bends.items()}
            if len(set(inside.values())) != 2:
                continue
            head_inside = next(v for r, v in inside.items() if r.value == "H")
            if head_inside:
                inner += sign[b]
            else:
                outer += sign[b]
        inner_total += sign[a] * inner
        outer_total += sign[a] * outer
    return inner_total, outer_total


def verify_linking_identity(G: BasedKnotDiagram, knot: str = "-") -> Report:
    inner, outer = linking_counts(G)
    return Report([check_equal("linking-two-ways", knot, inner, outer)])


def order3_relation_terms(G: BasedKnotDiagram):
    p = p_table(G, 3)
    return (Fraction(1, 2) * p[(1, 2)], Fraction(1, 4) * p[(2, 1)], Fraction(1, 8) * p[(3, 0)])


def vassiliev_difference(G: BasedKnotDiagram, arrows: Sequence[int], k: int, l: int):
    """Sum over sign choices on ``arrows`` of (product of signs) * p_{k,l}."""
    total = 0
    for eps in product((1, -1), repeat=len(arrows)):
        coeff = 1
        for e in eps:
            coeff *= e
        total += coeff * eval_pkl_direct(with_signs(G, dict(zip(arrows, eps))), k, l)
    return total


# --------------------------------------------------------------------------
# suites
# --------------------------------------------------------------------------

def state_model_checks(entry: CorpusEntry) -> List[Check]:
    G, name = entry.diagram, entry.name
    dk = dubrovnik_DK(G)
    out = [
        check_equal("dk-state-sum", name, dk, dk_state_sum(G)),
        check_equal("homfly-state-sum", name, homfly(G), homfly_state_sum(G)),
        check_equal("dk-at-a1", name, LaurentPoly2.const(1), dk.evaluate_a1()),
        Check("dk-integral-nonneg-z", name, dk.is_integral() and dk.min_z() >= 0),
    ]
    p = p_table(G, 4)
    out.append(check_equal("p00", name, 1, p[(0, 0)]))
    out.append(check_equal("p0n", name, [0] * 4, [p[(0, n)] for n in range(1, 5)]))
    if "D" in entry.expected:
        out.append(check_equal("expected-D", name, LaurentPoly2.parse(entry.expected["D"]), dubrovnik_D(G)))
    if "DK" in entry.expected:
        out.append(check_equal("expected-DK", name, LaurentPoly2.parse(entry.expected["DK"]), dk))
    if G.n_arrows <= ROTATION_LIMIT:
        R = G
        for r in range(1, len(G.endpoints)):
            R = move_base_point(R)
            out.append(check_equal(f"dk-rotation-{r}", name, dk, dk_state_sum(R)))
            out.append(check_equal(f"dk-skein-rotation-{r}", name, dk, dubrovnik_DK(R)))
    return out


def representation_checks(entry: CorpusEntry) -> List[Check]:
    G, name = entry.diagram, entry.name
    top = 4 if G.n_arrows <= ORDER4_LIMIT else 3
    p = p_table(G, top)
    out = []
    for n in range(top + 1):
        for k in range(n + 1):
            l = n - k
            direct = eval_pkl_direct(G, k, l)
            paired = pair(build_A_kl(k, l), G)
            out.append(Check(f"p{k}{l}-direct-pair-skein", name,
                             direct == paired == p[(k, l)], _fmt(p[(k, l)]), f"{_fmt(direct)},{_fmt(paired)}"))
    R = move_base_point(G)
    for n in range(4):
        for k in range(n + 1):
            F = build_A_kl(k, n - k)
            out.append(check_equal(f"p{k}{n - k}-base-point", name, pair(F, G), pair(F, R)))
    return out


def degree2_diagrams():
    """The single unsigned diagrams of A_{2,0} and A_{1,1}."""
    (u20,), (u11,) = (list(unsigned_collapse(build_A_kl(*kl)).terms) for kl in ((2, 0), (1, 1)))
    return u20, u11


def identities_checks(entry: CorpusEntry) -> List[Check]:
    from .gdf import GDF

    G, name = entry.diagram, entry.name
    out = list(verify_linking_identity(G, name).checks)
    t = order3_relation_terms(G)
    out.append(Check("order3-relation", name, sum(t) == 0, "0", ",".join(_fmt(x) for x in t)))
    h = h_table(G, 4)
    out.append(check_equal("H31", name, 0, h[(3, 1)]))
    out.append(check_equal("H13", name, 0, h[(1, 3)]))
    out.append(check_equal("H-degree4-relation", name, 0,
                           48 * h[(0, 4)] + 12 * h[(2, 2)] + 3 * h[(4, 0)] + 4 * h[(0, 2)]))
    u20, u11 = degree2_diagrams()
    out.append(check_equal("degree2-identity", name, pair(GDF({u20: 1}, True), G),
                           pair(GDF({u11: 1}, True), G)))
    for n in range(4):
        for k in range(n + 1):
            F = build_A_kl(k, n - k)
            out.append(check_equal(f"p{k}{n - k}-reversal", name, pair(F, G),
                                   pair(reverse_arrows_gdf(F), G)))
    return out


def vassiliev_checks(entry: CorpusEntry) -> List[Check]:
    G, name = entry.diagram, entry.name
    if G.n_arrows > VASSILIEV_LIMIT:
        return []
    out = []
    for n in range(4):
        bad, tried = [], 0
        for S in combinations(G.arrows, n + 1):
            for k in range(n + 1):
                tried += 1
                v = vassiliev_difference(G, S, k, n - k)
                if v != 0:
                    bad.append(f"p{k}{n - k}@{'-'.join(map(str, S))}={_fmt(v)}")
        out.append(Check(f"vassiliev-order{n}", name, not bad, "0", ";".join(bad) or f"0x{tried}"))
    return out


def jones_checks(entry: CorpusEntry) -> List[Check]:
    G, name = entry.diagram, entry.name
    out = [check_equal("jones-cross-model", name, jones_from_homfly(G), jones_from_dk(G))]
    c = jones_coefficients(G, 3)
    out.append(check_equal("jones-c0", name, 1, c[0]))
    for k in (2, 3):
        ph, pk = pair(build_A_jones("homfly", k), G), pair(build_A_jones("kauffman", k), G)
        out.append(Check(f"jones-c{k}-pairings", name, ph == pk == c[k], _fmt(c[k]), f"{_fmt(ph)},{_fmt(pk)}"))
    return out


def global_checks(suite: str) -> List[Check]:
    """Checks that concern formulas rather than knots."""
    if suite != "jones":
        return []
    H2, K2 = (unsigned_collapse(build_A_jones(m, 2)) for m in ("homfly", "kauffman"))
    return [Check("A2-expressions-differ", "*", H2 != K2,
                  "differ", f"{len(H2)}vs{len(K2)}terms")]


SUITE_CHECKS: Dict[str, Callable[[CorpusEntry], List[Check]]] = {
    "state-model": state_model_checks,
    "representation": representation_checks,
    "identities": identities_checks,
    "vassiliev": vassiliev_checks,
    "jones": jones_checks,
}


def _run_entry(args):
    suite, entry = args
    return SUITE_CHECKS[suite](entry)


def run_suite(suite: str, corpus: Sequence[CorpusEntry], workers: Optional[int] = None) -> Report:
    """Run one suite, or ``"all"``, over the corpus.

    ``workers`` caps the process pool (default: CPU count); the report does
    not depend on it.
    """
    suites = SUITES if suite == "all" else (suite,)
    for s in suites:
        if s not in SUITE_CHECKS:
            raise ValueError(f"unknown suite {s!r}")
    if not corpus:
        raise ValueError("empty corpus")
    workers = workers or os.cpu_count() or 1
    report = Report()
    for s in suites:
        report.extend(global_checks(s))
        jobs = [(s, e) for e in corpus]
        if workers > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_run_entry, jobs))
        else:
            results = [_run_entry(j) for j in jobs]
        for checks in results:
            report.extend(checks)
    return report


def verify_relations(corpus: Sequence[CorpusEntry]) -> Report:
    """Order-3 Kauffman relation, degree-4 HOMFLY relations and Jones pairings."""
    report = Report(global_checks("jones"))
    for e in corpus:
        report.extend(c for c in identities_checks(e)
                      if c.name in ("order3-relation", "H31", "H13", "H-degree4-relation"))
        report.extend(c for c in jones_checks(e) if "pairings" in c.name)
    return report


def verify_reversal_invariance(k: int, l: int, corpus: Sequence[CorpusEntry]) -> Report:
    F = build_A_kl(k, l)
    R = reverse_arrows_gdf(F)
    return Report([check_equal(f"p{k}{l}-reversal", e.name, pair(F, e.diagram), pair(R, e.diagram))
                   for e in corpus])


def single(code: str, name: str = "input") -> CorpusEntry:
    parse_gauss_code(code)
    return CorpusEntry(name, code)
