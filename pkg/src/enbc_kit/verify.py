"""The end-to-end verification pipeline for one arrangement."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .algebra import (TermOrder, bigraded_hilbert_function, buchberger, claimed_initial_generators,
                      gamma_ideal_generators, initial_ideal, leading_witness, reduce, stanley_reisner_ideal)
from .complexes import (OrderSpec, Y, bigraded_f_vector, enbc_complex, nbc_complex, rnbc_complex,
                        whitney_poly)
from .errors import NotDivisible, ResourceLimit
from .inputs import ArrangementInput
from .matroid import Matroid, mobius_char_poly
from .series import (closed_hilbert_series, cohomology_class_from_complex, expand, huh_katz_class,
                     orlik_terao_series, specialize_q0, sr_hilbert_series)

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    expected: str = ""
    actual: str = ""
    seconds: float = 0.0
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "status": self.status, "expected": self.expected,
                "actual": self.actual, "seconds": round(self.seconds, 4), "detail": self.detail}


@dataclass
class VerifyReport:
    name: str
    order: str
    checks: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return FAIL if any(c.status == FAIL for c in self.checks) else PASS

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def counts(self):
        return {s: sum(1 for c in self.checks if c.status == s) for s in (PASS, FAIL, SKIPPED)}

    def to_json(self):
        return {"name": self.name, "order": self.order, "status": self.status,
                "counts": self.counts(), "checks": [c.to_json() for c in self.checks]}

    def to_text(self) -> str:
        lines = ["%s (order %s)" % (self.name, self.order)]
        for c in self.checks:
            line = "  [%s] %-32s %.3fs" % (c.status.upper(), c.name, c.seconds)
            if c.status != PASS:
                line += "  " + (c.detail or "expected %s, got %s" % (c.expected, c.actual))
            lines.append(line)
        n = self.counts()
        lines.append("  %d/%d checks pass, %d skipped: %s" % (
            n[PASS], len(self.checks), n[SKIPPED], self.status.upper()))
        return "\n".join(lines)


def _hilbert_str(table):
    return ", ".join("%d,%d:%s" % (a, b, v) for (a, b), v in sorted(table.items()))


def verify_all(inp: ArrangementInput, order: OrderSpec | None = None, bound: int = 6,
               budget: int | None = None) -> VerifyReport:
    """Run every check in sequence; failures become report entries, not exceptions."""
    M: Matroid = inp.matroid()
    order = order or inp.order_or_natural()
    term_order = TermOrder(order)
    report = VerifyReport(inp.name, str(order))
    state: dict = {}

    def run(name, fn):
        t0 = time.perf_counter()
        try:
            res = fn()
        except ResourceLimit as exc:
            res = CheckResult(name, SKIPPED, detail="resource limit: %s" % exc)
        except Exception as exc:  # noqa: BLE001
            res = CheckResult(name, FAIL, detail="%s: %s" % (type(exc).__name__, exc))
        res.name = name
        res.seconds = time.perf_counter() - t0
        report.checks.append(res)

    def verdict(expected, actual, ok=None, detail=""):
        ok = (expected == actual) if ok is None else ok
        return CheckResult("", PASS if ok else FAIL, str(expected), str(actual), detail=detail)

    def chi_two_routes():
        chi = mobius_char_poly(M)
        state["chi"] = chi
        return verdict(chi, whitney_poly(nbc_complex(M), M.rank_total))

    def chi_bar_division():
        try:
            chi_bar = state["chi"].exact_div_linear(1)
        except NotDivisible as exc:
            return CheckResult("", FAIL, detail=str(exc))
        state["chi_bar"] = chi_bar
        return verdict(chi_bar, whitney_poly(rnbc_complex(M), M.r))

    def enbc_structure():
        E = enbc_complex(M, order)
        state["enbc"] = E
        n_rnbc = len(E.intervals)
        problems = []
        if len(E.facets) != n_rnbc:
            problems.append("facet count %d != RNBC faces %d" % (len(E.facets), n_rnbc))
        if not E.is_pure() or E.dimension != M.r + 1:
            problems.append("not pure of %d vertices" % (M.r + 2))
        if Y(0) not in E.cone_points():
            problems.append("y0 is not a cone point")
        for low, high in E.intervals:
            k = len(low)
            xs = sum(1 for v in high if v.tag == "x")
            if xs != M.r - k + 1:
                problems.append("facet of face of size %d has %d x-vertices" % (k, xs))
        return verdict("pure, %d facets, y0 cone" % n_rnbc, "; ".join(problems) or
                       "pure, %d facets, y0 cone" % n_rnbc)

    def claimed_vs_sr():
        claimed = claimed_initial_generators(M, order)
        state["claimed"] = claimed
        sr = stanley_reisner_ideal(state["enbc"], claimed.ring)
        return verdict(sorted(claimed.to_strs(term_order)), sorted(sr.to_strs(term_order)))

    def buchberger_vs_claimed():
        J = gamma_ideal_generators(M)
        state["J"] = J
        gb = buchberger(J.generators, term_order, budget)
        state["gb"] = gb
        init = initial_ideal(gb, term_order)
        return verdict(sorted(state["claimed"].to_strs(term_order)), sorted(init.to_strs(term_order)))

    def witnesses():
        gb = state.get("gb")
        bad = []
        for g in state["claimed"].generators:
            w = leading_witness(M, order, g)
            if w.lm(term_order) != g or (gb is not None and reduce(w, gb, term_order)):
                bad.append(state["claimed"].ring.mono_str(g))
        res = verdict("all %d witnesses" % len(state["claimed"]), "bad: %s" % bad if bad else
                      "all %d witnesses" % len(state["claimed"]))
        if gb is None:
            res.detail = "leading terms checked; membership skipped without a Groebner basis"
        return res

    def series_identity():
        H = sr_hilbert_series(bigraded_f_vector(state["enbc"]))
        closed = closed_hilbert_series(state["chi"], M.r)
        state["closed"] = closed
        return verdict(closed.to_str(), H.to_str(), ok=(H == closed))

    def orlik_terao():
        w = nbc_complex(M).f_vector()
        ot = orlik_terao_series(w)
        at0 = specialize_q0(state["closed"])
        return verdict(ot.to_str(), at0.to_str(), ok=(ot == at0))

    def hilbert_oracle():
        J = state.get("J") or gamma_ideal_generators(M)
        lin = bigraded_hilbert_function(J, bound)
        series = {k: int(v) for k, v in expand(state["closed"], bound).items()}
        return verdict(_hilbert_str(series), _hilbert_str(lin))

    def classes():
        return verdict(huh_katz_class(state["chi_bar"], M.r), cohomology_class_from_complex(state["enbc"]))

    run("chi-mobius-equals-whitney", chi_two_routes)
    run("reduced-chi-exact-division", chi_bar_division)
    run("enbc-pure-cone-facet-count", enbc_structure)
    run("claimed-initial-equals-sr-ideal", claimed_vs_sr)
    run("groebner-initial-equals-claimed", buchberger_vs_claimed)
    run("leading-witnesses", witnesses)
    run("sr-series-equals-closed-form", series_identity)
    run("q0-equals-orlik-terao", orlik_terao)
    run("expansion-equals-hilbert-oracle", hilbert_oracle)
    run("huh-katz-equals-complex-class", classes)
    return report
