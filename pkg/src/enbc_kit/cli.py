"""Command-line interface: ``enbc-kit <command> <file> [options]``.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import (TermOrder, bigraded_hilbert_function, buchberger, claimed_initial_generators,
                      gamma_ideal_generators, stanley_reisner_ideal)
from .complexes import OrderSpec, enbc_complex, nbc_complex, rnbc_complex, sorted_face
from .errors import InputError, ResourceLimit, UnknownCommand
from .inputs import CATALOG, ArrangementInput, load_input
from .matroid import mobius_char_poly, reduced_char_poly
from .series import (closed_hilbert_series, cohomology_class_from_complex, expand, k_class_reciprocal_plane,
                     specialize_q0, sr_hilbert_series)
from .complexes import bigraded_f_vector
from .verify import verify_all

COMMANDS = ("circuits", "broken-circuits", "chi", "nbc", "rnbc", "enbc", "ideal", "initial-ideal",
            "groebner", "sr-ideal", "hilbert", "expand", "cohomology", "kclass", "verify")


def _face_strs(cx):
    return [[str(v) for v in sorted_face(F)] for F in cx.facets]


def _frac(v):
    return str(v) if v.denominator != 1 else int(v)


def run_command(cmd: str, inp: ArrangementInput, order: OrderSpec, bound: int = 6,
                budget: int | None = None):
    """Compute ``cmd``; returns (text, json-able object, exit code)."""
    M = inp.matroid()
    to = TermOrder(order)
    if cmd == "circuits":
        ring = gamma_ideal_generators(M).ring
        data = []
        for C in M.circuits:
            rel = ring.poly({ring.monomial(xs=[i]): a for i, a in C.coeffs.items()})
            data.append({"support": list(C.support), "coeffs": [str(C.coeffs[i]) for i in C.support],
                         "relation": rel.to_str(to)})
        text = "\n".join("%s: %s" % (" ".join(map(str, d["support"])), d["relation"]) for d in data)
        return text, data, 0
    if cmd == "broken-circuits":
        bcs = [sorted(B) for B in M.broken_circuits]
        minimal = [B for B in bcs if not any(set(D) < set(B) for D in bcs)]
        text = "\n".join(" ".join(map(str, B)) + ("" if B in minimal else "  (not minimal)") for B in bcs)
        return text, {"broken_circuits": bcs, "minimal": minimal}, 0
    if cmd == "chi":
        chi, chi_bar = mobius_char_poly(M), reduced_char_poly(M)
        return str(chi), {"chi": str(chi), "reduced": str(chi_bar), "rank": M.rank_total,
                          "size": M.size}, 0
    if cmd in ("nbc", "rnbc", "enbc"):
        cx = {"nbc": nbc_complex, "rnbc": rnbc_complex}[cmd](M) if cmd != "enbc" else enbc_complex(M, order)
        facets = _face_strs(cx)
        return "\n".join(" ".join(F) for F in facets), {"facets": facets, "f_vector": cx.f_vector()}, 0
    if cmd == "ideal":
        gens = [g.to_str(to) for g in gamma_ideal_generators(M).generators]
        return "\n".join(gens), {"generators": gens}, 0
    if cmd == "initial-ideal":
        gens = claimed_initial_generators(M, order).to_strs(to)
        return "\n".join(gens), {"generators": gens}, 0
    if cmd == "groebner":
        gb = [g.to_str(to) for g in buchberger(gamma_ideal_generators(M).generators, to, budget)]
        return "\n".join(gb), {"basis": gb}, 0
    if cmd == "sr-ideal":
        ring = gamma_ideal_generators(M).ring
        gens = stanley_reisner_ideal(enbc_complex(M, order), ring).to_strs(to)
        return "\n".join(gens), {"generators": gens}, 0
    if cmd == "hilbert":
        closed = closed_hilbert_series(mobius_char_poly(M), M.r)
        sr = sr_hilbert_series(bigraded_f_vector(enbc_complex(M, order)))
        at0 = specialize_q0(closed)
        data = {"series": closed.to_str(), "q0": at0.to_str(), "sr_equals_closed": sr == closed}
        return "H(q,t) = %s\nH(0,t) = %s" % (data["series"], data["q0"]), data, 0
    if cmd == "expand":
        table = expand(closed_hilbert_series(mobius_char_poly(M), M.r), bound)
        rows = [{"a": a, "b": b, "h": _frac(v)} for (a, b), v in table.items()]
        text = "\n".join("%d %d %s" % (r["a"], r["b"], r["h"]) for r in rows)
        return text, {"bound": bound, "coefficients": rows}, 0
    if cmd == "cohomology":
        cls = cohomology_class_from_complex(enbc_complex(M, order))
        data = [{"x_dim": a, "y_dim": b, "coeff": c} for (a, b), c in sorted(cls.items(), reverse=True)]
        return str(cls), {"class": str(cls), "terms": data}, 0
    if cmd == "kclass":
        kc = k_class_reciprocal_plane(mobius_char_poly(M), M.r)
        return str(kc), {"class": str(kc), "terms": {str(m): c for m, c in sorted(kc.items())}}, 0
    if cmd == "verify":
        rep = verify_all(inp, order, bound, budget)
        return rep.to_text(), rep.to_json(), 0 if rep.ok else 1
    raise UnknownCommand("unknown command %r (choose from %s)" % (cmd, ", ".join(COMMANDS)))


def _parse_order(text: str) -> OrderSpec:
    try:
        return OrderSpec(tuple(int(s) for s in text.split(",")))
    except ValueError:
        raise InputError("--order must be a comma-separated permutation, got %r" % text) from None


def _verify_catalog_entry(args):
    name, bound, budget = args
    inp = load_input(name)
    return verify_all(inp, None, bound, budget)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="enbc-kit", description=__doc__.splitlines()[0])
    p.add_argument("command", help="one of: " + ", ".join(COMMANDS))
    p.add_argument("file", help="arrangement JSON file or bundled name (k4, u23, ...); "
                                "'catalog' runs verify over the bundled catalog")
    p.add_argument("--order", help="total order as a permutation, e.g. 5,4,3,2,1,0")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--bound", type=int, default=6, help="expansion / Hilbert-function bound (default 6)")
    p.add_argument("--budget", type=int, default=None,
                   help="Buchberger pair budget (default $ENBC_KIT_BUDGET or 10^6)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for 'verify catalog'")
    return p


def _emit(args, text, data):
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    budget = args.budget
    if budget is None and os.environ.get("ENBC_KIT_BUDGET"):
        budget = int(os.environ["ENBC_KIT_BUDGET"])
    try:
        if args.command not in COMMANDS:
            raise UnknownCommand("unknown command %r (choose from %s)" % (args.command, ", ".join(COMMANDS)))
        if args.file == "catalog":
            if args.command != "verify":
                raise InputError("'catalog' is only accepted by verify")
            jobs = [(name, args.bound, budget) for name in CATALOG]
            if args.jobs > 1:
                with ProcessPoolExecutor(args.jobs) as ex:
                    reports = list(ex.map(_verify_catalog_entry, jobs))
            else:
                reports = [_verify_catalog_entry(j) for j in jobs]
            ok = all(r.ok for r in reports)
            _emit(args, "\n".join(r.to_text() for r in reports), [r.to_json() for r in reports])
            return 0 if ok else 1
        inp = load_input(args.file)
        order = _parse_order(args.order) if args.order else inp.order_or_natural()
        if len(order) != inp.matrix.ncols:
            raise InputError("order has %d entries, matrix has %d columns" % (len(order), inp.matrix.ncols))
        text, data, code = run_command(args.command, inp, order, args.bound, budget)
    except InputError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print("resource limit: %s" % exc, file=sys.stderr)
        return 3
    _emit(args, text, data)
    return code


if __name__ == "__main__":
    sys.exit(main())
