"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 unsupported range or budget,
4 failed internal cross-check.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import oracle, spectra
from .cycletypes import enumerate_types, falling_factorial
from .errors import ArrangementError, ConsistencyError, InvalidInputError, UnsupportedRangeError
from .kperm import KPermutation, all_kpermutations, cycle_type, decompose, recompose
from .quotient import MAX_K, QuotientMatrix, build_quotient, evaluate

CHECKS = ("equitable", "quotient-match", "johnson", "smallest", "incidence", "line-graph", "roundtrip")


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None
    k: int | None
    method: str
    ordering: str
    output_format: str
    budget: int
    seed: int
    trace: bool = False

    def resolved_method(self) -> str:
        if self.method != "auto":
            return self.method
        if self.k <= MAX_K and self.n >= 2 * self.k:
            return "quotient"
        return "oracle"


def _dump_json(obj) -> str:
    return json.dumps(obj) + "\n"


# ---------------------------------------------------------------- decompose

def cmd_decompose(literal: str, n: int, k: int | None, fmt: str) -> str:
    perm = KPermutation.parse(literal, n, k)
    d = decompose(perm)
    t = cycle_type(perm)
    if fmt == "json":
        return _dump_json({"n": perm.n, "k": perm.k, "image": list(perm.image),
                           "decomposition": d.render(), "type": str(t)})
    return f"{d.render()}\ntype: {t}\n"


# ---------------------------------------------------------------- spectrum

def _spectrum_for(cfg: RunConfig) -> tuple[spectra.Spectrum, spectra.QuotientDerivation | None]:
    method = cfg.resolved_method()
    n, k = cfg.n, cfg.k
    if method == "quotient":
        d = spectra.derive_spectrum(build_quotient(k, cfg.ordering), n)
        return d.spectrum, d
    if method == "closed-form":
        return spectra.closed_form_spectrum(n, k).check_invariants(), None
    g = oracle.build_arrangement_graph(n, k, cfg.budget)
    return oracle.exact_spectrum(g, cfg.seed), None


def _derivation_json(d: spectra.QuotientDerivation) -> list[dict]:
    out = []
    for r in d.records:
        out.append({
            "lambda": r.eigenvalue,
            "quotient_multiplicity": r.quotient_multiplicity,
            "terms": [{"first_coordinate": str(v[0]), "weighted_norm": str(norm)}
                      for v, norm in zip(r.basis.vectors, r.basis.norms())],
            "weighted_sum": str(r.weighted_sum),
            "multiplicity": r.multiplicity,
        })
    return out


def cmd_spectrum(cfg: RunConfig) -> tuple[str, str]:
    """Returns (stdout text, stderr text)."""
    s, derivation = _spectrum_for(cfg)
    err = ""
    trace = cfg.trace and derivation is not None
    if cfg.trace and derivation is None:
        err = "note: --trace only applies to the quotient method\n"
    if cfg.output_format == "csv":
        if trace:
            err += "".join(line + "\n" for line in derivation.trace_lines())
        return s.to_csv(), err
    if cfg.output_format == "pretty":
        text = s.pretty() + "\n"
        if trace:
            text += "derivation (nu * sum of squared first coordinates over weighted norms):\n"
            text += "".join(f"  {line}\n" for line in derivation.trace_lines())
        return text, err
    obj = s.to_json()
    if trace:
        obj["derivation"] = _derivation_json(derivation)
    return _dump_json(obj), err


# ---------------------------------------------------------------- quotient

def cmd_quotient(cfg: RunConfig) -> str:
    q = build_quotient(cfg.k, cfg.ordering)
    labels = [str(t) for t in q.order]
    if cfg.n is None:
        if cfg.output_format == "pretty":
            return q.pretty() + "\n"
        if cfg.output_format == "csv":
            return _csv_rows(["type"] + labels, [[lab] + [str(e) for e in row] for lab, row in zip(labels, q.entries)])
        return _dump_json(q.to_json())
    values = evaluate(q, cfg.n)
    if cfg.output_format == "pretty":
        width = max(len(str(x)) for row in values for x in row)
        lw = max(len(t.compact()) for t in q.order)
        return "".join(f"{t.compact():>{lw}} | " + " ".join(f"{x:>{width}}" for x in row) + "\n"
                       for t, row in zip(q.order, values))
    if cfg.output_format == "csv":
        return _csv_rows(["type"] + labels, [[lab] + row for lab, row in zip(labels, values)])
    return _dump_json({"k": q.k, "n": cfg.n, "order": labels, "matrix": values})


def _csv_rows(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------- verify

class _Skip(Exception):
    pass


def _require_quotient_range(n: int, k: int) -> None:
    if n < 2 * k:
        raise _Skip(f"needs n >= 2k (n={n}, k={k})")
    if k > MAX_K:
        raise _Skip(f"needs k <= {MAX_K}")


class _Verifier:
    def __init__(self, cfg: RunConfig):
        self.cfg = cfg
        self._graph = None
        self._spectrum = None

    def graph(self) -> oracle.ArrangementGraph:
        if self._graph is None:
            self._graph = oracle.build_arrangement_graph(self.cfg.n, self.cfg.k, self.cfg.budget)
        return self._graph

    def spectrum(self) -> spectra.Spectrum:
        if self._spectrum is None:
            self._spectrum = _spectrum_for(self.cfg)[0]
        return self._spectrum

    def equitable(self) -> dict:
        r = oracle.verify_equitable(self.graph())
        ok = r.ok and r.census_matches()
        out = {"pass": ok, "cells": len(r.measured.order)}
        if r.witness:
            out["witness"] = dict(zip(["cell", "into", "vertex_a", "count_a", "vertex_b", "count_b"], r.witness))
        return out

    def quotient_match(self) -> dict:
        n, k = self.cfg.n, self.cfg.k
        _require_quotient_range(n, k)
        r = oracle.verify_equitable(self.graph())
        predicted = evaluate(build_quotient(k), n)
        measured = [[e(n) for e in row] for row in r.measured.entries]
        ok = r.ok and [str(t) for t in r.measured.order] == [str(t) for t in enumerate_types(k)] and measured == predicted
        out = {"pass": ok, "size": len(predicted)}
        if not ok:
            for i, (a, b) in enumerate(zip(measured, predicted)):
                if a != b:
                    j = next((j for j in range(len(a)) if a[j] != b[j]), None)
                    out["witness"] = {"row": str(r.measured.order[i]), "column": j,
                                      "measured": a[j] if j is not None else None,
                                      "predicted": b[j] if j is not None else None}
                    break
        return out

    def johnson(self) -> dict:
        n, k = self.cfg.n, self.cfg.k
        s = self.spectrum()
        ok = spectra.johnson_containment_check(s, n, k)
        out = {"pass": ok, "method": self.cfg.resolved_method()}
        if not ok:
            have = s.as_dict()
            out["witness"] = [{"lambda": lam, "required": m, "found": have.get(lam, 0)}
                              for lam, m in spectra.johnson_spectrum(n, k).pairs if have.get(lam, 0) < m]
        return out

    def smallest(self) -> dict:
        n, k = self.cfg.n, self.cfg.k
        if n < 2 * k:
            raise _Skip(f"needs n >= 2k (n={n}, k={k})")
        lam, bound = spectra.smallest_eigenvalue_bound(n, k)
        got, mult = self.spectrum().min
        return {"pass": got == lam and mult >= bound, "min": got, "multiplicity": mult, "bound": bound}

    def incidence(self) -> dict:
        n, k = self.cfg.n, self.cfg.k
        if n < 2 * k:
            raise _Skip(f"needs n >= 2k (n={n}, k={k})")
        r = oracle.incidence_check(n, k, self.spectrum(), self.cfg.budget, self.cfg.seed)
        out = {"pass": r.ok, "rows": r.rows, "columns": r.cols, "identity": r.identity_holds,
               "min": r.min_eigenvalue, "multiplicity": r.min_multiplicity, "bound": r.bound}
        if r.detail:
            out["witness"] = r.detail
        return out

    def line_graph(self) -> dict:
        n, k = self.cfg.n, self.cfg.k
        if k != 2:
            raise _Skip("applies to k = 2")
        r = oracle.line_graph_check(n, self.cfg.seed, self.cfg.budget)
        out = {"pass": r.ok, "isomorphic": r.isomorphic}
        if not r.ok:
            out["witness"] = {"transfer": r.transfer_csv, "closed_form": r.closed_form_csv, "oracle": r.oracle_csv}
        return out

    def roundtrip(self) -> dict:
        n, k = self.cfg.n, self.cfg.k
        if falling_factorial(n, k) > self.cfg.budget:
            raise UnsupportedRangeError(f"V({n},{k}) exceeds the budget of {self.cfg.budget}")
        count = 0
        for p in all_kpermutations(n, k):
            if recompose(decompose(p), n, k) != p:
                return {"pass": False, "witness": list(p.image)}
            count += 1
        s = self.spectrum()
        ok = (spectra.Spectrum.from_json(json.loads(json.dumps(s.to_json()))) == s
              and spectra.Spectrum.from_csv(s.to_csv(), n, k) == s)
        if k <= MAX_K:
            q = build_quotient(k)
            ok = ok and QuotientMatrix.from_json(json.loads(json.dumps(q.to_json()))) == q
        return {"pass": ok, "kpermutations": count}


_DISPATCH: dict[str, Callable[[_Verifier], dict]] = {
    "equitable": _Verifier.equitable,
    "quotient-match": _Verifier.quotient_match,
    "johnson": _Verifier.johnson,
    "smallest": _Verifier.smallest,
    "incidence": _Verifier.incidence,
    "line-graph": _Verifier.line_graph,
    "roundtrip": _Verifier.roundtrip,
}


def cmd_verify(cfg: RunConfig, check: str) -> tuple[dict, int]:
    selected = CHECKS if check == "all" else (check,)
    v = _Verifier(cfg)
    results = []
    code = 0
    for name in selected:
        entry = {"check": name, "instance": f"A({cfg.n},{cfg.k})"}
        try:
            entry.update(_DISPATCH[name](v))
        except _Skip as exc:
            if check != "all":
                raise UnsupportedRangeError(f"{name}: {exc}") from None
            entry.update({"pass": None, "skipped": str(exc)})
        except ConsistencyError as exc:
            entry.update({"pass": False, "witness": str(exc)})
        if entry["pass"] is False:
            code = 4
        results.append(entry)
    report = {"n": cfg.n, "k": cfg.k, "pass": code == 0, "checks": results}
    return report, code


def _verify_pretty(report: dict) -> str:
    lines = []
    for r in report["checks"]:
        status = "SKIP" if r["pass"] is None else "PASS" if r["pass"] else "FAIL"
        extra = r.get("skipped") or r.get("witness") or ""
        lines.append(f"{status} {r['check']} {r['instance']}" + (f": {extra}" if extra else ""))
    lines.append("overall: " + ("PASS" if report["pass"] else "FAIL"))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="arrangement-spectra",
                                     description="Exact spectra of arrangement graphs A(n, k).")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", type=int)
    common.add_argument("-k", type=int)
    common.add_argument("--method", choices=("auto", "quotient", "oracle", "closed-form"), default="auto")
    common.add_argument("--ordering", choices=("canonical", "paper"), default="canonical")
    common.add_argument("--format", dest="output_format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--pretty", action="store_const", const="pretty", dest="output_format")
    common.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET, help="vertex-count cap for brute force")
    common.add_argument("--seed", type=int, default=0, help="seed for the random certification primes")
    common.add_argument("--trace", action="store_true", help="show the multiplicity derivation")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="cycles and paths of a k-permutation")
    p.add_argument("perm", help="image vector, e.g. 2,3,4,6,7")
    sub.add_parser("spectrum", parents=[common], help="spectrum of A(n, k)")
    p = sub.add_parser("verify", parents=[common], help="run verification checks")
    p.add_argument("check", choices=CHECKS + ("all",), nargs="?", default="all")
    sub.add_parser("quotient", parents=[common], help="quotient matrix of the cycle-type partition")
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(args.command, args.n, args.k, args.method, args.ordering, args.output_format,
                     args.budget, args.seed, args.trace)


def _need(value, flag: str) -> None:
    if value is None:
        raise InvalidInputError(f"{flag} is required")


def _validate(cfg: RunConfig) -> None:
    if cfg.command in ("spectrum", "verify"):
        _need(cfg.n, "-n")
        _need(cfg.k, "-k")
        if not 1 <= cfg.k <= cfg.n:
            raise InvalidInputError(f"need 1 <= k <= n, got n={cfg.n}, k={cfg.k}")
        method = cfg.resolved_method()
        if method == "quotient" and cfg.n < 2 * cfg.k:
            raise UnsupportedRangeError(f"the quotient method needs n >= 2k (n={cfg.n}, k={cfg.k})")
        if method == "quotient" and cfg.k > MAX_K:
            raise UnsupportedRangeError(f"the quotient method supports k <= {MAX_K}")
        if method == "closed-form" and cfg.k > 7:
            raise UnsupportedRangeError("closed forms are available for k <= 7")
    if cfg.command == "quotient":
        _need(cfg.k, "-k")
    if cfg.budget < 1:
        raise InvalidInputError("--budget must be positive")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config(args)
    out = sys.stdout
    try:
        _validate(cfg)
        if cfg.command == "decompose":
            _need(cfg.n, "-n")
            out.write(cmd_decompose(args.perm, cfg.n, cfg.k, cfg.output_format))
            return 0
        if cfg.command == "spectrum":
            text, err = cmd_spectrum(cfg)
            out.write(text)
            if err:
                sys.stderr.write(err)
            return 0
        if cfg.command == "quotient":
            out.write(cmd_quotient(cfg))
            return 0
        report, code = cmd_verify(cfg, args.check)
        out.write(_verify_pretty(report) if cfg.output_format == "pretty" else _dump_json(report))
        return code
    except ArrangementError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return exc.exit_code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
