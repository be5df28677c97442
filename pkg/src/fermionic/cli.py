"""Command line entry point: ``fermionic <subcommand> --n N ...``.

Exit status is 0 when every requested check passes, 1 when one fails (the first
counterexample goes to stderr), and 2 for bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from dataclasses import dataclass

from . import characters, coinvariants, exterior, lefschetz, paths, standard
from .report import Report

ENV_CAP = "FERMIONIC_MAX_N"
SUBCOMMANDS = ("dims", "hilbert", "basis", "paths", "lefschetz", "frobenius", "verify-all")


@dataclass
class RunConfig:
    subcommand: str
    n: int
    model: str = "reflection"
    family: str = "nonneg"
    format: str = "json"
    cap: int = exterior.MAX_ENUMERATION_N
    seed: int = 0
    oracle: bool = False
    hooks_only: bool = False


class UsageError(Exception):
    pass


def _parser():
    p = argparse.ArgumentParser(prog="fermionic", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="subcommand", required=True)
    for name in SUBCOMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--format", choices=("json", "csv", "plain"), default="json")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--max-n-override", type=int, default=None, dest="max_n")
        if name in ("dims", "hilbert"):
            s.add_argument("--model", choices=("reflection", "permutation"), default="reflection")
            s.add_argument("--oracle", action="store_true")
        if name == "paths":
            s.add_argument("--family", choices=("all", "nonneg", "strict"), default="nonneg")
        if name == "frobenius":
            s.add_argument("--hooks-only", action="store_true")
    return p


def parse_config(argv) -> RunConfig:
    args = _parser().parse_args(argv)
    cap = exterior.MAX_ENUMERATION_N
    if os.environ.get(ENV_CAP):
        try:
            cap = int(os.environ[ENV_CAP])
        except ValueError:
            raise UsageError(f"{ENV_CAP} must be an integer")
    if args.max_n is not None:
        cap = args.max_n
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.n > cap:
        raise UsageError(f"n={args.n} exceeds the cap {cap}; raise it with --max-n-override")
    return RunConfig(args.subcommand, args.n, getattr(args, "model", "reflection"),
                     getattr(args, "family", "nonneg"), args.format, cap, args.seed,
                     getattr(args, "oracle", False), getattr(args, "hooks_only", False))


# ------------------------------------------------------------------ commands

def _dims(cfg):
    m = coinvariants.model(cfg.model, cfg.n)
    return coinvariants.dimension_check(m, oracle=cfg.oracle)


def _hilbert(cfg):
    m = coinvariants.model(cfg.model, cfg.n)
    closed = coinvariants.closed_form_hilbert(m)
    report = Report("hilbert", {"model": cfg.model, "n": cfg.n, "oracle": cfg.oracle})
    poly = closed
    if cfg.oracle:
        poly = coinvariants.hilbert_series(m)
        if poly != closed:
            report.fail({"oracle": poly.triples(), "closed": closed.triples()})
    report.rows = poly.triples()
    return report


def _basis(cfg):
    m = coinvariants.reflection(cfg.n)
    report = standard.basis_theorem_check(cfg.n)
    rows = []
    for d in coinvariants.bidegrees(cfg.n):
        mons = sorted(standard.standard_monomials(m, d), key=paths.order_key)
        rows.append({"i": d[0], "j": d[1],
                     "monomials": [str(paths.from_path(p)) for p in mons],
                     "paths": [str(p) for p in mons]})
    report.rows = rows
    return report


def _paths(cfg):
    report = Report("paths", {"n": cfg.n, "family": cfg.family})
    for p in paths.enumerate_paths(cfg.n, cfg.family, override=True):
        st = p.statistics()
        report.rows.append({"path": str(p), "monomial": str(paths.from_path(p)),
                            "depth": st.depth, "deg": st.total_deg,
                            "theta_deg": st.theta_deg, "xi_deg": st.xi_deg})
    report.extra["count"] = len(report.rows)
    return report


def _lefschetz(cfg):
    return lefschetz.certify_lefschetz(cfg.n)


def _frobenius(cfg):
    n = cfg.n
    report = Report("frobenius", {"n": n, "hooks_only": cfg.hooks_only})
    if cfg.hooks_only:
        table = {characters.hook(n, k): characters.graded_hook_multiplicity(n, k) for k in range(n)}
        for k in range(n):
            if table[characters.hook(n, k)] != characters.hook_multiplicity_closed_form(n, k):
                report.fail({"hook": k})
    else:
        table = characters.full_graded_frobenius(n)
        for la, poly in table.items():
            if len(la) >= 3 and la[2] >= 3 and poly:
                report.fail({"partition": list(la)})
    report.rows = [{"partition": list(la), "multiplicities": poly.triples()} for la, poly in table.items()]
    report.extra["frobenius"] = {",".join(map(str, la)): poly.triples() for la, poly in table.items()}
    return report


def _sign_sample(n, seed, count=200):
    """Random monomial products against the bubble-sort sign oracle."""
    rng = random.Random(seed)
    report = Report("multiply-signs", {"n": n, "seed": seed, "samples": count})
    for _ in range(count):
        a = (rng.getrandbits(n), rng.getrandbits(n))
        b = (rng.getrandbits(n), rng.getrandbits(n))
        fa = exterior.Element(n, {a: 1})
        fb = exterior.Element(n, {b: 1})
        word = exterior.Monomial(n, *a).generators() + exterior.Monomial(n, *b).generators()
        if fa * fb != exterior.word_element(n, word):
            report.fail({"a": str(exterior.Monomial(n, *a)), "b": str(exterior.Monomial(n, *b))})
            break
    return report


def _verify_all(cfg):
    n = cfg.n
    checks = [
        lefschetz.certify_lefschetz(n),
        lefschetz.check_boolean_hlp(n),
        coinvariants.dimension_check(coinvariants.reflection(n), oracle=True),
        coinvariants.dimension_check(coinvariants.permutation(n), oracle=True),
        standard.basis_theorem_check(n),
        coinvariants.primed_basis_check(n),
        paths.recursion_check(n),
        _sign_sample(n, cfg.seed),
    ]
    hooks = Report("hook-multiplicities", {"n": n})
    for k in range(n):
        got = characters.graded_hook_multiplicity(n, k)
        want = characters.hook_multiplicity_closed_form(n, k)
        hooks.rows.append({"k": k, "multiplicity": got.triples(), "passed": got == want})
        if got != want:
            hooks.fail({"k": k, "got": got.triples(), "closed_form": want.triples()})
    checks.append(hooks)
    report = Report("verify-all", {"n": n})
    for c in checks:
        label = f"{c.name}:{c.params['model']}" if "model" in c.params else c.name
        report.rows.append({"check": label, "passed": c.passed})
        if not c.passed:
            report.fail({"check": c.name, "detail": c.counterexample})
    return report


COMMANDS = {"dims": _dims, "hilbert": _hilbert, "basis": _basis, "paths": _paths,
            "lefschetz": _lefschetz, "frobenius": _frobenius, "verify-all": _verify_all}


# -------------------------------------------------------------------- output

def _render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.to_dict(), indent=2, ensure_ascii=False)
    if fmt == "csv":
        rows = report.rows
        if report.name == "hilbert":
            rows = [{"a": a, "b": b, "coeff": c} for a, b, c in rows]
        if not rows or not isinstance(rows[0], dict):
            raise UsageError(f"{report.name} output has no tabular form; use --format json")
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    lines = [f"{report.name} {' '.join(f'{k}={v}' for k, v in report.params.items())}"]
    for r in report.rows:
        if isinstance(r, dict):
            lines.append("  " + " ".join(f"{k}={v}" for k, v in r.items()))
        else:
            lines.append("  " + " ".join(str(x) for x in r))
    for k, v in report.extra.items():
        lines.append(f"{k}: {v}")
    lines.append("PASS" if report.passed else f"FAIL {report.counterexample}")
    return "\n".join(lines)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg = parse_config(argv)
        report = COMMANDS[cfg.subcommand](cfg)
        print(_render(report, cfg.format), file=stdout)
    except SystemExit as e:  # argparse
        return 2 if e.code else 0
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=stderr)
        return 2
    if not report.passed:
        print(f"counterexample: {json.dumps(report.counterexample)}", file=stderr)
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
