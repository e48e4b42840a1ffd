"""Command-line driver.

    python -m homalg --mode compare-all --max-weight 8
    python -m homalg --mode poisson --J 1,2,5 --output json
    python -m homalg --mode hochschild --random --trials 3 --seed 7
    python -m homalg --mode koszul-check --alpha 1/4,1/9

Exit status is 0 iff every comparison passes, 1 if some comparison fails and
2 for invalid parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction

from .hochschild import hh_dims, koszul_resolution_exactness, resolution_identities
from .ncalg import ParameterError, sklyanin_params
from .poisson import (jacobi_check, jacobian_structure, poisson_homology_dims, sklyanin_casimirs,
                      sklyanin_structure)
from .series import compare

MODES = ("poisson", "hochschild", "koszul-check", "jacobi-check", "compare-all")
DEFAULT_J = (Fraction(1), Fraction(2), Fraction(5))
DEFAULT_ALPHA = (Fraction(1, 4), Fraction(1, 9))
WEIGHT_CAP = 12
RESOLUTION_WEIGHT = 6


def _fractions(text, count, flag):
    try:
        vals = tuple(Fraction(s.strip()) for s in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{flag} expects {count} comma-separated rationals")
    if len(vals) != count:
        raise argparse.ArgumentTypeError(f"{flag} expects {count} comma-separated rationals")
    return vals


def build_parser():
    ap = argparse.ArgumentParser(prog="homalg",
                                 description="Poisson and Hochschild homology of Sklyanin structures.")
    ap.add_argument("--mode", choices=MODES, default="compare-all")
    ap.add_argument("--max-weight", type=int, default=8)
    ap.add_argument("--unsafe-weight", action="store_true",
                    help=f"allow --max-weight above {WEIGHT_CAP}")
    ap.add_argument("--J", type=lambda s: _fractions(s, 3, "--J"), default=None,
                    help="J1,J2,J3 for the Poisson side (default 1,2,5)")
    ap.add_argument("--alpha", type=lambda s: _fractions(s, 2, "--alpha"), default=None,
                    help="alpha1,alpha2 for the algebra side (default 1/4,1/9)")
    ap.add_argument("--random", action="store_true", help="draw --trials random parameter sets")
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-guard", action="store_true", help="disable the genericity guard")
    ap.add_argument("--output", choices=("text", "json", "csv"), default="text")
    ap.add_argument("--output-path", default=None)
    ap.add_argument("--threads", type=int, default=None,
                    help="worker processes (default: HOMALG_THREADS or 1)")
    return ap


# ---------------------------------------------------------------------------
# parameters


def _generic_alpha(a1, a2):
    try:
        sklyanin_params(a1, a2, guard=True)
    except ParameterError:
        return False
    return True


def draw_J(rng):
    while True:
        J = tuple(Fraction(rng.randint(-9, 9)) for _ in range(3))
        if len(set(J)) == 3:
            return J


def draw_alpha(rng):
    while True:
        a = (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
        if _generic_alpha(*a):
            return a


def matched_alpha(J, h=None):
    """First-order match ``alpha_i ~ h beta_i`` with ``beta_i = J_j - J_k``."""
    beta = (J[1] - J[2], J[2] - J[0], J[0] - J[1])
    if h is None:
        h = Fraction(1, 10 * max(abs(b) for b in beta))
    return (h * beta[0], h * beta[1])


def _fmt_q(x):
    return str(Fraction(x))


def _param_sets(args, rng):
    """List of dicts with keys ``J`` and/or ``alpha`` depending on the mode."""
    need_J = args.mode in ("poisson", "jacobi-check", "compare-all")
    need_a = args.mode in ("hochschild", "koszul-check", "compare-all")
    sets = []
    if args.random:
        for _ in range(args.trials):
            p = {}
            if need_J:
                p["J"] = draw_J(rng)
            if need_a:
                p["alpha"] = matched_alpha(p["J"]) if "J" in p else draw_alpha(rng)
            sets.append(p)
        return sets
    p = {}
    if need_J:
        p["J"] = args.J or DEFAULT_J
    if need_a:
        if args.alpha is not None:
            p["alpha"] = args.alpha
        elif args.J is not None and need_J:
            p["alpha"] = matched_alpha(args.J)
        else:
            p["alpha"] = DEFAULT_ALPHA
    return [p]


def _param_record(p, params=None):
    rec = {}
    if "J" in p:
        rec["J"] = [_fmt_q(x) for x in p["J"]]
    if params is not None:
        rec["alpha"] = [_fmt_q(x) for x in params.alphas]
    elif "alpha" in p:
        rec["alpha"] = [_fmt_q(x) for x in p["alpha"]]
    return rec


# ---------------------------------------------------------------------------
# pipelines


def _with_trial(records, trial):
    return [{"trial": trial, **r} for r in records]


def run(args, warn=print):
    """Run the configured pipeline; returns the report dict."""
    rng = random.Random(args.seed)
    guard = not args.no_guard
    report = {"mode": args.mode, "params": [], "tables": [], "checks": [], "verdict": "pass"}
    text = []
    ok = True
    for trial, p in enumerate(_param_sets(args, rng)):
        params = None
        if "J" in p and guard and len(set(p["J"])) < 3:
            warn(f"warning: J={','.join(map(_fmt_q, p['J']))} is not generic "
                 "(repeated J_i); the closed-form series do not apply")
        if "alpha" in p:
            params = sklyanin_params(*p["alpha"], guard=guard)
        report["params"].append(_param_record(p, params))
        label = ", ".join(f"{k}=({', '.join(v)})" for k, v in report["params"][-1].items())
        text.append(f"[trial {trial}] {label}")

        ph = hh = None
        if args.mode in ("poisson", "compare-all"):
            ph = poisson_homology_dims(sklyanin_structure(*p["J"]), args.max_weight, args.threads)
            rep = compare(ph, args.max_weight)
            ok &= rep.passed
            report["tables"] += _with_trial(rep.records(), trial)
            text += [ph.format(), rep.render()]
        if args.mode in ("hochschild", "compare-all"):
            hh = hh_dims(params, args.max_weight, args.threads)
            rep = compare(hh, args.max_weight)
            ok &= rep.passed
            report["tables"] += _with_trial(rep.records(), trial)
            text += [hh.format(), rep.render()]
        if ph is not None and hh is not None:
            cross = []
            for (i, d), v in sorted(hh.dims.items()):
                exp = ph.get((i, d), 0)
                cross.append({"side": "cross", "i": i, "d": d, "dim": v, "expected": exp,
                              "match": v == exp})
            good = all(r["match"] for r in cross)
            ok &= good
            report["tables"] += _with_trial(cross, trial)
            text.append(f"PH = HH entrywise up to weight {args.max_weight}: {'yes' if good else 'NO'}")
        if args.mode == "koszul-check":
            ids = resolution_identities(params)
            top = min(args.max_weight, RESOLUTION_WEIGHT) if not args.unsafe_weight else args.max_weight
            detail = koszul_resolution_exactness(params, top, detail=True)
            rows = [{"side": "resolution", "i": pos, "d": d, "dim": v, "expected": 0, "match": v == 0}
                    for (d, pos), v in sorted(detail.items())]
            exact = all(r["match"] for r in rows)
            ok &= exact and all(ids.values())
            report["tables"] += _with_trial(rows, trial)
            for name, v in ids.items():
                report["checks"].append({"trial": trial, "name": name, "pass": v})
                text.append(f"{name} = 0 in A: {'yes' if v else 'NO'}")
            report["checks"].append({"trial": trial, "name": f"exact<= {top}", "pass": exact})
            text.append(f"augmented Koszul resolution exact in weights <= {top}: "
                        f"{'yes' if exact else 'NO'}")
        if args.mode == "jacobi-check":
            ps = sklyanin_structure(*p["J"])
            jac = jacobi_check(ps)
            # jacobian form: lambda = 1/2 against the two Casimirs
            same = jacobian_structure(sklyanin_casimirs(*p["J"]), Fraction(1, 2)).table == ps.table
            ok &= jac and same
            report["checks"] += [{"trial": trial, "name": "jacobi", "pass": jac},
                                 {"trial": trial, "name": "jacobian-form", "pass": same}]
            text.append(f"Jacobi identity: {'holds' if jac else 'FAILS'}")
            text.append(f"bracket equals the Jacobian bracket of P1, P2 (lambda=1/2): "
                        f"{'yes' if same else 'NO'}")
    report["verdict"] = "pass" if ok else "fail"
    text.append(f"verdict: {report['verdict']}")
    report["_text"] = "\n".join(text)
    return report


def render(report, fmt):
    if fmt == "text":
        return report["_text"] + "\n"
    public = {k: v for k, v in report.items() if not k.startswith("_")}
    if fmt == "json":
        return json.dumps(public, indent=2) + "\n"
    buf = io.StringIO()
    fields = ["trial", "side", "i", "d", "dim", "expected", "match"]
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    w.writerows(public["tables"])
    return buf.getvalue()


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.trials < 1:
        ap.error("--trials must be at least 1")
    if args.max_weight < 0:
        ap.error("--max-weight must be nonnegative")
    if args.max_weight > WEIGHT_CAP and not args.unsafe_weight:
        ap.error(f"--max-weight above {WEIGHT_CAP} needs --unsafe-weight")
    if args.random and (args.J is not None or args.alpha is not None):
        ap.error("--random cannot be combined with --J or --alpha")
    try:
        report = run(args, warn=lambda msg: print(msg, file=sys.stderr))
    except ParameterError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    out = render(report, args.output)
    if args.output_path:
        with open(args.output_path, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0 if report["verdict"] == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
