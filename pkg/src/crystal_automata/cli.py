"""Command-line front end: ``crystal-automata <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails or the two
evolutions of ``evolve --mode both`` differ, and 2 for usage, parse and
validation errors.
"""

from __future__ import annotations

import argparse
import difflib
import json
import random
import sys

from .crystal import CarrierSpec, ElementA, ElementD, default_margin, make_carrier
from .dynamics import AutomatonState, evolve_factorized, evolve_r, gamma, local_step_def52
from .errors import ConfigError, CrystalError
from .limits import limit_profile, rhs_theorem51, saturate, saturation_point
from .render import render_timeline, timeline_json
from .rmap_a import apply_r_a, p_values
from .rmap_d import apply_r_d, vw_values
from .stateio import parse_element, parse_state
from .sweeps import elements
from .verify import SUITES, parse_bounds, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _capacities(text):
    try:
        caps = [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise ConfigError(f"capacities must be integers, got {text!r}") from None
    if not caps or min(caps) < 1:
        raise ConfigError("capacities must be a non-empty list of integers >= 1")
    return caps


def _random_state(kind, n, caps, seed):
    if n < 2 or (kind == "D" and n < 3):
        raise ConfigError(f"n={n} is too small for type {kind}")
    rng = random.Random(seed)
    return AutomatonState(tuple(rng.choice(elements(kind, n, l)) for l in caps))


def _load_state(args):
    if args.state is not None:
        if args.state == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(args.state, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ConfigError(f"cannot read {args.state}: {exc.strerror}") from None
        state = parse_state(text)
        for flag, have in (("kind", state.kind), ("n", state.n)):
            want = getattr(args, flag)
            if want is not None and want != have:
                raise ConfigError(f"--{flag} {want} contradicts the state file ({have})")
        if args.capacities and _capacities(args.capacities) != list(state.capacities):
            raise ConfigError("--capacities contradicts the state file")
        return state
    if args.kind is None or args.n is None or not args.capacities:
        raise ConfigError("give a state file, or --kind, --n and --capacities for a random state")
    return _random_state(args.kind, args.n, _capacities(args.capacities), args.seed)


def _carrier(text, state):
    if text == "vacuum":
        return make_carrier(state.kind, state.n, state.capacities)
    el = parse_element(text, state.kind, state.n)
    return CarrierSpec(el, default_margin(state.capacities))


def _run(evolve, state, carrier_text, steps):
    out = [state]
    for _ in range(steps):
        carrier = _carrier(carrier_text, state)
        state = evolve(state, carrier)
        out.append(state)
    return out


def _evolve_r_state(state, carrier):
    return evolve_r(state, carrier)[0]


def cmd_evolve(args):
    state = _load_state(args)
    if args.steps < 0:
        raise ConfigError("--steps must be non-negative")
    runs = {}
    if args.mode in ("r", "both"):
        runs["r"] = _run(_evolve_r_state, state, args.carrier, args.steps)
    if args.mode in ("factorized", "both"):
        runs["factorized"] = _run(evolve_factorized, state, args.carrier, args.steps)
    diff = []
    if args.mode == "both":
        diff = list(
            difflib.unified_diff(
                render_timeline(runs["r"]).splitlines(),
                render_timeline(runs["factorized"]).splitlines(),
                "r", "factorized", lineterm="",
            )
        )
    if args.format == "json":
        if args.mode == "both":
            text = json.dumps(
                {
                    "r": json.loads(timeline_json(runs["r"])),
                    "factorized": json.loads(timeline_json(runs["factorized"])),
                    "diff": diff,
                },
                indent=2,
            ) + "\n"
        else:
            text = timeline_json(next(iter(runs.values())), {"mode": args.mode})
    elif args.mode == "both":
        text = (
            "# r\n" + render_timeline(runs["r"])
            + "# factorized\n" + render_timeline(runs["factorized"])
            + "# diff\n" + "".join(line + "\n" for line in diff)
        )
    else:
        text = render_timeline(next(iter(runs.values())))
    return text, EXIT_FAIL if diff else EXIT_OK


def cmd_verify(args):
    bounds = parse_bounds(args.bounds)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    if args.suite == "all" and bounds:
        raise ConfigError("--bounds applies to a single suite, not 'all'")
    reports = [run_suite(name, bounds, args.seed) for name in names]
    if args.format == "json":
        docs = [r.to_dict() for r in reports]
        text = json.dumps(docs[0] if len(docs) == 1 else docs, indent=2) + "\n"
    else:
        lines = []
        for r in reports:
            lines.append(r.summary())
            for f in r.failures:
                lines.append("  input: " + json.dumps(f["input"], sort_keys=True))
                lines.append("  detail: " + f["detail"])
        text = "\n".join(lines) + "\n"
    ok = all(r.passed for r in reports)
    return text, EXIT_OK if ok else EXIT_FAIL


def _tup(v):
    return "(" + ",".join(map(str, v)) + ")"


def _elem(e):
    return _tup(e.coords) if e.kind == "A" else f"({','.join(map(str, e.upper))}|{','.join(map(str, e.lower))})"


def cmd_r_apply(args):
    x = parse_element(args.x, args.kind)
    y = parse_element(args.y, args.kind, x.n)
    doc = {"kind": args.kind, "x": _raw(x), "y": _raw(y)}
    lines = []
    if args.kind == "A":
        xp, yp = apply_r_a(x, y)
        doc.update({"x'": _raw(xp), "y'": _raw(yp)})
        lines += [f"x' = {_elem(xp)}", f"y' = {_elem(yp)}"]
        if args.intermediates:
            P = p_values(x, y)
            doc["P"] = list(P)
            lines.append(f"P = {_tup(P)}")
    else:
        xp, yp = apply_r_d(x, y)
        doc.update({"x'": _raw(xp), "y'": _raw(yp)})
        lines += [f"x' = {_elem(xp)}", f"y' = {_elem(yp)}"]
        if not any(x.lower) and not any(y.lower):
            ap, bp = apply_r_a(ElementA(x.upper), ElementA(y.upper))
            same = ap.coords == xp.upper and bp.coords == yp.upper
            doc["reduction"] = {"x'": list(ap.coords), "y'": list(bp.coords), "agrees": same}
            lines.insert(0, "barred coordinates are zero: reduces to type A")
            lines.append(
                f"type A gives x' = {_elem(ap)}, y' = {_elem(bp)} "
                + ("(agrees)" if same else "(DISAGREES)")
            )
        if args.intermediates:
            vw = vw_values(x, y)
            doc.update({
                "V": list(vw.V), "Vstar": list(vw.Vstar), "V0_sigma1": vw.Vsigma1_0,
                "Vn_sigmaN": vw.VsigmaN_n, "W": list(vw.W[1:]),
            })
            lines += [
                f"V = {_tup(vw.V)}", f"V* = {_tup(vw.Vstar)}",
                f"V_0^sigma1 = {vw.Vsigma1_0}", f"V_n^sigmaN = {vw.VsigmaN_n}",
                f"W = {_tup(vw.W[1:])}",
            ]
    if args.format == "json":
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    return "\n".join(lines) + "\n", EXIT_OK


def _raw(e):
    return list(e.coords) if e.kind == "A" else {"x": list(e.upper), "xbar": list(e.lower)}


def cmd_gamma(args):
    out = gamma(*args.values)
    if args.format == "json":
        doc = dict(zip("ABCDE", args.values)) | dict(zip("FGHIJ", out))
        return json.dumps(doc) + "\n", EXIT_OK
    return " ".join(map(str, out)) + "\n", EXIT_OK


def cmd_limits(args):
    x = parse_element(args.x, "D")
    y = parse_element(args.y, "D", x.n)
    prof = limit_profile(x, y, method=args.method)
    xs = saturate(x, max(x[x.n], saturation_point(x, y)))
    xp, xbp, yp, ybp = rhs_theorem51(xs, y, method=args.method)
    lx, ly, _ = local_step_def52(xs, y)
    doc = {
        "method": args.method,
        "v": list(prof.v), "vstar": list(prof.vstar),
        "v0_sigma1": prof.vsigma1_0, "vn_sigmaN": prof.vsigmaN_n,
        "w": list(prof.w),
        "carrier_xn": xs[xs.n],
        "x'": {"x": list(xp), "xbar": list(xbp)},
        "y'": {"x": list(yp), "xbar": list(ybp)},
        "local_step_agrees": (lx.upper, lx.lower, ly.upper, ly.lower) == (xp, xbp, yp, ybp),
    }
    if args.format == "json":
        return json.dumps(doc, indent=2, default=list) + "\n", EXIT_OK
    lines = [
        f"v = {_tup(prof.v)}", f"v* = {_tup(prof.vstar)}",
        f"v_0^sigma1 = {prof.vsigma1_0}", f"v_n^sigmaN = {prof.vsigmaN_n}",
        f"w = {_tup(prof.w)}",
        f"with x_n = {xs[xs.n]}: x' = {_tup(xp)}|{_tup(xbp)}, y' = {_tup(yp)}|{_tup(ybp)}",
        "local gamma recursion " + ("agrees" if doc["local_step_agrees"] else "DISAGREES"),
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def build_parser():
    p = _Parser(prog="crystal-automata", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", metavar="FILE", help="write output here instead of stdout")

    ev = sub.add_parser("evolve", help="run the automaton for some time steps")
    ev.add_argument("state", nargs="?", help="state file ('-' for stdin)")
    ev.add_argument("--kind", choices=("A", "D"))
    ev.add_argument("--n", type=int)
    ev.add_argument("--capacities", help="e.g. '1,2,1'; with no state file a random state is drawn")
    ev.add_argument("--steps", type=int, default=1)
    ev.add_argument("--carrier", default="vacuum", help="'vacuum' or full coordinates, e.g. '0,1,6|1,0,0'")
    ev.add_argument("--mode", choices=("r", "factorized", "both"), default="r")
    ev.add_argument("--seed", type=int, default=0)
    common(ev)
    ev.set_defaults(func=cmd_evolve)

    ve = sub.add_parser("verify", help="run a verification suite")
    ve.add_argument("suite", help="suite name or 'all': " + ", ".join(SUITES))
    ve.add_argument("--bounds", default="", help="e.g. 'n=3,max_coord=2' or 'n=2:3'")
    ve.add_argument("--seed", type=int, default=0)
    common(ve)
    ve.set_defaults(func=cmd_verify)

    ra = sub.add_parser("r-apply", help="apply the combinatorial R to a pair")
    ra.add_argument("--kind", choices=("A", "D"), required=True)
    ra.add_argument("x", help="e.g. '2,0' or '1,0,0|0,0,1'")
    ra.add_argument("y")
    ra.add_argument("--intermediates", action="store_true", help="also print P or V/W values")
    common(ra)
    ra.set_defaults(func=cmd_r_apply)

    ga = sub.add_parser("gamma", help="evaluate the five-integer local map")
    ga.add_argument("values", type=int, nargs=5, metavar="ABCDE")
    common(ga)
    ga.set_defaults(func=cmd_gamma)

    li = sub.add_parser("limits", help="large-carrier limits for a type-D pair")
    li.add_argument("x", help="carrier, xbar_n must be 0; x_n is raised to saturation")
    li.add_argument("y")
    li.add_argument("--method", choices=("recursive", "direct"), default="recursive")
    common(li)
    li.set_defaults(func=cmd_limits)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        text, code = args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CrystalError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
