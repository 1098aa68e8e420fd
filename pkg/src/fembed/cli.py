"""Command-line front end.

Exit codes: 0 success / Yes, 1 definite No (``check``), 2 Unknown,
3 usage or parse error, 4 law failure or oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from fembed import combinatorics as comb
from fembed.constructions import descending_chain, minimal_sets, unembeddable_pair, verify_pair
from fembed.dsl import ParseError, parse_set
from fembed.fe import fe_decide, fe_oracle_bruteforce
from fembed.laws import InstanceConfig, run_corpus, summarize
from fembed.report import jsonable
from fembed.setrep import HorizonError
from fembed.verdict import TriVerdict

EXIT_OK, EXIT_NO, EXIT_UNKNOWN, EXIT_USAGE, EXIT_LAW = 0, 1, 2, 3, 4

DEFAULT_HORIZON = 10_000
DEFAULT_KMAX = 10_000

EPILOG = """\
set expressions:
  {0,3,11}            finite set           evens, odds, nat   named sets
  up(BITS;Q;R1,R2)    x<len(BITS): BITS[x]=1, else x mod Q in {R1,R2}
  E + K               translate            diff(E)            positive differences
  shift(E; G1,G2)     {x : x+g in E for every g}
  E & F, E | F        intersection binds tighter than union; use ( ) to group
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _verdict_json(v: TriVerdict) -> dict:
    return {"outcome": v.outcome.value, "witness": jsonable(v.witness), "reason": v.reason}


def _verdict_text(v: TriVerdict) -> str:
    if v.is_yes:
        return f"Yes k={v.witness}"
    if v.is_no:
        return f"No, certificate F={v.witness}"
    return f"Unknown: {v.reason}"


def _exit_for(v: TriVerdict) -> int:
    return EXIT_OK if v.is_yes else (EXIT_NO if v.is_no else EXIT_UNKNOWN)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_check(args) -> int:
    a = parse_set(args.a, args.horizon)
    b = parse_set(args.b, args.horizon)
    verdict = fe_decide(a, b)
    payload = {"command": "check", "a": str(a), "b": str(b), "verdict": _verdict_json(verdict)}
    lines = [_verdict_text(verdict)]
    code = _exit_for(verdict)
    if args.oracle:
        oracle = fe_oracle_bruteforce(a, b, args.horizon, args.kmax)
        agree = not (oracle.definite and verdict.definite and oracle.outcome != verdict.outcome)
        payload["oracle"] = _verdict_json(oracle)
        payload["oracle_agrees"] = agree
        lines.append(f"oracle: {oracle}")
        if not agree:
            lines.append("oracle DISAGREES")
            code = EXIT_LAW
    _emit(args, payload, "\n".join(lines))
    return code


def cmd_classify(args) -> int:
    s = parse_set(args.expr, args.horizon)
    bd = comb.upper_banach_density(s, args.window)
    verdicts = {
        "thick": comb.is_thick(s),
        "syndetic": comb.is_syndetic(s),
        "piecewise_syndetic": comb.is_piecewise_syndetic(s),
    }
    ap = comb.longest_ap(s, args.window)
    payload = {
        "command": "classify",
        "set": str(s),
        "density": {"value": str(bd.value), "method": bd.method, "window": bd.window},
        **{k: _verdict_json(v) for k, v in verdicts.items()},
        "longest_ap": jsonable(ap),
    }
    lines = [f"set: {s}", f"upper Banach density: {bd.value} ({bd.method})"]
    lines += [f"{k}: {v.outcome}" for k, v in verdicts.items()]
    if ap is None:
        lines.append(f"longest AP below {args.window}: none")
    else:
        lines.append(f"longest AP below {args.window}: start={ap.start} diff={ap.difference} length={ap.length}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_construct_pair(args) -> int:
    x = parse_set(args.expr, args.horizon)
    pair = unembeddable_pair(x, args.count)
    report = verify_pair(pair)
    payload = {"command": "construct-pair", "source": str(x), "a": list(pair.a_elements),
               "b": list(pair.b_elements), "verification": report.to_json()}
    text = (f"A = {{{','.join(map(str, pair.a_elements))}}}\n"
            f"B = {{{','.join(map(str, pair.b_elements))}}}\n"
            f"verify: {report.outcome}")
    _emit(args, payload, text)
    return EXIT_OK if report.outcome == "pass" else EXIT_LAW


def cmd_chain(args) -> int:
    x = parse_set(args.expr, args.horizon)
    chain = descending_chain(x, args.depth, args.count)
    steps = []
    for i, (s, cert, side) in enumerate(zip(chain.sets[1:], chain.certificates, chain.sides), start=1):
        steps.append({"level": i, "side": side, "elements": list(s.elements[:20]),
                      "known_members": len(s.elements), "horizon": s.horizon,
                      "certificate": _verdict_json(cert)})
    payload = {"command": "chain", "source": str(x), "steps": steps, "error": chain.error}
    lines = [f"X0 = {x}"]
    for st, cert in zip(steps, chain.certificates):
        els = ",".join(map(str, st["elements"][:8]))
        lines.append(f"X{st['level']} = {{{els},...}} ({st['side']}-side); "
                     f"X{st['level'] - 1} not<=fe X{st['level']}: certificate F={cert.witness}")
    if chain.error:
        lines.append(f"error: {chain.error}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_UNKNOWN if chain.error else EXIT_OK


def cmd_minimal(args) -> int:
    sets = minimal_sets(args.n, args.m)
    expected = math.comb(args.m, args.n - 1) if args.m >= args.n - 1 else 0
    payload = {"command": "minimal", "n": args.n, "m": args.m,
               "sets": [list(s.elements) for s in sets], "count": len(sets), "binomial": expected}
    lines = [str(s) for s in sets]
    lines.append(f"count={len(sets)}=C({args.m},{args.n - 1})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_laws(args) -> int:
    cfg = InstanceConfig(seed=args.seed, max_preperiod=args.max_preperiod,
                         max_period=args.max_period, horizon=args.window,
                         corpus_size=args.corpus)
    reports = run_corpus(cfg)
    fails = [r for r in reports if r.failed]
    lines_json = [r.to_line() for r in reports]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines_json) + ("\n" if lines_json else ""))
    if args.json:
        for line in lines_json:
            print(line)
    else:
        for law, counts in summarize(reports).items():
            parts = " ".join(f"{k}={counts.get(k, 0)}" for k in ("pass", "fail", "vacuous", "unknown"))
            print(f"{law}: {parts}")
        for r in fails:
            print(f"FAIL {r.law} {r.instance} {r.witness}")
        print(f"total={len(reports)} fails={len(fails)}")
    return EXIT_LAW if fails else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fembed", description="Finite embeddability toolkit for subsets of N.",
                     epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("check", help="decide A <=fe B", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.add_argument("--kmax", type=int, default=DEFAULT_KMAX)
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="density, thickness, syndeticity, longest AP")
    p.add_argument("expr")
    common(p)
    p.add_argument("--window", type=int, default=1000)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("construct-pair", help="strongly mutually unembeddable pair inside X")
    p.add_argument("expr")
    p.add_argument("--count", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_construct_pair)

    p = sub.add_parser("chain", help="descending chain X0 ⊃ X1 ⊃ ... with certificates")
    p.add_argument("expr")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("minimal", help="minimal sets with at least n members inside {0..m}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("laws", help="run every law checker on a seeded corpus")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--corpus", type=int, default=50)
    p.add_argument("--max-period", type=int, default=10)
    p.add_argument("--max-preperiod", type=int, default=6)
    p.add_argument("--window", type=int, default=1000, help="horizon for AP searches")
    p.add_argument("--out", help="write JSON lines here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_laws)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"fembed: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HorizonError as exc:
        print(f"fembed: horizon error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except ValueError as exc:
        print(f"fembed: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
