"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 usage error. Letters on the wire
are signed integers (-i barred, 0 middle, +i unbarred). Output is
deterministic for identical inputs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .cartan import build_cartan, longest_word, verify_reduced_longest
from .characters import decomposition_character, serre_check
from .crystals import generate_crystal, to_dot
from .decomposition import decompose, delta_indicator, hat
from .klr import (
    build_delta_module,
    build_q,
    check_degrees,
    check_relations,
    module_qcharacter,
    random_choices,
    report_failures,
)
from .strings import adapted_string, enumerate_S_lambda, string_to_element, triangle
from .verification import replay_example_b3, run_full_suite


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text else ()
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: "
                                         f"{text!r}")


def _emit(args, payload: dict, text: str):
    out = json.dumps(payload, indent=2, sort_keys=True) if \
        args.format == "json" else text
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _datum(args):
    return build_cartan(args.type, args.rank)


def _triangle_text(tri) -> str:
    width = max((len(str(x)) for row in tri.rows for x in row), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in row)
                     for row in reversed(tri.rows))


def _cmd_w0(args) -> int:
    word = longest_word(args.type, args.rank)
    datum = _datum(args)
    ok = verify_reduced_longest(datum, word.flat)
    payload = {"type": str(datum), "blocks": [list(b) for b in word.blocks],
               "word": list(word.flat), "length": word.length,
               "reduced_longest": ok}
    text = (f"{datum} longest word, length {word.length}, "
            f"{'verified' if ok else 'NOT REDUCED'}\n"
            + "\n".join(f"  block {k}: {' '.join(map(str, b))}"
                        for k, b in enumerate(word.blocks, start=1)))
    _emit(args, payload, text)
    return 0 if ok else 1


def _cmd_crystal(args) -> int:
    datum = _datum(args)
    from .verification import weyl_dimension
    dim = weyl_dimension(datum, args.lam)
    if dim > args.cap:
        print(f"crystal has {dim} elements, over the cap {args.cap}",
              file=sys.stderr)
        return 2
    graph = generate_crystal(datum, args.lam)
    if args.format == "dot":
        out = to_dot(graph)
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(out)
        else:
            print(out, end="")
        return 0
    payload = {"type": str(datum), "lambda": list(args.lam),
               "size": len(graph),
               "elements": [str(e) for e in graph.elements]}
    text = (f"{datum} highest weight {list(args.lam)}: {len(graph)} elements\n"
            + "\n".join(f"  {e}" for e in graph.elements))
    _emit(args, payload, text)
    return 0


def _cmd_enumerate(args) -> int:
    datum = _datum(args)
    strings = enumerate_S_lambda(datum, args.lam)
    payload = {"type": str(datum), "lambda": list(args.lam),
               "count": len(strings),
               "strings": [list(s.entries) for s in strings]}
    text = (f"{len(strings)} strings\n"
            + "\n".join("  (" + ",".join(map(str, s.entries)) + ")"
                        for s in strings))
    _emit(args, payload, text)
    return 0


def _cmd_decompose(args) -> int:
    datum = _datum(args)
    dec = decompose(datum, args.string, args.lam)
    tri = triangle(datum, args.string)
    payload = dec.to_json()
    payload["type"] = str(datum)
    payload["triangle"] = tri.to_json()
    lines = [f"string: {list(dec.string)}", "triangle:",
             *("  " + l for l in _triangle_text(tri).splitlines())]
    for k, blk in enumerate(dec.blocks, start=1):
        shown = " x ".join(str(f) for f in blk) or "(empty)"
        lines.append(f"block {k}: {shown}")
    lines.append(f"eta: {dec.eta}")
    if dec.bound is not None:
        lines.append(f"bound: {dec.bound}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_character(args) -> int:
    datum = _datum(args)
    dec = decompose(datum, args.string, args.lam)
    ch = decomposition_character(datum, dec, cap=args.cap)
    violations = serre_check(datum, ch)
    payload = ch.to_json()
    payload["serre_violations"] = violations
    text = (str(ch) + "\n"
            + (f"{len(violations)} Serre violations" if violations
               else "Serre identities hold"))
    _emit(args, payload, text)
    return 0 if not violations else 1


def _letters(datum):
    top = {"A": datum.rank + 1, "B": 2 * datum.rank + 1}.get(
        datum.type_tag, 2 * datum.rank)
    return [hat(datum, i) for i in range(1, top + 1)]


def _cmd_klr_check(args) -> int:
    datum = _datum(args)
    rng = random.Random(args.seed)
    tables = [("default", build_q(datum))]
    for k in range(args.randomized):
        zeta, eta = random_choices(datum, rng)
        tables.append((f"random-{k}", build_q(datum, zeta=zeta, eta=eta)))
    results = []
    letters = _letters(datum)
    failures = 0
    for name, q in tables:
        for a in letters:
            for b in letters:
                if a == b or not delta_indicator(datum, a, b):
                    continue
                mod = build_delta_module(datum, (a, b), q)
                bad = report_failures(check_relations(datum, mod, q))
                bad_deg = check_degrees(mod)
                failures += len(bad) + len(bad_deg)
                results.append({
                    "q_table": name, "factor": [a, b], "dim": mod.dim,
                    "relation_failures": bad, "degree_failures": bad_deg,
                    "qcharacter": {",".join(map(str, w)): deg
                                   for w, deg in
                                   module_qcharacter(mod).items()},
                })
    payload = {"type": str(datum), "modules_checked": len(results),
               "failures": failures, "results": results}
    text = (f"{datum}: checked {len(results)} module/table pairs, "
            f"{failures} failures")
    _emit(args, payload, text)
    return 0 if failures == 0 else 1


def _cmd_verify(args) -> int:
    reports = run_full_suite(args.max_rank, args.weight_budget, args.cap)
    bad = [r for r in reports if r.status == "fail"]
    payload = {"cases": [r.to_json() for r in reports],
               "failed": len(bad)}
    lines = [f"{r.case}: {r.status} ({r.actual} elements)" for r in reports]
    lines.append(f"{len(reports)} cases, {len(bad)} failed")
    _emit(args, payload, "\n".join(lines))
    return 0 if not bad else 1


def _cmd_example_b3(args) -> int:
    rep = replay_example_b3()
    _emit(args, rep.to_json(),
          f"{rep.case}: {rep.status}" + "".join(
              f"\n  {d['message']}" for d in rep.details))
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klrcrystals",
        description="Crystals, adapted strings, two-letter module "
                    "decompositions, shuffle characters, and KLR relation "
                    "checks. Letters are signed integers: -i barred, "
                    "0 middle, +i unbarred.",
        epilog="JSON outputs follow docs/output-schema.json.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lam=False, lam_required=False, string=False, cap=None,
               formats=("text", "json")):
        p.add_argument("--type", required=True,
                       choices=list("ABCDEFG"), help="type tag")
        p.add_argument("--rank", required=True, type=int)
        if lam:
            p.add_argument("--lambda", dest="lam", type=_csv_ints,
                           required=lam_required, default=None,
                           help="dominant weight, comma-separated")
        if string:
            p.add_argument("--string", required=True, type=_csv_ints)
        if cap is not None:
            p.add_argument("--cap", type=int, default=cap)
        p.add_argument("--format", choices=list(formats), default="text")
        p.add_argument("--output", "-o", default=None,
                       help="write to file instead of stdout")

    p = sub.add_parser("w0", help="longest-word table entry, verified")
    common(p)
    p.set_defaults(func=_cmd_w0)

    p = sub.add_parser("crystal", help="generate a highest-weight crystal")
    common(p, lam=True, lam_required=True, cap=10 ** 6,
           formats=("text", "json", "dot"))
    p.set_defaults(func=_cmd_crystal)

    p = sub.add_parser("enumerate", help="list the bounded string cone")
    common(p, lam=True, lam_required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("decompose",
                       help="triangle, factor blocks, eta for a string")
    common(p, lam=True, string=True)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("character",
                       help="shuffle character of a full decomposition")
    common(p, lam=True, string=True, cap=2 * 10 ** 5)
    p.set_defaults(func=_cmd_character)

    p = sub.add_parser("klr-check", help="build and verify matrix modules")
    common(p)
    p.add_argument("--randomized", type=int, default=0,
                   help="number of randomized structure-constant tables")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_klr_check)

    p = sub.add_parser("verify", help="exhaustive desk-scale suites")
    p.add_argument("--max-rank", type=int, default=4)
    p.add_argument("--weight-budget", type=int, default=3)
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("example-b3", help="replay the worked example")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=_cmd_example_b3)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
