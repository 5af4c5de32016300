"""Command-line entry point: ``zdlab <subcommand> ...``.

JSON reports go to stdout (or ``-o PATH``); human-readable summaries go to
stderr.  Exit codes: 0 success, 1 suite violations, 2 input or validation
error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from . import properties as P
from .builtins import BUILTIN_NAMES, builtin
from .constructions import (
    Bisemimodule,
    ClosureFailure,
    direct_product,
    endomorphism_pn_semiring,
    expectation_semiring,
    localize,
    matrix_semiring,
    power_series_truncated,
    sigma_expectation,
    triangular_semiring,
)
from .errors import InputError, ResourceError
from .io import dumps, load_json, load_structure, save_structure, structure_from_json, structure_to_json
from .rules import RuleStructure
from .search import (
    EnumerationSpec,
    enumerate_structures,
    find_counterexample,
    random_structure,
    run_suite,
    suite_names,
)
from .structures import KINDS, FiniteStructure, validate
from .zdgraph import NOTIONS, build_graph, diameter, resolve_notion, to_dot

log = logging.getLogger("zdlab")

EXIT_OK, EXIT_VIOLATIONS, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


# ------------------------------------------------------------------ helpers


def _structure(ref: str, check: bool) -> FiniteStructure | RuleStructure:
    """A builtin name or a structure file path."""
    made = builtin(ref)
    if made is not None:
        return made
    return load_structure(ref, check=check)


def _finite(ref: str, check: bool) -> FiniteStructure:
    S = _structure(ref, check)
    if isinstance(S, RuleStructure):
        raise InputError(f"{ref} is a rule structure; this command needs a finite table")
    return S


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _emit(args, payload) -> None:
    text = dumps(payload)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _element_json(x):
    return list(x) if isinstance(x, tuple) else x


# -------------------------------------------------------------- subcommands


def cmd_validate(args) -> int:
    if builtin(args.structure) is not None:
        S = _finite(args.structure, check=False)
    else:
        data = load_json(args.structure)
        S = structure_from_json(data, check=False)
    report = validate(S)
    _emit(args, report.to_json())
    log.info("%s: %s", args.structure, "valid" if report.valid else f"invalid ({report.failures[0][0]})")
    return EXIT_OK


def cmd_props(args) -> int:
    S = _structure(args.structure, check=not args.no_validate)
    names = _names(args.props) if args.props else list(P.PROPERTIES)
    reports = []
    for name in names:
        r = P.check(S, name, bound=args.bound, degree=args.degree)
        entry = r.to_json()
        if isinstance(S, RuleStructure) and r.witness is not None:
            from .rules import BoundedView
            window = BoundedView(S, args.bound).elements
            entry["witness_elements"] = [_element_json(window[i]) for i in r.witness]
        reports.append(entry)
        log.info("%s: %s%s", name, r.verdict.value, f" {list(r.witness)}" if r.witness else "")
    payload = reports
    if args.zero_divisors:
        z = P.zero_divisor_sets(S, args.bound)
        def enc(xs):
            return [_element_json(x) for x in sorted(xs)]

        payload = {"reports": reports, "zero_divisors": {
            "left": enc(z.left), "right": enc(z.right),
            "unknown_left": enc(z.unknown_left), "unknown_right": enc(z.unknown_right)}}
    _emit(args, payload)
    return EXIT_OK


def _names(text: str) -> list[str]:
    names = [n.strip() for n in text.split(",") if n.strip()]
    for n in names:
        if n not in P.PROPERTY_NAMES:
            raise InputError(f"unknown property {n!r}; known: {', '.join(P.PROPERTY_NAMES)}")
    return names


def cmd_construct(args) -> int:
    check = not args.no_validate
    what = args.construction
    inputs = args.inputs
    need = {"matrix": 1, "product": None, "expectation": 1, "sigma": 1, "triangular": 2, "localize": 1,
            "series": 1, "endomorphisms": 1}[what]
    if need is not None and len(inputs) != need:
        raise InputError(f"construct {what} takes {need} input(s)")
    if what == "matrix":
        T = matrix_semiring(_finite(inputs[0], check), args.n)
    elif what == "product":
        if not inputs:
            raise InputError("construct product needs at least one input")
        T = direct_product([_finite(ref, check) for ref in inputs])
    elif what == "expectation":
        S = _finite(inputs[0], check)
        M = None if args.module is None else Bisemimodule.from_json(load_json(args.module), S, S)
        T = expectation_semiring(S, M)
    elif what == "sigma":
        if args.sigma is None:
            raise InputError("construct sigma needs --sigma")
        T = sigma_expectation(_finite(inputs[0], check), _ints(args.sigma))
    elif what == "triangular":
        if args.module is None:
            raise InputError("construct triangular needs --module")
        S, T0 = _finite(inputs[0], check), _finite(inputs[1], check)
        T = triangular_semiring(S, Bisemimodule.from_json(load_json(args.module), S, T0), T0)
    elif what == "localize":
        if args.denominators is None:
            raise InputError("construct localize needs --denominators")
        T = localize(_finite(inputs[0], check), _ints(args.denominators))
    elif what == "series":
        T = power_series_truncated(_finite(inputs[0], check), args.k)
    else:  # endomorphisms of a unital magma given as {"add": [[...]]}
        data = load_json(inputs[0])
        if "add" not in data:
            raise InputError("the magma file needs an 'add' table")
        T = endomorphism_pn_semiring(data["add"])
        if isinstance(T, ClosureFailure):
            _emit(args, T.to_json())
            log.info("E_0(M) is not closed under +: f=%s g=%s at (%d, %d)", T.f, T.g, T.x, T.y)
            return EXIT_OK
    _emit(args, structure_to_json(T))
    log.info("constructed %s of order %d", T.kind, T.order)
    return EXIT_OK


def cmd_graph(args) -> int:
    S = _finite(args.structure, check=not args.no_validate)
    G = build_graph(S)
    notion = resolve_notion(args.notion)
    d = diameter(G, notion)
    payload = {"vertices": list(G.vertices), "edges": [list(e) for e in G.edges], "notion": notion,
               "connected": d != float("inf"), "diameter": None if d == float("inf") else d}
    if args.dot:
        Path(args.dot).write_text(to_dot(G) + "\n", encoding="utf-8")
    _emit(args, payload)
    log.info("%d vertices, %d edges, %s-connected: %s", len(G.vertices), len(G.edges), notion,
             payload["connected"])
    return EXIT_OK


def cmd_enumerate(args) -> int:
    filters = tuple(_names(args.filter)) if args.filter else ()
    if args.random:
        structures = [random_structure(args.kind, args.order, args.seed + i) for i in range(args.random)]
    else:
        spec = EnumerationSpec(args.kind, args.order, args.up_to_iso, filters, big=args.big)
        structures = list(enumerate_structures(spec, jobs=args.jobs))
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        files = []
        for i, S in enumerate(structures):
            path = out / f"{args.kind}-{args.order}-{i:05d}.json"
            save_structure(S, path)
            files.append(path.name)
        sys.stdout.write(dumps({"count": len(structures), "directory": str(out), "files": files}))
    else:
        sys.stdout.write(dumps([structure_to_json(S) for S in structures]))
    log.info("%d structure(s) of kind %s and order %d", len(structures), args.kind, args.order)
    return EXIT_OK


def _load_corpus(directory: str, check: bool) -> list[FiniteStructure]:
    paths = sorted(Path(directory).glob("*.json"))
    if not paths:
        raise InputError(f"no structure files in {directory}")
    return [load_structure(p, check=check) for p in paths]


def cmd_verify(args) -> int:
    if args.corpus and args.order:
        raise InputError("pass either --order or --corpus, not both")
    structures = _load_corpus(args.corpus, not args.no_validate) if args.corpus else None
    report = run_suite(args.suite, structures, order=args.order, jobs=args.jobs, degree=args.degree)
    _emit(args, report.to_json())
    log.info("suite %s: %d structure(s), %d violation(s), %.2fs", report.suite, report.structures_checked,
             len(report.violations), report.elapsed)
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def cmd_hunt(args) -> int:
    result = find_counterexample(args.expr, args.kind, args.max_order, big=args.big, degree=args.degree)
    _emit(args, result.to_json())
    if result.found is None:
        log.info("exhausted: %d structure(s) scanned", result.scanned)
    else:
        log.info("found at order %d after %d structure(s)", result.order, result.scanned)
    return EXIT_OK


# ------------------------------------------------------------------- parser


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--jobs", type=int, default=default(os.cpu_count() or 1),
                        help="worker processes (results do not depend on it)")
    parser.add_argument("--seed", type=int, default=default(0), help="seed for sampling")
    parser.add_argument("--bound", type=int, default=default(None), help="window bound for rule structures")
    parser.add_argument("--degree", type=int, default=default(2), help="degree for polynomial checks")
    parser.add_argument("--no-validate", action="store_true", default=default(False),
                        help="skip axiom validation of input files")
    parser.add_argument("-o", "--output", default=default(None), help="write JSON here instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true", default=default(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zdlab", description="Zero-divisor verification workbench.",
                                     epilog=f"Builtin structures: {', '.join(BUILTIN_NAMES)}.")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        _global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check the axioms of a structure file")
    p.add_argument("structure")

    p = add("props", cmd_props, "evaluate properties")
    p.add_argument("structure")
    p.add_argument("--props", help="comma-separated property names (default: the basic properties)")
    p.add_argument("--zero-divisors", action="store_true", help="also report Z_l and Z_r")

    p = add("construct", cmd_construct, "build a derived structure")
    p.add_argument("construction", choices=["matrix", "product", "expectation", "sigma", "triangular",
                                            "localize", "series", "endomorphisms"])
    p.add_argument("inputs", nargs="*", help="structure files or builtin names (triangular: S T)")
    p.add_argument("--n", type=int, default=2, help="matrix size")
    p.add_argument("--k", type=int, default=3, help="power-series truncation length")
    p.add_argument("--module", help="bisemimodule JSON file")
    p.add_argument("--sigma", help="endomorphism as comma-separated images")
    p.add_argument("--denominators", help="denominator set as comma-separated elements")

    p = add("graph", cmd_graph, "zero-divisor graph")
    p.add_argument("structure")
    p.add_argument("--dot", help="write DOT text here")
    p.add_argument("--notion", choices=list(NOTIONS) + ["calibrated"], default="calibrated")

    p = add("enumerate", cmd_enumerate, "enumerate small structures")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument("--filter", help="comma-separated properties that must hold")
    p.add_argument("--big", action="store_true", help="allow order 5")
    p.add_argument("--random", type=int, metavar="COUNT",
                   help="sample COUNT random structures (seeds --seed, --seed+1, ...) instead")

    p = add("verify", cmd_verify, "run a theorem-verification suite")
    p.add_argument("--suite", required=True, choices=suite_names())
    p.add_argument("--order", type=int, help="largest corpus order")
    p.add_argument("--corpus", help="directory of structure files")

    p = add("hunt", cmd_hunt, "search for a structure satisfying an expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--big", action="store_true")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO, format="%(message)s",
                        stream=sys.stderr, force=True)
    start = time.perf_counter()
    try:
        code = args.func(args)
    except InputError as exc:
        log.error("input error: %s", exc)
        return EXIT_INPUT
    except ResourceError as exc:
        log.error("resource limit: %s", exc)
        return EXIT_RESOURCE
    log.debug("elapsed %.2fs", time.perf_counter() - start)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
