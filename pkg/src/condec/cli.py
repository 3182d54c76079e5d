"""Command-line interface.

Every command reads textual generator files, prints one JSON report on
stdout, and signals the checked property through its exit code:

* 0 - the property holds (or the transformation succeeded),
* 1 - the property fails, with a witness in the report,
* 2 - usage, parse, or validation errors (diagnostics on stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import Optional

from .events import Alphabet, AlphabetFamily, FamilyError
from .generator import Generator, Word, render_word
from .cdcheck import CdVerdict, is_cd
from .extension import extend_n
from .genfile import ParseError, export_dot, parse_gen, serialize_gen
from .nonblocking import (
    CoordinatedSystem,
    PremiseError,
    coordinated_nonblocking,
    corollary_coordinator,
    observer_check,
)
from .oracle import cd_by_definition
from .ops import complement, complete, compose_all, minimize, project, trim
from .schema import SCHEMA_ID


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _load(path: str) -> tuple[Generator, dict]:
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        g = parse_gen(data)
    except ParseError as exc:
        raise ValueError(f"{path}: {exc}") from None
    return g, {"path": path, "sha256": _sha256(data)}


def _alphabet(spec: Optional[str]) -> Alphabet:
    return Alphabet.of(spec or "")


def _word_str(w: Optional[Word]) -> Optional[str]:
    return None if w is None else render_word(w)


def _cd_payload(v: CdVerdict) -> dict:
    return {
        "decomposable": v.decomposable,
        "witness": _word_str(v.witness),
        "failing_index": v.failing_index,
    }


def _emit(command: str, inputs: list[dict], options: dict, result: dict, t0: float) -> None:
    report = {
        "schema": SCHEMA_ID,
        "command": command,
        "inputs": inputs,
        "options": options,
        "result": result,
        "elapsed_ms": round((time.perf_counter() - t0) * 1000.0, 3),
    }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _family_options(args) -> dict:
    return {
        "locals": [Alphabet.of(s).render() for s in args.local],
        "ek": _alphabet(args.ek).render(),
    }


def _generator_result(
    g: Generator,
    out: Optional[str],
    dot: Optional[str],
    figure: Optional[str],
) -> dict:
    text = serialize_gen(g)
    if out:
        with open(out, "wb") as fh:
            fh.write(text)
    if dot:
        with open(dot, "wb") as fh:
            fh.write(export_dot(g))
    if figure:
        from .figures import draw_generator

        draw_generator(g, figure)
    return {
        "generator": text.decode("utf-8"),
        "states": g.n_states,
        "marked": len(g.marked),
        "out_path": out,
        "dot_path": dot,
        "figure_path": figure,
    }


# ---------------------------------------------------------------------------
# command handlers


def _cmd_is_cd(args) -> int:
    t0 = time.perf_counter()
    g, entry = _load(args.genfile)
    family = AlphabetFamily([Alphabet.of(s) for s in args.local], _alphabet(args.ek))
    verdict = is_cd(g, family)
    result = _cd_payload(verdict)
    result["oracle"] = None
    if args.oracle:
        ref = cd_by_definition(g, family)
        result["oracle"] = {
            "decomposable": ref.decomposable,
            "witness": _word_str(ref.witness),
            "agrees": ref.decomposable == verdict.decomposable,
        }
    options = _family_options(args)
    options["oracle"] = bool(args.oracle)
    _emit("is-cd", [entry], options, result, t0)
    return 0 if verdict.decomposable else 1


def _cmd_extend(args) -> int:
    t0 = time.perf_counter()
    g, entry = _load(args.genfile)
    family = AlphabetFamily([Alphabet.of(s) for s in args.local], _alphabet(args.ek))
    trace = extend_n(g, family)
    result = {
        "added": [e.render() for e in trace.added],
        "restarts": trace.restarts,
        "final_ek": [e.render() for e in trace.final_ek],
        "verified": trace.verified,
    }
    _emit("extend", [entry], _family_options(args), result, t0)
    return 0


def _cmd_nonblocking(args) -> int:
    t0 = time.perf_counter()
    comps = []
    inputs = []
    for path in args.components:
        g, entry = _load(path)
        comps.append(g)
        inputs.append(entry)
    coordinator = None
    if args.coordinator:
        coordinator, entry = _load(args.coordinator)
        inputs.append(entry)
    mode = args.coordinator_mode
    options = {
        "coordinator_mode": mode,
        "ek": _alphabet(args.ek).render() if args.ek is not None else None,
        "direct": bool(args.direct),
    }
    if mode is None:
        if coordinator is None:
            raise ValueError("nonblocking needs --coordinator (or --coordinator-mode intersection with --ek)")
        report = coordinated_nonblocking(
            CoordinatedSystem(comps, coordinator), compute_direct=args.direct
        )
        mode_name = "theorem"
    elif mode == "intersection":
        if args.ek is None:
            raise ValueError("--coordinator-mode intersection needs --ek")
        if coordinator is not None:
            raise ValueError("--coordinator-mode intersection builds its own coordinator; drop --coordinator")
        report = corollary_coordinator(
            comps, _alphabet(args.ek), "intersection", compute_direct=args.direct
        )
        mode_name = "intersection"
    else:
        if coordinator is None:
            raise ValueError("--coordinator-mode supplied needs --coordinator")
        ek = _alphabet(args.ek) if args.ek is not None else coordinator.alphabet
        report = corollary_coordinator(
            comps, ek, "subset-supplied", coordinator=coordinator, compute_direct=args.direct
        )
        mode_name = "supplied"
    result = {
        "mode": mode_name,
        "condition1": list(report.condition1),
        "condition1_witnesses": [
            _word_str(w.word) if w else None for w in report.condition1_witnesses
        ],
        "condition2": _cd_payload(report.condition2),
        "overall": report.overall,
        "direct": report.direct,
        "direct_witness": _word_str(report.direct_witness.word) if report.direct_witness else None,
    }
    _emit("nonblocking", inputs, options, result, t0)
    return 0 if report.overall else 1


def _cmd_observer(args) -> int:
    t0 = time.perf_counter()
    g, entry = _load(args.genfile)
    ok, ce = observer_check(g, _alphabet(args.ek))
    result = {
        "observer": ok,
        "counterexample": None
        if ce is None
        else {"s": render_word(ce[0]), "t": render_word(ce[1])},
    }
    _emit("observer", [entry], {"ek": _alphabet(args.ek).render()}, result, t0)
    return 0 if ok else 1


def _cmd_project(args) -> int:
    t0 = time.perf_counter()
    g, entry = _load(args.genfile)
    result = _generator_result(
        project(g, Alphabet.of(args.onto)), args.out, args.dot, args.figure
    )
    _emit("project", [entry], {"onto": Alphabet.of(args.onto).render()}, result, t0)
    return 0


def _cmd_compose(args) -> int:
    t0 = time.perf_counter()
    gens = []
    inputs = []
    for path in args.genfiles:
        g, entry = _load(path)
        gens.append(g)
        inputs.append(entry)
    result = _generator_result(compose_all(gens), args.out, args.dot, args.figure)
    _emit("compose", inputs, {}, result, t0)
    return 0


def _transform(args, command: str, fn) -> int:
    t0 = time.perf_counter()
    g, entry = _load(args.genfile)
    result = _generator_result(fn(g), args.out, args.dot, args.figure)
    _emit(command, [entry], getattr(args, "extra_options", {}), result, t0)
    return 0


def _cmd_trim(args) -> int:
    return _transform(args, "trim", trim)


def _cmd_minimize(args) -> int:
    return _transform(args, "minimize", minimize)


def _cmd_complement(args) -> int:
    over = Alphabet.of(args.over) if args.over else None
    args.extra_options = {"over": over.render() if over else None}
    return _transform(args, "complement", lambda g: complement(complete(g, over)))


def _cmd_draw(args) -> int:
    if not args.figure and not args.dot:
        raise ValueError("draw needs --figure and/or --dot")
    return _transform(args, "draw", lambda g: g)


def _cmd_bench(args) -> int:
    t0 = time.perf_counter()
    from . import bench

    if args.workload == "scaling":
        sizes = tuple(int(s) for s in args.sizes.split(","))
        rows = bench.scaling_rows(sizes=sizes, seed=args.seed, repeats=args.repeats)
        slope = bench.loglog_slope(rows)
        ratio = None
        header = ("states", "seconds", "decomposable")
        if args.figure:
            from .figures import save_scaling_figure

            save_scaling_figure(rows, slope, args.figure)
    else:
        ns = tuple(int(s) for s in args.ns.split(","))
        rows = bench.nlinear_rows(ns=ns, seed=args.seed, repeats=args.repeats)
        ratio = bench.nlinear_ratio(rows)
        slope = None
        header = ("locals", "seconds", "decomposable")
        if args.figure:
            from .figures import save_nlinear_figure

            save_nlinear_figure(rows, args.figure)
    if args.out_csv:
        bench.write_csv(rows, args.out_csv, header)
    result = {
        "workload": args.workload,
        "rows": [[n, secs, dec] for n, secs, dec in rows],
        "slope": slope,
        "ratio": ratio,
        "csv_path": args.out_csv,
        "figure_path": args.figure,
    }
    options = {
        "seed": args.seed,
        "repeats": args.repeats,
        "sizes": args.sizes if args.workload == "scaling" else None,
        "ns": args.ns if args.workload == "nlinear" else None,
    }
    _emit("bench", [], options, result, t0)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write the resulting generator file here")
    p.add_argument("--dot", help="write a DOT rendering here")
    p.add_argument("--figure", help="render a diagram (png/pdf) here")


def _add_family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--local",
        action="append",
        required=True,
        help="one local alphabet, comma-separated events (repeat per component)",
    )
    p.add_argument("--ek", default="", help="coordinator alphabet, comma-separated events")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condec",
        description="Conditional decomposability and coordinated nonblocking analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("is-cd", help="decide conditional decomposability")
    p.add_argument("genfile")
    _add_family_flags(p)
    p.add_argument("--oracle", action="store_true", help="cross-check with the definitional oracle")
    p.set_defaults(func=_cmd_is_cd)

    p = sub.add_parser("extend", help="grow the coordinator alphabet until decomposable")
    p.add_argument("genfile")
    _add_family_flags(p)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("nonblocking", help="analyze a coordinated system")
    p.add_argument("components", nargs="+", help="component generator files")
    p.add_argument("--coordinator", help="coordinator generator file")
    p.add_argument(
        "--coordinator-mode",
        choices=["supplied", "intersection"],
        help="use a simplified per-component check for these coordinator choices",
    )
    p.add_argument("--ek", help="coordinator alphabet (intersection mode)")
    p.add_argument("--direct", action="store_true", help="also run the ground-truth full-composition check")
    p.set_defaults(func=_cmd_nonblocking)

    p = sub.add_parser("observer", help="check the observer property of a projection")
    p.add_argument("genfile")
    p.add_argument("--ek", required=True, help="projection alphabet")
    p.set_defaults(func=_cmd_observer)

    p = sub.add_parser("project", help="project a generator onto an alphabet")
    p.add_argument("genfile")
    p.add_argument("--onto", required=True, help="target alphabet")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("compose", help="synchronous composition of generator files")
    p.add_argument("genfiles", nargs="+")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_compose)

    for name, handler in (("trim", _cmd_trim), ("minimize", _cmd_minimize)):
        p = sub.add_parser(name, help=f"{name} a generator")
        p.add_argument("genfile")
        _add_output_flags(p)
        p.set_defaults(func=handler)

    p = sub.add_parser("complement", help="complement the marked language")
    p.add_argument("genfile")
    p.add_argument("--over", help="complete over this alphabet first (default: own alphabet)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_complement)

    p = sub.add_parser("draw", help="render a generator diagram")
    p.add_argument("genfile")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_draw)

    p = sub.add_parser("bench", help="timing workloads with CSV and figure output")
    p.add_argument("workload", choices=["scaling", "nlinear"])
    p.add_argument("--sizes", default="25,50,100,200", help="state counts for the scaling workload")
    p.add_argument("--ns", default="2,4,8", help="component counts for the nlinear workload")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--out-csv", help="write timings as CSV here")
    p.add_argument("--figure", help="render the timing plot here")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PremiseError as exc:
        wit = f" (witness: {render_word(exc.witness)})" if exc.witness else ""
        print(f"condec: premise violation: {exc}{wit}", file=sys.stderr)
        return 2
    except (ParseError, FamilyError, ValueError, OSError) as exc:
        print(f"condec: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
