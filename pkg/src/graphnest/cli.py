"""Command-line front end: graph/element file ingestion, JSON reports, exit codes.

Commands
--------
classify   structural report for a graph file
separate   witness representation separating a nonzero element from zero
rep        build a representation (phi | rho | psi | fock | nnest) and
           report how well it satisfies the defining relations
recover    recover one path coefficient of an element through a family
radical    radical generators, plus membership for an optional element

Exit codes: 0 success; 2 unreadable input (parse errors, bad paths, limits);
3 file-system errors; 4 empty input (zero element, empty graph); 5 a
construction's mathematical precondition fails.

Unit-modulus parameters are written as fractions of a full turn:
``--lambda-arg 0.25`` means e^{2πi·0.25} = i.  Path arguments list edge names
in walking order (first walked first), comma separated; a length-0 path is
written ``vertex:NAME``.
"""

from __future__ import annotations

import argparse
import cmath
import json
import sys
from dataclasses import dataclass

from .classify import classify
from .elements import FormalElement, element_from_json, truncated_left_regular
from .errors import (
    EmptyInputError,
    GraphNestError,
    GraphParseError,
    LimitError,
    PathError,
    PreconditionError,
)
from .graphs import DirectedGraph, Path, graph_to_json, parse_graph
from .linalg import ToleranceConfig
from .recovery import (
    recover_irreducible,
    recover_nest,
    recover_upper,
    separate,
)
from .reps import (
    FiniteRepresentation,
    check_relations,
    n_nest_truncation,
    phi_cycle,
    psi_upper,
    rep_to_json,
    rho_nest,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_IO = 3
EXIT_EMPTY = 4
EXIT_PRECONDITION = 5


@dataclass(frozen=True)
class CliConfig:
    """Run-wide knobs shared by every command."""

    tolerances: ToleranceConfig
    max_len: int = 12
    max_basis: int = 20_000
    json_output: bool = False
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_len < 1 or self.max_basis < 1:
            raise ValueError("limits must be positive")


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        tolerances=ToleranceConfig(
            rank_tol=args.rank_tol,
            norm_tol=args.norm_tol,
            recovery_tol=args.recovery_tol,
        ),
        max_len=args.max_len,
        max_basis=args.max_basis,
        json_output=args.json,
        seed=args.seed,
    )


# -- input helpers -------------------------------------------------------------------


def _load_graph(path: str) -> DirectedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        g = parse_graph(fh.read())
    if not g.vertices:
        raise EmptyInputError(f"graph file {path!r} declares no vertices")
    return g


def _load_element(path: str, g: DirectedGraph) -> FormalElement:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"{path}: invalid JSON ({exc})") from exc
    return element_from_json(g, obj)


def _parse_pathspec(g: DirectedGraph, spec: str) -> Path:
    spec = spec.strip()
    if spec.startswith("vertex:"):
        return g.vertex_path(spec[len("vertex:"):])
    names = [part.strip() for part in spec.split(",") if part.strip()]
    if not names:
        raise PathError(f"empty path specification {spec!r}")
    return g.path_from_traversal(names)


def _parse_lambdas(spec: str) -> list[complex]:
    """Comma-separated fractions of a turn -> points on the unit circle."""
    out = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            t = float(part)
        except ValueError as exc:
            raise PathError(f"bad turn fraction {part!r} in --lambda-arg") from exc
        out.append(cmath.exp(2j * cmath.pi * t))
    if not out:
        raise PathError("--lambda-arg needs at least one turn fraction")
    return out


def _parse_loop_choice(g: DirectedGraph, spec: str | None) -> dict[str, str] | None:
    if spec is None:
        return None
    choice: dict[str, str] = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        vertex, sep, edge = part.partition("=")
        if not sep or not vertex or not edge:
            raise PathError(
                f"bad --loop-choice entry {part!r}; expected VERTEX=EDGE"
            )
        choice[vertex] = edge
    return choice or None


# -- output helpers ------------------------------------------------------------------


def _dump_json(obj: dict) -> str:
    payload = {"schema_version": SCHEMA_VERSION, **obj}
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _write_emit(path: str, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_dump_json(obj))


def _complex_pair(z: complex) -> list[float]:
    return [z.real, z.imag]


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


# -- commands ------------------------------------------------------------------------


def _cmd_classify(args: argparse.Namespace, cfg: CliConfig) -> int:
    g = _load_graph(args.graph)
    report = classify(g)
    if cfg.json_output:
        sys.stdout.write(
            _dump_json({"graph": graph_to_json(g), "report": report.to_json()})
        )
        return EXIT_OK
    s = report.graph_stats
    comps = "; ".join(
        "{{{0}}} {1} loops={2}".format(
            ",".join(c["vertices"]), c["class"], c["loop_multiplicity"]
        )
        for c in s["components"]
    )
    fn = report.faithful_nest
    lines = [
        f"vertices:             {s['vertices']}",
        f"edges:                {s['edges']}",
        f"sinks:                {' '.join(s['sinks']) or '(none)'}",
        f"sources:              {' '.join(s['sources']) or '(none)'}",
        f"components:           {comps}",
        f"semisimple:           {_yesno(report.semisimple)}",
        f"strongly semisimple:  {_yesno(report.strongly_semisimple)}",
        f"radical generators:   {' '.join(report.radical_generators) or '(none)'}",
        f"ut separating:        {_yesno(report.ut_separating)}",
        f"faithful irreducible: {_yesno(report.faithful_irreducible)}",
        (
            f"faithful nest:        {_yesno(fn.satisfied)}  "
            f"(order {_yesno(fn.quotient_totally_ordered)}, "
            f"no-cycle {_yesno(fn.no_cycle_component)}, "
            f"chain {_yesno(fn.trivial_chain_interval)}"
            + (", vacuous" if fn.c3_vacuous else "")
            + ")"
        ),
        (
            f"n-nest case:          {report.n_nest.case}"
            + (" (requires an infinite graph)" if report.n_nest.requires_infinite else "")
        ),
    ]
    print("\n".join(lines))
    return EXIT_OK


def _cmd_separate(args: argparse.Namespace, cfg: CliConfig) -> int:
    g = _load_graph(args.graph)
    a = _load_element(args.element, g)
    witness = separate(
        g, a, args.family,
        loop_choice=_parse_loop_choice(g, args.loop_choice),
        tol=cfg.tolerances,
    )
    if args.emit:
        _write_emit(
            args.emit,
            {
                "graph": graph_to_json(g),
                "representation": rep_to_json(witness.representation),
            },
        )
    if cfg.json_output:
        sys.stdout.write(
            _dump_json({"graph": graph_to_json(g), "witness": witness.to_json()})
        )
        return EXIT_OK
    blocks = (
        " ".join(str(b) for b in witness.nest.block_sizes)
        if witness.nest
        else "(none)"
    )
    point = " ".join(
        f"{z.real!r} {z.imag!r}" for z in witness.witness_point
    ) or "(none)"
    path = ",".join(witness.path.traversal) or f"vertex:{witness.path.source}"
    print(f"family:        {witness.family}")
    print(f"support path:  {path}")
    print(f"dimension:     {witness.representation.dimension}")
    print(f"nest blocks:   {blocks}")
    print(f"entry:         [{witness.row}, {witness.col}] = "
          f"{witness.entry_value.real!r} {witness.entry_value.imag!r}")
    print(f"lambda point:  {point}")
    print(f"value:         {witness.value!r}")
    return EXIT_OK


def _build_rep(
    args: argparse.Namespace, cfg: CliConfig, g: DirectedGraph
) -> tuple[FiniteRepresentation, list[int] | None]:
    tol = cfg.tolerances
    kind = args.kind
    if kind == "phi":
        if not args.cycle or args.lambda_arg is None:
            raise PathError("rep phi needs --cycle and --lambda-arg")
        u = _parse_pathspec(g, args.cycle)
        lams = _parse_lambdas(args.lambda_arg)
        if len(lams) != 1:
            raise PathError("rep phi takes exactly one --lambda-arg value")
        return phi_cycle(g, u, lams[0], tol=tol), None
    if kind == "rho":
        if not args.path or args.lambda_arg is None:
            raise PathError("rep rho needs --path and --lambda-arg")
        w = _parse_pathspec(g, args.path)
        rep, structure = rho_nest(g, w, _parse_lambdas(args.lambda_arg), tol=tol)
        return rep, list(structure.block_sizes)
    if kind == "psi":
        if not args.path or args.lambda_arg is None:
            raise PathError("rep psi needs --path and --lambda-arg")
        w = _parse_pathspec(g, args.path)
        rep = psi_upper(
            g, w, _parse_lambdas(args.lambda_arg),
            _parse_loop_choice(g, args.loop_choice),
            tol=tol,
        )
        return rep, [1] * rep.dimension
    if kind == "fock":
        rep = truncated_left_regular(g, args.depth, max_basis=cfg.max_basis, tol=tol)
        return rep, None
    rep = n_nest_truncation(g, args.prefix_len, cfg.seed, tol=tol)
    return rep, [1] * rep.dimension


def _cmd_rep(args: argparse.Namespace, cfg: CliConfig) -> int:
    g = _load_graph(args.graph)
    rep, nest_blocks = _build_rep(args, cfg, g)
    relations = check_relations(rep, tol=cfg.tolerances)
    payload = {
        "graph": graph_to_json(g),
        "kind": args.kind,
        "representation": rep_to_json(rep),
        "nest_blocks": nest_blocks,
        "relations": relations.to_json(),
    }
    if args.emit:
        _write_emit(args.emit, payload)
    if cfg.json_output:
        sys.stdout.write(_dump_json(payload))
        return EXIT_OK
    verdicts = relations.verdicts
    print(f"kind:        {args.kind}")
    print(f"dimension:   {rep.dimension}")
    print(f"orientation: {rep.orientation or '(none)'}")
    for name, flag in verdicts.items():
        print(f"{name + ':':36s} {_yesno(flag)}")
    if not args.emit:
        print("(use --json or --emit FILE for the full matrix data)")
    return EXIT_OK


def _cmd_recover(args: argparse.Namespace, cfg: CliConfig) -> int:
    g = _load_graph(args.graph)
    a = _load_element(args.element, g)
    w = _parse_pathspec(g, args.path)
    tol = cfg.tolerances
    if args.family == "irreducible":
        value = recover_irreducible(g, a, w, tol=tol)
    elif args.family == "nest":
        value = recover_nest(g, a, w, tol=tol)
    else:
        value = recover_upper(
            g, a, w,
            loop_choice=_parse_loop_choice(g, args.loop_choice),
            tol=tol,
        )
    if cfg.json_output:
        sys.stdout.write(
            _dump_json(
                {
                    "graph": graph_to_json(g),
                    "family": args.family,
                    "path": {"source": w.source, "edges": list(w.traversal)},
                    "coefficient": _complex_pair(value),
                }
            )
        )
        return EXIT_OK
    print(f"{value.real!r} {value.imag!r}")
    return EXIT_OK


def _cmd_radical(args: argparse.Namespace, cfg: CliConfig) -> int:
    from .recovery import is_in_radical, radical_edge_generators

    g = _load_graph(args.graph)
    generators = radical_edge_generators(g)
    membership: bool | None = None
    if args.element:
        a = _load_element(args.element, g)
        membership = is_in_radical(g, a)
    if cfg.json_output:
        payload: dict = {
            "graph": graph_to_json(g),
            "generators": list(generators),
            "element_in_radical": membership,
        }
        sys.stdout.write(_dump_json(payload))
        return EXIT_OK
    print(f"generators: {' '.join(generators) or '(none)'}")
    if membership is not None:
        print(f"element in radical: {_yesno(membership)}")
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--seed", type=int, default=0, help="seed for seeded constructions")
    common.add_argument("--max-len", type=int, default=12, help="path-length enumeration cap")
    common.add_argument("--max-basis", type=int, default=20_000, help="basis size cap")
    common.add_argument("--rank-tol", type=float, default=1e-9, help="rank decision tolerance")
    common.add_argument("--norm-tol", type=float, default=1e-9, help="relation-check tolerance")
    common.add_argument("--recovery-tol", type=float, default=1e-8, help="recovery comparison tolerance")

    parser = argparse.ArgumentParser(
        prog="graphnest",
        description="Finite-dimensional representations of directed-graph path algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="structural report for a graph")
    p.add_argument("graph", help="graph text file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("separate", parents=[common], help="witness separating an element from zero")
    p.add_argument("graph", help="graph text file")
    p.add_argument("element", help="element JSON file")
    p.add_argument("--family", required=True, choices=["irreducible", "nest", "upper"])
    p.add_argument("--emit", metavar="FILE", help="write the witness representation JSON here")
    p.add_argument("--loop-choice", metavar="V=E,...", help="designated loop overrides (upper family)")
    p.set_defaults(func=_cmd_separate)

    p = sub.add_parser("rep", parents=[common], help="build a representation and check its relations")
    p.add_argument("graph", help="graph text file")
    p.add_argument("kind", choices=["phi", "rho", "psi", "fock", "nnest"])
    p.add_argument("--cycle", metavar="E1,E2,...", help="cycle edges in walking order (phi)")
    p.add_argument("--path", metavar="SPEC", help="path edges in walking order, or vertex:NAME (rho, psi)")
    p.add_argument("--lambda-arg", metavar="T1,T2,...", help="unit-circle parameters as fractions of a turn")
    p.add_argument("--loop-choice", metavar="V=E,...", help="designated loop overrides (psi)")
    p.add_argument("--depth", type=int, default=2, help="truncation depth (fock)")
    p.add_argument("--prefix-len", type=int, default=4, help="walk length (nnest)")
    p.add_argument("--emit", metavar="FILE", help="also write the JSON payload here")
    p.set_defaults(func=_cmd_rep)

    p = sub.add_parser("recover", parents=[common], help="recover one path coefficient")
    p.add_argument("graph", help="graph text file")
    p.add_argument("element", help="element JSON file")
    p.add_argument("path", help="path edges in walking order, or vertex:NAME")
    p.add_argument("--family", required=True, choices=["irreducible", "nest", "upper"])
    p.add_argument("--loop-choice", metavar="V=E,...", help="designated loop overrides (upper family)")
    p.set_defaults(func=_cmd_recover)

    p = sub.add_parser("radical", parents=[common], help="radical generators and membership")
    p.add_argument("graph", help="graph text file")
    p.add_argument("--element", metavar="FILE", help="element JSON file to test for membership")
    p.set_defaults(func=_cmd_radical)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from_args(args)
        return args.func(args, cfg)
    except (GraphParseError, PathError, LimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EmptyInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GraphNestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
