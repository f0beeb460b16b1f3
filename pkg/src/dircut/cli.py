"""Command-line front end.

Exit codes: 0 success or "true", 1 "false" or no witness, 2 input error,
3 resource limit.  Files are read from paths (``-`` is stdin); results go to
stdout and diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Optional, Sequence

from . import formats, sepstruct
from .dirmc import (
    DEFAULT_MAX_EXHAUSTIVE,
    DEFAULT_MAX_NODES,
    DirMcInstance,
    build_pathwidth2_decomposition,
    expand_weights,
    extract_hom_from_cutset,
    lift_hom_to_cutset,
    reduce_psi_to_dirmc,
    solve_dirmc_exact,
    validate_path_decomposition,
    verify_multicut,
)
from .errors import BoundViolation, ContractViolation, InputError, ResourceLimitError
from .graph import Digraph
from .psi import PsiInstance, gen_psi_planted, normalize_psi, planted_witness, solve_psi
from .roundtrip import PROBLEMS, run_roundtrip, sample_instances
from .stor import (
    DEFAULT_MAX_EDGES,
    StorInstance,
    extract_hom_from_orientation,
    lift_hom_to_orientation,
    reduce_psi_to_stor,
    solve_stor_exact,
    verify_orientation,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_LIMIT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage already; keep that but route through
    our own error type so ``run`` stays the single exit point."""

    def error(self, message: str):  # type: ignore[override]
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(path: str, kind: type):
    inst = formats.parse_instance(_read(path))
    if not isinstance(inst, kind):
        raise InputError(f"{path}: expected a {kind.__name__} file, got {type(inst).__name__}")
    return inst


def _psi(path: str) -> PsiInstance:
    inst = _load(path, PsiInstance)
    inst.require_normalized()
    return inst


def _write(text: str, path: Optional[str] = None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _say(line: str) -> None:
    print(line)


def _pattern(spec: str) -> list[tuple[int, int]]:
    try:
        return [tuple(int(x) for x in part.split("-")) for part in spec.split(",")]  # type: ignore[misc]
    except ValueError:
        raise InputError(f"bad pattern {spec!r}; expected edges like 1-2,2-3") from None


def _vertices(spec: str) -> list[int]:
    if not spec:
        return []
    try:
        return [int(x) for x in spec.split(",")]
    except ValueError:
        raise InputError(f"bad vertex list {spec!r}; expected ids like 0,3,5") from None


def _arcs_line(cut: Sequence[tuple[int, int]]) -> str:
    return " ".join(["arcs"] + [f"{u}>{v}" for u, v in cut])


def _context(args) -> sepstruct.CutContext:
    g = _load(args.graph, Digraph)
    g.check_vertex(args.s)
    g.check_vertex(args.t)
    return sepstruct.CutContext(g, args.s, args.t, args.k)


# -- subcommands ---------------------------------------------------------------


def cmd_gen_psi(args) -> int:
    pattern = _pattern(args.pattern)
    inst = gen_psi_planted(args.n, pattern, args.seed, noise=args.noise)
    _write(formats.serialize_instance(inst), args.out)
    if args.witness_out:
        _write(formats.serialize_hom(planted_witness(args.n, pattern, args.seed, noise=args.noise)), args.witness_out)
    return EXIT_OK


def cmd_normalize_psi(args) -> int:
    norm = normalize_psi(_load(args.psi, PsiInstance))
    if norm is None:
        _say("trivial-no")
        return EXIT_FALSE
    _write(formats.serialize_instance(norm))
    return EXIT_OK


def cmd_solve_psi(args) -> int:
    h = solve_psi(_psi(args.psi))
    if h is None:
        _say("no")
        return EXIT_FALSE
    _write(formats.serialize_hom(h))
    return EXIT_OK


def cmd_reduce_dirmc(args) -> int:
    _write(formats.serialize_instance(reduce_psi_to_dirmc(_psi(args.psi), args.M)))
    return EXIT_OK


def cmd_reduce_stor(args) -> int:
    _write(formats.serialize_instance(reduce_psi_to_stor(_psi(args.psi))))
    return EXIT_OK


def cmd_solve_dirmc(args) -> int:
    inst = _load(args.dirmc, DirMcInstance)
    cut = solve_dirmc_exact(
        inst, method=args.method, max_nodes=args.max_nodes, max_exhaustive=args.max_deletable
    )
    if cut is None:
        _say("no")
        return EXIT_FALSE
    _write(f"# weight {cut.weight} budget {inst.budget}\n" + formats.serialize_cut(cut.vertices))
    return EXIT_OK


def cmd_solve_stor(args) -> int:
    o = solve_stor_exact(_load(args.stor, StorInstance), max_edges=args.max_edges)
    if o is None:
        _say("no")
        return EXIT_FALSE
    _write(formats.serialize_orientation(o))
    return EXIT_OK


def cmd_verify_cut(args) -> int:
    inst = _load(args.dirmc, DirMcInstance)
    cut = inst.cutset(formats.parse_cut(_read(args.cut)))
    ok = verify_multicut(inst, cut)
    _say(f"{'valid' if ok else 'invalid'} weight {cut.weight} budget {inst.budget}")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_verify_orientation(args) -> int:
    ok = verify_orientation(_load(args.stor, StorInstance), formats.parse_orientation(_read(args.orient)))
    _say("valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_lift_dirmc(args) -> int:
    inst = _psi(args.psi)
    cut = lift_hom_to_cutset(inst, formats.parse_hom(_read(args.hom)), _load(args.dirmc, DirMcInstance))
    _write(f"# weight {cut.weight}\n" + formats.serialize_cut(cut.vertices))
    return EXIT_OK


def cmd_lift_stor(args) -> int:
    inst = _psi(args.psi)
    o = lift_hom_to_orientation(inst, formats.parse_hom(_read(args.hom)), _load(args.stor, StorInstance))
    _write(formats.serialize_orientation(o))
    return EXIT_OK


def cmd_extract_dirmc(args) -> int:
    reduced = _load(args.dirmc, DirMcInstance)
    cut = reduced.cutset(formats.parse_cut(_read(args.cut)))
    _write(formats.serialize_hom(extract_hom_from_cutset(reduced, cut, _psi(args.psi))))
    return EXIT_OK


def cmd_extract_stor(args) -> int:
    reduced = _load(args.stor, StorInstance)
    o = formats.parse_orientation(_read(args.orient))
    _write(formats.serialize_hom(extract_hom_from_orientation(reduced, o, _psi(args.psi))))
    return EXIT_OK


def cmd_expand_weights(args) -> int:
    expanded, origin = expand_weights(_load(args.dirmc, DirMcInstance))
    _write(formats.serialize_instance(expanded), args.out)
    if args.map_out:
        _write("".join(f"map {v} {o}\n" for v, o in enumerate(origin)), args.map_out)
    return EXIT_OK


def cmd_dpw_build(args) -> int:
    _write(formats.serialize_dpw(build_pathwidth2_decomposition(_load(args.dirmc, DirMcInstance))))
    return EXIT_OK


def cmd_dpw_check(args) -> int:
    inst = formats.parse_instance(_read(args.graph))
    if isinstance(inst, DirMcInstance):
        g = inst.graph
    elif isinstance(inst, Digraph):
        g = inst
    else:
        raise InputError("dpw-check needs a dirmc or digraph file")
    check = validate_path_decomposition(g, formats.parse_dpw(_read(args.dpw)))
    if not check.ok:
        _say(f"invalid: {check.violation}")
        return EXIT_FALSE
    _say(f"width {check.width}")
    return EXIT_OK


def cmd_enum_minimal_cuts(args) -> int:
    for cut in sepstruct.enum_minimal_cuts(_context(args), limit=args.limit):
        _say(_arcs_line(cut))
    return EXIT_OK


def cmd_enum_impsep(args) -> int:
    for cut in sepstruct.enum_important_separators(_context(args)):
        _say(_arcs_line(cut))
    return EXIT_OK


def cmd_audit_cutminimal(args) -> int:
    ctx = _context(args)
    participating = sepstruct.participating_arcs(ctx)
    core = sepstruct.cut_minimal_core(ctx)
    minimal = core.graph.n == ctx.graph.n
    _say(f"participating {len(participating)} of {len(ctx.graph.arcs)} arcs")
    _say(_arcs_line(participating))
    _say(f"core keeps {core.graph.n} of {ctx.graph.n} vertices: " + " ".join(map(str, core.kept)))
    _say(f"core s={core.context.s} t={core.context.t}")
    _say(f"{args.k}-cut-minimal: {'yes' if minimal else 'no'}")
    if args.core_out:
        _write(formats.serialize_instance(core.graph), args.core_out)
    return EXIT_OK if minimal else EXIT_FALSE


def cmd_wellinked_check(args) -> int:
    g = _load(args.graph, Digraph)
    res = sepstruct.is_well_linked(g, _vertices(args.terminals), max_size=args.max_terminals)
    if res.ok:
        _say("well-linked")
        return EXIT_OK
    xs, ys = res.violation
    _say(f"violation X={','.join(map(str, sorted(xs)))} Y={','.join(map(str, sorted(ys)))}")
    return EXIT_FALSE


def cmd_sunflower(args) -> int:
    flower = sepstruct.find_sunflower(formats.parse_family(_read(args.family)), args.target)
    if flower is None:
        _say("none")
        return EXIT_FALSE
    _say(" ".join(["core"] + [str(x) for x in sorted(flower.core)]))
    for petal in flower.petals:
        _say(" ".join(["petal"] + [str(x) for x in sorted(petal)]))
    return EXIT_OK


def cmd_bounds(args) -> int:
    b = sepstruct.bounds(args.k)
    _say(f"g={b.g} h={b.h}")
    return EXIT_OK


def cmd_roundtrip(args) -> int:
    report = run_roundtrip(
        args.problem,
        sample_instances(args.n, args.kmax, args.samples, args.seed),
        M=args.M,
        max_edges=args.max_edges,
    )
    _say(report.summary())
    return EXIT_OK if report.ok else EXIT_FALSE


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dircut", description="Reductions, exact solvers and cut structure tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn: Callable, help: str, *files: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, description=help)
        for f in files:
            p.add_argument(f)
        p.set_defaults(func=fn)
        return p

    p = add("gen-psi", cmd_gen_psi, "generate a planted PSI yes-instance")
    p.add_argument("--n", type=int, required=True, help="class size")
    p.add_argument("--pattern", default="1-2", help="pattern edges, e.g. 1-2,2-3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--noise", type=float, default=0.3, help="density of extra host edges")
    p.add_argument("--out")
    p.add_argument("--witness-out", help="also write the planted homomorphism here")

    add("normalize-psi", cmd_normalize_psi, "drop isolated pattern vertices, pad classes", "psi")
    add("solve-psi", cmd_solve_psi, "brute-force PSI", "psi")
    p = add("reduce-dirmc", cmd_reduce_dirmc, "PSI -> four-pair directed multicut", "psi")
    p.add_argument("--M", type=int, default=2)
    add("reduce-stor", cmd_reduce_stor, "PSI -> Steiner orientation", "psi")

    p = add("solve-dirmc", cmd_solve_dirmc, "exact minimum-weight multicut", "dirmc")
    p.add_argument("--method", choices=("branch", "exhaustive"), default="branch")
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES)
    p.add_argument("--max-deletable", type=int, default=DEFAULT_MAX_EXHAUSTIVE,
                   help="deletable-vertex limit for the exhaustive method")
    p = add("solve-stor", cmd_solve_stor, "exact Steiner orientation search", "stor")
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)

    add("verify-cut", cmd_verify_cut, "check a cutset", "dirmc", "cut")
    add("verify-orientation", cmd_verify_orientation, "check an orientation", "stor", "orient")
    add("lift-dirmc", cmd_lift_dirmc, "homomorphism -> cutset", "psi", "dirmc", "hom")
    add("lift-stor", cmd_lift_stor, "homomorphism -> orientation", "psi", "stor", "hom")
    add("extract-dirmc", cmd_extract_dirmc, "cutset -> homomorphism", "psi", "dirmc", "cut")
    add("extract-stor", cmd_extract_stor, "orientation -> homomorphism", "psi", "stor", "orient")

    p = add("expand-weights", cmd_expand_weights, "replace weights by unit-weight twins", "dirmc")
    p.add_argument("--out")
    p.add_argument("--map-out", help="write 'map <new> <original>' lines here")
    add("dpw-build", cmd_dpw_build, "width-2 path decomposition of a reduced instance", "dirmc")
    add("dpw-check", cmd_dpw_check, "validate a directed path decomposition", "graph", "dpw")

    def cut_cmd(name: str, fn: Callable, help: str, k_required: bool = True) -> argparse.ArgumentParser:
        p = add(name, fn, help, "graph")
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--k", type=int, required=k_required, default=None)
        return p

    p = cut_cmd("enum-minimal-cuts", cmd_enum_minimal_cuts, "inclusion-minimal s-t arc cuts of size <= k")
    p.add_argument("--limit", type=int, default=sepstruct.DEFAULT_ENUM_LIMIT)
    cut_cmd("enum-impsep", cmd_enum_impsep, "important s-t separators of size <= k")
    p = cut_cmd("audit-cutminimal", cmd_audit_cutminimal, "participating arcs and the k-cut-minimal core")
    p.add_argument("--core-out")

    p = add("wellinked-check", cmd_wellinked_check, "test a terminal set for well-linkedness", "graph")
    p.add_argument("--terminals", required=True, help="comma-separated vertex ids")
    p.add_argument("--max-terminals", type=int, default=sepstruct.DEFAULT_MAX_TERMINALS)

    p = add("sunflower", cmd_sunflower, "find a sunflower with more than --target petals", "family")
    p.add_argument("--target", type=int, required=True)

    p = add("bounds", cmd_bounds, "the anti-isolation bound g(k) and splitting size h(k)")
    p.add_argument("--k", type=int, required=True)

    p = add("roundtrip", cmd_roundtrip, "PSI oracle vs reduced-problem oracle on random instances")
    p.add_argument("--problem", choices=PROBLEMS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--M", type=int, default=2)
    p.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except ContractViolation as exc:
        print(f"not a valid witness: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except BoundViolation as exc:
        print(f"bound violated: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
