"""Command-line interface for graph-dirac."""

import argparse
import json
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from graph_dirac.clifford import (
    CenterShape,
    DisjointShape,
    GluedPathsShape,
    PathShape,
    center_basis,
    center_dimension,
    center_oracle,
    glued_path_graph,
    predicted_center_dim,
    render_support,
    tree_central_support_check,
)
from graph_dirac.config import Settings
from graph_dirac.dimer import (
    count_matchings_brute,
    glued_tiling_brute,
    glued_tiling_count,
    gluing_identity_check,
    kasteleyn_tiling_count,
    lattice,
    parse_gluing_spec,
    partial_sums,
    tiling_closed,
    tiling_count,
)
from graph_dirac.evolution import (
    STATE_KIND_OF_FORM,
    FormKind,
    StateKind,
    StateVector,
    is_steady,
    quadratic_form,
    root_superset_check,
    time_series,
)
from graph_dirac.exceptions import GraphDiracError, IdentityViolationError
from graph_dirac.graphs import OrientedGraph, disjoint_union, load_graph, parse_graph, path_graph
from graph_dirac.linops import OPERATORS, kernel_basis, operator_matrix, spectrum
from graph_dirac.serializers import (
    format_complex,
    format_float,
    matrix_rows,
    render_matrix,
    save_time_series,
    write_time_series,
)
from graph_dirac.walks import (
    WalkElement,
    element_index,
    enumerate_signed_walks,
    render_walk,
    walk_count_matrix,
)
from schemas.evolution import EvolutionParams

logger = logging.getLogger(__name__)

STATE_KIND_OF_OPERATOR = {
    "even-laplacian": StateKind.VERTEX,
    "even-dirac": StateKind.VERTEX,
    "odd-laplacian": StateKind.EDGE,
    "odd-dirac": StateKind.EDGE,
    "incidence-dirac": StateKind.VERTEX_EDGE,
}


def setup_logging(verbose: bool = False) -> None:
    """Configure logging for the CLI."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(levelname)s: %(message)s",
    )


def _complex_list(text: str) -> list[complex]:
    try:
        return [complex(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {text}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _element(text: str) -> WalkElement:
    try:
        return WalkElement.parse(text)
    except GraphDiracError as e:
        raise argparse.ArgumentTypeError(e.message)


def _read_graph(source: str) -> OrientedGraph:
    if source == "-":
        return parse_graph(sys.stdin.read())
    return load_graph(Path(source))


def _settings(args: argparse.Namespace) -> Settings:
    return Settings.load(args.config).override(
        hbar=getattr(args, "hbar", None),
        tol=getattr(args, "tol", None),
        seed=getattr(args, "seed", None),
        samples=getattr(args, "samples", None),
    )


def show_operator(args: argparse.Namespace) -> int:
    """Execute the ops command."""
    settings = _settings(args)
    g = _read_graph(args.input)
    matrix = operator_matrix(args.op, g)

    if args.json:
        rows, cols = matrix.shape
        print(
            json.dumps(
                {"operator": args.op, "rows": rows, "cols": cols, "matrix": matrix_rows(matrix)}
            )
        )
    else:
        print(render_matrix(matrix, settings.float_digits))
    return 0


def show_spectrum(args: argparse.Namespace) -> int:
    """Execute the spectrum command."""
    settings = _settings(args)
    g = _read_graph(args.input)
    decomposition = spectrum(
        operator_matrix(args.op, g),
        method=args.method,
        tol=settings.jacobi_tol,
        max_sweeps=settings.max_sweeps,
    )

    if args.json:
        payload = {
            "eigenvalues": [float(x) for x in decomposition.eigenvalues],
            "eigenvectors": matrix_rows(decomposition.eigenvectors),
        }
        print(json.dumps(payload))
    else:
        for value in decomposition.eigenvalues:
            print(format_float(float(value), settings.float_digits))
    return 0


def show_kernel(args: argparse.Namespace) -> int:
    """Execute the kernel command."""
    settings = _settings(args)
    g = _read_graph(args.input)
    matrix = operator_matrix(args.op, g)
    basis = kernel_basis(matrix, settings.tol, max_sweeps=settings.max_sweeps)

    if args.json:
        vectors = [[float(x) for x in vector] for vector in basis]
        print(json.dumps({"dimension": len(basis), "basis": vectors}))
    else:
        print(f"dimension {len(basis)}")
        for vector in basis:
            print(",".join(format_float(float(x), settings.float_digits) for x in vector))
    return 0


def _evolution_params(args: argparse.Namespace, settings: Settings) -> EvolutionParams:
    try:
        return EvolutionParams.linspace(args.t_start, args.t_stop, args.steps, settings.hbar)
    except ValidationError as e:
        details = "; ".join(err["msg"] for err in e.errors())
        raise GraphDiracError(f"invalid time grid: {details}") from e


def run_evolution(args: argparse.Namespace) -> int:
    """Execute the evolve command."""
    settings = _settings(args)
    g = _read_graph(args.input)
    kind = STATE_KIND_OF_OPERATOR[args.op]
    psi0 = StateVector.for_graph(g, kind, args.state)
    params = _evolution_params(args, settings)
    rows = time_series(operator_matrix(args.op, g), psi0, params, method=args.method)

    if args.output:
        save_time_series(rows, args.output, settings.float_digits)
        logger.info(f"Wrote {len(rows)} rows to {args.output}")
    else:
        write_time_series(rows, sys.stdout, settings.float_digits)
    return 0


def check_steady(args: argparse.Namespace) -> int:
    """Execute the steady command."""
    settings = _settings(args)
    g = _read_graph(args.input)
    psi = StateVector.for_graph(g, STATE_KIND_OF_OPERATOR[args.op], args.state)
    steady = is_steady(operator_matrix(args.op, g), psi, settings.tol)
    if args.json:
        print(json.dumps({"operator": args.op, "steady": steady}))
    else:
        print("steady" if steady else "not steady")
    return 0


def evaluate_form(args: argparse.Namespace) -> int:
    """Execute the qform command."""
    settings = _settings(args)
    g = _read_graph(args.input)

    if args.root_check:
        report = root_superset_check(g, settings.samples, seed=settings.seed, tol=settings.tol)
        if args.json:
            print(report.model_dump_json())
        else:
            largest = format_float(report.max_abs_value, settings.float_digits)
            print(f"{report.kernel_side + report.cycle_side} samples are roots (max |q| {largest})")
        return 0

    kind = FormKind(args.kind)
    state_kind = STATE_KIND_OF_FORM[kind]
    value = quadratic_form(kind, g, StateVector.for_graph(g, state_kind, args.state))
    if args.json:
        print(json.dumps({"kind": kind.value, "value": [value.real, value.imag]}))
    else:
        print(format_complex(value, settings.float_digits))
    return 0


def count_walks(args: argparse.Namespace) -> int:
    """Execute the walks command."""
    g = _read_graph(args.input)
    walks = enumerate_signed_walks(g, args.start, args.end, args.k)
    total = sum(walk.sign for walk in walks)

    entry = walk_count_matrix(g, args.k)[element_index(g, args.start), element_index(g, args.end)]
    if int(entry) != total:
        raise IdentityViolationError(
            f"signed walk sum {total} differs from the operator power entry {entry}",
            lhs=total,
            rhs=int(entry),
        )

    if args.json:
        payload = {
            "walks": [
                {"steps": [str(step) for step in walk.steps], "sign": walk.sign}
                for walk in walks
            ],
            "signed_sum": total,
        }
        print(json.dumps(payload))
    else:
        for walk in walks:
            print(render_walk(walk))
        print(f"signed sum {total}")
    return 0


def count_tilings(args: argparse.Namespace) -> int:
    """Execute the dimer count command."""
    if args.method == "recurrence":
        print(tiling_count(args.rows, args.cols))
    elif args.method == "closed":
        print(format_float(tiling_closed(args.rows, args.cols)))
    elif args.method == "brute":
        print(count_matchings_brute(lattice(args.rows, args.cols).graph))
    else:
        print(kasteleyn_tiling_count(lattice(args.rows, args.cols)))
    return 0


def count_glued(args: argparse.Namespace) -> int:
    """Execute the dimer glue command."""
    spec = parse_gluing_spec(
        {"k": args.rows, "m": args.m, "n": args.n, "s": args.shift, "bridges": args.bridges}
    )
    if args.method == "brute":
        print(glued_tiling_brute(spec))
    else:
        print(glued_tiling_count(spec))
    return 0


def check_gluing_identity(args: argparse.Namespace) -> int:
    """Execute the dimer identity command."""
    report = gluing_identity_check(args.rows, args.m, args.n)
    if args.json:
        print(report.model_dump_json())
        return 0
    for term in report.terms:
        labels = ",".join(str(b) for b in term.bridges)
        print(f"B={{{labels}}} {term.count}")
    print(f"total {report.total} = T_{report.k}({report.m + report.n}) {report.expected}")
    return 0


def check_partial_sum(args: argparse.Namespace) -> int:
    """Execute the dimer sums command."""
    report = partial_sums(args.rows, args.variant, args.n)
    if args.json:
        print(report.model_dump_json())
    else:
        print(f"direct {report.direct} closed {report.closed}")
    return 0


def show_center(args: argparse.Namespace) -> int:
    """Execute the clifford center command."""
    g = _read_graph(args.input)
    supports = center_oracle(g) if args.oracle else center_basis(g)
    logger.debug(f"Center dimension {len(supports)}")

    if args.json:
        payload = {
            "dimension": len(supports),
            "supports": [[v for v in range(g.vertex_count) if s >> v & 1] for s in supports],
        }
        print(json.dumps(payload))
    else:
        print("; ".join(render_support(s) for s in supports))
    return 0


def predict_center(args: argparse.Namespace) -> int:
    """Execute the clifford predict command."""
    shape: CenterShape
    if args.shape == "path":
        shape = PathShape(args.n)
    elif args.shape == "glued":
        if args.k is None:
            logger.error("-k is required for the glued shape")
            return 1
        shape = GluedPathsShape(args.n, args.m, args.k)
    else:
        shape = DisjointShape((PathShape(args.n), PathShape(args.m)))

    predicted = predicted_center_dim(shape)
    if not args.check:
        print(predicted)
        return 0

    if isinstance(shape, PathShape):
        graph = path_graph(args.n)
    elif isinstance(shape, GluedPathsShape):
        graph = glued_path_graph(args.n, args.m, args.k)
    else:
        graph = disjoint_union(path_graph(args.n), path_graph(args.m))
    computed = center_dimension(graph)
    print(f"predicted {predicted} computed {computed}")
    return 0 if predicted == computed else 1


def check_tree_support(args: argparse.Namespace) -> int:
    """Execute the clifford tree command."""
    g = _read_graph(args.input)
    support = [label - 1 for label in args.support]
    violated = tree_central_support_check(g, support)
    if violated:
        print(" ".join(clause.value for clause in violated))
    else:
        print("central")
    return 0


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI.

    Args:
        argv: Command-line arguments (defaults to sys.argv[1:])

    Returns:
        Exit code
    """
    # Shared parent parser so -v and --config follow the subcommand name.
    common_parser = argparse.ArgumentParser(add_help=False)
    common_parser.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Enable verbose output",
    )
    common_parser.add_argument(
        "--config",
        type=Path,
        default=None,
        help="Settings file (default: ./graph-dirac.yaml when present)",
    )

    graph_parser = argparse.ArgumentParser(add_help=False)
    graph_parser.add_argument(
        "--input",
        type=str,
        required=True,
        help="Graph JSON document, or - for stdin",
    )
    graph_parser.add_argument(
        "--json",
        action="store_true",
        help="Print machine-readable JSON",
    )

    parser = argparse.ArgumentParser(
        prog="graph-dirac",
        description="Laplace and Dirac operators, walks, tilings and Clifford algebras of graphs",
    )

    subparsers = parser.add_subparsers(
        title="commands",
        description="Available commands",
        dest="command",
    )

    op_names = sorted(OPERATORS)

    ops_parser = subparsers.add_parser(
        "ops",
        parents=[common_parser, graph_parser],
        help="Print an operator matrix",
    )
    ops_parser.add_argument("--op", choices=op_names, required=True, help="Operator name")
    ops_parser.set_defaults(func=show_operator)

    spectrum_parser = subparsers.add_parser(
        "spectrum",
        parents=[common_parser, graph_parser],
        help="Print the eigenvalues of a symmetric operator",
    )
    spectrum_parser.add_argument("--op", choices=op_names, required=True, help="Operator name")
    spectrum_parser.add_argument(
        "--method",
        choices=["jacobi", "lapack"],
        default="jacobi",
        help="Eigensolver (default: jacobi)",
    )
    spectrum_parser.set_defaults(func=show_spectrum)

    kernel_parser = subparsers.add_parser(
        "kernel",
        parents=[common_parser, graph_parser],
        help="Print an orthonormal kernel basis",
    )
    kernel_parser.add_argument("--op", choices=op_names, required=True, help="Operator name")
    kernel_parser.add_argument(
        "--tol", type=_positive_float, default=None, help="Relative kernel tolerance"
    )
    kernel_parser.set_defaults(func=show_kernel)

    evolve_parser = subparsers.add_parser(
        "evolve",
        parents=[common_parser, graph_parser],
        help="Write the time series of an evolving state as CSV",
    )
    evolve_parser.add_argument(
        "--op", choices=sorted(STATE_KIND_OF_OPERATOR), required=True, help="Generator"
    )
    evolve_parser.add_argument(
        "--state", type=_complex_list, required=True, help="Initial values, e.g. 1,0,1j"
    )
    evolve_parser.add_argument("--t-start", type=float, default=0.0, help="First time")
    evolve_parser.add_argument("--t-stop", type=float, default=10.0, help="Last time")
    evolve_parser.add_argument("--steps", type=int, default=101, help="Number of grid points")
    evolve_parser.add_argument(
        "--hbar", type=_positive_float, default=None, help="Reduced Planck constant"
    )
    evolve_parser.add_argument(
        "--method",
        choices=["spectral", "taylor"],
        default="spectral",
        help="Propagator (default: spectral)",
    )
    evolve_parser.add_argument("--output", type=Path, default=None, help="CSV file to write")
    evolve_parser.set_defaults(func=run_evolution)

    steady_parser = subparsers.add_parser(
        "steady",
        parents=[common_parser, graph_parser],
        help="Check whether a state is a steady state",
    )
    steady_parser.add_argument(
        "--op", choices=sorted(STATE_KIND_OF_OPERATOR), required=True, help="Generator"
    )
    steady_parser.add_argument("--state", type=_complex_list, required=True, help="Values")
    steady_parser.add_argument(
        "--tol", type=_positive_float, default=None, help="Relative tolerance"
    )
    steady_parser.set_defaults(func=check_steady)

    qform_parser = subparsers.add_parser(
        "qform",
        parents=[common_parser, graph_parser],
        help="Evaluate a quadratic form, or sample roots of the incidence form",
    )
    qform_parser.add_argument(
        "--kind", choices=[k.value for k in FormKind], default="incidence", help="Form"
    )
    qform_mode = qform_parser.add_mutually_exclusive_group(required=True)
    qform_mode.add_argument("--state", type=_complex_list, help="Values")
    qform_mode.add_argument(
        "--root-check", action="store_true", help="Sample both families of roots"
    )
    qform_parser.add_argument("--samples", type=int, default=None, help="Samples per family")
    qform_parser.add_argument("--seed", type=int, default=None, help="Sampling seed")
    qform_parser.add_argument(
        "--tol", type=_positive_float, default=None, help="Relative tolerance"
    )
    qform_parser.set_defaults(func=evaluate_form)

    walks_parser = subparsers.add_parser(
        "walks",
        parents=[common_parser, graph_parser],
        help="List signed vertex-edge walks",
    )
    walks_parser.add_argument(
        "--from", dest="start", type=_element, required=True, help="Start, e.g. v1"
    )
    walks_parser.add_argument(
        "--to", dest="end", type=_element, required=True, help="End, e.g. e1"
    )
    walks_parser.add_argument("-k", type=int, required=True, help="Number of steps")
    walks_parser.set_defaults(func=count_walks)

    dimer_parser = subparsers.add_parser("dimer", help="Domino tilings of k x n lattices")
    dimer_commands = dimer_parser.add_subparsers(title="dimer commands", dest="dimer_command")

    count_parser = dimer_commands.add_parser(
        "count", parents=[common_parser], help="Tilings of a k x n rectangle"
    )
    count_parser.add_argument("--rows", type=int, required=True, help="Height k")
    count_parser.add_argument("--cols", type=_non_negative_int, required=True, help="Width n")
    count_parser.add_argument(
        "--method",
        choices=["recurrence", "closed", "brute", "kasteleyn"],
        default="recurrence",
        help="How to count (default: recurrence)",
    )
    count_parser.set_defaults(func=count_tilings)

    glue_parser = dimer_commands.add_parser(
        "glue", parents=[common_parser], help="Tilings of two lattices glued by forced bridges"
    )
    glue_parser.add_argument("--rows", type=int, required=True, help="Height k")
    glue_parser.add_argument("-m", type=int, required=True, help="Width of the left lattice")
    glue_parser.add_argument("-n", type=int, required=True, help="Width of the right lattice")
    glue_parser.add_argument("--shift", type=int, default=0, help="Downward shift s")
    glue_parser.add_argument(
        "--bridges", type=_int_list, default=[], help="1-based bridge labels, e.g. 1,2"
    )
    glue_parser.add_argument(
        "--method", choices=["formula", "brute"], default="formula", help="How to count"
    )
    glue_parser.set_defaults(func=count_glued)

    identity_parser = dimer_commands.add_parser(
        "identity", parents=[common_parser], help="Split T_k(m+n) over the seam"
    )
    identity_parser.add_argument("--rows", type=int, required=True, help="Height k")
    identity_parser.add_argument("-m", type=int, required=True, help="Left width")
    identity_parser.add_argument("-n", type=int, required=True, help="Right width")
    identity_parser.add_argument("--json", action="store_true", help="Print JSON")
    identity_parser.set_defaults(func=check_gluing_identity)

    sums_parser = dimer_commands.add_parser(
        "sums", parents=[common_parser], help="Check a partial-sum identity"
    )
    sums_parser.add_argument("--rows", type=int, required=True, help="Height k")
    sums_parser.add_argument(
        "--variant",
        choices=["even-index", "consecutive", "alternating"],
        required=True,
        help="Which sum",
    )
    sums_parser.add_argument("-n", type=_non_negative_int, required=True, help="Argument n")
    sums_parser.add_argument("--json", action="store_true", help="Print JSON")
    sums_parser.set_defaults(func=check_partial_sum)

    clifford_parser = subparsers.add_parser("clifford", help="Clifford graph algebra centers")
    clifford_commands = clifford_parser.add_subparsers(
        title="clifford commands", dest="clifford_command"
    )

    center_parser = clifford_commands.add_parser(
        "center", parents=[common_parser, graph_parser], help="List the central monomials"
    )
    center_parser.add_argument(
        "--oracle", action="store_true", help="Test commutation directly (up to 14 vertices)"
    )
    center_parser.set_defaults(func=show_center)

    predict_parser = clifford_commands.add_parser(
        "predict", parents=[common_parser], help="Predicted center dimension of a shape"
    )
    predict_parser.add_argument(
        "--shape", choices=["path", "glued", "disjoint"], required=True, help="Shape"
    )
    predict_parser.add_argument("-n", type=int, required=True, help="Length of the first path")
    predict_parser.add_argument("-m", type=int, default=1, help="Length of the second path")
    predict_parser.add_argument("-k", type=int, default=None, help="Attach vertex (1-based)")
    predict_parser.add_argument(
        "--check", action="store_true", help="Also compute the center of the built graph"
    )
    predict_parser.set_defaults(func=predict_center)

    tree_parser = clifford_commands.add_parser(
        "tree", parents=[common_parser, graph_parser], help="Tree centrality clauses"
    )
    tree_parser.add_argument(
        "--support", type=_int_list, required=True, help="1-based vertices, e.g. 1,3,5"
    )
    tree_parser.set_defaults(func=check_tree_support)

    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return 0
    if args.command == "dimer" and args.dimer_command is None:
        dimer_parser.print_help()
        return 0
    if args.command == "clifford" and args.clifford_command is None:
        clifford_parser.print_help()
        return 0

    setup_logging(getattr(args, "verbose", False))
    try:
        return int(args.func(args))
    except GraphDiracError as e:
        logger.error(f"{args.command} failed: {e.message}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
