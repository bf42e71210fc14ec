# quotfib/cli.py
"""
Command Line
============

quotfib <subcommand> [options]

Every subcommand builds a Report (inputs, structured results, PASS/FAIL
verdicts), prints its text rendering to stdout and, with --json PATH,
writes the JSON form. Exit status: 0 when every verdict passes, 1 when
any fails, 2 on a usage error. Logging goes to stderr.
"""

from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence
import argparse
import logging
import os
import sys

from pydantic import ValidationError

from .core import BUDGET_ENV_VAR, DEFAULT_SEED, QuotfibError, Verdict
from .algebra import FieldDescriptor, TruncatedPoly, parse_field
from .modules import ModuleType, SubmoduleBasis, chart_transition, classify_type, cyclic_kernel
from .census import (
    census,
    closed_form_count,
    quadric_cone_count,
    quadric_cone_decomposition,
    stratum_count,
    strata_dimension_table,
)
from .pairs import (
    DegreeProfile,
    FormMatrix,
    PairShape,
    cokernel_divisor,
    det_divisor,
    deg3_invariant,
    edge_normal_form,
    equivalent,
    kernel_consistency,
    pair_invariant,
)
from .checks import CHECK_MODULES, load_checks
from .checks.kernel_oracle import brute_force_kernel
from .session import Report, ReportRunner, ReportSession, RunConfig, write_report

logger = logging.getLogger(__name__)

# brute-force kernel comparison is attempted up to this many candidate pairs (f, g)
KERNEL_ORACLE_LIMIT = 10 ** 6


class UsageError(Exception):
    """Inputs that parse but do not make sense together."""


# ================================================================== Argument parsing

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="json_path", metavar="PATH", help="Also write the report as JSON")
    common.add_argument("--verbose", action="store_true", help="Log progress (INFO) to stderr")
    common.add_argument("--debug", action="store_true", help="Log every step (DEBUG) to stderr")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="Seed for randomized checks")
    common.add_argument("--budget", type=int, help=f"Enumeration budget (overrides {BUDGET_ENV_VAR})")
    common.add_argument("--golden", dest="golden_dir", metavar="DIR", help="Directory of golden files")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="quotfib",
        description="Exact computations and finite-field oracles for stable pairs on P^1.",
    )
    sub = parser.add_subparsers(dest="subcommand", metavar="SUBCOMMAND")
    sub.required = True

    p = sub.add_parser("census", parents=[common], help="Count t-invariant subspaces over F_q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--shards", type=int, default=1, help="Worker processes")

    p = sub.add_parser("chart-equations", parents=[common], help="Invariance equations on the standard chart")
    p.add_argument("--n", type=int, default=3)

    p = sub.add_parser("phi", parents=[common], help="The birational involution of P^3")
    p.add_argument("--check-involution", action="store_true")
    p.add_argument("--pullbacks", action="store_true")
    p.add_argument("--ledger", action="store_true")

    p = sub.add_parser("kernel", parents=[common], help="Kernel of (f, g) -> f*e + g*h mod t^n")
    p.add_argument("--e", required=True, metavar="EXPR")
    p.add_argument("--h", required=True, metavar="EXPR")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, help="Work over F_q instead of QQ")

    p = sub.add_parser("transition", parents=[common], help="U-to-V chart transition m(t) -> 1/m(t)")
    p.add_argument("--coords", required=True, metavar="LIST", help="Comma-separated coefficients m1,...,mn")
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int, help="Work over F_q instead of QQ")

    p = sub.add_parser("normal-form", parents=[common], help="Invariant and normal form of a stable pair")
    p.add_argument("--shape", choices=[shape.value for shape in PairShape], required=True)
    p.add_argument("--matrix", required=True, metavar="PATH", help="One row per line, entries comma-separated")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--field", default="QQ", help="QQ or a prime")

    p = sub.add_parser("quadric-count", parents=[common], help="F_q-points of the quadric cone xz + y^2")
    p.add_argument("--q", type=int, required=True)

    p = sub.add_parser("strata", parents=[common], help="Stratum dimensions of the module-type stratification")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, help="Also compare census strata over F_q (rank 2)")

    p = sub.add_parser("reproduce-paper", parents=[common], help="Run every acceptance check")
    p.add_argument("--only", action="append", choices=CHECK_MODULES, metavar="CHECK",
                   help="Run only this check (repeatable)")
    p.add_argument("--shards", type=int, default=1, help="Worker processes for the census check")

    return parser


def configure_logging(verbose: bool = False, debug: bool = False):
    level = logging.DEBUG if debug else logging.INFO if verbose else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def run_config_from(args: argparse.Namespace) -> RunConfig:
    q = getattr(args, "q", None)
    field = getattr(args, "field", None) or (str(q) if q else "QQ")
    return RunConfig(
        subcommand=args.subcommand,
        field=field,
        n=getattr(args, "n", None),
        r=getattr(args, "r", None),
        q=q,
        shards=getattr(args, "shards", 1),
        seed=args.seed,
        json_path=args.json_path,
        golden_dir=args.golden_dir,
        budget=args.budget,
    )


# ================================================================== Subcommands

def _run_checks(session: ReportSession, names: Sequence[str], overrides: Dict):
    runner = ReportRunner(load_checks(names))
    for result in runner.run_all(names, overrides):
        session.add_check_result(result)


def cmd_census(args, config: RunConfig, session: ReportSession):
    report = census(config.n, config.r, config.q, shards=config.shards, budget=config.budget)
    verdicts = [Verdict.compare("strata sum to the total", report.total, sum(report.by_type.values()))]
    if config.r == 2:
        verdicts.append(Verdict.compare("closed form", closed_form_count(config.n, config.q), report.total))
        for m in range(config.n // 2 + 1):
            module_type = ModuleType.of(*(part for part in (config.n - m, m) if part))
            verdicts.append(Verdict.compare(f"stratum {module_type}", stratum_count(config.n, m, config.q),
                                            report.count(module_type)))
    session.add_section("census", report.to_report(), verdicts)


def cmd_chart_equations(args, config: RunConfig, session: ReportSession):
    names = ["chart_equations"] + (["residual_hypersurface"] if config.n == 3 else [])
    _run_checks(session, names, {"n": config.n,
                                 "golden_dir": config.golden_dir, "seed": config.seed})


def cmd_phi(args, config: RunConfig, session: ReportSession):
    selected = [name for flag, name in ((args.check_involution, "involution"),
                                        (args.pullbacks, "pullback_table"),
                                        (args.ledger, "discrepancy_ledger")) if flag]
    names = selected or ["involution", "pullback_table", "discrepancy_ledger"]
    _run_checks(session, names, {"golden_dir": config.golden_dir, "seed": config.seed})


def cmd_kernel(args, config: RunConfig, session: ReportSession):
    field = parse_field(config.field)
    n = config.n
    if n < 1:
        raise UsageError("--n must be at least 1")
    e = TruncatedPoly.parse(args.e, n, field)
    h = TruncatedPoly.parse(args.h, n, field)
    generator, basis = cyclic_kernel(e, h)
    verdicts = [
        Verdict.compare("kernel has length n", n, basis.dim),
        Verdict.check("kernel is t-invariant", basis.is_t_invariant()),
    ]
    data = {
        "e": str(e),
        "h": str(h),
        "generator": str(generator),
        "dim": basis.dim,
        "type": str(classify_type(basis)),
    }
    if field.is_prime_field and field.order ** (2 * n) <= KERNEL_ORACLE_LIMIT:
        q = field.order
        brute = SubmoduleBasis(n, 2, field, brute_force_kernel([c.value for c in e.coeffs],
                                                               [c.value for c in h.coeffs], q))
        verdicts.append(Verdict.check("matches the brute-force kernel", brute == basis))
    session.add_section("kernel", data, verdicts)


def _parse_coords(text: str, field: FieldDescriptor) -> List:
    try:
        return [field(Fraction(part.strip())) for part in text.split(",") if part.strip()]
    except ValueError as e:
        raise UsageError(f"Cannot read coordinates '{text}': {e}")


def cmd_transition(args, config: RunConfig, session: ReportSession):
    field = parse_field(config.field)
    m = _parse_coords(args.coords, field)
    if config.n is not None and config.n != len(m):
        raise UsageError(f"--n {config.n} but {len(m)} coordinates given")
    l = chart_transition(m, field)
    back = chart_transition(l, field)
    verdicts = [Verdict.compare("transition is an involution", [str(c) for c in m], [str(c) for c in back])]
    if len(m) == 2:
        formula = (m[0].inverse(), -m[1] / (m[0] * m[0]))
        verdicts.append(Verdict.compare("(1/m1, -m2/m1^2)", [str(c) for c in formula], [str(c) for c in l]))
    session.add_section("transition", {"m": [str(c) for c in m], "l": [str(c) for c in l]}, verdicts)


def _profile_for(args) -> DegreeProfile:
    if args.shape == PairShape.DEG3.value:
        return DegreeProfile.deg3()
    if args.r is None or args.n is None:
        raise UsageError("--shape edge needs --r and --n")
    return DegreeProfile.edge(args.r, args.n)


def cmd_normal_form(args, config: RunConfig, session: ReportSession):
    field = parse_field(config.field)
    profile = _profile_for(args)
    path = Path(args.matrix)
    if not path.is_file():
        raise UsageError(f"Matrix file {path} does not exist")
    mat = FormMatrix.from_text(path.read_text(encoding="utf-8"), profile, field)

    data = {"profile": str(profile), "matrix": str(mat)}
    verdicts = []
    if profile.shape == PairShape.EDGE:
        normal, invariant = edge_normal_form(mat, args.r, args.n)
        data["normal_form"] = str(normal)
        verdicts.append(Verdict.check("normal form lies in the same orbit class", equivalent(normal, mat)))
    else:
        invariant = deg3_invariant(mat)
    data["invariant"] = invariant.to_report()
    verdicts.append(Verdict.compare("invariant is recomputed unchanged", str(invariant), str(pair_invariant(mat))))

    if field.is_prime_field and mat.size == 2:
        try:
            data["det_divisor"] = [[list(point), length] for point, length in det_divisor(mat)]
            data["cokernel_divisor"] = [[list(point), length] for point, length in cokernel_divisor(mat)]
            verdicts.append(Verdict.check("cokernel divisor = det divisor", kernel_consistency(mat)))
        except QuotfibError as e:
            data["cokernel_divisor"] = None
            session.add_section("notes", [str(e)])
    session.add_section("normal_form", data, verdicts)


def cmd_quadric_count(args, config: RunConfig, session: ReportSession):
    q = config.q
    count = quadric_cone_count(q)
    decomposition = quadric_cone_decomposition(q)
    verdicts = [
        Verdict.compare("|Q_2(F_q)|", closed_form_count(2, q), count),
        Verdict.check("chart decomposition", decomposition.consistent),
    ]
    session.add_section("quadric", decomposition.model_dump(), verdicts)


def cmd_strata(args, config: RunConfig, session: ReportSession):
    table = strata_dimension_table(config.r, config.n)
    verdicts = [Verdict.compare("open stratum dimension", config.n * (config.r - 1),
                                table.dimension_of(ModuleType.of(config.n)))]
    session.add_section("strata", table.to_report(), verdicts)
    if config.q is not None and config.r == 2:
        report = census(config.n, 2, config.q, shards=config.shards, budget=config.budget)
        counts = []
        for m in range(config.n // 2 + 1):
            module_type = ModuleType.of(*(part for part in (config.n - m, m) if part))
            counts.append(Verdict.compare(f"stratum {module_type} over F_{config.q}",
                                          stratum_count(config.n, m, config.q), report.count(module_type)))
        session.add_section("census", report.to_report(), counts)


def _reproduce(session: ReportSession, config: RunConfig, only: Optional[Sequence[str]] = None):
    names = list(only) if only else list(CHECK_MODULES)
    _run_checks(session, names, {"seed": config.seed, "golden_dir": config.golden_dir, "shards": config.shards})


def cmd_reproduce_paper(args, config: RunConfig, session: ReportSession):
    _reproduce(session, config, args.only)


def reproduce_paper(only: Optional[Sequence[str]] = None, seed: int = DEFAULT_SEED,
                    golden_dir: Optional[str] = None, shards: int = 1) -> Report:
    """Every acceptance check (or the named ones) in one Report; a raising check becomes a FAIL entry."""
    config = RunConfig(subcommand="reproduce-paper", seed=seed, golden_dir=golden_dir, shards=shards)
    session = ReportSession(config)
    _reproduce(session, config, only)
    return session.finish()


COMMANDS: Dict[str, Callable] = {
    "census": cmd_census,
    "chart-equations": cmd_chart_equations,
    "phi": cmd_phi,
    "kernel": cmd_kernel,
    "transition": cmd_transition,
    "normal-form": cmd_normal_form,
    "quadric-count": cmd_quadric_count,
    "strata": cmd_strata,
    "reproduce-paper": cmd_reproduce_paper,
}


# ================================================================== Entry points

def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    """Parse, execute and report; returns the exit status."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    configure_logging(args.verbose, args.debug)
    try:
        config = run_config_from(args)
    except ValidationError as e:
        parser.print_usage(sys.stderr)
        print(f"quotfib {args.subcommand}: invalid arguments: {e}", file=sys.stderr)
        return 2
    if config.budget is not None:
        os.environ[BUDGET_ENV_VAR] = str(config.budget)

    session = ReportSession(config)
    try:
        COMMANDS[args.subcommand](args, config, session)
    except (UsageError, QuotfibError) as e:
        logger.debug(f"{args.subcommand} rejected its inputs", exc_info=True)
        parser.print_usage(sys.stderr)
        print(f"quotfib {args.subcommand}: {e}", file=sys.stderr)
        return 2

    report: Report = session.finish()
    write_report(report, config.json_path, stream=stdout)
    return report.exit_code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
