"""
Command-line front end.

    equifuse [-v] table   --m M [--ring d|c] [--json]
    equifuse [-v] smatrix --m M --which d|c-ee|c-ea [--json]
    equifuse [-v] coeff   --m M --i I --j J --k K [--formula ...] [--tol T] [--json]
    equifuse [-v] verify  --m M [--tol T] [--json]

Exit codes: 0 all checks pass, 1 a check failed, 2 invalid invocation.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import dataclass

from . import __version__
from .arith import Tolerance
from .exceptions import (
    CheckFailure,
    EquifuseException,
    InvalidParameter,
    ResidualError,
    UnsupportedCase,
)
from .extended_algebra import build_s_c
from .formulas import ext_coeff_a, ext_coeff_e, verify_all
from .payloads import Payload
from .ring_solver import CLabel, build_ring
from .types import Command, Formula, OutputFormat, RingKind, SBlock
from .utils import is_close
from .verlinde_d import ModularDataD, fusion_coeff_n, verlinde_value

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


@dataclass(frozen=True)
class CliConfig:
    command: Command
    m: int
    tolerance: float = 1e-9
    format: OutputFormat = OutputFormat.TEXT
    ring: RingKind = RingKind.C
    which: SBlock | None = None
    i: str | None = None
    j: str | None = None
    k: str | None = None
    formula: Formula = Formula.ORACLE

    def __post_init__(self):
        if int(self.m) != self.m or self.m < 2:
            raise InvalidParameter("m >= 2", self.m)
        if self.m % 2:
            raise UnsupportedCase(
                "m={0} is odd; only delta = 4m with 8 | delta is covered".format(self.m)
            )
        if not self.tolerance > 0:
            raise InvalidParameter("a positive tolerance", self.tolerance)
        if self.command is Command.SMATRIX and self.which is None:
            raise InvalidParameter("--which d|c-ee|c-ea", None)
        if self.command is Command.COEFF and None in (self.i, self.j, self.k):
            raise InvalidParameter("--i, --j and --k", (self.i, self.j, self.k))

    @property
    def kappa(self) -> int:
        return 4 * self.m + 2

    @property
    def tol(self) -> Tolerance:
        return Tolerance(self.tolerance)

    @property
    def json(self) -> bool:
        return self.format is OutputFormat.JSON

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> CliConfig:
        return cls(
            command=Command(args.command),
            m=args.m,
            tolerance=getattr(args, "tol", 1e-9),
            format=OutputFormat.JSON if args.json else OutputFormat.TEXT,
            ring=RingKind(getattr(args, "ring", "c")),
            which=SBlock(args.which) if getattr(args, "which", None) else None,
            i=getattr(args, "i", None),
            j=getattr(args, "j", None),
            k=getattr(args, "k", None),
            formula=Formula(getattr(args, "formula", "oracle")),
        )


def _format_sum(terms: list[tuple[str, int]]) -> str:
    parts = [name if mult == 1 else "{0} {1}".format(mult, name) for name, mult in terms]
    return " + ".join(parts) if parts else "0"


def cmd_table(config: CliConfig) -> int:
    if config.ring is RingKind.D:
        data = ModularDataD.for_m(config.m)
        if config.json:
            print(Payload.d_table(config.m, data, config.tolerance))
            return EXIT_OK
        for i in range(data.rank):
            for j in range(data.rank):
                terms = [
                    ("V{0}".format(k), int(data.n_tensor[i, j, k]))
                    for k in range(data.rank)
                    if data.n_tensor[i, j, k]
                ]
                print("V{0} x V{1} = {2}".format(i, j, _format_sum(terms)))
        return EXIT_OK

    ring = build_ring(config.m)
    if config.json:
        print(Payload.ring_table(ring, config.tolerance))
        return EXIT_OK
    for x in ring.labels:
        for y in ring.labels:
            terms = [(z.name, mult) for z, mult in sorted(ring.product(x, y).items())]
            print("{0} x {1} = {2}".format(x, y, _format_sum(terms)))
    return EXIT_OK


def _block(config: CliConfig):
    d_data = ModularDataD.for_m(config.m)
    if config.which is SBlock.D:
        labels = [str(i) for i in range(d_data.rank)]
        return labels, labels, d_data.s
    ext = build_s_c(build_ring(config.m), d_data, config.tol)
    if config.which is SBlock.C_EE:
        labels = [x.name for x in ext.ee_labels]
        return labels, labels, ext.s_ee
    return [x.name for x in ext.ea_rows], [x.name for x in ext.ea_cols], ext.s_ea


def cmd_smatrix(config: CliConfig) -> int:
    rows, cols, matrix = _block(config)
    if config.json:
        print(
            Payload.smatrix(
                config.m, config.kappa, config.tolerance, config.which, rows, cols, matrix
            )
        )
        return EXIT_OK
    width = 13
    print(" " * 6 + "".join(col.rjust(width) for col in cols))
    for a, row in enumerate(rows):
        values = "".join("{0:.9f}".format(matrix[a, b]).rjust(width) for b in range(len(cols)))
        print(row.ljust(6) + values)
    return EXIT_OK


def _parse_index(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise InvalidParameter("an integer label for the verlinde formula", text)


def cmd_coeff(config: CliConfig) -> int:
    tol = config.tol
    formula = config.formula
    if formula is Formula.VERLINDE:
        data = ModularDataD.for_m(config.m)
        i, j, k = (_parse_index(text) for text in (config.i, config.j, config.k))
        value = verlinde_value(i, j, k, data)
        oracle = fusion_coeff_n(i, j, k, data)
        names = [str(i), str(j), str(k)]
    else:
        ring = build_ring(config.m)
        labels = [CLabel.parse(text, config.m) for text in (config.i, config.j, config.k)]
        names = [label.name for label in labels]
        oracle = int(ring.l_tensor[tuple(ring.position(label) for label in labels)])
        if formula is Formula.ORACLE:
            value = float(oracle)
        else:
            ext = build_s_c(ring, ModularDataD.for_m(config.m), tol)
            evaluate = ext_coeff_e if formula is Formula.EXT_E else ext_coeff_a
            value = evaluate(*labels, ext, tol, check=False)

    residual = abs(value - oracle)
    if config.json:
        print(
            Payload.coeff(
                config.m, config.kappa, config.tolerance, formula, *names, value, oracle
            )
        )
    else:
        print(
            "L^{2}_({0},{1}) = {3:.12g} [{4}] oracle {5}".format(
                *names, value, formula.value, oracle
            )
        )
    if not is_close(value, oracle, tol.eps):
        log.warning("%s coefficient differs from the oracle by %.3e", formula.value, residual)
        return EXIT_FAILED
    return EXIT_OK


def cmd_verify(config: CliConfig) -> int:
    report = verify_all(config.m, config.tol)
    if config.json:
        print(Payload.verify(config.m, config.kappa, report))
    else:
        for check in report:
            status = "PASS" if check.passed else "FAIL"
            line = "{0} {1:<22} {2:.3e}".format(status, check.name, check.max_residual)
            if check.detail:
                line += "  ({0})".format(check.detail)
            print(line)
        print(
            "{0} of {1} checks passed for m={2}, kappa={3}".format(
                len(report) - len(report.failures()), len(report), config.m, config.kappa
            )
        )
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    Command.TABLE: cmd_table,
    Command.SMATRIX: cmd_smatrix,
    Command.COEFF: cmd_coeff,
    Command.VERIFY: cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equifuse",
        description="Fusion rules and s-matrices of the type D quantum subgroup of rep U_q(sl2)",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true", help="Log debug output to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(command: Command, help_text: str) -> argparse.ArgumentParser:
        s = sub.add_parser(command.value, help=help_text)
        s.add_argument("--m", type=int, required=True, help="Level delta = 4m, m even")
        s.add_argument("--json", action="store_true", help="Emit JSON output")
        return s

    s = common(Command.TABLE, "Print the fusion table of C (or of D with --ring d)")
    s.add_argument("--ring", choices=[kind.value for kind in RingKind], default="c")

    s = common(Command.SMATRIX, "Print an s-matrix block")
    s.add_argument("--which", choices=[block.value for block in SBlock], required=True)

    s = common(Command.COEFF, "Evaluate one fusion coefficient")
    s.add_argument("--i", required=True, help="Label: X3, 3, X+, +, X-, -")
    s.add_argument("--j", required=True)
    s.add_argument("--k", required=True)
    s.add_argument(
        "--formula", choices=[formula.value for formula in Formula], default="oracle"
    )
    s.add_argument("--tol", type=float, default=1e-9, help="Tolerance (default 1e-9)")

    s = common(Command.VERIFY, "Run the verification suite")
    s.add_argument("--tol", type=float, default=1e-9, help="Tolerance (default 1e-9)")
    return parser


def configure_logging(verbose: bool):
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    configure_logging(args.verbose)

    try:
        config = CliConfig.from_args(args)
    except EquifuseException as exc:
        print("error: {0}".format(exc), file=sys.stderr)
        return EXIT_USAGE

    try:
        return COMMANDS[config.command](config)
    except (CheckFailure, ResidualError) as exc:
        print("check failed: {0}".format(exc), file=sys.stderr)
        return EXIT_FAILED
    except EquifuseException as exc:
        print("error: {0}".format(exc), file=sys.stderr)
        return EXIT_USAGE
