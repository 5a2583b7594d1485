#!/usr/bin/env python3
"""
qmod - Quantum modular arithmetic circuit synthesis and state-vector simulation
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .core.errors import QModError
from .core.operator_spec import OperatorKind, OperatorSpec
from .core.settings import EXHAUSTIVE_LIMIT
from .core.statevector import sample_distribution
from .core.textio import emit_text, write_circuit
from .synthesis.operators import MULT_IN_QQ_NAME, build_operator, describe
from .synthesis.shor import PeriodFindingConfig, find_period, peak_mass
from .util.helpers import format_histogram, format_residues, parse_residues
from .util.oracle import factor_from_period
from .util.report import FORMATS, parse_sweep, render, report_for, sweep
from .util.verify import input_index, run_basis_inputs, verify_operator
from .__version__ import __version__

EXIT_OK = 0
EXIT_UNVERIFIED = 1
EXIT_USAGE = 2

OPERATOR_NAMES = [kind.value for kind in OperatorKind] + [MULT_IN_QQ_NAME]


@dataclass(frozen=True)
class CliInvocation:
    """Parsed flags for one subcommand, checked before anything is simulated"""

    subcommand: str
    op: Optional[str] = None
    k: Optional[int] = None
    modulus: Optional[int] = None
    base: Optional[int] = None
    exponent_bits: Optional[int] = None
    inputs: Tuple[int, ...] = ()
    t: Optional[int] = None
    width: str = "standard"
    shots: int = 0
    seed: int = 0
    fmt: str = "json"
    sweep: Optional[Tuple[int, int]] = None
    verbose: bool = False
    describe: bool = False
    output: Optional[str] = None
    no_overwrite: bool = False

    @staticmethod
    def from_args(args: argparse.Namespace) -> "CliInvocation":
        raw_input = getattr(args, "input", None)
        raw_sweep = getattr(args, "sweep", None)
        return CliInvocation(
            subcommand=args.command,
            op=getattr(args, "op", None),
            k=getattr(args, "k", None),
            modulus=getattr(args, "modulus", None),
            base=getattr(args, "base", None),
            exponent_bits=getattr(args, "exponent_bits", None),
            inputs=parse_residues(raw_input) if raw_input is not None else (),
            t=getattr(args, "t", None),
            width=getattr(args, "width", "standard"),
            shots=getattr(args, "shots", 0),
            seed=getattr(args, "seed", 0),
            fmt=getattr(args, "format", "json"),
            sweep=parse_sweep(raw_sweep) if raw_sweep is not None else None,
            verbose=getattr(args, "verbose", False),
            describe=getattr(args, "describe", False),
            output=getattr(args, "output", None),
            no_overwrite=getattr(args, "no_overwrite", False),
        )

    def operator_spec(self) -> OperatorSpec:
        if self.op == MULT_IN_QQ_NAME:
            raise QModError(f"{MULT_IN_QQ_NAME} is catalogued only. {describe(self.op)}")
        if self.modulus is None:
            raise QModError("--modulus is required")
        return OperatorSpec(
            OperatorKind.from_name(self.op),
            self.modulus,
            k=self.k,
            base=self.base,
            exponent_bits=self.exponent_bits,
        ).validate()

    def period_config(self) -> PeriodFindingConfig:
        if self.base is None or self.modulus is None:
            raise QModError("shor needs --base and --modulus")
        t = self.t
        if self.width == "compact":
            if t is not None:
                raise QModError("--t and --width compact are mutually exclusive")
            t = OperatorSpec(OperatorKind.EXP_OUT, self.modulus).n
        return PeriodFindingConfig(
            self.base, self.modulus, t=t, shots=self.shots, seed=self.seed
        ).validate()

    def validate(self) -> "CliInvocation":
        if self.shots < 0:
            raise QModError(f"--shots must be non-negative, got {self.shots}")
        if self.subcommand == "shor":
            self.period_config()
            return self
        if self.subcommand == "build" and self.describe:
            return self

        spec = self.operator_spec()
        if self.subcommand == "run":
            roles = spec.input_roles
            if len(self.inputs) != len(roles):
                raise QModError(
                    f"{spec.kind.value} takes {len(roles)} input value(s), got {len(self.inputs)}"
                )
            for role, value in zip(roles, self.inputs):
                bound = spec.input_bound(role)
                if not 0 <= value < bound:
                    raise QModError(
                        f"input {value} out of range: must satisfy 0 <= value < {bound}"
                    )
        if self.subcommand == "verify" and spec.modulus > EXHAUSTIVE_LIMIT:
            raise QModError(
                f"verify is exhaustive and needs N <= {EXHAUSTIVE_LIMIT}, got N={spec.modulus}"
            )
        return self


def cmd_build(inv: CliInvocation) -> int:
    if inv.describe:
        print(describe(inv.op))
        return EXIT_OK
    circuit, _ = build_operator(inv.operator_spec())
    text = emit_text(circuit)
    if inv.output:
        write_circuit(text, inv.output, inv.no_overwrite)
        print(f"Successfully wrote {len(circuit)} gates on {circuit.num_wires} qubits to {inv.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_run(inv: CliInvocation) -> int:
    spec = inv.operator_spec()
    circuit, layout = build_operator(spec)
    start = input_index(layout, spec.input_roles, inv.inputs)
    label = format_residues(inv.inputs)

    if inv.shots == 0:
        psi = next(run_basis_inputs(circuit, [start]))
        decoded = layout.decode(int(np.argmax(np.abs(psi) ** 2)))
        print(f"{label} -> {decoded[spec.result_role]}")
        return EXIT_OK

    psi = next(run_basis_inputs(circuit, [start]))
    counts = sample_distribution(np.abs(psi) ** 2, inv.shots, inv.seed)
    tally = {}
    for index, count in counts.items():
        value = layout.decode(index)[spec.result_role]
        tally[value] = tally.get(value, 0) + count
    print(f"{label} -> histogram over {inv.shots} shots")
    print(format_histogram(tally))
    return EXIT_OK


def cmd_resources(inv: CliInvocation) -> int:
    spec = inv.operator_spec()
    if inv.sweep is None:
        data = report_for(spec).as_dict()
    else:
        data = sweep(spec.kind, *inv.sweep).as_dict()
    print(render(data, inv.fmt))
    return EXIT_OK


def cmd_shor(inv: CliInvocation) -> int:
    cfg = inv.period_config()
    result = find_period(cfg)
    print(f"a={cfg.base} N={cfg.modulus} counting qubits t={result.counting_width} "
          f"total qubits={cfg.total_qubits}")
    print(f"histogram (top outcomes of {result.shots} shots):")
    print(format_histogram(result.measurement_histogram, limit=8))
    if not result.success:
        print("period: none")
        print("verified: no")
        return EXIT_UNVERIFIED

    r = result.candidate_period
    print(f"period: {r}")
    print("verified: yes")
    mass = peak_mass(result.probabilities, result.counting_width, r)
    print(f"peak mass: {mass:.4f}")
    factors = factor_from_period(cfg.base, cfg.modulus, r)
    if factors:
        print(f"factors: {factors[0]} x {factors[1]}")
    return EXIT_OK


def cmd_verify(inv: CliInvocation) -> int:
    spec = inv.operator_spec()
    report = verify_operator(spec)
    if inv.verbose:
        for case in report.cases:
            status = "pass" if case.passed(report.tolerance) else "FAIL"
            print(
                f"{status} {format_residues(case.inputs)} -> "
                f"{format_residues(case.observed)} "
                f"(expected {format_residues(case.expected)}, fidelity {case.fidelity:.12f})"
            )
    failed = len(report.failures)
    print(f"{spec.describe()}: {len(report) - failed}/{len(report)} cases passed")
    return EXIT_OK if failed == 0 else EXIT_UNVERIFIED


COMMANDS = {
    "build": cmd_build,
    "run": cmd_run,
    "resources": cmd_resources,
    "shor": cmd_shor,
    "verify": cmd_verify,
}


def _add_operator_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--op", choices=OPERATOR_NAMES, required=True, help="Modular operator to synthesise"
    )
    parser.add_argument("--k", type=int, help="Classical constant k (0 <= k < N)")
    parser.add_argument("--modulus", "-N", type=int, help="Modulus N >= 2")
    parser.add_argument("--base", type=int, help="Base a of the exp operator")
    parser.add_argument(
        "--exponent-bits", type=int, help="Exponent register width of exp (default n)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="Synthesise and simulate quantum modular arithmetic circuits"
    )
    parser.add_argument("--version", action="version", version=f"qmod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    build = sub.add_parser("build", help="Print an operator circuit in text form")
    _add_operator_args(build)
    build.add_argument("--output", "-o", help="Write the circuit to this file instead")
    build.add_argument(
        "--no-overwrite",
        action="store_true",
        help="Don't overwrite the output file if it already exists",
    )
    build.add_argument(
        "--describe", action="store_true", help="Print the operator's state progression"
    )

    run = sub.add_parser("run", help="Simulate an operator on one basis input")
    _add_operator_args(run)
    run.add_argument(
        "--input", required=True, help="Comma-separated residues, data_a first"
    )
    run.add_argument("--shots", type=int, default=0, help="0 prints the exact result")
    run.add_argument("--seed", type=int, default=0)

    resources = sub.add_parser("resources", help="Qubit, gate and depth report")
    _add_operator_args(resources)
    resources.add_argument("--sweep", help="nmin:nmax, fits a log-log depth slope")
    resources.add_argument("--format", choices=FORMATS, default="json")

    shor = sub.add_parser("shor", help="Period-finding demo")
    shor.add_argument("--base", type=int, required=True)
    shor.add_argument("--modulus", "-N", type=int, required=True)
    shor.add_argument("--t", type=int, help="Counting register width (default 2n)")
    shor.add_argument(
        "--width",
        choices=["standard", "compact"],
        default="standard",
        help="'compact' uses t = n counting qubits",
    )
    shor.add_argument("--shots", type=int, default=1000)
    shor.add_argument("--seed", type=int, default=0)

    verify = sub.add_parser("verify", help="Exhaustive oracle check (N <= 64)")
    _add_operator_args(verify)
    verify.add_argument("--verbose", "-v", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        invocation = CliInvocation.from_args(args).validate()
        return COMMANDS[invocation.subcommand](invocation)
    except QModError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
