"""Command-line front end: spectra, stencils, and verification reports.

All rationals cross this boundary as exact "num/den" strings; no decimal
conversion happens anywhere.  JSON output is rendered with sorted keys
and stable ordering so repeated runs are byte-identical.  Exit codes:
0 all checks pass, 1 verification failure or spectral degeneracy,
2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .algebra import (
    BasisKind,
    DegenerateSpectrumError,
    LaurentPoly,
    QuasiMonomial,
    rat,
    rat_str,
)
from .fock import FockPoly, build_hf, build_hg
from .realize import (
    Differential,
    FiniteDifference,
    QDilatation,
    Realization,
    Stencil,
    realize_matrix,
    stencil_of,
)
from .spectral import (
    SpectralReport,
    SpectrumKind,
    eigensolve_flag,
    pencil_solve,
    q_number,
    reference_spectrum,
)
from .verify import SUITES, VerifyReport, run_all, run_suite


def _rational(text: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _basis_json(basis: BasisKind) -> dict:
    if isinstance(basis, QuasiMonomial):
        return {"kind": "quasimonomial", "delta": rat_str(basis.delta)}
    return {"kind": "monomial"}


def _fock_json(element: FockPoly) -> list[dict]:
    return [
        {"b": k, "a": m, "coeff": rat_str(c)}
        for (k, m), c in sorted(element.terms.items())
    ]


def _laurent_json(p: LaurentPoly) -> dict[str, str]:
    return {str(power): rat_str(c) for power, c in p.terms.items()}


def _levels_json(report: SpectralReport) -> list[dict]:
    return [
        {
            "n": entry.level,
            "E": rat_str(entry.eigenvalue),
            "coeffs": [rat_str(c) for c in entry.eigenpoly.coeffs],
        }
        for entry in report.entries
    ]


def _stencil_json(stencil: Stencil) -> dict:
    return {
        "mode": stencil.mode,
        "param": rat_str(stencil.param),
        "points": len(stencil.terms),
        "terms": [
            {"offset": j, "coeff": _laurent_json(c)} for j, c in stencil.terms
        ],
    }


def _verify_json(report: VerifyReport) -> dict:
    return {
        "suite": report.suite,
        "passed": report.passed,
        "cases": [
            {
                "case": c.case,
                "inputs": c.inputs,
                "expected": c.expected,
                "got": c.got,
                "pass": c.passed,
            }
            for c in report.cases
        ],
        "notes": [{"id": n.note_id, "text": n.text} for n in report.notes],
    }


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(payload: dict, out_path: str | None) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True) + "\n", out_path)


def _emit_csv(header: list[str], rows: list[list[str]], out_path: str | None) -> None:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _emit(buffer.getvalue(), out_path)


def _build_operator(args) -> FockPoly:
    context_q = args.q if args.realization == "qdil" else Fraction(1)
    if args.op == "hf":
        return build_hf(args.p, q=context_q)
    return build_hg(args.p, args.B, q=context_q)


def _build_realization(parser: argparse.ArgumentParser, args) -> Realization:
    try:
        if args.realization == "diff":
            return Differential()
        if args.realization == "fd":
            return FiniteDifference(args.delta)
        return QDilatation(args.q)
    except ValueError as exc:
        parser.error(str(exc))


def _operator_json(args) -> dict:
    payload = {"name": args.op, "p": rat_str(args.p), "words": _fock_json(_build_operator(args))}
    if args.op == "hg":
        payload["B"] = rat_str(args.B)
    return payload


def _realization_json(args) -> dict:
    if args.realization == "diff":
        return {"kind": "diff"}
    if args.realization == "fd":
        return {"kind": "fd", "delta": rat_str(args.delta)}
    return {"kind": "qdil", "q": rat_str(args.q)}


def cmd_spectrum(parser: argparse.ArgumentParser, args) -> int:
    realization = _build_realization(parser, args)
    if args.rhs == "scaled" and args.realization == "fd":
        parser.error("scaled right-hand sides need the monomial basis (diff or qdil)")
    operator = _build_operator(args)
    matrix = realize_matrix(operator, realization, args.N)

    pencil_q = args.q if args.realization == "qdil" else Fraction(1)
    try:
        if args.rhs == "plain":
            report = eigensolve_flag(matrix)
        else:
            report = pencil_solve(matrix, args.s, pencil_q)
    except DegenerateSpectrumError as exc:
        _emit_json(
            {
                "command": "spectrum",
                "error": {"kind": "degenerate-spectrum", "detail": str(exc)},
                "operator": _operator_json(args),
                "realization": _realization_json(args),
            },
            args.out,
        )
        return 1

    levels = list(range(args.N + 1))
    if args.rhs == "plain":
        kind = SpectrumKind.Q_PLAIN if args.realization == "qdil" else SpectrumKind.CLASSIC
        ref_name = kind.value
        reference = [reference_spectrum(kind, n, pencil_q) for n in levels]
    elif args.s == -1 and args.realization == "qdil":
        ref_name = SpectrumKind.Q_SCALED_ONCE.value
        reference = [reference_spectrum(SpectrumKind.Q_SCALED_ONCE, n, pencil_q) for n in levels]
    elif args.s == -2 and args.realization == "qdil":
        ref_name = SpectrumKind.Q_SCALED_TWICE.value
        reference = [reference_spectrum(SpectrumKind.Q_SCALED_TWICE, n, pencil_q) for n in levels]
    else:
        # Positive scale powers: the reciprocal-dilation family -4 {n} q^(-s n).
        ref_name = f"reciprocal(s={args.s})"
        reference = [-4 * q_number(n, pencil_q) * pencil_q ** (-args.s * n) for n in levels]
    match = list(report.eigenvalues) == reference

    if args.format == "json":
        payload = {
            "command": "spectrum",
            "operator": _operator_json(args),
            "realization": _realization_json(args),
            "N": args.N,
            "rhs": {"kind": args.rhs} if args.rhs == "plain" else {"kind": "scaled", "s": args.s},
            "basis": _basis_json(report.basis),
            "levels": _levels_json(report),
            "reference": {
                "kind": ref_name,
                "values": [rat_str(v) for v in reference],
                "match": match,
            },
        }
        _emit_json(payload, args.out)
    else:
        rows = [
            [
                str(entry.level),
                rat_str(entry.eigenvalue),
                " ".join(rat_str(c) for c in entry.eigenpoly.coeffs),
                rat_str(reference[entry.level]),
                str(entry.eigenvalue == reference[entry.level]).lower(),
            ]
            for entry in report.entries
        ]
        _emit_csv(["n", "E", "coeffs", "reference", "match"], rows, args.out)
    return 0 if match else 1


def cmd_stencil(parser: argparse.ArgumentParser, args) -> int:
    if args.realization == "diff":
        parser.error("the differential realization has no stencil")
    realization = _build_realization(parser, args)
    stencil = stencil_of(_build_operator(args), realization)
    if args.format == "json":
        payload = {
            "command": "stencil",
            "operator": _operator_json(args),
            "realization": _realization_json(args),
            "stencil": _stencil_json(stencil),
        }
        _emit_json(payload, args.out)
    else:
        rows = [
            [str(j), " ".join(f"{power}:{rat_str(c)}" for power, c in coeff.terms.items())]
            for j, coeff in stencil.terms
        ]
        _emit_csv(["offset", "coeff"], rows, args.out)
    return 0


def _verify_csv_rows(report: VerifyReport) -> list[list[str]]:
    rows = [
        [
            "case",
            report.suite,
            c.case,
            json.dumps(c.inputs, sort_keys=True),
            c.expected,
            c.got,
            str(c.passed).lower(),
            "",
        ]
        for c in report.cases
    ]
    rows += [
        ["note", report.suite, n.note_id, "", "", "", "", n.text]
        for n in report.notes
    ]
    return rows


def cmd_verify(parser: argparse.ArgumentParser, args) -> int:
    if args.suite == "all":
        reports = run_all()
    else:
        reports = [run_suite(args.suite)]
    passed = all(r.passed for r in reports)

    if args.format == "json":
        if args.suite == "all":
            payload = {
                "command": "verify",
                "suite": "all",
                "passed": passed,
                "suites": [_verify_json(r) for r in reports],
            }
        else:
            payload = {"command": "verify", **_verify_json(reports[0])}
        _emit_json(payload, args.out)
    else:
        rows = [row for report in reports for row in _verify_csv_rows(report)]
        _emit_csv(
            ["kind", "suite", "id", "inputs", "expected", "got", "pass", "text"],
            rows,
            args.out,
        )
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fockosc",
        description="Exact spectra of the Fock-space oscillator and its discretizations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, realizations: list[str]) -> None:
        p.add_argument("--op", choices=["hf", "hg"], default="hf",
                       help="three-point (hf) or four-point (hg) operator")
        p.add_argument("--realization", choices=realizations, required=True)
        p.add_argument("--p", type=_rational, default=Fraction(0),
                       help="weight parameter (rational string, default 0)")
        p.add_argument("--B", type=_rational, default=Fraction(0),
                       help="shift coefficient of the hg operator")
        p.add_argument("--delta", type=_rational, default=Fraction(1),
                       help="finite-difference step (nonzero rational)")
        p.add_argument("--q", type=_rational, default=Fraction(2),
                       help="dilatation parameter (rational, not 0 or 1)")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    spectrum = sub.add_parser("spectrum", help="eigenvalues and eigenpolynomials")
    add_common(spectrum, ["diff", "fd", "qdil"])
    spectrum.add_argument("--N", type=int, default=12, help="flag dimension (default 12)")
    spectrum.add_argument("--rhs", choices=["plain", "scaled"], default="plain",
                          help="plain eigenproblem or scaled right-hand side")
    spectrum.add_argument("--s", type=int, choices=[-2, -1, 1, 2], default=-1,
                          help="scale power for --rhs scaled")

    stencil = sub.add_parser("stencil", help="explicit multi-point coefficients")
    add_common(stencil, ["fd", "qdil"])

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite", nargs="?", default="all",
                        choices=sorted(SUITES) + ["all"])
    verify.add_argument("--format", choices=["json", "csv"], default="json")
    verify.add_argument("--out", default=None, help="output path (default stdout)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "spectrum":
        if args.N < 0:
            parser.error("--N must be non-negative")
        return cmd_spectrum(parser, args)
    if args.command == "stencil":
        return cmd_stencil(parser, args)
    return cmd_verify(parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
