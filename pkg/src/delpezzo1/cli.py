"""Command-line front end.

Subcommands: construct, verify, position, galois, lattice.  Exit codes:
0 all requested checks pass (or construction succeeded), 1 a mathematical
check failed (the report carries a witness), 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys

from .curve import (
    SeedError,
    SeedPoly,
    build_bundle,
    validate_seed,
    verify_bundle,
)
from .galois import certify_galois
from .lattice import (
    build_hyperbolic,
    enumerate_short_vectors,
    f8s_iso_check,
    linalg_lemma_check,
    mod2_quadratic_census,
    orth_complement,
    picard_model_check,
    standard_space,
)
from .position import PositionReport, position_report
from .serialize import frac_str, parse_frac, to_canonical_json, to_text, tri_terms, uni_coeff_strs

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2


def _parse_seed(poly: str) -> SeedPoly:
    try:
        coeffs = [parse_frac(p) for p in poly.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise SeedError("unparseable", f"cannot parse coefficients: {exc}") from exc
    return validate_seed(coeffs)


def _seed_payload(seed: SeedPoly) -> list[str]:
    return uni_coeff_strs(seed.h)


def _forms_payload(bundle) -> dict:
    return {
        "u": tri_terms(bundle.u),
        "v": tri_terms(bundle.v),
        "w": tri_terms(bundle.w),
        "Q": tri_terms(bundle.q_form),
    }


def _position_payload(report: PositionReport) -> tuple[dict, dict]:
    checks = {
        "no_three_collinear": report.collinear.passed,
        "no_six_on_conic": report.conic.passed,
        "no_singular_cubic_through_point": report.singular_cubic.passed,
    }
    witnesses = {}
    for name, check in (
        ("no_three_collinear", report.collinear),
        ("no_six_on_conic", report.conic),
        ("no_singular_cubic_through_point", report.singular_cubic),
    ):
        witnesses[name] = _jsonable(check.witness)
    return checks, witnesses


def _jsonable(value):
    from fractions import Fraction

    from .tripoly import TriPoly
    from .unipoly import UniPoly

    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, Fraction):
        return frac_str(value)
    if isinstance(value, UniPoly):
        return uni_coeff_strs(value)
    if isinstance(value, TriPoly):
        return tri_terms(value)
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    return str(value)


def _galois_payload(cert) -> dict:
    return {
        "verdict": cert.verdict,
        "transitivity_prime": cert.transitivity_prime,
        "five_cycle_prime": cert.five_cycle_prime,
        "discriminant": frac_str(cert.discriminant),
        "discriminant_is_square": cert.disc_is_square,
        "sampled_cycle_types": [
            {"prime": ct.prime, "parts": list(ct.parts)} for ct in cert.sampled_types
        ],
    }


def cmd_construct(seed: SeedPoly) -> tuple[dict, bool]:
    bundle = build_bundle(seed)
    payload = {
        "command": "construct",
        "seed": _seed_payload(seed),
        "forms": _forms_payload(bundle),
        "checks": {"model_degree_9": bundle.q_form.total_degree == 9},
        "witnesses": {
            "reduced_x_derivative": uni_coeff_strs(bundle.p_reduced),
            "cubic_matcher": tri_terms(bundle.g_cubic),
        },
    }
    return payload, True


def cmd_verify(seed: SeedPoly, prime_bound: int) -> tuple[dict, bool]:
    bundle = build_bundle(seed)
    report = verify_bundle(bundle)
    pos = position_report(seed)
    cert = certify_galois(seed, prime_bound)
    checks = {name: c.passed for name, c in sorted(report.checks.items())}
    witnesses = {name: _jsonable(c.details) for name, c in sorted(report.checks.items())}
    pos_checks, pos_witnesses = _position_payload(pos)
    checks.update(pos_checks)
    witnesses.update(pos_witnesses)
    checks["galois_certified"] = cert.certified
    payload = {
        "command": "verify",
        "seed": _seed_payload(seed),
        "forms": _forms_payload(bundle),
        "checks": checks,
        "witnesses": witnesses,
        "galois": _galois_payload(cert),
    }
    return payload, all(checks.values())


def cmd_position(seed: SeedPoly) -> tuple[dict, bool]:
    pos = position_report(seed)
    checks, witnesses = _position_payload(pos)
    payload = {
        "command": "position",
        "seed": _seed_payload(seed),
        "checks": checks,
        "witnesses": witnesses,
    }
    return payload, pos.in_general_position


def cmd_galois(seed: SeedPoly, prime_bound: int) -> tuple[dict, bool]:
    cert = certify_galois(seed, prime_bound)
    payload = {
        "command": "galois",
        "seed": _seed_payload(seed),
        "checks": {"galois_certified": cert.certified},
        "witnesses": _galois_payload(cert),
    }
    return payload, cert.certified


def cmd_lattice(d: int) -> tuple[dict, bool]:
    marked = build_hyperbolic(d)
    comp = orth_complement(marked.lattice, marked.omega)
    roots = enumerate_short_vectors(comp.lattice, -2)
    expected_roots = 240 if d == 1 else 126
    expected_det = 1 if d == 1 else 2
    checks = {
        "omega_self_pairing": marked.lattice.pair(marked.omega, marked.omega) == d,
        "complement_rank": comp.lattice.rank == 9 - d,
        "complement_determinant": abs(comp.lattice.determinant) == expected_det,
        "complement_even": (comp.lattice.is_even if d == 1 else True),
        "root_count": len(roots) == expected_roots,
    }
    witnesses = {
        "omega_self_pairing": marked.lattice.pair(marked.omega, marked.omega),
        "complement_determinant": comp.lattice.determinant,
        "root_count": len(roots),
    }
    if d == 1:
        f8s = f8s_iso_check()
        pic = picard_model_check()
        census = mod2_quadratic_census()
        lemma = linalg_lemma_check(standard_space(4), 2, exhaustive=True)
        checks.update(
            {
                "mod2_identification": f8s.passed,
                "picard_gram": pic.passed,
                "mod2_census": census.passed,
                "independence_lemma_small": lemma.passed,
            }
        )
        witnesses.update(
            {
                "census_q1": census.nonzero_q1,
                "census_q0": census.nonzero_q0,
                "picard_diag": list(pic.diag_pairings),
            }
        )
    payload = {
        "command": "lattice",
        "seed": None,
        "checks": checks,
        "witnesses": _jsonable(witnesses),
    }
    return payload, all(checks.values())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delpezzo1",
        description=(
            "Construct the degree-9 plane branch-curve model of a normalized "
            "octic seed and machine-check the finite facts about it."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_seed(p):
        p.add_argument(
            "--poly",
            required=True,
            help="9 comma-separated rational coefficients, ascending (constant first)",
        )

    def add_common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default=None, help="write the report here instead of stdout")

    p = sub.add_parser("construct", help="emit the forms u, v, w, Q")
    add_seed(p)
    add_common(p)

    p = sub.add_parser("verify", help="full verification report")
    add_seed(p)
    p.add_argument("--prime-bound", type=int, default=500)
    add_common(p)

    p = sub.add_parser("position", help="general-position checks only")
    add_seed(p)
    add_common(p)

    p = sub.add_parser("galois", help="Galois-group certificate only")
    add_seed(p)
    p.add_argument("--prime-bound", type=int, default=500)
    add_common(p)

    p = sub.add_parser("lattice", help="lattice and mod-2 checks")
    p.add_argument("--d", type=int, default=1, choices=(1, 2))
    add_common(p)

    return parser


def _merge_poly_flag(argv: list[str]) -> list[str]:
    """Join '--poly <value>' into '--poly=<value>'.

    Coefficient lists routinely start with a minus sign, which argparse
    would otherwise read as an option name.
    """
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--poly" and i + 1 < len(argv):
            out.append("--poly=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_merge_poly_flag(list(argv)))
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else 0

    try:
        if args.command == "lattice":
            payload, ok = cmd_lattice(args.d)
        else:
            seed = _parse_seed(args.poly)
            if args.command == "construct":
                payload, ok = cmd_construct(seed)
            elif args.command == "verify":
                payload, ok = cmd_verify(seed, args.prime_bound)
            elif args.command == "position":
                payload, ok = cmd_position(seed)
            else:
                payload, ok = cmd_galois(seed, args.prime_bound)
    except SeedError as exc:
        sys.stderr.write(f"invalid seed [{exc.code}]: {exc}\n")
        return EXIT_BAD_INPUT
    except ValueError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_BAD_INPUT

    rendered = to_canonical_json(payload) if args.format == "json" else to_text(payload)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(rendered)
    else:
        sys.stdout.write(rendered)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
