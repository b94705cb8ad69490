"""Canonical, byte-stable serialization of forms and reports.

Numbers are decimal strings (never floats), monomials are listed in
descending graded-lex order, and JSON keys are sorted, so two runs on any
platform emit identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .tripoly import TriPoly
from .unipoly import UniPoly


def frac_str(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_frac(text: str) -> Fraction:
    return Fraction(text.strip())


def tri_terms(form: TriPoly) -> list[dict]:
    """Monomial list [{"e": [i, j, k], "c": "coeff"}, ...], leading first."""
    return [
        {"e": list(e), "c": frac_str(c)}
        for e, c in form.sorted_terms()
    ]


def uni_coeff_strs(poly: UniPoly) -> list[str]:
    """Ascending coefficient strings; the zero polynomial is []."""
    return [frac_str(c) for c in poly.coeffs]


def to_canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _flatten(prefix: str, value, out: list[str]):
    if isinstance(value, dict):
        for k in sorted(value):
            _flatten(f"{prefix}.{k}" if prefix else str(k), value[k], out)
    elif isinstance(value, list):
        out.append(f"{prefix} = {json.dumps(value, sort_keys=True)}")
    else:
        out.append(f"{prefix} = {json.dumps(value)}")


def to_text(payload: dict) -> str:
    """Line-per-field rendering mirroring the JSON structure."""
    lines: list[str] = []
    _flatten("", payload, lines)
    return "\n".join(lines) + "\n"
