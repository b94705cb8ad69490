"""Exact general-position tests for the eight points (a^3 : a : 1).

All three classical conditions reduce to statements about the roots of
the seed polynomial because the points sit on the cuspidal cubic
x z^2 = y^3 with its degree-3 group law on parameters:

* three points are collinear  iff their three parameters sum to zero,
* six points lie on a conic   iff their six parameters sum to zero,
  which (the eight roots summing to zero) happens iff the remaining two
  parameters sum to zero,
* a cubic through all eight points singular at one of them exists iff
  the gradients of the cubic pencil generators become proportional at
  some root.

Every decision is taken in exact arithmetic; no root is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import SeedPoly, U_FORM, build_v
from .quotient import tri_eval_param
from .tripoly import TriPoly
from .unipoly import root_sum_poly


@dataclass(frozen=True)
class PositionCheck:
    passed: bool
    witness: dict


@dataclass(frozen=True)
class PositionReport:
    collinear: PositionCheck
    conic: PositionCheck
    singular_cubic: PositionCheck

    @property
    def in_general_position(self) -> bool:
        return (
            self.collinear.passed
            and self.conic.passed
            and self.singular_cubic.passed
        )


def check_three_collinear(seed: SeedPoly) -> PositionCheck:
    """No three distinct roots of the seed sum to zero.

    Let g(s) run over all ordered pair sums of roots (degree 64) and T(s)
    over all ordered triple sums (degree 512).  If T(0) != 0 no triple at
    all sums to zero and we are done.  Otherwise some triple WITH REPEATS
    may be responsible, so the degenerate patterns are divided out: with
    E(s) covering sums 2a + c (degree 64) and h3(s) covering sums 3a,
    ordered triples partition as

        T = T_distinct * (E / h3)^3 * h3,

    because each of the three "two equal" patterns contributes E/h3 and
    the "all equal" pattern contributes h3.  Hence
    T_distinct = T * h3^2 / E^3, an exact polynomial division, and the
    test is T_distinct(0) != 0.
    """
    h = seed.h
    pair_sums = root_sum_poly(h, h)
    t_at_0 = h.resultant(pair_sums.reflect())
    if t_at_0 != 0:
        return PositionCheck(True, {"path": "fast", "triple_product": t_at_0})
    triple_sums = root_sum_poly(h, pair_sums)
    twice_plus = root_sum_poly(h.scale_roots(2), h)
    h3 = h.scale_roots(3)
    distinct = (triple_sums * h3 * h3).exact_div(twice_plus * twice_plus * twice_plus)
    degrees = {
        "triple_sums": triple_sums.degree,
        "degenerate_pairs": twice_plus.degree,
        "triple_roots": h3.degree,
        "distinct_triples": distinct.degree,
    }
    value = distinct(0)
    return PositionCheck(
        value != 0,
        {"path": "deflated", "distinct_triple_product": value, "degrees": degrees},
    )


def check_six_conic(seed: SeedPoly) -> PositionCheck:
    """No six points on a conic: no two roots of the seed sum to zero.

    Because the t^7 coefficient vanishes, all eight roots sum to zero, so
    six parameters sum to zero exactly when the other two do; that pairs
    a root a with -a, i.e. makes gcd(h(t), h(-t)) nonconstant.
    """
    g = seed.h.gcd(seed.h.reflect())
    return PositionCheck(g.degree == 0, {"paired_root_factor": g})


def check_singular_cubic(
    seed: SeedPoly, pencil_partner: TriPoly | None = None
) -> PositionCheck:
    """No cubic through all eight points is singular at one of them.

    Every cubic through the points lies in the pencil spanned by
    u = xz^2 - y^3 and the companion cubic v, so a bad cubic exists iff
    the gradients of u and v are linearly dependent at some point, i.e.
    iff the three 2x2 minors of the gradient matrix share a root with h.
    The u-row at (t^3, t, 1) is always (1, -3t^2, 2t^3).

    `pencil_partner` substitutes the second pencil generator; passing u
    itself is the rank-1 negative control.
    """
    h = seed.h
    v = pencil_partner if pencil_partner is not None else build_v(seed)
    row_u = [tri_eval_param(U_FORM.derivative(s), h).rep for s in ("x", "y", "z")]
    row_v = [tri_eval_param(v.derivative(s), h).rep for s in ("x", "y", "z")]
    minors = [
        (row_u[a] * row_v[b] - row_u[b] * row_v[a]) % h
        for a, b in ((0, 1), (0, 2), (1, 2))
    ]
    g = h
    for m in minors:
        if not m.is_zero:
            g = g.gcd(m)
            if g.degree == 0:
                break
    return PositionCheck(g.degree == 0, {"dependent_gradient_factor": g})


def position_report(seed: SeedPoly) -> PositionReport:
    return PositionReport(
        collinear=check_three_collinear(seed),
        conic=check_six_conic(seed),
        singular_cubic=check_singular_cubic(seed),
    )
