"""Area Siegel-Veech constants and the sum of Lyapunov exponents.

Two independent routes are implemented: a sum over the stable-graph catalog
(extracting degree-one terms in each edge variable) and a sum over boundary
volume products.  Both return the combination (pi^2/3) * c_area as an exact
rational number.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Tuple

from .exact_arith import PiRational, factorial
from .stable_graphs import StableGraph, enumerate_graphs, is_bridge
from .volume_engine import (
    Poly,
    genus0_volume,
    graph_polynomial,
    masur_veech_volume,
    op_Z,
)


def partial_gamma(graph: StableGraph, poly: Poly) -> Poly:
    """Degree-one extraction: sum over edges of the terms linear in b_e,
    weighted by 1/2 when the edge is a bridge and 1 otherwise."""
    chi = [
        Fraction(1, 2) if is_bridge(graph, e) else Fraction(1)
        for e in range(graph.num_edges)
    ]
    out: Poly = {}
    for expo, coeff in poly.items():
        weight = sum(chi[e] for e, m in enumerate(expo) if m == 1)
        if weight:
            out[expo] = out.get(expo, Fraction(0)) + coeff * weight
    return out


def sv_graph(graph: StableGraph, aut: int | None = None) -> PiRational:
    """Graph contribution to Vol * c_area, before the global 3/pi^2 factor."""
    if graph.num_edges == 0:
        return PiRational.zero()
    return op_Z(partial_gamma(graph, graph_polynomial(graph, aut)))


def c_area_graphsum(g: int, n: int) -> Fraction:
    """(pi^2/3) * c_area computed from the stable-graph catalog."""
    report = masur_veech_volume(g, n)
    total = PiRational.zero()
    for entry, _ in report.per_graph:
        total = total + sv_graph(entry.graph, entry.aut_order)
    ratio = total / report.total
    assert ratio.pi_power == 0
    return ratio.coeff


def _vol_q(g: int, n: int) -> PiRational:
    # boundary pieces use the unstable conventions Vol Q_{0,3} = 4 and
    # Vol Q_{1,1} = 2 pi^2 / 3
    if (g, n) == (0, 3):
        return PiRational(4, 0)
    if (g, n) == (1, 1):
        return PiRational(Fraction(2, 3), 2)
    if g == 0:
        return genus0_volume(n)
    return masur_veech_volume(g, n).total


def _piece_factor(g: int, n: int) -> Fraction | None:
    """Per-piece weight (d_i - 1)! / ell_i! of a boundary component, with its
    regularized value 1/2 at the unstable piece (0, 3); None marks pieces that
    do not occur."""
    if (g, n) == (0, 3):
        return Fraction(1, 2)
    ell = 4 * g - 4 + n
    if ell < 0 or 2 * g - 2 + n <= 0:
        return None
    return Fraction(factorial(6 * g - 7 + 2 * n), factorial(ell))


def c_area_boundary(g: int, n: int) -> Fraction:
    """(pi^2/3) * c_area computed from volumes of boundary pieces."""
    if g == 0:
        return _c_area_boundary_genus0(n)
    if g < 1 or (g == 1 and n < 2):
        raise ValueError("requires g >= 2, or g = 1 with n >= 2")
    d = 6 * g - 6 + 2 * n
    ell = 4 * g - 4 + n
    rhs = PiRational.zero()
    for g1 in range(0, g + 1):
        g2 = g - g1
        for n1 in range(1, n + 2):
            n2 = n + 2 - n1
            q1 = _piece_factor(g1, n1)
            q2 = _piece_factor(g2, n2)
            if q1 is None or q2 is None:
                continue
            coeff = (
                factorial(ell)
                * q1
                * q2
                * Fraction(factorial(n), factorial(n1 - 1) * factorial(n2 - 1))
                / factorial(d - 1)
            )
            rhs = rhs + coeff * (_vol_q(g1, n1) * _vol_q(g2, n2))
    nonsep = (
        Fraction(factorial(ell), factorial(ell - 2))
        * Fraction(factorial(d - 3), factorial(d - 1))
    ) * _vol_q(g - 1, n + 2)
    rhs = rhs * Fraction(1, 8) + nonsep
    ratio = rhs / masur_veech_volume(g, n).total
    assert ratio.pi_power == -2
    return ratio.coeff / 3


def _r(m: int) -> Fraction:
    # regularized (2m-7)!/(m-4)!, extended to m = 3 by its limit value 1/2
    if m == 3:
        return Fraction(1, 2)
    return Fraction(factorial(2 * m - 7), factorial(m - 4))


def _c_area_boundary_genus0(n: int) -> Fraction:
    if n < 4:
        raise ValueError("requires n >= 4")
    rhs = PiRational.zero()
    for n1 in range(3, n):
        n2 = n + 2 - n1
        if n2 < 3:
            continue
        coeff = (
            Fraction(factorial(n - 4), factorial(2 * n - 7))
            * _r(n1)
            * _r(n2)
            * Fraction(factorial(n), factorial(n1 - 1) * factorial(n2 - 1))
        )
        rhs = rhs + coeff * (_vol_q(0, n1) * _vol_q(0, n2))
    rhs = rhs * Fraction(1, 8)
    ratio = rhs / genus0_volume(n)
    assert ratio.pi_power == -2
    return ratio.coeff / 3


def lyapunov_sum_plus(g: int, n: int) -> Fraction:
    """Sum of the nonnegative Lyapunov exponents of the Hodge bundle over the
    principal stratum, as an affine function of the area Siegel-Veech
    constant."""
    ell = 4 * g - 4 + n
    return Fraction(1, 24) * (Fraction(5 * ell, 3) - 3 * n) + c_area_graphsum(g, n)
