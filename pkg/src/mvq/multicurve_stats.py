"""Frequencies of multicurves and statistics of square-tiled surfaces.

A multicurve is encoded by a stable graph together with strictly positive
integer weights on its edges.  Frequencies, cylinder-count distributions and
height/width statistics are all exact ratios of evaluations of the graph
polynomials from the volume engine.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Dict, NamedTuple, Optional, Sequence, Tuple

import sympy

from .exact_arith import PiRational, factorial, zeta_even
from .stable_graphs import StableGraph
from .volume_engine import (
    Poly,
    graph_polynomial,
    masur_veech_volume,
    op_Y,
    op_Z,
)


class Multicurve(NamedTuple):
    graph: StableGraph
    weights: Tuple[int, ...]

    def validate(self) -> None:
        if len(self.weights) != self.graph.num_edges:
            raise ValueError("need one weight per edge")
        if any(h <= 0 for h in self.weights):
            raise ValueError("weights must be strictly positive")


def const_gn(g: int, n: int) -> int:
    return 2 * (6 * g - 6 + 2 * n) * factorial(4 * g - 4 + n) * 2 ** (4 * g - 3 + n)


def vol_multicurve(graph: StableGraph, weights: Sequence[int]) -> Fraction:
    """Contribution of a single multicurve: the graph polynomial with each
    monomial prod b_e^{m_e} replaced by prod m_e!/H_e^{m_e+1}."""
    return op_Y(graph_polynomial(graph), weights)


def frequency(mc: Multicurve) -> Fraction:
    """Asymptotic frequency c(gamma) of the topological type of a multicurve
    among simple closed hyperbolic multigeodesics."""
    mc.validate()
    g = mc.graph.genus
    n = mc.graph.num_legs
    return vol_multicurve(mc.graph, mc.weights) / const_gn(g, n)


def separating_frequency(g: int, g1: int) -> Fraction:
    """Closed form for the frequency of a simple closed curve separating a
    closed genus-g surface into pieces of genus g1 and g - g1."""
    if not 1 <= g1 <= g - 1:
        raise ValueError("need 1 <= g1 <= g-1")
    g2 = g - g1
    aut = 2 if g1 == g2 else 1
    denom = (
        aut
        * 2 ** (3 * g - 4)
        * 24 ** g
        * factorial(g1)
        * factorial(g2)
        * factorial(3 * g1 - 2)
        * factorial(3 * g2 - 2)
        * (6 * g - 6)
    )
    return Fraction(1, denom)


def b_gn(g: int, n: int) -> PiRational:
    """Mirzakhani's normalization constant: total volume divided by const."""
    return masur_veech_volume(g, n).total / const_gn(g, n)


def b0n_closed_form(n: int) -> PiRational:
    """Genus-zero closed form (pi/2)^(2(n-3)) / (n-3)!."""
    if n < 4:
        raise ValueError("need n >= 4")
    return PiRational(
        Fraction(1, factorial(n - 3) * 4 ** (n - 3)), 2 * (n - 3)
    )


def cylinder_distribution(g: int, n: int) -> Dict[int, Fraction]:
    """Probability that a random square-tiled surface has exactly k maximal
    horizontal cylinders, for each k."""
    report = masur_veech_volume(g, n)
    total = report.total
    out: Dict[int, Fraction] = {}
    for k, v in sorted(report.per_cylinder_count.items()):
        ratio = v / total
        assert ratio.pi_power == 0
        out[k] = ratio.coeff
    return out


def prob_unit_heights_one_cyl(g: int, n: int) -> PiRational:
    """Probability that a one-cylinder surface has cylinder height 1; equals
    1/zeta(6g-6+2n) exactly."""
    return zeta_even(6 * g - 6 + 2 * n).inverse()


def _shift_poly(poly: Poly, num: Sequence[int], den: Sequence[int]) -> Poly:
    out: Poly = {}
    for expo, coeff in poly.items():
        shifted = tuple(m + a - b for m, a, b in zip(expo, num, den))
        if any(m < 0 for m in shifted):
            raise ValueError("negative exponent after shift")
        out[shifted] = out.get(shifted, Fraction(0)) + coeff
    return out


def _op_Y_symbolic(poly: Poly, H: Sequence) -> sympy.Expr:
    total = sympy.Integer(0)
    for expo, coeff in poly.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for m, h in zip(expo, H):
            term *= factorial(m) / sympy.sympify(h) ** (m + 1)
        total += term
    return sympy.together(total)


def _op_Z_symbolic(poly: Poly) -> sympy.Expr:
    """Zeta evaluation allowing odd zeta values; sympy.oo when the divergent
    zeta(1) pattern appears in every monomial, error when only in some."""
    divergent = [any(m == 0 for m in expo) for expo in poly]
    if any(divergent):
        if all(divergent):
            return sympy.oo
        raise ValueError("indeterminate: mixed convergent and divergent terms")
    total = sympy.Integer(0)
    for expo, coeff in poly.items():
        term = sympy.Rational(coeff.numerator, coeff.denominator)
        for m in expo:
            term *= factorial(m) * sympy.zeta(m + 1)
        total += term
    return total


def expectation_ratio(
    graph: StableGraph,
    num: Sequence[int],
    den: Sequence[int],
    H: Optional[Sequence] = None,
):
    """Expected value of prod b_e^{num_e} / prod b_e^{den_e} over square-tiled
    surfaces of type ``graph``, conditioned on heights H when given.

    With numeric H the result is an exact Fraction; with sympy-symbol entries
    in H it is a symbolic expression; without H it is a symbolic expression in
    even/odd zeta values, or sympy.oo in the divergent case."""
    poly = graph_polynomial(graph)
    shifted = _shift_poly(poly, num, den)
    if H is not None:
        if all(isinstance(h, int) for h in H):
            return op_Y(shifted, H) / op_Y(poly, H)
        return sympy.simplify(_op_Y_symbolic(shifted, H) / _op_Y_symbolic(poly, H))
    numerator = _op_Z_symbolic(shifted)
    if numerator is sympy.oo:
        return sympy.oo
    z = op_Z(poly)
    denominator = sympy.Rational(z.coeff.numerator, z.coeff.denominator) * sympy.pi ** z.pi_power
    return numerator / denominator


def prob_heights(
    graph: StableGraph,
    exact: Optional[Sequence[int]] = None,
    bound: Optional[int] = None,
) -> PiRational:
    """Probability that the cylinder heights of a random square-tiled surface
    of type ``graph`` equal ``exact``, or are all at most ``bound``."""
    poly = graph_polynomial(graph)
    z = op_Z(poly)
    if exact is not None:
        num = op_Y(poly, exact)
    elif bound is not None:
        num = Fraction(0)
        for H in product(range(1, bound + 1), repeat=graph.num_edges):
            num += op_Y(poly, H)
    else:
        return PiRational(1, 0)
    return PiRational(num, 0) / z


def ztilde_density(
    graph: StableGraph, H: Sequence[int], x: Sequence[float]
) -> float:
    """Value at x of the limiting density on the simplex of relative cylinder
    areas, for fixed heights H."""
    k = graph.num_edges
    if any(xi < 0 for xi in x) or sum(x) > 1 + 1e-12:
        return 0.0
    poly = graph_polynomial(graph)
    total = 0.0
    for expo, coeff in poly.items():
        term = float(coeff)
        for m, h, xi in zip(expo, H, x):
            term *= xi ** m / h ** (m + 1)
        total += term
    return total


def ztilde_integral(graph: StableGraph, H: Sequence[int]) -> Fraction:
    """Exact integral of the density over the simplex: equals op_Y(H, P)/d!
    with d the homogeneity degree plus the number of edges (Dirichlet
    integral, monomial by monomial)."""
    poly = graph_polynomial(graph)
    k = graph.num_edges
    total = Fraction(0)
    for expo, coeff in poly.items():
        dirichlet = Fraction(
            math.prod(factorial(m) for m in expo), factorial(sum(expo) + k)
        )
        term = coeff * dirichlet
        for m, h in zip(expo, H):
            term /= h ** (m + 1)
        total += term
    return total
