"""Exact computation of Masur-Veech volumes of moduli spaces of quadratic
differentials, area Siegel-Veech constants, multicurve frequencies and
square-tiled surface statistics, via stable-graph enumeration and psi-class
intersection numbers."""

from .exact_arith import PiPolynomial, PiRational, bernoulli, zeta_even
from .correlators import correlator, c_gk, epsilon_d, max_bracket, normalized_bracket
from .stable_graphs import StableGraph, aut_order, enumerate_graphs
from .volume_engine import (
    genus0_volume,
    graph_polynomial,
    kontsevich_poly,
    masur_veech_volume,
    vol_graph,
)
from .siegel_veech import c_area_boundary, c_area_graphsum, lyapunov_sum_plus
from .multicurve_stats import (
    Multicurve,
    b_gn,
    cylinder_distribution,
    expectation_ratio,
    frequency,
    prob_heights,
)
from .asymptotics import (
    agk_by_recursion,
    agk_from_correlators,
    poisson_model,
    sep_nonsep_ratio,
    series_coeffs,
    vol_gamma_k,
)
from .lattice_oracle import (
    lattice_sum,
    square_tiled_count,
    volume_convergence_report,
)

__version__ = "0.1.0"
