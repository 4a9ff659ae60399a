"""Small-ball probabilities of planar random signed sums.

Exact and Monte Carlo engines for Pr[|e_1 v_1 + ... + e_n v_n| <= r] over
Rademacher signs, explicit lower-bound certificates built from a pairing
argument, and extremal tooling for the axis family.
"""

from lolab._core import (
    Configuration,
    CountResult,
    McEstimate,
    axis_probability,
    axis_profile,
    certify,
    chebyshev_pair_bound,
    exact_probability,
    exact_q,
    f_probe,
    iterate_identity_check,
    markov_tail_bound,
    mc_probability,
    mc_q,
    mean_norm_sq,
    naive_probability,
    pairing_bound,
    run_lemma_suites,
    search_min,
)

__all__ = [
    "Configuration",
    "CountResult",
    "McEstimate",
    "axis_probability",
    "axis_profile",
    "certify",
    "chebyshev_pair_bound",
    "exact_probability",
    "exact_q",
    "f_probe",
    "iterate_identity_check",
    "markov_tail_bound",
    "mc_probability",
    "mc_q",
    "mean_norm_sq",
    "naive_probability",
    "pairing_bound",
    "run_lemma_suites",
    "search_min",
]

__version__ = "0.1.0"
