"""Modular functions, hyperbolic Fourier series and Klein-Gordon interpolation."""

from fractions import Fraction

from . import _hypf
from ._hypf import (
    BoundaryAmbiguous,
    DomainError,
    Estimate,
    NumericalError,
    big_theta,
    biortho_pairing,
    classify_point,
    conj_coefficients,
    contraction_check,
    eval_r_triangle,
    even_rational_decompose,
    h0,
    hankel_k0,
    hankel_k1,
    hn,
    hyp_half,
    lambda_,
    lambda_prime,
    mn,
    periodize,
    phi_inf,
    phi_pi,
    phi_strip,
    poisson_coefficients,
    r4,
    r_interp,
    schwarz_tau,
    theta,
    transfer_iterate,
    u_phi,
)


def schwarz_poly(n):
    """Coefficients of S_n as Fractions, index k = 0..n."""
    return [Fraction(int(p), int(q)) for p, q in _hypf.schwarz_poly(n)]


def convergents(word):
    """Convergents p_k/q_k for k = -1..len(word) as (p, q) integer pairs."""
    return [(int(p), int(q)) for p, q in _hypf.convergents(list(word))]


def roof_diameter(word):
    p, q = _hypf.roof_diameter(list(word))
    return Fraction(int(p), int(q))
