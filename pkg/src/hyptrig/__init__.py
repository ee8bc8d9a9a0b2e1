"""hyptrig: closed forms and a quadrature audit for hyperbolic-
trigonometric definite integrals from the Gradshteyn-Ryzhik table."""

from .errors import DomainError, UnknownEntryError
from .specfun import (AccuracySpec, SpecialValue, gamma, log_gamma,
                      hurwitz_zeta, riemann_zeta, polygamma, dirichlet_beta,
                      dirichlet_eta, bessel_j, theta1_prime0)
from .quad import (Integrand, IntervalSpec, QuadResult, integrate,
                   integrate_finite, integrate_endpoint_singular,
                   integrate_decay, integrate_oscillatory, euler_transform,
                   aitken, NUMERIC_OFFSET)
from . import catalog
from . import auditor

__version__ = "0.1.0"
