"""Exact verification of the Hodge-theoretic certificates for eight planes in P^3."""

from .poly import Polynomial, Ring, MonomialOrder, jacobian_ring, z_ring
from .ideal import Ideal, GroebnerBasis, buchberger, normal_form, graded_normal_form, hilbert_data
from .jacobian import Arrangement, vandermonde_arrangement, general_position_check

__version__ = "0.1.0"
