"""Fusion rules for the Grothendieck rings of the free Hopf algebras H(n),
H_inf(n) and H_d(F), with a rewriting engine for their presentations and an
SL_q(2) cross-check."""

from .configurations import Configuration, Symbol, enumerate_configurations, is_valid, residual
from .ring import (
    RingElement,
    dim,
    dim_element,
    expand_f,
    f_product,
    odot,
    star_element,
    to_f_basis,
    to_u_basis,
)
from .sl2 import SL2Element, cg_multiply, psi, sl2_dim
from .words import INT, NAT, IndexSet, IndexSetError, Word, cancellable, concat, is_one_step, linked, star

__version__ = "0.1.0"
