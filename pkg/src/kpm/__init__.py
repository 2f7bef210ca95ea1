"""Exact computations with rank-2 instanton monads on the projective plane,
the SL(2) affine Grassmannian lattice model, and its Schubert ring."""

__version__ = "0.1.0"
