"""Relative scattering determinants for collections of disjoint Dirichlet
obstacles: boundary-layer evaluation of Xi(lambda), Casimir interaction
energies, and bouncing-ball orbit invariants."""

__version__ = "0.1.0"
