"""Computational toolkit for Weyl groups, their pin double covers, and
Dirac cohomology of one-W-type graded Hecke algebra modules."""

__version__ = "0.1.0"
