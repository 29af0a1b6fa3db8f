"""Exact combinatorics of root systems, affine Weyl groups, Hessenberg
fixed-point data, weight multiplicities, and a GKM model of equivariant
K-theory of the flag variety."""

__version__ = "0.1.0"
