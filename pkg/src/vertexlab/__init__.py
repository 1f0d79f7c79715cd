"""vertexlab: exact combinatorics of square ice and Schur polynomials."""

__version__ = "0.1.0"
