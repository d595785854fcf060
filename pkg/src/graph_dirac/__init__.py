"""Graph Dirac - Laplace and Dirac operators, walks, tilings and Clifford algebras of graphs."""

__version__ = "0.1.0"
