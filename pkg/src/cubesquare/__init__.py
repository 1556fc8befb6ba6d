"""Exact arithmetic for degree-12 binary forms splitting as a cube plus a square.

Subpackages cover: exact fields and polynomials (``fields``, ``poly``,
``binform``), the discriminant bridge for quartic/cubic families
(``families``), Weierstrass models of rational elliptic fibrations
(``fibration``), E8 lattice combinatorics (``e8``), the rank-10 Picard
lattice (``picard``), the trigonal construction on monodromy tuples
(``recillas``), and the cube-plus-square decomposition locus (``locusz``).
"""

__version__ = "0.1.0"
