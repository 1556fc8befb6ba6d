"""E8 lattice combinatorics: roots, norm-4 vectors, Weyl order, mod-2 census.

Vectors are stored in doubled coordinates (all entries of 2v), which makes
every lattice quantity an integer: membership is "all coordinates even with
sum divisible by 4, or all odd with sum divisible by 4", the inner product is
(sum of products)/4, and the norm of a root is 2.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

import numpy as np


class E8Vector:
    """An E8 lattice vector in doubled coordinates."""

    __slots__ = ("dcoords",)

    def __init__(self, dcoords):
        d = tuple(int(c) for c in dcoords)
        if len(d) != 8:
            raise ValueError("need 8 coordinates")
        par = {c % 2 for c in d}
        if len(par) != 1 or sum(d) % 4 != 0:
            raise ValueError(f"{d} is not in the lattice (doubled coordinates)")
        self.dcoords = d

    def __eq__(self, other):
        return isinstance(other, E8Vector) and other.dcoords == self.dcoords

    def __hash__(self):
        return hash(self.dcoords)

    def __repr__(self):
        return f"E8Vector{self.dcoords}"

    def __neg__(self):
        return E8Vector(tuple(-c for c in self.dcoords))

    def __add__(self, other):
        return E8Vector(tuple(a + b for a, b in zip(self.dcoords, other.dcoords)))

    def __sub__(self, other):
        return E8Vector(tuple(a - b for a, b in zip(self.dcoords, other.dcoords)))

    def dot(self, other) -> int:
        s = sum(a * b for a, b in zip(self.dcoords, other.dcoords))
        if s % 4 != 0:
            raise ValueError("inner product not integral; bad vectors")
        return s // 4

    def norm(self) -> int:
        return self.dot(self)


def is_member_dcoords(d) -> bool:
    par = {c % 2 for c in d}
    return len(par) == 1 and sum(d) % 4 == 0


@lru_cache(maxsize=None)
def enumerate_roots() -> tuple[E8Vector, ...]:
    """The 240 norm-2 vectors: 112 of shape (+-2, +-2, 0^6) and 128 all-odd."""
    out = []
    for i, j in combinations(range(8), 2):
        for si in (2, -2):
            for sj in (2, -2):
                d = [0] * 8
                d[i], d[j] = si, sj
                out.append(E8Vector(d))
    for signs in product((1, -1), repeat=8):
        if sum(signs) % 4 == 0:
            out.append(E8Vector(signs))
    out.sort(key=lambda v: v.dcoords)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_norm4() -> tuple[E8Vector, ...]:
    """All 2160 norm-4 vectors, by coordinate shape."""
    out = []
    # (+-4, 0^7)
    for i in range(8):
        for s in (4, -4):
            d = [0] * 8
            d[i] = s
            out.append(E8Vector(d))
    # (+-2)^4 0^4
    for idx in combinations(range(8), 4):
        for signs in product((2, -2), repeat=4):
            d = [0] * 8
            for k, s in zip(idx, signs):
                d[k] = s
            out.append(E8Vector(d))
    # one +-3, seven +-1, sum = 0 mod 4
    for i in range(8):
        for s3 in (3, -3):
            for signs in product((1, -1), repeat=7):
                d = list(signs[:i]) + [s3] + list(signs[i:])
                if sum(d) % 4 == 0:
                    out.append(E8Vector(d))
    out.sort(key=lambda v: v.dcoords)
    return tuple(out)


# Generator matrix in doubled coordinates: rows are 2e1, e_{i+1}-e_i (i=1..7),
# and the all-halves glue vector, each doubled.
BASIS_DCOORDS = (
    (4, 0, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
    (1, 1, 1, 1, 1, 1, 1, 1),
)


@lru_cache(maxsize=None)
def _basis_solver():
    """(adjugate, det) of the basis matrix, for exact coordinate solves."""
    from fractions import Fraction

    n = 8
    m = [[Fraction(BASIS_DCOORDS[i][j]) for j in range(n)] for i in range(n)]
    # Invert by Gauss-Jordan over Q, then scale to the integer adjugate.
    aug = [row[:] + [Fraction(int(i == k)) for i in range(n)] for k, row in enumerate(m)]
    det = Fraction(1)
    for k in range(n):
        piv = next(i for i in range(k, n) if aug[i][k] != 0)
        if piv != k:
            aug[k], aug[piv] = aug[piv], aug[k]
            det = -det
        det *= aug[k][k]
        inv = 1 / aug[k][k]
        aug[k] = [c * inv for c in aug[k]]
        for i in range(n):
            if i != k and aug[i][k] != 0:
                c = aug[i][k]
                aug[i] = [a - c * b for a, b in zip(aug[i], aug[k])]
    inv_rows = [row[n:] for row in aug]
    adj = np.array(
        [[int(inv_rows[i][j] * det) for j in range(n)] for i in range(n)], dtype=np.int64
    )
    for i in range(n):
        for j in range(n):
            if inv_rows[i][j] * det != adj[i][j]:
                raise ArithmeticError("adjugate not integral")
    return adj, int(det)


def basis_coordinates(v: E8Vector) -> tuple[int, ...]:
    """Integer coordinates of v in the fixed lattice basis."""
    adj, det = _basis_solver()
    vec = np.array(v.dcoords, dtype=np.int64)
    num = vec @ adj  # row vector times inverse-matrix-parts: v = c B  =>  c = v B^-1
    if any(int(x) % det for x in num):
        raise ValueError(f"{v} not in the lattice span")
    return tuple(int(x) // det for x in num)


def mod2_key(v: E8Vector) -> tuple[int, ...]:
    return tuple(c % 2 for c in basis_coordinates(v))


class Mod2Class:
    """A class of E8/2E8 with its minimal-norm representative."""

    __slots__ = ("representative", "parity", "key")

    def __init__(self, representative: E8Vector, parity: str, key):
        self.representative = representative
        self.parity = parity
        self.key = key

    def __repr__(self):
        return f"Mod2Class({self.parity}, rep={self.representative.dcoords})"


def weyl_order() -> int:
    """|W(E8)| = 2^14 3^5 5^2 7, cross-checked against the degree product."""
    from_factorization = 2**14 * 3**5 * 5**2 * 7
    degrees = (2, 8, 12, 14, 18, 20, 24, 30)
    prod = 1
    for d in degrees:
        prod *= d
    if prod != from_factorization or from_factorization != 696729600:
        raise ArithmeticError("Weyl order cross-check failed")
    return from_factorization


@lru_cache(maxsize=None)
def mod2_census() -> dict:
    """Partition the 256 classes of E8/2E8 by minimal norm.

    Returns the counts (1 zero class, odd classes of min norm 2, even
    classes of min norm 4) together with the per-class contents.
    """
    roots = enumerate_roots()
    norm4 = enumerate_norm4()
    odd: dict[tuple, list] = {}
    for v in roots:
        odd.setdefault(mod2_key(v), []).append(v)
    even: dict[tuple, list] = {}
    for v in norm4:
        even.setdefault(mod2_key(v), []).append(v)
    zero_key = tuple([0] * 8)
    if zero_key in odd or zero_key in even:
        raise ArithmeticError("a minimal vector reduced to the zero class")
    overlap = set(odd) & set(even)
    if overlap:
        raise ArithmeticError("a class has both norm-2 and norm-4 members")
    roots_per = {len(vs) for vs in odd.values()}
    norm4_per = {len(vs) for vs in even.values()}
    if roots_per != {2} or norm4_per != {16}:
        raise ArithmeticError(
            f"unexpected class contents: roots {roots_per}, norm4 {norm4_per}"
        )
    if 1 + len(odd) + len(even) != 256:
        raise ArithmeticError("classes do not fill E8/2E8")
    return {
        "zero": 1,
        "odd_classes": len(odd),
        "even_classes": len(even),
        "roots_per_odd_class": 2,
        "norm4_per_even_class": 16,
    }


def mod2_classes() -> list[Mod2Class]:
    """All 256 classes with canonical minimal representatives.

    The representative of a nonzero class is the lexicographically smallest
    dcoords tuple among its minimal-norm members.
    """
    reps: dict[tuple, Mod2Class] = {}
    zero = E8Vector([0] * 8)
    reps[mod2_key(zero)] = Mod2Class(zero, "zero", mod2_key(zero))
    for parity, vectors in (("odd", enumerate_roots()), ("even", enumerate_norm4())):
        best: dict[tuple, E8Vector] = {}
        for v in vectors:
            k = mod2_key(v)
            if k not in best or v.dcoords < best[k].dcoords:
                best[k] = v
        for k, v in best.items():
            reps[k] = Mod2Class(v, parity, k)
    return list(reps.values())


def theta_char_counts(g: int) -> tuple[int, int]:
    """(odd, even) theta-characteristic counts of a genus-g curve."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    return (2 ** (g - 1) * (2**g - 1), 2 ** (g - 1) * (2**g + 1))


def census_report() -> dict:
    """The headline integers, as one JSON-friendly report."""
    c = mod2_census()
    odd_theta, even_theta = theta_char_counts(4)
    return {
        "roots": len(enumerate_roots()),
        "norm4": len(enumerate_norm4()),
        "weyl_order": weyl_order(),
        "mod2": {"zero": c["zero"], "odd": c["odd_classes"], "even": c["even_classes"]},
        "theta": {"odd": odd_theta, "even": even_theta},
    }


def reflect(v: E8Vector, root: E8Vector) -> E8Vector:
    """Reflection of v in the hyperplane of a root (norm-2 vector)."""
    if root.norm() != 2:
        raise ValueError("reflections are taken in roots only")
    c = v.dot(root)
    return E8Vector(tuple(a - c * b for a, b in zip(v.dcoords, root.dcoords)))
