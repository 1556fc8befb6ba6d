"""The trigonal construction as exact combinatorics on monodromy tuples.

A branched cover of the line is encoded by its Hurwitz tuple: one permutation
per branch point, multiplying (left to right) to the identity, transitive
when the cover is connected.  A simply branched quadruple cover maps to a
triple cover (the action on the three pair-partitions ab+cd, ac+bd, ad+bc)
plus an everywhere-unramified double cover of it (the action on the six
2-subsets); the reverse direction goes through the octahedron whose four
pairs of opposite faces are the four recovered sheets.

Labeling conventions are fixed constants of this module (the symbol orders
below and the octahedron incidence table); round-trip correctness up to a
global relabeling is the contract that matters.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations, product


class MonodromyError(ValueError):
    pass


class Perm:
    """A permutation of {0, ..., n-1} in one-line notation (internally 0-based)."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise MonodromyError(f"not a permutation: {images}")
        self.images = images

    @classmethod
    def identity(cls, n: int):
        return cls(range(n))

    @classmethod
    def transposition(cls, n: int, i: int, j: int):
        im = list(range(n))
        im[i], im[j] = j, i
        return cls(im)

    @classmethod
    def from_one_indexed(cls, images):
        return cls([i - 1 for i in images])

    def to_one_indexed(self) -> list[int]:
        return [i + 1 for i in self.images]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        """Left-to-right composition: (p * q)(i) = q(p(i))."""
        if other.n != self.n:
            raise MonodromyError("degree mismatch")
        return Perm(tuple(other.images[x] for x in self.images))

    def inverse(self) -> "Perm":
        out = [0] * self.n
        for i, x in enumerate(self.images):
            out[x] = i
        return Perm(out)

    def __eq__(self, other):
        return isinstance(other, Perm) and other.images == self.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.to_one_indexed()}"

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self.images))

    def is_transposition(self) -> bool:
        moved = [i for i, x in enumerate(self.images) if x != i]
        return len(moved) == 2

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def conjugate(self, g: "Perm") -> "Perm":
        """g^-1 * self * g in the left-to-right convention."""
        return g.inverse() * self * g


class HurwitzTuple:
    """An ordered tuple of permutations with product (left to right) = identity."""

    __slots__ = ("degree", "perms", "_transitive")

    def __init__(self, degree: int, perms):
        perms = tuple(perms)
        for p in perms:
            if p.n != degree:
                raise MonodromyError("permutation degree mismatch")
        prod_p = Perm.identity(degree)
        for p in perms:
            prod_p = prod_p * p
        if not prod_p.is_identity():
            raise MonodromyError("tuple product is not the identity")
        self.degree = degree
        self.perms = perms
        self._transitive = _orbits_count(degree, perms) == 1

    @property
    def is_transitive(self) -> bool:
        return self._transitive

    def __eq__(self, other):
        return (
            isinstance(other, HurwitzTuple)
            and other.degree == self.degree
            and other.perms == self.perms
        )

    def __repr__(self):
        return f"HurwitzTuple(n={self.degree}, k={len(self.perms)})"

    def conjugate(self, g: Perm) -> "HurwitzTuple":
        return HurwitzTuple(self.degree, [p.conjugate(g) for p in self.perms])


def _orbits_count(n: int, perms) -> int:
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for p in perms:
        for i, x in enumerate(p.images):
            ra, rb = find(i), find(x)
            if ra != rb:
                parent[ra] = rb
    return len({find(i) for i in range(n)})


def rh_genus(t: HurwitzTuple) -> int:
    """Genus from 2 - 2g = 2n - sum over entries of (n - #cycles)."""
    if not t.is_transitive:
        raise MonodromyError("genus undefined for a disconnected cover")
    n = t.degree
    ram = sum(n - len(p.cycles()) for p in t.perms)
    chi = 2 * n - ram
    if chi % 2:
        raise MonodromyError("odd Euler characteristic; bad tuple")
    return (2 - chi) // 2


# Sheets of the quadruple cover are a,b,c,d = 0,1,2,3.  Fixed symbol orders:
_PAIR_PARTITIONS = (
    frozenset({frozenset({0, 1}), frozenset({2, 3})}),  # ab+cd
    frozenset({frozenset({0, 2}), frozenset({1, 3})}),  # ac+bd
    frozenset({frozenset({0, 3}), frozenset({1, 2})}),  # ad+bc
)
_TWO_SUBSETS = (
    frozenset({0, 1}),  # {a,b}
    frozenset({2, 3}),  # {c,d}
    frozenset({0, 2}),  # {a,c}
    frozenset({1, 3}),  # {b,d}
    frozenset({0, 3}),  # {a,d}
    frozenset({1, 2}),  # {b,c}
)
# Opposite pairs of octahedron vertices, in the order x, y, z.
_OPPOSITE = ((0, 1), (2, 3), (4, 5))


def s4_to_s3(p: Perm) -> Perm:
    """Induced action on the three pair-partitions (the Klein-four quotient)."""
    if p.n != 4:
        raise MonodromyError("s4_to_s3 needs degree 4")
    images = []
    for part in _PAIR_PARTITIONS:
        moved = frozenset(
            frozenset(p(i) for i in block) for block in part
        )
        images.append(_PAIR_PARTITIONS.index(moved))
    return Perm(images)


def s4_to_s6(p: Perm) -> Perm:
    """Induced action on the six 2-subsets of the sheets."""
    if p.n != 4:
        raise MonodromyError("s4_to_s6 needs degree 4")
    images = []
    for sub in _TWO_SUBSETS:
        images.append(_TWO_SUBSETS.index(frozenset(p(i) for i in sub)))
    return Perm(images)


def forward(t: HurwitzTuple) -> tuple[HurwitzTuple, HurwitzTuple]:
    """Quadruple cover -> (triple cover, its unramified double cover).

    Input entries must all be transpositions (simple branching) and the
    tuple transitive.  The triple image must again be transitive and
    consists of transpositions over the same branch points; the degree-6
    tuple is the etale double cover, certified by 2-2g_S = 2(2-2g_C).
    """
    if t.degree != 4:
        raise MonodromyError("forward needs a tuple on 4 sheets")
    if not t.is_transitive:
        raise MonodromyError("disconnected quadruple cover")
    if not all(p.is_transposition() for p in t.perms):
        raise MonodromyError("branching is not simple (non-transposition entry)")
    triple = HurwitzTuple(3, [s4_to_s3(p) for p in t.perms])
    sextic = HurwitzTuple(6, [s4_to_s6(p) for p in t.perms])
    if not all(p.is_transposition() for p in triple.perms):
        raise MonodromyError("triple image not simply branched")
    if not triple.is_transitive:
        raise MonodromyError("triple image not transitive")
    if not sextic.is_transitive:
        raise MonodromyError("double cover disconnected")
    g_c, g_s = rh_genus(triple), rh_genus(sextic)
    if 2 - 2 * g_s != 2 * (2 - 2 * g_c):
        raise MonodromyError("double cover is not etale (Euler characteristic)")
    return triple, sextic


def _vertex_pair(v: int) -> int:
    for k, (a, b) in enumerate(_OPPOSITE):
        if v in (a, b):
            return k
    raise MonodromyError(f"bad vertex {v}")


def _opposite_vertex(v: int) -> int:
    for a, b in _OPPOSITE:
        if v == a:
            return b
        if v == b:
            return a
    raise MonodromyError(f"bad vertex {v}")


# The eight octahedron faces: one vertex from each opposite pair.
_FACES = tuple(
    frozenset({x, y, z})
    for x in _OPPOSITE[0]
    for y in _OPPOSITE[1]
    for z in _OPPOSITE[2]
)


def _opposite_face(face: frozenset) -> frozenset:
    return frozenset(_opposite_vertex(v) for v in face)


# Face pairs in a fixed order; the pair of a face is the index of the member
# containing vertex 0 = x'.
_FACE_PAIRS = tuple(f for f in _FACES if 0 in f)


def _face_pair_index(face: frozenset) -> int:
    if 0 not in face:
        face = _opposite_face(face)
    return _FACE_PAIRS.index(face)


def reverse(triple: HurwitzTuple, lift: HurwitzTuple) -> HurwitzTuple:
    """(triple cover, etale double cover) -> quadruple cover.

    The six sheets of the lift are octahedron vertices x',x'',y',y'',z',z''
    (opposite pairs (0,1), (2,3), (4,5)) lying over the triple cover's sheets
    x, y, z; the output is the induced action on the four pairs of opposite
    faces.  Inverse to ``forward`` up to a global relabeling of the sheets.
    """
    if triple.degree != 3 or lift.degree != 6:
        raise MonodromyError("reverse needs degrees (3, 6)")
    if len(triple.perms) != len(lift.perms):
        raise MonodromyError("branch-point counts differ")
    if not triple.is_transitive:
        raise MonodromyError("triple cover disconnected")
    if not lift.is_transitive:
        raise MonodromyError("double cover disconnected (split lift)")
    for p3, p6 in zip(triple.perms, lift.perms):
        # Projection: vertex pairs must map according to the triple tuple.
        for v in range(6):
            if _vertex_pair(p6(v)) != p3(_vertex_pair(v)):
                raise MonodromyError("lift does not project to the triple tuple")
        # Etale: the two vertices over a sheet are never glued along a cycle,
        # i.e. every cycle of p3 is covered by two cycles of equal length.
        for cyc in p3.cycles():
            covering = [c for c in p6.cycles() if _vertex_pair(c[0]) in cyc]
            lengths = sorted(len(c) for c in covering)
            if lengths != [len(cyc), len(cyc)]:
                raise MonodromyError("lift is ramified over a branch point")
    out = []
    for p6 in lift.perms:
        images = []
        for pair_idx in range(4):
            face = _FACE_PAIRS[pair_idx]
            img_face = frozenset(p6(v) for v in face)
            images.append(_face_pair_index(img_face))
        out.append(Perm(images))
    result = HurwitzTuple(4, out)
    if not all(p.is_transposition() for p in result.perms):
        raise MonodromyError("reverse output not simply branched")
    if not result.is_transitive:
        raise MonodromyError("reverse output disconnected")
    return result


def find_conjugator(a: HurwitzTuple, b: HurwitzTuple):
    """A permutation g with a.conjugate(g) == b, or None."""
    if a.degree != b.degree or len(a.perms) != len(b.perms):
        return None
    for images in permutations(range(a.degree)):
        g = Perm(images)
        if all(p.conjugate(g) == q for p, q in zip(a.perms, b.perms)):
            return g
    return None


def random_tuple(n: int = 4, k: int = 12, seed: int = 0, rng=None) -> HurwitzTuple:
    """A random transitive k-transposition tuple with identity product.

    Rejection sampling: draw k-1 uniform transpositions, accept when their
    product is itself a transposition, close up with its inverse, then
    require transitivity.  Deterministic for a given seed.
    """
    if k < 2 or (n == 4 and k % 2):
        raise MonodromyError("no such transposition tuples (parity)")
    if rng is None:
        rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    while True:
        draws = [
            Perm.transposition(n, *rng.choice(pairs)) for _ in range(k - 1)
        ]
        prod_p = Perm.identity(n)
        for p in draws:
            prod_p = prod_p * p
        if not prod_p.is_transposition():
            continue
        draws.append(prod_p.inverse())
        t = HurwitzTuple(n, draws)
        if t.is_transitive:
            return t


# Character tables on the transposition class, as (dimension, value) pairs.
_CHARS = {
    3: ((1, 1), (1, -1), (2, 0)),
    4: ((1, 1), (1, -1), (2, 0), (3, 1), (3, -1)),
}
_CLASS_SIZE = {3: 3, 4: 6}
_GROUP_ORDER = {3: 6, 4: 24}


def frobenius_count(n: int, k: int) -> int:
    """Number of k-tuples of transpositions in S_n with product identity.

    (|C|^k / |G|) * sum over irreducibles of chi(c)^k / chi(1)^(k-2);
    transitivity is not imposed.
    """
    if n not in _CHARS:
        raise MonodromyError(f"unsupported symmetric group S_{n}")
    total = Fraction(0)
    for dim, val in _CHARS[n]:
        total += Fraction(val, 1) ** k / Fraction(dim) ** (k - 2)
    count = Fraction(_CLASS_SIZE[n]) ** k / _GROUP_ORDER[n] * total
    if count.denominator != 1:
        raise MonodromyError("character sum did not come out integral")
    return int(count)


def brute_force_tuple_count(n: int, k: int) -> int:
    """Exhaustive count of identity-product transposition k-tuples (small k)."""
    transpositions = [
        Perm.transposition(n, i, j) for i, j in combinations(range(n), 2)
    ]
    count = 0
    for combo in product(transpositions, repeat=k):
        prod_p = Perm.identity(n)
        for p in combo:
            prod_p = prod_p * p
        if prod_p.is_identity():
            count += 1
    return count


def genus_triple(t: HurwitzTuple) -> tuple[int, int, int]:
    """(g_Q, g_C, g_S) for a 12-transposition quadruple-cover tuple."""
    triple, sextic = forward(t)
    return rh_genus(t), rh_genus(triple), rh_genus(sextic)


def roundtrip_check(t: HurwitzTuple):
    """forward then reverse; returns the recovered conjugator g (never None
    for valid input) with reverse(forward(t)) == t.conjugate(g)."""
    triple, sextic = forward(t)
    back = reverse(triple, sextic)
    g = find_conjugator(t, back)
    if g is None:
        raise MonodromyError("round trip left the S4-conjugacy class")
    return g
