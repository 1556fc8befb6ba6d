"""The rank-10 lattice Z H + Z E0 + ... + Z E8 with signature (1, 9).

Intersection form: H.H = 1, Ei.Ei = -1, mixed products 0; canonical class
K = -3H + E0 + ... + E8.  Minimal sections are the 240 classes S with
S.S = -1, S.K = -1, S.E0 = 0; under the height pairing <S,T> = 1 - S.T
they realize the E8 root system, and an explicit isometry onto the e8
module's coordinates is constructed once and cached.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from . import e8


class LatticeError(ValueError):
    pass


class DivClass:
    """h H + e0 E0 + ... + e8 E8 with integer coefficients."""

    __slots__ = ("h", "e")

    def __init__(self, h: int, e):
        e = tuple(int(c) for c in e)
        if len(e) != 9:
            raise LatticeError("need 9 exceptional coefficients")
        self.h = int(h)
        self.e = e

    def __eq__(self, other):
        return isinstance(other, DivClass) and other.h == self.h and other.e == self.e

    def __hash__(self):
        return hash((self.h, self.e))

    def __repr__(self):
        return f"DivClass({self.h}, {self.e})"

    def __add__(self, other):
        return DivClass(self.h + other.h, [a + b for a, b in zip(self.e, other.e)])

    def __sub__(self, other):
        return DivClass(self.h - other.h, [a - b for a, b in zip(self.e, other.e)])

    def __neg__(self):
        return DivClass(-self.h, [-c for c in self.e])

    def scale(self, n: int):
        return DivClass(n * self.h, [n * c for c in self.e])

    def as_vector(self) -> tuple[int, ...]:
        return (self.h,) + self.e


H = DivClass(1, [0] * 9)


def E(i: int) -> DivClass:
    e = [0] * 9
    e[i] = 1
    return DivClass(0, e)


K = DivClass(-3, [1] * 9)
FIBER = -K  # the anticanonical fiber class 3H - E0 - ... - E8


def dot(d1: DivClass, d2: DivClass) -> int:
    return d1.h * d2.h - sum(a * b for a, b in zip(d1.e, d2.e))


def adjunction_genus(d: DivClass) -> int:
    """(D.D + D.K)/2 + 1; integral by the parity of the form."""
    tot = dot(d, d) + dot(d, K)
    if tot % 2:
        raise LatticeError("adjunction sum is odd; not a lattice class?")
    return tot // 2 + 1


class Constraint:
    """Either an intersection-number equality D.target = value or a genus."""

    def __init__(self, kind: str, value: int, target: DivClass | None = None):
        if kind not in ("dot", "genus"):
            raise LatticeError(f"unknown constraint kind {kind!r}")
        if kind == "dot" and target is None:
            raise LatticeError("dot constraint needs a target class")
        self.kind = kind
        self.value = int(value)
        self.target = target

    def satisfied(self, d: DivClass) -> bool:
        if self.kind == "dot":
            return dot(d, self.target) == self.value
        return adjunction_genus(d) == self.value


def solve_class(generators, constraints, box: int = 20):
    """All integer tuples (x_i), |x_i| <= box, with D = sum x_i G_i meeting the constraints.

    Exhaustive over the box; up to 3 generators.  Constraints are evaluated
    through precomputed pairings, so the scan is arithmetic on small ints.
    """
    n = len(generators)
    if not 1 <= n <= 3:
        raise LatticeError("solve_class takes 1 to 3 generators")
    gram = [[dot(a, b) for b in generators] for a in generators]
    kdots = [dot(g, K) for g in generators]
    lin = []  # (coefficients, value) for each dot constraint
    genus_targets = []
    for c in constraints:
        if c.kind == "dot":
            lin.append(([dot(g, c.target) for g in generators], c.value))
        else:
            genus_targets.append(c.value)
    sols = []
    rng = range(-box, box + 1)
    for xs in product(rng, repeat=n):
        ok = True
        for coeffs, val in lin:
            if sum(x * c for x, c in zip(xs, coeffs)) != val:
                ok = False
                break
        if not ok:
            continue
        if genus_targets:
            sq = sum(
                xs[i] * xs[j] * gram[i][j] for i in range(n) for j in range(n)
            )
            dk = sum(x * c for x, c in zip(xs, kdots))
            if (sq + dk) % 2:
                continue
            g = (sq + dk) // 2 + 1
            if any(g != t for t in genus_targets):
                continue
        sols.append(xs)
    if not sols:
        raise LatticeError(f"no solution with coefficients in [-{box}, {box}]")
    return sols


def _sum_e(indices) -> DivClass:
    e = [0] * 9
    for i in indices:
        e[i] = 1
    return DivClass(0, e)


def halving_class_systems() -> dict:
    """The three class computations for the fiberwise halving loci.

    Each entry: (generators, constraints, expected unique solution).

    * quartic 4-section through a chosen disjoint section pair
      (a canonical pencil of a genus-3 curve): aH + b(E0+E1) + cE,
      disjoint from E0, 4-section, genus 3  ->  (6, 0, -2).
    * two-torsion 3-section (theta pencil of a genus-4 curve):
      aH + b(E1+..+E8) + cE0, disjoint from E0, 3-section, genus 4
      ->  (9, -3, 0).
    * halving the class H - E0 (hyperelliptic genus-3 quintic with a
      triple point at the E0 base point): aH + bE0 + c(E1+..+E8),
      4-section, genus 3, triple point over E0 (D.E0 = 3)
      ->  (5, -3, -1).
    """
    E_28 = _sum_e(range(2, 9))
    E_18 = _sum_e(range(1, 9))
    return {
        "quartic_cover": (
            [H, E(0) + E(1), E_28],
            [
                Constraint("dot", 0, E(0)),
                Constraint("dot", 4, FIBER),
                Constraint("genus", 3),
            ],
            (6, 0, -2),
        ),
        "two_torsion": (
            [H, E_18, E(0)],
            [
                Constraint("dot", 0, E(0)),
                Constraint("dot", 3, FIBER),
                Constraint("genus", 4),
            ],
            (9, -3, 0),
        ),
        "quintic_triple_point": (
            [H, E(0), E_18],
            [
                Constraint("dot", 3, E(0)),
                Constraint("dot", 4, FIBER),
                Constraint("genus", 3),
            ],
            (5, -3, -1),
        ),
    }


def solve_halving_classes() -> dict:
    """Run the three systems; each must have a unique solution in the box."""
    out = {}
    for name, (gens, cons, expected) in halving_class_systems().items():
        sols = solve_class(gens, cons)
        if len(sols) != 1:
            raise LatticeError(f"system {name} not unique in the box: {sols}")
        if sols[0] != expected:
            raise LatticeError(f"system {name} solved to {sols[0]}, wanted {expected}")
        out[name] = sols[0]
    return out


# Search box for minimal sections.  The two constraints force h <= 7 by
# Cauchy-Schwarz ((1-3h)^2 <= 8(h^2+1)) and the occupied range is
# h in [0,6], e_i in [-3,1]; the box extends one step past that range so
# completeness is visible: nothing may sit on the open-side boundary.
_H_MAX = 7
_E_RANGE = (-4, 2)


@lru_cache(maxsize=None)
def enumerate_minimal_sections() -> tuple[DivClass, ...]:
    """The 240 classes with S.S = -1, S.K = -1, S.E0 = 0, by exhaustive search."""
    lo, hi = _E_RANGE
    width = hi - lo + 1
    total = width**8
    idx = np.arange(total, dtype=np.int64)
    flat = np.empty((total, 8), dtype=np.int8)
    sums = np.zeros(total, dtype=np.int64)
    sqs = np.zeros(total, dtype=np.int64)
    for k in range(8):
        col = idx % width
        idx //= width
        col += lo
        flat[:, k] = col
        sums += col
        sqs += col * col
    out = []
    for h in range(0, _H_MAX + 1):
        # S.E0 = -e0 = 0 forces e0 = 0; the remaining constraints:
        # S.K = -3h - sum(e) = -1  and  S.S = h^2 - sum(e^2) = -1.
        mask = (sums == 1 - 3 * h) & (sqs == h * h + 1)
        for row in flat[mask]:
            out.append(DivClass(h, [0] + [int(c) for c in row]))
    for s in out:
        if s.h == _H_MAX or any(c in _E_RANGE for c in s.e[1:]):
            raise LatticeError(f"solution {s} on the search-box boundary")
    if len(out) != 240:
        raise LatticeError(f"expected 240 minimal sections, found {len(out)}")
    return tuple(sorted(out, key=lambda s: s.as_vector()))


def lattice_height(s: DivClass, t: DivClass) -> int:
    """<S,T> = 1 + S.E0 + T.E0 - S.T on section classes (here S.E0 = 0)."""
    for c in (s, t):
        if dot(c, c) != -1 or dot(c, K) != -1 or dot(c, E(0)) != 0:
            raise LatticeError(f"{c} is not a minimal section class")
    return 1 + dot(s, E(0)) + dot(t, E(0)) - dot(s, t)


def section_h_census() -> dict[int, int]:
    census: dict[int, int] = {}
    for s in enumerate_minimal_sections():
        census[s.h] = census.get(s.h, 0) + 1
    return census


def mw_image(s: DivClass) -> DivClass:
    """Projection S -> S - E0 + K, a (-2)-class orthogonal to K and E0.

    <S,T> = -(mw_image(S) . mw_image(T)): the height pairing is minus the
    induced negative-definite form on the orthogonal complement of (K, E0).
    """
    return s - E(0) + K


# Simple (-2)-classes orthogonal to K and E0 forming an E8 diagram:
# a chain E1-E2, ..., E7-E8 with H-E1-E2-E3 attached at the third node.
def simple_roots_pic() -> list[DivClass]:
    roots = [E(i) - E(i + 1) for i in range(1, 8)]
    roots.append(H - E(1) - E(2) - E(3))
    return roots


def _cartan_from(vectors, pairing) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(pairing(a, b) for b in vectors) for a in vectors)


def _match_simple_roots_e8(target_gram):
    """Find E8 roots (as e8.E8Vector) with the given positive Gram matrix."""
    roots = e8.enumerate_roots()
    dots = {}

    def pair(u, v):
        key = (id(u), id(v))
        if key not in dots:
            dots[key] = u.dot(v)
        return dots[key]

    n = len(target_gram)
    chosen: list = []

    def extend(k: int) -> bool:
        if k == n:
            return True
        for cand in roots:
            ok = True
            for i, prev in enumerate(chosen):
                if pair(prev, cand) != target_gram[i][k]:
                    ok = False
                    break
            if ok and cand.norm() == target_gram[k][k]:
                chosen.append(cand)
                if extend(k + 1):
                    return True
                chosen.pop()
        return False

    if not extend(0):
        raise LatticeError("no matching simple-root octuple in E8")
    return chosen


def _invert_unimodular(gram):
    """Exact inverse of an integer matrix with determinant +-1."""
    from fractions import Fraction

    n = len(gram)
    aug = [
        [Fraction(gram[i][j]) for j in range(n)]
        + [Fraction(int(i == j)) for j in range(n)]
        for i in range(n)
    ]
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
    if det not in (1, -1):
        raise LatticeError(f"Gram determinant {det}, expected a unit")
    out = [[aug[i][n + j] for j in range(n)] for i in range(n)]
    for row in out:
        for c in row:
            if c.denominator != 1:
                raise LatticeError("inverse not integral")
    return [[int(c) for c in row] for row in out]


@lru_cache(maxsize=None)
def section_isometry():
    """An explicit pairing-preserving bijection of the 240 section classes
    onto the 240 E8 roots.

    Returns (mapping, basis_pic, basis_e8) where mapping is a dict
    DivClass -> E8Vector.  Any valid isometry is acceptable; this one sends
    mw_image(S) to its coordinates in a fixed simple-root basis.
    """
    basis_pic = simple_roots_pic()
    gram = _cartan_from(basis_pic, lambda a, b: -dot(a, b))
    basis_e8 = _match_simple_roots_e8(gram)
    gram_inv = _invert_unimodular(gram)

    sections = enumerate_minimal_sections()
    root_set = set(e8.enumerate_roots())
    mapping = {}
    for s in sections:
        phi = mw_image(s)
        pairings = [-dot(phi, r) for r in basis_pic]
        coords = [
            sum(gram_inv[i][j] * pairings[j] for j in range(8)) for i in range(8)
        ]
        img = [0] * 8
        for c, rv in zip(coords, basis_e8):
            for k in range(8):
                img[k] += c * rv.dcoords[k]
        vec = e8.E8Vector(img)
        if vec not in root_set:
            raise LatticeError(f"image of {s} is not an E8 root")
        mapping[s] = vec
    if len(set(mapping.values())) != 240:
        raise LatticeError("isometry is not injective on the 240 classes")
    return mapping, tuple(basis_pic), tuple(basis_e8)


def verify_isometry() -> bool:
    """Check the full 240 x 240 Gram data transports along the isometry."""
    mapping, _, _ = section_isometry()
    sections = list(mapping)
    vecs = np.array([mapping[s].dcoords for s in sections], dtype=np.int64)
    e8_gram = vecs @ vecs.T
    if (e8_gram % 4).any():
        raise LatticeError("non-integral E8 pairings")
    e8_gram //= 4
    pic = np.array([mw_image(s).as_vector() for s in sections], dtype=np.int64)
    signs = np.ones(10, dtype=np.int64)
    signs[1:] = -1
    pic_gram = -((pic * signs) @ pic.T)
    return bool((e8_gram == pic_gram).all())


def negation_involution(s: DivClass) -> DivClass:
    """The section class pairing with s under fiberwise inversion.

    In lattice terms the unique minimal section mapping to -root under the
    isometry: S' = -S + 2E0 - 2K.
    """
    return -s + E(0).scale(2) - K.scale(2)


def reflect(d: DivClass, root: DivClass) -> DivClass:
    """Reflection in a (-2)-class orthogonal to K."""
    if dot(root, root) != -2:
        raise LatticeError("reflection needs a (-2)-class")
    return d + root.scale(dot(d, root))


def _integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of the integer kernel {v : M v = 0} via column reduction.

    Column operations are unimodular, so the zero columns of the transform
    give a saturated kernel basis.
    """
    m = [row[:] for row in rows]
    nrows, ncols = len(m), len(m[0])
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def col(j):
        return [m[i][j] for i in range(nrows)]

    def addcol(dst, src, c):
        for i in range(nrows):
            m[i][dst] += c * m[i][src]
        for i in range(ncols):
            u[i][dst] += c * u[i][src]

    def swapcol(a, b):
        for i in range(nrows):
            m[i][a], m[i][b] = m[i][b], m[i][a]
        for i in range(ncols):
            u[i][a], u[i][b] = u[i][b], u[i][a]

    pivot_col = 0
    for r in range(nrows):
        if pivot_col >= ncols:
            break
        # Reduce row r over columns >= pivot_col to a single nonzero entry.
        while True:
            nz = [j for j in range(pivot_col, ncols) if m[r][j] != 0]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(m[r][j]))
            swapcol(pivot_col, jmin)
            done = True
            for j in range(pivot_col + 1, ncols):
                if m[r][j] != 0:
                    addcol(j, pivot_col, -(m[r][j] // m[r][pivot_col]))
                    if m[r][j] != 0:
                        done = False
            if done:
                pivot_col += 1
                break
    kernel = []
    for j in range(ncols):
        if all(m[i][j] == 0 for i in range(nrows)):
            kernel.append([u[i][j] for i in range(ncols)])
    return kernel


def reconstruct_e0(octuple) -> DivClass:
    """Recover E0 from eight pairwise-orthogonal (-1)-classes.

    The orthogonal complement of the octuple is a rank-2 unimodular lattice
    of signature (1,1); the class with square -1 and K-degree -1 in it is
    unique, and the sign normalization D.(-K) = 1 picks the effective one.
    """
    octuple = list(octuple)
    if len(octuple) != 8:
        raise LatticeError("need exactly 8 classes")
    for i, a in enumerate(octuple):
        if dot(a, a) != -1:
            raise LatticeError(f"class {i} has square {dot(a, a)}, expected -1")
        for b in octuple[i + 1 :]:
            if dot(a, b) != 0:
                raise LatticeError("classes are not pairwise orthogonal")
    # M v = 0 where M[i][j] = (octuple_i . basis_j), basis = H, E0..E8.
    signs = [1] + [-1] * 9
    rows = [[v * s for v, s in zip(a.as_vector(), signs)] for a in octuple]
    kernel = _integer_kernel(rows)
    if len(kernel) != 2:
        raise LatticeError(f"complement has rank {len(kernel)}, expected 2")
    v1 = DivClass(kernel[0][0], kernel[0][1:])
    v2 = DivClass(kernel[1][0], kernel[1][1:])
    a, b, c = dot(v1, v1), dot(v1, v2), dot(v2, v2)
    if a * c - b * b != -1:
        raise LatticeError(
            f"complement Gram has determinant {a * c - b * b}, expected -1"
        )
    # Solve  x v1 + y v2 =: D  with  D.K = -1  and  D.D = -1.
    ka, kb = dot(v1, K), dot(v2, K)
    g, x0, y0 = _extended_gcd(ka, kb)
    if g == 0 or -1 % g:
        raise LatticeError("no class with K-degree -1 in the complement")
    x0, y0 = x0 * (-1 // g), y0 * (-1 // g)
    # General solution: x = x0 + t kb/g, y = y0 - t ka/g.
    sb, sa = kb // g, ka // g
    # Quadratic in t from D.D = -1.
    qa = a * sb * sb - 2 * b * sb * sa + c * sa * sa
    qb = 2 * (a * x0 * sb + b * (y0 * sb - x0 * sa) - c * y0 * sa)
    qc = a * x0 * x0 + 2 * b * x0 * y0 + c * y0 * y0 + 1
    sols = []
    for t in _integer_quadratic_roots(qa, qb, qc):
        x, y = x0 + t * sb, y0 - t * sa
        d = v1.scale(x) + v2.scale(y)
        if dot(d, d) == -1 and dot(d, K) == -1 and all(
            dot(d, o) == 0 for o in octuple
        ):
            sols.append(d)
    uniq = {s.as_vector() for s in sols}
    if len(uniq) != 1:
        raise LatticeError(f"expected a unique reconstruction, got {sorted(uniq)}")
    return sols[0]


def _extended_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _integer_quadratic_roots(a: int, b: int, c: int):
    from math import isqrt

    if a == 0:
        if b == 0:
            raise LatticeError("degenerate quadratic in the reconstruction")
        if c % b == 0:
            return [-c // b]
        return []
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    out = []
    for num in (-b + r, -b - r):
        if num % (2 * a) == 0:
            out.append(num // (2 * a))
    return sorted(set(out))


def mod2_section_classes() -> int:
    """Number of classes of the 240 sections modulo twice the section lattice."""
    mapping, _, _ = section_isometry()
    return len({e8.mod2_key(v) for v in mapping.values()})


def intersection_examples() -> dict:
    """The two headline intersection numbers of the genus-4 two-torsion curve
    against the quartic-cover and quintic halving curves."""
    two_torsion = DivClass(9, [0] + [-3] * 8)
    quartic_cover = DivClass(6, [0, 0] + [-2] * 7)
    quintic = DivClass(5, [-3] + [-1] * 8)
    return {
        "two_torsion_vs_quartic_cover": dot(two_torsion, quartic_cover),
        "two_torsion_vs_quintic": dot(two_torsion, quintic),
        "genus": {
            "two_torsion": adjunction_genus(two_torsion),
            "quartic_cover": adjunction_genus(quartic_cover),
            "quintic": adjunction_genus(quintic),
        },
    }
