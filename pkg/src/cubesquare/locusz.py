"""The locus of degree-12 forms expressible as a cube plus a square.

Certificates pair a degree-12 form F with a decomposition F = f^3 + g^2;
planting builds certificates, verification re-checks them exactly.  Over a
small prime field the full fiber over F is computed by exhaustive scan
(every f of degree <= 4, perfect-square test on F - f^3), and raw pairs are
grouped into orbits of the torus action (f, g) -> (lam^2 f, lam^3 g) with
lam^6 = 1.  For a generic planted degree-12 form the scan returns exactly
one orbit; extra orbits are reported, never suppressed.  The documented
headline constants that are out of reach of a desk-scale computation live in
``constants_registry`` with provenance notes.
"""

from __future__ import annotations

from . import _kernels, binform
from .binform import BinForm
from .families import BPoint
from .fields import PrimeField, same_field
from .poly import PolyError

DEG12_SCAN_MAX_Q = 13
SEXTIC_SCAN_MAX_Q = 101


class ZCertificate:
    """A degree-12 form with a claimed cube-plus-square decomposition."""

    __slots__ = ("form", "point")

    def __init__(self, form: BinForm, point: BPoint):
        if form.degree != 12:
            raise PolyError("certificate form must have degree 12")
        same_field(form.field, point.field)
        if point.normalization != "monic":
            point = point.convert("monic")
        self.form = form
        self.point = point

    @property
    def field(self):
        return self.form.field


def plant(f: BinForm, g: BinForm) -> ZCertificate:
    """Certificate for F = f^3 + g^2 (deg f <= 4, deg g <= 6)."""
    point = BPoint(_pad(f, 4), _pad(g, 6), "monic")
    form = point.degree12()
    if form.is_zero:
        raise PolyError("f^3 + g^2 vanishes identically")
    return ZCertificate(form, point)


def _pad(form: BinForm, degree: int) -> BinForm:
    if form.degree == degree:
        return form
    if form.degree > degree:
        raise PolyError(f"degree {form.degree} exceeds {degree}")
    return BinForm.homogenize(form.dehomogenize(), degree)


def verify_certificate(cert: ZCertificate) -> dict:
    """Exact decomposition check plus squarefreeness; failures are diagnostics."""
    recomputed = cert.point.degree12()
    diff = recomputed - cert.form
    decomposes = diff.is_zero
    squarefree = (not cert.form.is_zero) and binform.is_squarefree(cert.form)
    diagnostics = []
    if not decomposes:
        diagnostics.append(
            "form minus f^3+g^2 is nonzero: "
            + " ".join(cert.field.format(c) for c in diff.coeffs)
        )
    if not squarefree:
        diagnostics.append("degree-12 form is not squarefree")
    return {
        "valid": decomposes and squarefree,
        "decomposes": decomposes,
        "squarefree": squarefree,
        "diagnostics": diagnostics,
    }


def mu6(field: PrimeField) -> list[int]:
    """The sixth roots of unity in F_q, ascending."""
    return sorted(x for x in range(1, field.p) if pow(x, 6, field.p) == 1)


class DecompositionOrbit:
    """One orbit of raw (f, g) pairs under (f, g) -> (lam^2 f, lam^3 g)."""

    __slots__ = ("field", "members")

    def __init__(self, field: PrimeField, members):
        self.field = field
        self.members = tuple(sorted(members))

    @property
    def representative(self):
        return self.members[0]

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return isinstance(other, DecompositionOrbit) and other.members == self.members

    def __hash__(self):
        return hash(self.members)

    def __repr__(self):
        return f"DecompositionOrbit(size={len(self.members)}, rep={self.representative})"

    def contains_pair(self, f_desc, g_desc) -> bool:
        f_desc = tuple(int(c) % self.field.p for c in f_desc)
        g_desc = tuple(int(c) % self.field.p for c in g_desc)
        return (f_desc, g_desc) in self.members


def _orbit_of(field: PrimeField, f_desc, g_desc, units) -> frozenset:
    p = field.p
    out = set()
    for lam in units:
        l2, l3 = lam * lam % p, pow(lam, 3, p)
        out.add(
            (
                tuple(c * l2 % p for c in f_desc),
                tuple(c * l3 % p for c in g_desc),
            )
        )
    return frozenset(out)


def _group_orbits(field: PrimeField, raw_pairs) -> list[DecompositionOrbit]:
    units = mu6(field)
    raw = set(raw_pairs)
    orbits = []
    seen = set()
    for pair in sorted(raw):
        if pair in seen:
            continue
        orbit = _orbit_of(field, pair[0], pair[1], units)
        if not orbit <= raw:
            raise PolyError(f"scan output not closed under the torus action at {pair}")
        seen |= orbit
        orbits.append(DecompositionOrbit(field, orbit))
    return sorted(orbits, key=lambda o: o.representative)


def _scan(form: BinForm, d: int, lo=0, hi=None) -> list[DecompositionOrbit]:
    field = form.field
    if not isinstance(field, PrimeField):
        raise PolyError("exhaustive decomposition runs over a prime field")
    q = field.p
    canonical = _kernels.decompose_scan(q, [int(c) for c in form.coeffs], d, lo, hi)
    raw = set()
    for f_desc, g_desc in canonical:
        raw.add((f_desc, g_desc))
        raw.add((f_desc, tuple(-c % q for c in g_desc)))
    return _group_orbits(field, raw)


def exhaustive_decompose_fq(form: BinForm) -> list[DecompositionOrbit]:
    """All cube-plus-square decompositions of a squarefree degree-12 form
    over F_q, q <= 13, as torus orbits (full q^5 scan)."""
    if form.degree != 12:
        raise PolyError("need a degree-12 form")
    field = form.field
    if not isinstance(field, PrimeField) or field.p > DEG12_SCAN_MAX_Q:
        raise PolyError(f"degree-12 scan limited to F_q with q <= {DEG12_SCAN_MAX_Q}")
    if not binform.is_squarefree(form):
        raise PolyError("degree-12 form is not squarefree")
    return _scan(form, 4)


def sextic_decompose_fq(form: BinForm) -> list[DecompositionOrbit]:
    """Same mechanism for squarefree sextics (deg f = 2, deg g = 3), q <= 101.

    The per-field orbit count is empirical data: it is a lower bound for the
    geometric count of essentially different decompositions and is not
    asserted to equal any particular value.
    """
    if form.degree != 6:
        raise PolyError("need a degree-6 form")
    field = form.field
    if not isinstance(field, PrimeField) or field.p > SEXTIC_SCAN_MAX_Q:
        raise PolyError(f"sextic scan limited to F_q with q <= {SEXTIC_SCAN_MAX_Q}")
    if not binform.is_squarefree(form):
        raise PolyError("sextic form is not squarefree")
    return _scan(form, 2)


def planted_scan_report(cert: ZCertificate) -> dict:
    """Scan the certificate's form and report whether exactly the planted
    orbit comes back; extra orbits are listed."""
    orbits = exhaustive_decompose_fq(cert.form)
    f_desc = [int(c) for c in cert.point.f.coeffs]
    g_desc = [int(c) for c in cert.point.g.coeffs]
    planted = [o for o in orbits if o.contains_pair(f_desc, g_desc)]
    if len(planted) != 1:
        raise PolyError("planted pair not found by the exhaustive scan")
    return {
        "orbits": len(orbits),
        "unique": len(orbits) == 1,
        "extra_orbits": [o.representative for o in orbits if o is not planted[0]],
    }


def constants_registry() -> dict:
    """Documented headline constants with provenance notes.

    These are recorded values whose full recomputation is out of scope at
    desk scale; each entry names the consistency shadow this package does
    test.
    """
    return {
        "deg_Z": {
            "value": 3762,
            "provenance": (
                "degree of the locus of degree-12 binary forms splitting as a "
                "cube plus a square, inside the P^12 of all degree-12 forms; "
                "documented constant, not recomputed here (the known "
                "derivations go through Hurwitz-space sheet counts); tested "
                "shadow: the birationality scan statistics (one orbit per "
                "generic planted form)"
            ),
        },
        "covering_degrees": {
            "value": {"C": 120, "D": 135},
            "provenance": (
                "sheet counts of the two tetragonal-data covers of the space "
                "of twelve-nodal fibrations; documented constants; tested "
                "shadow: the mod-2 class census 1 + 120 + 135 = 256 of the "
                "rank-8 even unimodular lattice"
            ),
        },
        "clebsch_sextic": {
            "value": 40,
            "provenance": (
                "number of essentially different cube-plus-square splittings "
                "of a general sextic form; documented constant; tested "
                "shadow: the per-field orbit histogram of the sextic scan "
                "(a lower bound per field, never asserted equal)"
            ),
        },
        "sections_disjoint": {
            "value": 240,
            "provenance": (
                "sections disjoint from the zero section = minimal vectors "
                "of the rank-8 lattice; reproduced exactly by enumeration"
            ),
        },
        "weyl": {
            "value": 696729600,
            "provenance": (
                "order of the rank-8 reflection group, 2^14 3^5 5^2 7; "
                "reproduced from the factorization and the degree product"
            ),
        },
        "theta": {
            "value": [120, 136],
            "provenance": (
                "odd/even theta-characteristic counts in genus 4; reproduced "
                "by the closed form 2^(g-1)(2^g -+ 1)"
            ),
        },
        "covers_255": {
            "value": 255,
            "provenance": (
                "connected unramified double covers of a genus-4 curve "
                "= 2^(2g) - 1; reproduced: 120 + 135 = 255"
            ),
        },
    }
