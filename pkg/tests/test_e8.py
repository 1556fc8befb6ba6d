import random

import numpy as np
import pytest

from cubesquare import e8
from cubesquare.e8 import E8Vector


def test_root_count_and_shapes():
    roots = e8.enumerate_roots()
    assert len(roots) == 240
    two_two = [v for v in roots if sorted(map(abs, v.dcoords)) == [0] * 6 + [2, 2]]
    all_odd = [v for v in roots if all(abs(c) == 1 for c in v.dcoords)]
    assert len(two_two) == 112 and len(all_odd) == 128
    assert all(v.norm() == 2 for v in roots)


def test_roots_closed_under_negation():
    roots = set(e8.enumerate_roots())
    assert {-v for v in roots} == roots
    norm4 = set(e8.enumerate_norm4())
    assert {-v for v in norm4} == norm4


def test_norm4_count_and_disjointness():
    norm4 = e8.enumerate_norm4()
    assert len(norm4) == 2160
    assert all(v.norm() == 4 for v in norm4)
    assert not (set(norm4) & set(e8.enumerate_roots()))


def test_root_inner_products_exhaustive():
    mat = np.array([v.dcoords for v in e8.enumerate_roots()], dtype=np.int64)
    grams = mat @ mat.T
    assert not (grams % 4).any()
    vals = set(np.unique(grams // 4).tolist())
    assert vals == {-2, -1, 0, 1, 2}


def test_root_system_reflections_exhaustive():
    # s_r(v) = v - <v,r> r permutes the root set, for every root r.
    roots = e8.enumerate_roots()
    mat = np.array([v.dcoords for v in roots], dtype=np.int64)
    root_set = {v.dcoords for v in roots}
    for r in roots:
        rv = np.array(r.dcoords, dtype=np.int64)
        coeff = (mat @ rv) // 4  # <v, r>, and <r,r> = 2 so 2<v,r>/<r,r> = <v,r>
        imgs = mat - coeff[:, None] * rv[None, :]
        assert {tuple(int(x) for x in row) for row in imgs} == root_set


def test_weyl_order():
    assert e8.weyl_order() == 696729600
    assert e8.weyl_order() == 2**14 * 3**5 * 5**2 * 7
    import math

    assert e8.weyl_order() // (math.factorial(8) * 2**7) == 135
    assert len(e8.enumerate_roots()) // 2 == 120


def test_mod2_census():
    c = e8.mod2_census()
    assert c == {
        "zero": 1,
        "odd_classes": 120,
        "even_classes": 135,
        "roots_per_odd_class": 2,
        "norm4_per_even_class": 16,
    }
    assert c["odd_classes"] + c["even_classes"] + 1 == 256


def test_mod2_reduction_is_homomorphism():
    rng = random.Random(0)
    roots = e8.enumerate_roots()
    norm4 = e8.enumerate_norm4()
    pool = roots + norm4
    for _ in range(1000):
        u = rng.choice(pool)
        v = rng.choice(pool)
        ku = e8.mod2_key(u)
        kv = e8.mod2_key(v)
        ksum = e8.mod2_key(u + v)
        assert ksum == tuple((a + b) % 2 for a, b in zip(ku, kv))


def test_same_class_iff_difference_in_2e8():
    rng = random.Random(1)
    pool = e8.enumerate_roots() + e8.enumerate_norm4()
    for _ in range(500):
        u, v = rng.choice(pool), rng.choice(pool)
        same = e8.mod2_key(u) == e8.mod2_key(v)
        halves = [(a - b) // 2 for a, b in zip(u.dcoords, v.dcoords)]
        exact = all((a - b) % 2 == 0 for a, b in zip(u.dcoords, v.dcoords))
        in_lattice = exact and e8.is_member_dcoords(halves)
        assert same == in_lattice


def test_quadratic_form_well_defined():
    # every representative of an odd class has norm = 2 mod 4, of an even
    # class norm = 0 mod 4: no class mixes parities (checked exhaustively).
    odd_keys = {e8.mod2_key(v) for v in e8.enumerate_roots()}
    even_keys = {e8.mod2_key(v) for v in e8.enumerate_norm4()}
    assert not odd_keys & even_keys
    assert all(v.norm() % 4 == 2 for v in e8.enumerate_roots())
    assert all(v.norm() % 4 == 0 for v in e8.enumerate_norm4())


def test_census_matches_covering_degrees():
    c = e8.mod2_census()
    assert c["odd_classes"] == 120  # tetragonal canonical-pencil cover
    assert c["even_classes"] == 135  # tetragonal hyperelliptic cover


def test_mod2_class_representatives_canonical():
    classes = e8.mod2_classes()
    assert len(classes) == 256
    parities = {}
    for cl in classes:
        parities[cl.parity] = parities.get(cl.parity, 0) + 1
        if cl.parity == "odd":
            assert cl.representative.norm() == 2
        if cl.parity == "even":
            assert cl.representative.norm() == 4
    assert parities == {"zero": 1, "odd": 120, "even": 135}


def test_theta_char_counts():
    assert e8.theta_char_counts(4) == (120, 136)
    assert e8.theta_char_counts(1) == (1, 3)
    odd, even = e8.theta_char_counts(4)
    assert odd + even == 256
    assert odd + (even - 1) == 255
    with pytest.raises(ValueError):
        e8.theta_char_counts(0)


def test_basis_is_unimodular():
    import math

    adj, det = e8._basis_solver()
    # dcoords scale the true coordinates by 2, so |det| = 2^8 exactly when
    # the true-coordinate basis matrix has determinant +-1.
    assert abs(det) == 256


def test_vector_validation():
    with pytest.raises(ValueError):
        E8Vector((1, 0, 0, 0, 0, 0, 0, 0))  # mixed parity
    with pytest.raises(ValueError):
        E8Vector((2, 2, 2, 0, 0, 0, 0, 0))  # sum = 6, not 0 mod 4
    v = E8Vector((1,) * 8)
    assert v.norm() == 2


def test_reflect():
    roots = e8.enumerate_roots()
    r = roots[0]
    assert e8.reflect(r, r) == -r
    v = roots[17]
    assert e8.reflect(e8.reflect(v, r), r) == v
