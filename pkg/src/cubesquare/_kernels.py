"""Hot kernels for the exhaustive cube-plus-square scans over F_q.

The scan enumerates all q^(d+1) candidate forms f of degree d, computes
C = F - f^3 coefficientwise mod q and tests C for perfect squareness by the
leading-coefficient recurrence.  Degree-12 scans (d = 4) touch q^5 candidates
and dominate the package's runtime, so the inner loop is JIT-compiled with
numba; a pure-numpy fallback implements the identical arithmetic and is
selected by setting the environment variable CUBESQUARE_NO_NUMBA (or
automatically when numba is unavailable).  Both paths are deterministic and
return identical, canonically sorted results; benchmarks/bench_decompose.py
compares them.
"""

from __future__ import annotations

import os

import numpy as np

_MAX_HITS = 8192

USE_NUMBA = not os.environ.get("CUBESQUARE_NO_NUMBA")
if USE_NUMBA:
    try:
        import numba
    except ImportError:  # pragma: no cover - mirror-less environments
        USE_NUMBA = False


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"


def sqrt_table(q: int) -> np.ndarray:
    """table[s] = canonical square root of s mod q (the smaller one), else -1."""
    table = np.full(q, -1, dtype=np.int64)
    for r in range(q):
        s = r * r % q
        c = min(r, q - r) if r else 0
        if table[s] < 0 or c < table[s]:
            table[s] = c
    return table


def _scan_python_reference(q, F, d, lo, hi):
    """Plain-Python reference of the scan (tests compare kernels against it)."""
    table = sqrt_table(q)
    nf, nF, gdeg = d + 1, 3 * d + 1, 3 * d // 2
    out = []
    for idx in range(lo, hi):
        c = []
        t = idx
        for _ in range(nf):
            c.append(t % q)
            t //= q
        s = [0] * (2 * d + 1)
        for u in range(nf):
            for v in range(nf):
                s[u + v] = (s[u + v] + c[u] * c[v]) % q
        cube = [0] * nF
        for u in range(2 * d + 1):
            for v in range(nf):
                cube[u + v] = (cube[u + v] + s[u] * c[v]) % q
        C = [(F[m] - cube[m]) % q for m in range(nF)]
        g = _square_root_desc(C, q, gdeg, table)
        if g is not None:
            out.append((tuple(c), tuple(g)))
    return out


def _square_root_desc(C, q, gdeg, table):
    """Square root of a descending coefficient list, or None."""
    j = 0
    while j < len(C) and C[j] == 0:
        j += 1
    if j == len(C):
        return [0] * (gdeg + 1)
    if j % 2:
        return None
    h = j // 2
    r = int(table[C[j]])
    if r < 0:
        return None
    gam = [0] * (gdeg + 1)
    gam[h] = r
    inv2r = pow(2 * r % q, -1, q)
    for i in range(h + 1, gdeg + 1):
        m = i + h
        acc = C[m]
        for u in range(h + 1, i):
            acc -= gam[u] * gam[m - u]
        gam[i] = acc % q * inv2r % q
    for m in range(len(C)):
        conv = 0
        for u in range(max(0, m - gdeg), min(gdeg, m) + 1):
            conv += gam[u] * gam[m - u]
        if conv % q != C[m]:
            return None
    return gam


if USE_NUMBA:

    @numba.njit(cache=True)
    def _scan_njit(q, F, d, lo, hi, table, out_f, out_g):  # pragma: no cover
        nf = d + 1
        nF = 3 * d + 1
        gdeg = (3 * d) // 2
        c = np.empty(nf, dtype=np.int64)
        s = np.empty(2 * d + 1, dtype=np.int64)
        cube = np.empty(nF, dtype=np.int64)
        gam = np.empty(gdeg + 1, dtype=np.int64)
        count = 0
        for idx in range(lo, hi):
            t = idx
            for k in range(nf):
                c[k] = t % q
                t //= q
            for m in range(2 * d + 1):
                s[m] = 0
            for u in range(nf):
                for v in range(nf):
                    s[u + v] += c[u] * c[v]
            for m in range(2 * d + 1):
                s[m] %= q
            for m in range(nF):
                cube[m] = 0
            for u in range(2 * d + 1):
                for v in range(nf):
                    cube[u + v] += s[u] * c[v]
            # C = F - cube, reduced
            for m in range(nF):
                cube[m] = (F[m] - cube[m]) % q
            # perfect-square test of the descending list `cube`
            j = 0
            while j < nF and cube[j] == 0:
                j += 1
            ok = True
            if j == nF:
                for i in range(gdeg + 1):
                    gam[i] = 0
            elif j % 2 == 1:
                ok = False
            else:
                h = j // 2
                r = table[cube[j]]
                if r < 0:
                    ok = False
                else:
                    for i in range(gdeg + 1):
                        gam[i] = 0
                    gam[h] = r
                    # modular inverse of 2r by Fermat
                    base = (2 * r) % q
                    e = q - 2
                    inv = 1
                    while e:
                        if e & 1:
                            inv = inv * base % q
                        base = base * base % q
                        e >>= 1
                    for i in range(h + 1, gdeg + 1):
                        m = i + h
                        acc = cube[m]
                        for u in range(h + 1, i):
                            acc -= gam[u] * gam[m - u]
                        gam[i] = acc % q * inv % q
                    for m in range(nF):
                        conv = 0
                        u0 = m - gdeg
                        if u0 < 0:
                            u0 = 0
                        u1 = gdeg
                        if m < gdeg:
                            u1 = m
                        for u in range(u0, u1 + 1):
                            conv += gam[u] * gam[m - u]
                        if conv % q != cube[m]:
                            ok = False
                            break
            if ok:
                if count >= out_f.shape[0]:
                    return -1
                for k in range(nf):
                    out_f[count, k] = c[k]
                for k in range(gdeg + 1):
                    out_g[count, k] = gam[k]
                count += 1
        return count


def _modpow_vec(base: np.ndarray, e: int, q: int) -> np.ndarray:
    out = np.ones_like(base)
    b = base % q
    while e:
        if e & 1:
            out = out * b % q
        b = b * b % q
        e >>= 1
    return out


def _scan_numpy(q, F, d, lo, hi, table):
    nf, nF, gdeg = d + 1, 3 * d + 1, 3 * d // 2
    idx = np.arange(lo, hi, dtype=np.int64)
    total = idx.shape[0]
    c = []
    t = idx.copy()
    for _ in range(nf):
        c.append(t % q)
        t //= q
    s = []
    for m in range(2 * d + 1):
        acc = np.zeros(total, dtype=np.int64)
        for u in range(max(0, m - d), min(d, m) + 1):
            acc += c[u] * c[m - u]
        s.append(acc % q)
    C = np.empty((total, nF), dtype=np.int64)
    for m in range(nF):
        acc = np.zeros(total, dtype=np.int64)
        for u in range(max(0, m - d), min(2 * d, m) + 1):
            acc += s[u] * c[m - u]
        C[:, m] = (int(F[m]) - acc) % q
    nz = C != 0
    first = np.where(nz.any(axis=1), nz.argmax(axis=1), nF)
    fmat = np.stack(c, axis=1)
    hits_f, hits_g, hit_rows = [], [], []

    rows0 = np.nonzero(first == nF)[0]
    if rows0.size:
        hits_f.append(fmat[rows0])
        hits_g.append(np.zeros((rows0.size, gdeg + 1), dtype=np.int64))
        hit_rows.append(rows0)

    for j in range(0, nF, 2):
        rows = np.nonzero(first == j)[0]
        if not rows.size:
            continue
        h = j // 2
        if h > gdeg:
            continue
        Cr = C[rows]
        r0 = table[Cr[:, j]]
        keep = r0 >= 0
        rows, Cr, r0 = rows[keep], Cr[keep], r0[keep]
        if not rows.size:
            continue
        gam = np.zeros((rows.size, gdeg + 1), dtype=np.int64)
        gam[:, h] = r0
        inv2r = _modpow_vec(2 * r0 % q, q - 2, q)
        for i in range(h + 1, gdeg + 1):
            m = i + h
            acc = Cr[:, m].copy()
            for u in range(h + 1, i):
                acc -= gam[:, u] * gam[:, m - u]
            gam[:, i] = acc % q * inv2r % q
        ok = np.ones(rows.size, dtype=bool)
        for m in range(nF):
            conv = np.zeros(rows.size, dtype=np.int64)
            for u in range(max(0, m - gdeg), min(gdeg, m) + 1):
                conv += gam[:, u] * gam[:, m - u]
            ok &= conv % q == Cr[:, m]
        rows, gam = rows[ok], gam[ok]
        if rows.size:
            hits_f.append(fmat[rows])
            hits_g.append(gam)
            hit_rows.append(rows)
    out = []
    for rows, fs, gs in zip(hit_rows, hits_f, hits_g):
        for r in range(rows.size):
            out.append((tuple(int(x) for x in fs[r]), tuple(int(x) for x in gs[r])))
    return out


_NUMPY_CHUNK = 1 << 19


def decompose_scan(q: int, F_desc, d: int, lo: int = 0, hi: int | None = None):
    """All (f, g) with f^3 + g^2 = F over F_q, f of degree <= d, g canonical.

    ``F_desc`` is the descending coefficient list of a degree-3d form; f and g
    come back as descending coefficient tuples (degrees d and 3d/2), with g
    the canonical square root (its leading value is the smaller residue).
    The companion pair (f, -g) is implied.  Results are sorted.
    """
    if d % 2:
        raise ValueError("coefficient degree must be even")
    nf = d + 1
    total = q**nf
    if hi is None:
        hi = total
    if not 0 <= lo <= hi <= total:
        raise ValueError("bad scan range")
    F = np.asarray([int(x) % q for x in F_desc], dtype=np.int64)
    if F.shape[0] != 3 * d + 1:
        raise ValueError("target form has the wrong degree")
    table = sqrt_table(q)
    if USE_NUMBA:
        out_f = np.empty((_MAX_HITS, nf), dtype=np.int64)
        out_g = np.empty((_MAX_HITS, 3 * d // 2 + 1), dtype=np.int64)
        n = _scan_njit(q, F, d, lo, hi, table, out_f, out_g)
        if n < 0:
            raise RuntimeError("scan hit buffer overflow; not a squarefree target?")
        pairs = [
            (tuple(int(x) for x in out_f[i]), tuple(int(x) for x in out_g[i]))
            for i in range(n)
        ]
    else:
        pairs = []
        for start in range(lo, hi, _NUMPY_CHUNK):
            pairs.extend(
                _scan_numpy(q, F, d, start, min(start + _NUMPY_CHUNK, hi), table)
            )
    pairs.sort()
    return pairs
