"""Search for the lexicographically smallest irreducible polynomial of degree d.

Candidates x^d + ell are scanned with ell ascending.  A sieve first crosses
out every ell giving a small irreducible factor g (g divides x^d + ell
exactly when ell is in the residue class of x^d mod g), then survivors get
the full test: x^(2^d) == x mod f plus gcd(x^(2^(d/q)) - x, f) = 1 for each
prime q dividing d.

Every surviving candidate is sparse (ell below the sieve bound), so one
modular squaring is a table-driven bit spread plus a dozen shifted XORs.
The ladder runs as a numba kernel on uint64 words; a pure-int fallback
keeps the module importable without numba (slow above a few hundred bits).
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f
        return wrap


U64 = np.uint64


def _build_spread16() -> np.ndarray:
    """16-bit value -> 32-bit value with a zero interleaved after every bit."""
    v = np.arange(65536, dtype=np.uint64)
    v = (v | (v << U64(8))) & U64(0x00FF00FF)
    v = (v | (v << U64(4))) & U64(0x0F0F0F0F)
    v = (v | (v << U64(2))) & U64(0x33333333)
    v = (v | (v << U64(1))) & U64(0x55555555)
    return v


_SPREAD16 = _build_spread16()


@njit(cache=True)
def _clmul_small(a, b):
    r = U64(0)
    a = U64(a)
    b = U64(b)
    while b:
        if b & U64(1):
            r ^= a
        a <<= U64(1)
        b >>= U64(1)
    return r


@njit(cache=True)
def _deg_small(g):
    d = -1
    g = U64(g)
    while g:
        g >>= U64(1)
        d += 1
    return d


@njit(cache=True)
def _powmod_x_small(exp, g):
    """x^exp mod g for a small polynomial g."""
    dg = _deg_small(g)
    gu = U64(g)
    r = U64(1)
    nb = 0
    t = exp
    while t:
        t >>= 1
        nb += 1
    for i in range(nb - 1, -1, -1):
        r = _clmul_small(r, r)
        rb = 2 * dg
        while rb >= dg:
            if r & (U64(1) << U64(rb)):
                r ^= gu << U64(rb - dg)
            rb -= 1
        if (exp >> i) & 1:
            r <<= U64(1)
            if r & (U64(1) << U64(dg)):
                r ^= gu
    return r


@njit(cache=True)
def _sieve_kernel(d, bound_bits, bad):
    """Mark lower parts ell < 2^bound_bits whose x^d + ell has a factor of
    degree <= bound_bits."""
    B = bound_bits
    nb = 1 << (B + 1)
    comp = np.zeros(nb, dtype=np.uint8)
    for g in range(2, nb):
        if comp[g]:
            continue
        dg = _deg_small(g)
        maxh = 1 << (B - dg + 1)
        for h in range(2, maxh):
            prod = _clmul_small(g, h)
            if prod < U64(nb):
                comp[prod] = 1
        rho = _powmod_x_small(d, g)
        for s in range(1 << (B - dg)):
            ell = rho ^ _clmul_small(g, s)
            if ell < U64(1 << B):
                bad[ell] = 1


@njit(cache=True)
def _sqr_into(src, dst, nw_src, tab):
    m16 = U64(0xFFFF)
    for i in range(nw_src):
        x = src[i]
        dst[2 * i] = tab[x & m16] | (tab[(x >> U64(16)) & m16] << U64(32))
        dst[2 * i + 1] = tab[(x >> U64(32)) & m16] | (tab[(x >> U64(48)) & m16] << U64(32))


@njit(cache=True)
def _fold_sparse(buf, nbw, d, ell, high):
    """Reduce buf (degree < 2d) modulo x^d + ell in place; ell is small."""
    wd = d >> 6
    rd = d & 63
    for _pass in range(2):
        nh = nbw - wd
        if rd == 0:
            for w in range(nh):
                high[w] = buf[wd + w]
        else:
            for w in range(nh):
                v = buf[wd + w] >> U64(rd)
                if wd + w + 1 < nbw:
                    v |= buf[wd + w + 1] << U64(64 - rd)
                high[w] = v
        any_high = False
        for w in range(nh):
            if high[w]:
                any_high = True
                break
        if not any_high:
            return
        if rd:
            buf[wd] &= (U64(1) << U64(rd)) - U64(1)
            for w in range(wd + 1, nbw):
                buf[w] = U64(0)
        else:
            for w in range(wd, nbw):
                buf[w] = U64(0)
        e = ell
        j = 0
        while e:
            if e & 1:
                wj = j >> 6
                rj = j & 63
                if rj == 0:
                    for w in range(nh):
                        buf[w + wj] ^= high[w]
                else:
                    carry = U64(0)
                    for w in range(nh):
                        v = high[w]
                        buf[w + wj] ^= (v << U64(rj)) | carry
                        carry = v >> U64(64 - rj)
                    buf[nh + wj] ^= carry
            e >>= 1
            j += 1


@njit(cache=True)
def _deg_words(a, nw):
    for w in range(nw - 1, -1, -1):
        if a[w]:
            return 64 * w + _deg_small(a[w])
    return -1


@njit(cache=True)
def _xor_shifted(dst, src, shift, nw):
    wj = shift >> 6
    rj = shift & 63
    if rj == 0:
        for w in range(nw - wj):
            dst[w + wj] ^= src[w]
    else:
        carry = U64(0)
        for w in range(nw - wj):
            v = src[w]
            dst[w + wj] ^= (v << U64(rj)) | carry
            carry = v >> U64(64 - rj)


@njit(cache=True)
def _gcd_is_one(a, b, nw):
    """gcd of the two word polynomials equals 1?  Destroys both arguments."""
    while True:
        db = _deg_words(b, nw)
        if db < 0:
            return _deg_words(a, nw) == 0
        da = _deg_words(a, nw)
        if da < db:
            for w in range(nw):
                t = a[w]
                a[w] = b[w]
                b[w] = t
            da, db = db, da
        _xor_shifted(a, b, da - db, nw)


@njit(cache=True)
def _rabin_scan_kernel(d, qexps, tab, bad, ell_lo, ell_hi):
    """First ell in [ell_lo, ell_hi) with x^d + ell irreducible, else -1."""
    nw_f = (d >> 6) + 1
    nw = 2 * nw_f + 2
    cur = np.zeros(nw, dtype=np.uint64)
    sq = np.zeros(nw, dtype=np.uint64)
    high = np.zeros(nw, dtype=np.uint64)
    snaps = np.zeros((qexps.size, nw), dtype=np.uint64)
    g1 = np.zeros(nw, dtype=np.uint64)
    g2 = np.zeros(nw, dtype=np.uint64)
    for ell in range(ell_lo, ell_hi):
        if bad[ell]:
            continue
        for w in range(nw):
            cur[w] = U64(0)
        cur[0] = U64(2)
        for step in range(1, d + 1):
            _sqr_into(cur, sq, nw_f, tab)
            _fold_sparse(sq, 2 * nw_f, d, ell, high)
            for w in range(nw_f):
                cur[w] = sq[w]
            for k in range(qexps.size):
                if qexps[k] == step:
                    for w in range(nw_f):
                        snaps[k][w] = cur[w]
        ok = cur[0] == U64(2)
        if ok:
            for w in range(1, nw_f):
                if cur[w]:
                    ok = False
                    break
        if not ok:
            continue
        for k in range(qexps.size):
            for w in range(nw):
                g1[w] = U64(0)
                g2[w] = snaps[k][w] if w < nw_f else U64(0)
            g1[d >> 6] = U64(1) << U64(d & 63)
            g1[0] ^= U64(ell)
            g2[0] ^= U64(2)
            if not _gcd_is_one(g1, g2, nw):
                ok = False
                break
        if ok:
            return ell
    return -1


# --- pure-int fallback (and reference for cross-tests) ---------------------

def _spread_int(v: int) -> int:
    out = 0
    shift = 0
    while v:
        out |= int(_SPREAD16[v & 0xFFFF]) << shift
        v >>= 16
        shift += 32
    return out


def _fold_int(u: int, d: int, ell: int) -> int:
    while u >> d:
        high = u >> d
        u &= (1 << d) - 1
        e, j = ell, 0
        while e:
            if e & 1:
                u ^= high << j
            e >>= 1
            j += 1
    return u


def _gcd_int(a: int, b: int) -> int:
    while b:
        da, db = a.bit_length(), b.bit_length()
        if da < db:
            a, b = b, a
            da, db = db, da
        a ^= b << (da - db)
        if a < b:
            a, b = b, a
    return a


def _rabin_scan_py(d, qexps, bad, ell_lo, ell_hi):
    for ell in range(ell_lo, ell_hi):
        if bad[ell]:
            continue
        cur = 2
        snaps = {}
        for step in range(1, d + 1):
            cur = _fold_int(_spread_int(cur), d, ell)
            if step in qexps:
                snaps[step] = cur
        if cur != 2:
            continue
        f = (1 << d) | ell
        if all(_gcd_int(f, s ^ 2) == 1 for s in snaps.values()):
            return ell
    return -1


def _sieve_py(d, bound_bits, bad):
    B = bound_bits
    nb = 1 << (B + 1)
    comp = bytearray(nb)
    for g in range(2, nb):
        if comp[g]:
            continue
        dg = g.bit_length() - 1
        for h in range(2, 1 << (B - dg + 1)):
            prod = _clmul_int(g, h)
            if prod < nb:
                comp[prod] = 1
        rho = _powmod_x_int(d, g)
        for s in range(1 << (B - dg)):
            ell = rho ^ _clmul_int(g, s)
            if ell < (1 << B):
                bad[ell] = 1


def _clmul_int(a: int, b: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def _powmod_x_int(exp: int, g: int) -> int:
    dg = g.bit_length() - 1
    r = 1
    for i in range(exp.bit_length() - 1, -1, -1):
        r = _fold_small(_clmul_int(r, r), g, dg)
        if (exp >> i) & 1:
            r = _fold_small(r << 1, g, dg)
    return r


def _fold_small(v: int, g: int, dg: int) -> int:
    while v.bit_length() > dg:
        v ^= g << (v.bit_length() - 1 - dg)
    return v


def _prime_factors(d: int) -> list[int]:
    out = []
    t = d
    q = 2
    while q * q <= t:
        if t % q == 0:
            out.append(q)
            while t % q == 0:
                t //= q
        q += 1
    if t > 1:
        out.append(t)
    return out


def smallest_irreducible_lower(d: int) -> int:
    """Lower part ell of the lexicographically smallest irreducible x^d + ell.

    Requires d >= 14 so the sieve bound stays below the candidate degree.
    """
    if d < 14:
        raise ValueError("sieved scan needs d >= 14")
    qexps = np.array(sorted(d // q for q in _prime_factors(d)), dtype=np.int64)
    for bound_bits in (13, 16):
        size = 1 << bound_bits
        bad = np.zeros(size, dtype=np.uint8)
        if HAVE_NUMBA:
            _sieve_kernel(d, bound_bits, bad)
            ell = int(_rabin_scan_kernel(d, qexps, _SPREAD16, bad, 1, size))
        else:
            _sieve_py(d, bound_bits, bad)
            ell = _rabin_scan_py(d, set(int(q) for q in qexps), bad, 1, size)
        if ell > 0:
            return ell
    raise RuntimeError(f"no irreducible of degree {d} with lower part < 2^16")


def warm_up() -> None:
    """Force JIT compilation of the kernels (cached on disk afterwards)."""
    if HAVE_NUMBA:
        smallest_irreducible_lower(64)
