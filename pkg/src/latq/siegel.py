"""Representation numbers of odd-rank quadratic forms via local densities.

For an even positive-definite Gram matrix A of odd rank m = 2*m1 + 1 and the
integer-valued form S(X) = A[X]/2, the genus average of the representation
numbers factors into local densities.  This module provides, all in exact
arithmetic:

  * Kronecker symbols, fundamental discriminants, square-root counts mod 4n
    (the b_n coefficients) and the resulting Dirichlet series evaluated both
    numerically with a rigorous tail bound and exactly at nonpositive
    integers via generalized Bernoulli numbers (the Cohen numbers),
  * closed-form 2- and 3-adic densities for the three one-class quintary
    forms handled here (sum of five squares, A1+D4, A5),
  * a definitional counting oracle: block-diagonalize the form over Z_p with
    an exact unimodular transform and count solutions of S(X) = t mod p^a by
    convolving block value distributions, with stabilization checking,
  * the assembled representation numbers r(t) with two independent routes
    (exact Cohen-number route, numeric L-value route) that must agree.

Densities are normalized as limits of p^{-a(m-1)} #{X mod p^a : S(X) = t}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, isqrt

import numpy as np

from .lattices import A as _A
from .lattices import D as _D
from .lattices import direct_sum, span

__all__ = [
    "kronecker",
    "field_discriminant",
    "split_discriminant",
    "decompose_t",
    "ZagierDiscriminant",
    "discriminant_of",
    "b_n",
    "zagier_L_numeric",
    "bernoulli_number",
    "generalized_bernoulli",
    "cohen_H",
    "alpha_infinity",
    "alpha_regular",
    "alpha2_S5",
    "alpha2_A1D4",
    "alpha2_A5",
    "alpha3_A5",
    "jordan_split",
    "local_density_oracle",
    "oracle_alpha",
    "OddForm",
    "FORMS",
    "DensityReport",
    "siegel_r",
    "nd6",
    "local_factor",
]


# ---------------------------------------------------------------------------
# characters and discriminants


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), defined for all integers."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    result = sign
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # now n odd; Jacobi symbol by reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _squarefree_kernel(n: int):
    """(k, s) with n = k * s^2 and k squarefree (sign carried by k)."""
    if n == 0:
        raise ValueError("kernel of 0 is undefined")
    sign = -1 if n < 0 else 1
    n = abs(n)
    k, s = 1, 1
    d = 2
    while d * d <= n:
        e = 0
        while n % d == 0:
            n //= d
            e += 1
        if e:
            s *= d ** (e // 2)
            if e % 2:
                k *= d
        d += 1
    k *= n
    return sign * k, s


def field_discriminant(n: int) -> int:
    """Discriminant of Q(sqrt(n)); 1 when n is a square."""
    k, _ = _squarefree_kernel(n)
    return k if k % 4 == 1 else 4 * k


def split_discriminant(delta: int):
    """Split delta = D*f^2 with D a fundamental discriminant (delta = 0,1 mod 4)."""
    if delta % 4 not in (0, 1) or delta == 0:
        raise ValueError("argument must be a nonzero discriminant (0 or 1 mod 4)")
    k, s = _squarefree_kernel(delta)
    if k % 4 == 1:
        return k, s
    if s % 2:
        raise ValueError("not a discriminant")
    return 4 * k, s // 2


def decompose_t(t: int, det_a: int):
    """t = t_A * t1 * t2^2 with t_A supported on primes of det_a, t1 squarefree."""
    if t < 1:
        raise ValueError("t must be positive")
    t_a = 1
    rest = t
    d = 2
    m = abs(det_a)
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            while rest % d == 0:
                rest //= d
                t_a *= d
        d += 1
    if m > 1:
        while rest % m == 0:
            rest //= m
            t_a *= m
    t1, t2 = _squarefree_kernel(rest)
    return t_a, t1, t2


@dataclass(frozen=True)
class ZagierDiscriminant:
    """delta = D * f^2 with D fundamental (or 1)."""

    delta: int
    D: int
    f: int

    def __post_init__(self):
        if self.delta != self.D * self.f * self.f:
            raise ValueError("delta != D * f^2")


def discriminant_of(form: "OddForm", t: int) -> ZagierDiscriminant:
    """The discriminant D*t2^2 entering the L-value for the pair (form, t)."""
    _, _, t2 = decompose_t(t, form.det_a)
    dd = field_discriminant(2 * t * form.det_a)
    return ZagierDiscriminant(dd * t2 * t2, dd, t2)


# ---------------------------------------------------------------------------
# b_n counts and the associated Dirichlet series


def _sqrt_count_mod_pp(delta: int, p: int, e: int) -> int:
    """#{x mod p^e : x^2 = delta mod p^e} for delta != 0."""
    if e == 0:
        return 1
    j = 0
    d = delta
    while d % p == 0:
        d //= p
        j += 1
        if j >= e:
            return p ** (e // 2)
    if j % 2:
        return 0
    scale = p ** (j // 2)
    r = e - j
    if p != 2:
        return 2 * scale if kronecker(d, p) == 1 else 0
    if r == 1:
        return scale
    if r == 2:
        return 2 * scale if d % 4 == 1 else 0
    return 4 * scale if d % 8 == 1 else 0


def b_n(delta: int, n: int) -> int:
    """#{x mod 2n : x^2 = delta mod 4n}."""
    if delta % 4 not in (0, 1):
        raise ValueError("delta must be 0 or 1 mod 4")
    if delta == 0:
        raise ValueError("delta = 0 is not supported")
    total = 1
    m = 4 * n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            total *= _sqrt_count_mod_pp(delta, d, e)
            if total == 0:
                return 0
        d += 1
    if m > 1:
        total *= _sqrt_count_mod_pp(delta, m, 1)
    return total // 2


def b_n_bruteforce(delta: int, n: int) -> int:
    return sum(1 for x in range(2 * n) if (x * x - delta) % (4 * n) == 0)


ZETA2 = math.pi**2 / 6
ZETA4 = math.pi**4 / 90


def zagier_L_numeric(s: float, delta: int, terms: int = 20000):
    """Rigorous enclosure (lo, hi) of zeta(2s)/zeta(s) * sum b_n(delta) n^-s.

    The tail is bounded through b_n <= 2 * 2^omega(n) * sqrt|delta|.
    """
    if s <= 1:
        raise ValueError("need s > 1")
    partial = 0.0
    for n in range(1, terms + 1):
        bn = b_n(delta, n)
        if bn:
            partial += bn / n**s
    # sum_{n>N} d(n) n^-s <= (2 ln N + 3.7) / N^{s-1} / (s-1)  (see module tests)
    tail_d = (2 * math.log(terms) + 3.7) / (terms ** (s - 1)) / (s - 1)
    tail = 2.0 * math.sqrt(abs(delta)) * tail_d
    if s == 2:
        front = ZETA4 / ZETA2
    else:
        front = _zeta(2 * s) / _zeta(s)
    return front * partial, front * (partial + tail)


def _zeta(s: float, terms: int = 200000) -> float:
    return sum(n**-s for n in range(1, terms + 1)) + terms ** (1 - s) / (s - 1)


# ---------------------------------------------------------------------------
# Bernoulli machinery and Cohen numbers


@lru_cache(maxsize=64)
def bernoulli_number(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    # sum_{k=0}^{n} C(n+1,k) B_k = 0
    acc = Fraction(0)
    for k in range(n):
        acc += comb(n + 1, k) * bernoulli_number(k)
    return -acc / (n + 1)


def _bernoulli_poly(n: int, x: Fraction) -> Fraction:
    return sum(comb(n, k) * bernoulli_number(k) * x ** (n - k) for k in range(n + 1))


@lru_cache(maxsize=512)
def generalized_bernoulli(n: int, D: int) -> Fraction:
    """B_{n,chi_D} for the Kronecker character of a fundamental discriminant D."""
    f = abs(D) if D != 1 else 1
    acc = Fraction(0)
    for a in range(1, f + 1):
        chi = kronecker(D, a)
        if chi:
            acc += chi * _bernoulli_poly(n, Fraction(a, f))
    return f ** (n - 1) * acc


def cohen_H(m1: int, delta: int) -> Fraction:
    """H(m1, delta) = L(1 - m1, delta), an exact rational.

    Computed as L(1-m1, chi_D) * sum_{a | f} mu(a) chi_D(a) a^{m1-1}
    sigma_{2m1-1}(f/a) for delta = D f^2.
    """
    if m1 < 1:
        raise ValueError("need m1 >= 1")
    D, f = split_discriminant(delta)
    lval = -generalized_bernoulli(m1, D) / m1
    acc = Fraction(0)
    for a in _divisors(f):
        mu = _moebius(a)
        if mu == 0:
            continue
        chi = kronecker(D, a)
        if chi == 0:
            continue
        acc += mu * chi * a ** (m1 - 1) * _sigma(2 * m1 - 1, f // a)
    return lval * acc


def _divisors(n: int):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _moebius(n: int) -> int:
    k, s = _squarefree_kernel(n)
    if s != 1:
        return 0
    count = 0
    d = 2
    while d * d <= n:
        if n % d == 0:
            count += 1
            n //= d
        d += 1
    if n > 1:
        count += 1
    return -1 if count % 2 else 1


def _sigma(k: int, n: int) -> int:
    return sum(d**k for d in _divisors(n))


# ---------------------------------------------------------------------------
# archimedean density


@dataclass(frozen=True)
class ArchimedeanDensity:
    """(coeff * pi^pi_power) * sqrt(radicand); value() evaluates as float."""

    coeff: Fraction
    pi_power: int
    radicand: Fraction

    def value(self) -> float:
        return float(self.coeff) * math.pi**self.pi_power * math.sqrt(float(self.radicand))


def alpha_infinity(t, m: int, det_a: int) -> ArchimedeanDensity:
    """(2 pi)^{m/2} Gamma(m/2)^{-1} t^{m/2-1} |A|^{-1/2} for odd m."""
    if m % 2 == 0:
        raise ValueError("odd rank only")
    if t <= 0:
        raise ValueError("t must be positive")
    dfact = 1
    for k in range(m - 2, 0, -2):
        dfact *= k
    coeff = Fraction(2 ** (m - 1), dfact)
    radicand = Fraction(2 * t ** (m - 2), det_a)
    return ArchimedeanDensity(coeff, (m - 1) // 2, radicand)


# ---------------------------------------------------------------------------
# closed-form local densities


def alpha_regular(p: int, t: int, m: int, det_a: int) -> Fraction:
    """Local density at a prime p not dividing det A (classical formula)."""
    if det_a % p == 0:
        raise ValueError("p divides det A; use the counting oracle")
    l = 0
    tt = t
    while tt % p == 0:
        tt //= p
        l += 1
    pm = Fraction(1, p ** (m - 1))
    if l % 2:
        return (1 - pm) * sum(Fraction(1, p ** ((m - 2) * j)) for j in range((l + 1) // 2))
    eps = kronecker((-1) ** ((m - 1) // 2) * det_a * 2 * tt, p)
    head = sum(Fraction(1, p ** ((m - 2) * j)) for j in range(l // 2))
    last = Fraction(1, p ** ((m - 2) * (l // 2))) / (1 - eps * Fraction(1, p ** ((m - 1) // 2)))
    return (1 - pm) * (head + last)


def _ord(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _parity_sign(D: int) -> int:
    # the (-1)^D factor: +1 for even D, -1 for odd D
    return -1 if D % 2 else 1


def alpha2_S5(t: int) -> Fraction:
    """2-adic density of x1^2+...+x5^2 at t."""
    b = _ord(t, 2) // 2
    D = field_discriminant(t)
    chi = kronecker(D, 2)
    acc = Fraction(1)
    for k in range(1, b + 1):
        acc -= Fraction(2, 8**k)
    acc += _parity_sign(D) * Fraction(1, 2 ** (3 * b + 2))
    acc -= chi * Fraction(1, 2 ** (3 * b + 3))
    return acc


def alpha2_A1D4(t: int) -> Fraction:
    """2-adic density of the A1+D4 form at t."""
    b = _ord(t, 2) // 2
    D = field_discriminant(t)
    chi = kronecker(D, 2)
    acc = Fraction(1)
    for k in range(1, b + 1):
        acc -= Fraction(1, 8**k)
    acc += _parity_sign(D) * Fraction(1, 2 ** (3 * b + 3))
    acc -= chi * Fraction(1, 2 ** (3 * b + 4))
    return acc


def alpha2_A5(t: int) -> Fraction:
    """2-adic density of the A5 form at t."""
    b = _ord(t, 2) // 2
    D = field_discriminant(3 * t)
    chi = kronecker(D, 2)
    acc = Fraction(1)
    for k in range(1, b + 1):
        acc += Fraction(1, 2 ** (3 * k + 1))
    acc -= _parity_sign(D) * Fraction(1, 2 ** (3 * b + 4))
    acc += chi * Fraction(1, 2 ** (3 * b + 5))
    return acc


def _geom_alt_third(j: int) -> Fraction:
    """sum_{i=0}^{j} (-1/3)^i."""
    return Fraction(3, 4) * (1 - Fraction(-1, 3) ** (j + 1))


def alpha3_A5(t: int) -> Fraction:
    """3-adic density of the A5 form at t.

    Over Z_3 the form splits as a rank-4 unimodular part of determinant
    class 2 plus a <6> block; the unimodular part has density
    (10/9) * sum_{i<=j} (-1/3)^i at 3^j * unit, and averaging over the <6>
    coordinate gives the finite closed form below (certified against the
    counting oracle).
    """
    c = _ord(t, 3)
    tp = t // 3**c
    gamma = c // 2
    common = sum(Fraction(2, 3 ** (e + 1)) * _geom_alt_third(2 * e + 1) for e in range(gamma))
    if c % 2 == 0 or kronecker(tp, 3) == 1:
        val = common + Fraction(1, 3**gamma) * _geom_alt_third(c)
    else:
        tail = Fraction(2, 3 ** (gamma + 1)) * Fraction(3, 4) * (1 - Fraction(3, 5) * Fraction(-1, 3) ** (c + 2))
        val = common + Fraction(1, 3 ** (gamma + 1)) * _geom_alt_third(c) + tail
    return Fraction(10, 9) * val


# ---------------------------------------------------------------------------
# the three quintary forms


def _half_gram(L):
    g = L.gram
    n = L.rank
    return tuple(tuple(Fraction(g[i][j], 2) for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class OddForm:
    """An odd-rank positive form S(X) = A[X]/2 given by its S-matrix."""

    key: str
    m: int
    det_a: int
    s_matrix: tuple
    bad_primes: tuple

    def alpha_closed(self, p: int, t: int) -> Fraction:
        fn = _CLOSED_ALPHAS.get((self.key, p))
        if fn is None:
            raise ValueError(f"no closed-form density for {self.key} at p={p}")
        return fn(t)

    def chi(self, p: int, t: int) -> int:
        return kronecker(field_discriminant(2 * t * self.det_a), p)


_CLOSED_ALPHAS = {
    ("S5", 2): alpha2_S5,
    ("A1D4", 2): alpha2_A1D4,
    ("A5", 2): alpha2_A5,
    ("A5", 3): alpha3_A5,
}

_IDENT5 = tuple(tuple(Fraction(int(i == j)) for j in range(5)) for i in range(5))

FORMS = {
    "S5": OddForm("S5", 5, 32, _IDENT5, (2,)),
    "A1D4": OddForm("A1D4", 5, 8, _half_gram(direct_sum(span(2), _D(4))), (2,)),
    "A5": OddForm("A5", 5, 6, _half_gram(_A(5)), (2, 3)),
}


# ---------------------------------------------------------------------------
# p-adic block diagonalization (exact) and the counting oracle


def _val_p(x: Fraction, p: int):
    if x == 0:
        return math.inf
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def jordan_split(s_matrix, p: int):
    """Split a symmetric rational matrix into p-adic Jordan blocks.

    Returns (T, blocks) with T in GL_n(Z_(p)) (entries p-integral, det a
    p-unit) and T^t M T block diagonal with 1x1 blocks, plus 2x2 blocks when
    p = 2.  The factorization is verified exactly before returning.
    """
    n = len(s_matrix)
    m0 = [[Fraction(x) for x in row] for row in s_matrix]
    m = [row[:] for row in m0]
    t = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def swap(i, j):
        if i == j:
            return
        for r in range(n):
            m[r][i], m[r][j] = m[r][j], m[r][i]
        m[i], m[j] = m[j], m[i]
        for r in range(n):
            t[r][i], t[r][j] = t[r][j], t[r][i]

    def addmul(dst, src, c):
        # column op: col_dst += c * col_src, applied congruently
        for r in range(n):
            m[r][dst] += c * m[r][src]
        for r in range(n):
            m[dst][r] += c * m[src][r]
        for r in range(n):
            t[r][dst] += c * t[r][src]

    done = 0
    blocks = []
    guard = 0
    while done < n:
        guard += 1
        if guard > 8 * n:
            raise RuntimeError("jordan_split failed to converge")
        best = None
        best_val = math.inf
        for i in range(done, n):
            v = _val_p(m[i][i], p)
            if v < best_val:
                best_val = v
                best = (i, i)
        for i in range(done, n):
            for j in range(i + 1, n):
                v = _val_p(m[i][j], p)
                if v < best_val:
                    best_val = v
                    best = (i, j)
        if best is None or best_val is math.inf:
            raise ValueError("degenerate form")
        i, j = best
        if i == j:
            swap(done, i)
            piv = m[done][done]
            for k in range(done + 1, n):
                if m[done][k]:
                    addmul(k, done, -m[done][k] / piv)
            blocks.append(((piv,),))
            done += 1
        elif p != 2:
            addmul(i, j, Fraction(1))
            continue
        else:
            swap(done, i)
            swap(done + 1, j if j != done else i)
            a_, b_, c_ = m[done][done], m[done][done + 1], m[done + 1][done + 1]
            det = a_ * c_ - b_ * b_
            for k in range(done + 2, n):
                v1, v2 = m[done][k], m[done + 1][k]
                if v1 or v2:
                    c1 = (c_ * v1 - b_ * v2) / det
                    c2 = (a_ * v2 - b_ * v1) / det
                    addmul(k, done, -c1)
                    addmul(k, done + 1, -c2)
            blocks.append(((a_, b_), (b_, c_)))
            done += 2
    # verification: T p-integral with unit determinant, T^t M0 T block diagonal
    for row in t:
        for x in row:
            if x.denominator % p == 0:
                raise AssertionError("transform not p-integral")
    det_t = _frac_det(t)
    if _val_p(det_t, p) != 0:
        raise AssertionError("transform determinant is not a p-unit")
    check = _congruent(m0, t)
    off = 0
    for blk in blocks:
        k = len(blk)
        for i in range(k):
            for j in range(k):
                if check[off + i][off + j] != blk[i][j]:
                    raise AssertionError("block reconstruction mismatch")
        off += k
    for i in range(n):
        for j in range(n):
            in_block = False
            pos = 0
            for blk in blocks:
                k = len(blk)
                if pos <= i < pos + k and pos <= j < pos + k:
                    in_block = True
                    break
                pos += k
            if not in_block and check[i][j] != 0:
                raise AssertionError("off-block entry nonzero")
    return t, blocks


def _frac_det(mat):
    n = len(mat)
    m = [row[:] for row in mat]
    det = Fraction(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def _congruent(m0, t):
    n = len(m0)
    tm = [[sum(t[k][i] * m0[k][l] for k in range(n)) for l in range(n)] for i in range(n)]
    return [[sum(tm[i][l] * t[l][j] for l in range(n)) for j in range(n)] for i in range(n)]


def _mod_frac(x: Fraction, modulus: int) -> int:
    den = x.denominator
    if gcd(den, modulus) != 1:
        raise ValueError("denominator not invertible modulo p^a")
    return x.numerator * pow(den, -1, modulus) % modulus


def _block_distribution(block, p: int, a: int) -> np.ndarray:
    """Value distribution of the block's quadratic form over (Z/p^a)^k."""
    mod = p**a
    if len(block) == 1:
        c = _mod_frac(block[0][0], mod)
        x = np.arange(mod, dtype=np.int64)
        vals = (x * x % mod) * c % mod
        return np.bincount(vals, minlength=mod).astype(np.int64)
    (a_, b_), (_, c_) = block
    am = _mod_frac(a_, mod)
    b2 = _mod_frac(2 * b_, mod)
    cm = _mod_frac(c_, mod)
    y = np.arange(mod, dtype=np.int64)
    y2 = (y * y % mod) * cm % mod
    by = b2 * y % mod
    out = np.zeros(mod, dtype=np.int64)
    chunk = max(1, 2**22 // mod)
    for start in range(0, mod, chunk):
        xs = np.arange(start, min(start + chunk, mod), dtype=np.int64)
        x2 = (xs * xs % mod) * am % mod
        vals = (x2[:, None] + xs[:, None] * by[None, :] + y2[None, :]) % mod
        out += np.bincount(vals.ravel(), minlength=mod)
    return out


def _convolve_mod(a_arr: np.ndarray, b_arr: np.ndarray) -> np.ndarray:
    ln = len(a_arr)
    if int(a_arr.max()) * int(b_arr.max()) * ln >= 2**62:
        # exact big-int fallback
        out = [0] * ln
        for i, ai in enumerate(a_arr.tolist()):
            if ai:
                for j, bj in enumerate(b_arr.tolist()):
                    if bj:
                        out[(i + j) % ln] += ai * bj
        return np.array(out, dtype=object)
    full = np.convolve(a_arr, b_arr)
    out = full[:ln].copy()
    out[: len(full) - ln] += full[ln:]
    return out


@lru_cache(maxsize=64)
def _blocks_for(key: str, p: int, doubled: bool = False):
    mat = FORMS[key].s_matrix
    if doubled:
        mat = tuple(tuple(2 * x for x in row) for row in mat)
    _, blocks = jordan_split(mat, p)
    return tuple(blocks)


@lru_cache(maxsize=64)
def _joint_counts(key: str, p: int, a: int, doubled: bool = False) -> tuple:
    """Counts of S(X) = v mod p^a over (Z/p^a)^m, as a tuple of ints."""
    top = _TOP_LEVEL.get(p, 4)
    if a < top:
        higher = _joint_counts(key, p, a + 1, doubled)
        arr = np.array(higher, dtype=object).reshape(p, p ** a)
        folded = arr.sum(axis=0)
        mvars = FORMS[key].m
        out = []
        for x in folded.tolist():
            q, r = divmod(int(x), p**mvars)
            if r:
                raise AssertionError("downfolding remainder")
            out.append(q)
        return tuple(out)
    blocks = _blocks_for(key, p, doubled)
    acc = None
    for blk in blocks:
        dist = _block_distribution(blk, p, a)
        acc = dist if acc is None else _convolve_mod(acc, dist)
    return tuple(int(x) for x in acc)


_TOP_LEVEL = {2: 12, 3: 8}


def local_density_oracle(p: int, a: int, local_form, t: int) -> Fraction:
    """Level-a density approximation p^{-a(m-1)} #{X mod p^a : S(X)=t}.

    ``local_form`` is a form key ('S5', 'A1D4', 'A5') or an explicit
    symmetric rational matrix.
    """
    if isinstance(local_form, str):
        key = local_form
        m = FORMS[key].m
        if a <= _TOP_LEVEL.get(p, 4):
            counts = _joint_counts(key, p, a)
            cnt = counts[t % p**a]
            return Fraction(cnt, p ** (a * (m - 1)))
        blocks = _blocks_for(key, p)
    else:
        blocks = jordan_split(local_form, p)[1]
        m = len(local_form)
    acc = None
    for blk in blocks:
        dist = _block_distribution(blk, p, a)
        acc = dist if acc is None else _convolve_mod(acc, dist)
    cnt = int(acc[t % p**a])
    return Fraction(cnt, p ** (a * (m - 1)))


class StabilizationError(RuntimeError):
    pass


def oracle_alpha(form, p: int, t: int, a: int | None = None) -> Fraction:
    """Stabilized local density: equal values at consecutive levels, else error."""
    key = form.key if isinstance(form, OddForm) else form
    if a is None:
        a = _ord(2 * t, p) + 4
    v1 = local_density_oracle(p, a, key, t)
    v2 = local_density_oracle(p, a + 1, key, t)
    if v1 != v2:
        raise StabilizationError(f"density at p={p}, t={t} not stable at level {a}")
    return v1


# ---------------------------------------------------------------------------
# assembled representation numbers


@dataclass(frozen=True)
class DensityReport:
    form: str
    t: int
    t_a: int
    t1: int
    t2: int
    D: int
    delta: int
    alphas: tuple  # ((p, Fraction), ...)
    local_factors: tuple
    cohen: Fraction
    l_value_bounds: tuple
    r: int
    routes_agree: bool

    def alpha(self, p: int) -> Fraction:
        return dict(self.alphas)[p]


def local_factor(form: OddForm, p: int, t: int) -> Fraction:
    """(1 - chi_D(p) p^{(1-m)/2}) / (1 - p^{1-m}) * alpha_p(t, S)."""
    m1 = (form.m - 1) // 2
    chi = form.chi(p, t)
    num = 1 - chi * Fraction(1, p**m1)
    den = 1 - Fraction(1, p ** (form.m - 1))
    return num / den * form.alpha_closed(p, t)


def siegel_r(form, t: int, check_routes: bool = True, terms: int = 20000) -> DensityReport:
    """Exact representation number of t by the genus of the form.

    Assembles the Cohen-number route exactly; when check_routes is set the
    numeric L-value route is evaluated with a rigorous tail enclosure and the
    two must agree.
    """
    if isinstance(form, str):
        form = FORMS[form]
    if t < 1:
        raise ValueError("t must be positive")
    m1 = (form.m - 1) // 2
    if m1 != 2:
        raise ValueError("assembled only for rank 5")
    t_a, t1, t2 = decompose_t(t, form.det_a)
    zd = discriminant_of(form, t)
    dd, delta = zd.D, zd.delta
    fa2, rem = divmod(2 * t * form.det_a, delta)
    fa = isqrt(fa2)
    if rem or fa * fa != fa2:
        raise AssertionError("2 t |A| / delta is not a perfect square")
    hval = cohen_H(m1, delta)
    if not (-1) ** (m1 // 2) * hval > 0:
        raise AssertionError("Cohen number has the wrong sign")
    alphas = []
    factors = []
    prod = Fraction(1)
    for p in form.bad_primes:
        al = form.alpha_closed(p, t)
        alphas.append((p, al))
        fac = local_factor(form, p, t)
        factors.append((p, fac))
        prod *= fac
    # prefactor: sqrt(2^5 t^3 / (delta^3 |A|)) = 2 f_A^3 / |A|^2, times
    # 2 * |2 m1 / B_{2 m1}| with |4 / B_4| = 120
    bconst = 2 * abs(Fraction(2 * m1) / bernoulli_number(2 * m1))
    r_exact = Fraction(2 * fa**3, form.det_a**2) * bconst * (-hval) * prod
    if r_exact.denominator != 1 or r_exact < 0:
        raise AssertionError(f"assembled representation number is not a nonnegative integer: {r_exact}")
    routes_agree = True
    l_bounds = (float("nan"), float("nan"))
    if check_routes:
        lo, hi = zagier_L_numeric(2, delta, terms=terms)
        l_bounds = (lo, hi)
        c_inf = alpha_infinity(t, form.m, form.det_a).value()
        scale = c_inf / ZETA4 * float(prod)
        r_lo, r_hi = scale * lo, scale * hi
        pad = 1e-9 * max(1.0, r_hi)
        routes_agree = (r_lo - pad) <= float(r_exact) <= (r_hi + pad)
        if not routes_agree:
            raise AssertionError(f"Siegel routes disagree for {form.key}, t={t}: exact {r_exact}, numeric [{r_lo}, {r_hi}]")
    return DensityReport(
        form=form.key,
        t=t,
        t_a=t_a,
        t1=t1,
        t2=t2,
        D=dd,
        delta=delta,
        alphas=tuple(alphas),
        local_factors=tuple(factors),
        cohen=hval,
        l_value_bounds=l_bounds,
        r=int(r_exact),
        routes_agree=routes_agree,
    )


def nd6(m: int) -> int:
    """N_{D6}(2m) = 64 sigma~_2(m, chi_4) - 4 sigma_2(m, chi_4)."""
    if m < 1:
        raise ValueError("m must be positive")
    s_plain = 0
    s_tilde = 0
    for d in _divisors(m):
        s_plain += kronecker(-4, d) * d * d
        s_tilde += kronecker(-4, m // d) * d * d
    return 64 * s_tilde - 4 * s_plain
