"""Exact integral-lattice arithmetic.

Lattices are given by integer Gram matrices in a fixed basis.  Everything in
this module works over exact integers / rationals: determinants use Bareiss
elimination, short-vector enumeration uses a Fraction-valued Cholesky
decomposition (Fincke-Pohst), kernels and discriminant groups use integer
normal forms.  No floating point enters any decision path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

import numpy as np

__all__ = [
    "GramLattice",
    "LatticeVector",
    "DiscriminantGroup",
    "standard_lattice",
    "A",
    "D",
    "E7",
    "E8",
    "U",
    "span",
    "direct_sum",
    "rescale",
    "inner",
    "norm",
    "divisor",
    "enumerate_norm",
    "rep_count",
    "roots",
    "theta_counts",
    "orthogonal_complement",
    "is_isometric",
    "reflection",
    "reflection_orbits",
    "discriminant_group",
    "smith_normal_form",
]


# ---------------------------------------------------------------------------
# lattice type and constructors


@dataclass(frozen=True)
class GramLattice:
    """An integral lattice presented by a symmetric Gram matrix.

    ``gram`` is a tuple-of-tuples of integers; ``label`` records how the
    lattice was built (used to pick fast counting models and for display).
    """

    gram: tuple
    label: str = ""

    def __post_init__(self):
        n = len(self.gram)
        if n == 0:
            raise ValueError("empty Gram matrix")
        for row in self.gram:
            if len(row) != n:
                raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("Gram matrix must be symmetric")
        if self.det == 0:
            raise ValueError("degenerate Gram matrix")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def det(self) -> int:
        return _det_bareiss(self.gram)

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def is_positive_definite(self) -> bool:
        try:
            _cholesky(self.gram)
            return True
        except ValueError:
            return False

    def vector(self, coords) -> "LatticeVector":
        return LatticeVector(self, tuple(int(c) for c in coords))

    def basis_vector(self, i: int) -> "LatticeVector":
        coords = [0] * self.rank
        coords[i] = 1
        return LatticeVector(self, tuple(coords))

    def __repr__(self):
        name = self.label or f"gram{self.rank}"
        return f"GramLattice({name}, rank={self.rank}, det={self.det})"


@dataclass(frozen=True)
class LatticeVector:
    """Integer coordinate vector in the basis of an owning lattice."""

    lattice: GramLattice
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.lattice.rank:
            raise ValueError("coordinate length does not match lattice rank")

    def inner(self, other: "LatticeVector") -> int:
        if other.lattice.gram != self.lattice.gram:
            raise ValueError("vectors belong to different lattices")
        return inner(self.lattice, self.coords, other.coords)

    def norm(self) -> int:
        return inner(self.lattice, self.coords, self.coords)

    def divisor(self) -> int:
        return divisor(self.lattice, self.coords)


def _freeze(mat) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in mat)


def A(n: int) -> GramLattice:
    """Root lattice A_n in the simple-root basis e_{i+1}-e_i of the sum-zero
    hyperplane of Z^{n+1}."""
    if n < 1:
        raise ValueError("A_n needs n >= 1")
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = -1
    return GramLattice(_freeze(g), f"A{n}")


def D(n: int) -> GramLattice:
    """Root lattice D_n = {x in Z^n : sum x_i even}, simple roots
    e_i - e_{i+1} (i < n) and e_{n-1} + e_n."""
    if n < 2:
        raise ValueError("D_n needs n >= 2")
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    for i in range(n - 2):
        g[i][i + 1] = g[i + 1][i] = -1
    if n >= 3:
        # the fork: e_{n-1}+e_n pairs with e_{n-2}-e_{n-1}
        g[n - 3][n - 1] = g[n - 1][n - 3] = -1
    return GramLattice(_freeze(g), f"D{n}")


# E7 simple roots inside Q^8: v_i = e_{i+2}-e_{i+1} for i=1..6 and
# v_7 = (e_1+e_2+e_3+e_4)/2 - (e_5+e_6+e_7+e_8)/2.  Stored doubled so all
# coordinates are integers; inner products carry a factor 4.
E7_SIMPLE_DOUBLED = (
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
    (0, 0, 0, 0, 0, 0, -2, 2),
    (1, 1, 1, 1, -1, -1, -1, -1),
)

E8_SIMPLE_DOUBLED = (
    (1, -1, -1, -1, -1, -1, -1, 1),
    (2, 2, 0, 0, 0, 0, 0, 0),
    (-2, 2, 0, 0, 0, 0, 0, 0),
    (0, -2, 2, 0, 0, 0, 0, 0),
    (0, 0, -2, 2, 0, 0, 0, 0),
    (0, 0, 0, -2, 2, 0, 0, 0),
    (0, 0, 0, 0, -2, 2, 0, 0),
    (0, 0, 0, 0, 0, -2, 2, 0),
)


def _gram_from_doubled(vectors) -> tuple:
    n = len(vectors)
    g = [[sum(a * b for a, b in zip(vectors[i], vectors[j])) // 4 for j in range(n)] for i in range(n)]
    return _freeze(g)


def E7() -> GramLattice:
    return GramLattice(_gram_from_doubled(E7_SIMPLE_DOUBLED), "E7")


def E8() -> GramLattice:
    return GramLattice(_gram_from_doubled(E8_SIMPLE_DOUBLED), "E8")


def U() -> GramLattice:
    """Hyperbolic plane [[0,1],[1,0]]."""
    return GramLattice(((0, 1), (1, 0)), "U")


def span(k: int) -> GramLattice:
    """Rank-1 lattice <k> generated by a vector of norm k."""
    if k == 0:
        raise ValueError("<0> is degenerate")
    return GramLattice(((int(k),),), f"<{k}>")


def direct_sum(*lattices: GramLattice) -> GramLattice:
    if not lattices:
        raise ValueError("empty direct sum")
    n = sum(L.rank for L in lattices)
    g = [[0] * n for _ in range(n)]
    off = 0
    for L in lattices:
        r = L.rank
        for i in range(r):
            for j in range(r):
                g[off + i][off + j] = L.gram[i][j]
        off += r
    label = "+".join(L.label or "?" for L in lattices)
    return GramLattice(_freeze(g), label)


def rescale(L: GramLattice, m: int) -> GramLattice:
    if m == 0:
        raise ValueError("rescale by 0 is degenerate")
    g = [[m * x for x in row] for row in L.gram]
    base = L.label or "?"
    return GramLattice(_freeze(g), f"{base}({m})")


def standard_lattice(name: str) -> GramLattice:
    """Build a lattice from a compact name.

    Accepts  A<n>, D<n>, E7, E8, U, <k>, summands joined by '+', an integer
    multiplicity prefix (3U = U+U+U) and a trailing (m) rescale, e.g.
    ``3U+2E8(-1)+<-2>`` or ``A1+D4``.
    """
    parts = [p.strip() for p in name.split("+")]
    pieces = []
    for part in parts:
        if not part:
            raise ValueError(f"bad lattice name {name!r}")
        mult = 1
        i = 0
        while i < len(part) and part[i].isdigit():
            i += 1
        if i and i < len(part) and part[i] in "ADEU<":
            mult = int(part[:i])
            part = part[i:]
        scale = 1
        if part.endswith(")"):
            j = part.rindex("(")
            scale = int(part[j + 1 : -1])
            part = part[:j]
        if part == "U":
            L = U()
        elif part == "E7":
            L = E7()
        elif part == "E8":
            L = E8()
        elif part.startswith("A"):
            L = A(int(part[1:]))
        elif part.startswith("D"):
            L = D(int(part[1:]))
        elif part.startswith("<") and part.endswith(">"):
            L = span(int(part[1:-1]))
        else:
            raise ValueError(f"unknown lattice name {part!r}")
        if scale != 1:
            L = rescale(L, scale)
        pieces.extend([L] * mult)
    return pieces[0] if len(pieces) == 1 else direct_sum(*pieces)


def hyperkahler_lattice(t: int) -> GramLattice:
    """The signature (3,20) lattice 3U + 2E8(-1) + <-2t>."""
    return standard_lattice(f"3U+2E8(-1)+<{-2 * t}>")


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def _det_bareiss(gram) -> int:
    n = len(gram)
    m = [[int(x) for x in row] for row in gram]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


@lru_cache(maxsize=256)
def _cholesky_cached(gram):
    return _cholesky(gram)


def _cholesky(gram):
    """Fraction-valued decomposition q with
    x^T G x = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2.

    Raises ValueError unless G is positive definite.
    """
    n = len(gram)
    q = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] = q[k][l] - q[k][i] * q[i][l]
                q[l][k] = q[k][l]
    d = tuple(q[i][i] for i in range(n))
    u = tuple(tuple(q[i][j] for j in range(n)) for i in range(n))
    return d, u


def inner(L: GramLattice, v, w) -> int:
    g = L.gram
    n = L.rank
    if len(v) != n or len(w) != n:
        raise ValueError("coordinate length does not match lattice rank")
    return sum(int(v[i]) * g[i][j] * int(w[j]) for i in range(n) for j in range(n))


def norm(L: GramLattice, v) -> int:
    return inner(L, v, v)


def divisor(L: GramLattice, v) -> int:
    """Positive generator of the ideal of inner products (v, L)."""
    if not any(v):
        raise ValueError("divisor of the zero vector is undefined")
    g = L.gram
    n = L.rank
    vals = [sum(g[i][j] * int(v[j]) for j in range(n)) for i in range(n)]
    d = 0
    for x in vals:
        d = gcd(d, x)
    return d


# ---------------------------------------------------------------------------
# short vectors (Fincke-Pohst over exact rationals)


def enumerate_norm(L: GramLattice, n: int):
    """All lattice vectors of norm exactly n (positive definite L only).

    Returns a deterministically ordered list of coordinate tuples, closed
    under negation; [()] placeholder semantics: n = 0 yields the zero vector.
    """
    if n < 0:
        raise ValueError("norm must be nonnegative")
    d, u = _cholesky_cached(L.gram)
    if n == 0:
        return [tuple([0] * L.rank)]
    out = []
    rank = L.rank
    target = Fraction(n)

    coords = [0] * rank

    def descend(i, remaining):
        # remaining = target - sum_{k>i} d_k (x_k + offsets)^2
        centre = -sum(u[i][j] * coords[j] for j in range(i + 1, rank))
        bound = remaining / d[i]
        # |x_i - centre| <= sqrt(bound)
        hi = _floor_centre_plus_sqrt(centre, bound)
        lo = -_floor_centre_plus_sqrt(-centre, bound)
        for x in range(lo, hi + 1):
            coords[i] = x
            term = d[i] * (Fraction(x) - centre) ** 2
            rem = remaining - term
            if rem < 0:
                continue
            if i == 0:
                if rem == 0:
                    out.append(tuple(coords))
            else:
                descend(i - 1, rem)
        coords[i] = 0

    descend(rank - 1, target)
    out.sort()
    return out


def _floor_centre_plus_sqrt(centre: Fraction, bound: Fraction) -> int:
    """floor(centre + sqrt(bound)) computed exactly (bound >= 0)."""
    num, den = bound.numerator, bound.denominator
    s_up = Fraction(isqrt(num * den) + 1, den)  # rational upper bound on sqrt
    t = centre + s_up
    k = t.numerator // t.denominator
    while Fraction(k) - centre > 0 and (Fraction(k) - centre) ** 2 > bound:
        k -= 1
    return k


def rep_count(L: GramLattice, n: int, method: str = "auto") -> int:
    """Number of lattice vectors of norm n.

    ``method='auto'`` uses fast exact counting models for the standard
    constructions (A_n, D_n, E7, Z^k-type sums) and Fincke-Pohst otherwise;
    ``method='fincke-pohst'`` forces the generic enumerator.
    """
    if n == 0:
        return 1
    if method == "auto":
        counts = _model_counts(L, n // 2 + 2) if L.is_even else None
        if counts is not None:
            return int(counts[n // 2]) if n % 2 == 0 and n // 2 < len(counts) else 0
    elif method not in ("fincke-pohst",):
        raise ValueError(f"unknown method {method!r}")
    return len(enumerate_norm(L, n))


def roots(L: GramLattice):
    """All vectors of norm 2."""
    return enumerate_norm(L, 2)


def theta_counts(L: GramLattice, prec: int, method: str = "auto"):
    """Counts c[m] = #{v : norm(v) = 2m} for 0 <= m < prec (even PD lattice).

    This is the coefficient list of the theta series on the integer exponent
    grid, obtained by exhaustive counting (dynamic programming over a Z^k
    coordinate model when available, Fincke-Pohst otherwise).
    """
    if not L.is_even:
        raise ValueError("theta_counts expects an even lattice")
    if method == "auto":
        c = _model_counts(L, prec)
        if c is not None:
            return [int(x) for x in c[:prec]]
    return [rep_count(L, 2 * m, method="fincke-pohst") for m in range(prec)]


# -- fast exact counting models for standard lattices -----------------------


def _model_counts(L: GramLattice, prec: int):
    """Vector counts by half-norm for labelled standard lattices, or None."""
    bucket = 128
    while bucket < prec:
        bucket *= 2
    c = _model_counts_cached(L, bucket)
    return None if c is None else c[:prec]


@lru_cache(maxsize=64)
def _model_counts_cached(L: GramLattice, prec: int):
    label = L.label
    if not label:
        return None
    parts = label.split("+")
    acc = None
    for part in parts:
        c = _atom_counts(part, prec)
        if c is None:
            return None
        acc = c if acc is None else _convolve_trunc(acc, c, prec)
    return tuple(acc)


def _atom_counts(label: str, prec: int):
    if label == "U" or "(" in label:
        return None
    if label.startswith("A") and label[1:].isdigit():
        return counts_sum_zero(int(label[1:]) + 1, prec)
    if label.startswith("D") and label[1:].isdigit():
        return counts_even_sum(int(label[1:]), prec)
    if label == "E7":
        return counts_e7(prec)
    if label.startswith("<") and label.endswith(">"):
        k = int(label[1:-1])
        if k <= 0 or k % 2:
            return None
        c = [0] * prec
        for x in itertools.count(0):
            half = k * x * x // 2
            if half >= prec:
                break
            c[half] += 1 if x == 0 else 2
        return c
    return None


def _convolve_trunc(a, b, prec):
    out = [0] * prec
    for i, ai in enumerate(a[:prec]):
        if ai:
            for j, bj in enumerate(b[: prec - i]):
                if bj:
                    out[i + j] += ai * bj
    return out


def counts_sum_zero(n_coords: int, prec: int):
    """c[m] = #{x in Z^n : sum x_i = 0, sum x_i^2 = 2m}  (the A_{n-1} model)."""
    max_sq = 2 * (prec - 1)
    xmax = isqrt(max_sq)
    width = n_coords * xmax
    table = np.zeros((max_sq + 1, 2 * width + 1), dtype=np.int64)
    table[0, width] = 1
    for _ in range(n_coords):
        new = np.zeros_like(table)
        for x in range(-xmax, xmax + 1):
            sq = x * x
            if sq > max_sq:
                continue
            src = table[: max_sq + 1 - sq]
            if x >= 0:
                new[sq:, : 2 * width + 1 - x] += src[:, x:]
            else:
                new[sq:, -x:] += src[:, : 2 * width + 1 + x]
        table = new
    col = table[:, width]
    return [int(col[2 * m]) for m in range(prec)]


def counts_even_sum(n_coords: int, prec: int):
    """c[m] = #{x in Z^n : sum x_i even, sum x_i^2 = 2m}  (the D_n model)."""
    max_sq = 2 * (prec - 1)
    xmax = isqrt(max_sq)
    table = np.zeros((max_sq + 1, 2), dtype=np.int64)
    table[0, 0] = 1
    for _ in range(n_coords):
        new = np.zeros_like(table)
        for x in range(-xmax, xmax + 1):
            sq = x * x
            if sq > max_sq:
                continue
            par = x & 1
            src = table[: max_sq + 1 - sq]
            if par:
                new[sq:, 0] += src[:, 1]
                new[sq:, 1] += src[:, 0]
            else:
                new[sq:, :] += src
        table = new
    col = table[:, 0]
    return [int(col[2 * m]) for m in range(prec)]


def counts_e7(prec: int):
    """c[m] = N_{E7}(2m) via the zero-sum Z^8 model: vectors are z/2 with
    z in Z^8, sum z = 0, all z_i of equal parity, sum z_i^2 = 8m."""
    out = []
    even = _zero_sum_parity_counts(8, 8 * (prec - 1), 0)
    odd = _zero_sum_parity_counts(8, 8 * (prec - 1), 1)
    for m in range(prec):
        out.append(int(even[8 * m] + odd[8 * m]) if m else 1)
    return out


def _zero_sum_parity_counts(n_coords: int, max_sq: int, parity: int):
    """counts[s] = #{z in Z^8 : z_i = parity mod 2, sum z = 0, sum z^2 = s};
    for parity 0 the z are even (z=2y)."""
    zmax = isqrt(max_sq)
    vals = [z for z in range(-zmax, zmax + 1) if z % 2 == parity % 2]
    width = n_coords * zmax
    table = np.zeros((max_sq + 1, 2 * width + 1), dtype=np.int64)
    table[0, width] = 1
    for _ in range(n_coords):
        new = np.zeros_like(table)
        for z in vals:
            sq = z * z
            if sq > max_sq:
                continue
            src = table[: max_sq + 1 - sq]
            if z >= 0:
                new[sq:, : 2 * width + 1 - z] += src[:, z:]
            else:
                new[sq:, -z:] += src[:, : 2 * width + 1 + z]
        table = new
    return table[:, width]


# ---------------------------------------------------------------------------
# orthogonal complements, isometry testing, reflections


def orthogonal_complement(L: GramLattice, vectors) -> GramLattice:
    """Gram matrix of the saturated sublattice orthogonal to the given
    (linearly independent) vectors."""
    vecs = [tuple(int(c) for c in getattr(v, "coords", v)) for v in vectors]
    n = L.rank
    m = [[sum(L.gram[i][j] * v[j] for j in range(n)) for i in range(n)] for v in vecs]
    kern = integer_kernel(m)
    if len(kern) != n - len(vecs):
        raise ValueError("vectors are linearly dependent")
    g = [[sum(kern[a][i] * L.gram[i][j] * kern[b][j] for i in range(n) for j in range(n)) for b in range(len(kern))] for a in range(len(kern))]
    return GramLattice(_freeze(g), f"perp({L.label})" if L.label else "perp")


def integer_kernel(m):
    """Basis (rows) of the saturated integer kernel {x : m x = 0}."""
    rows = len(m)
    if rows == 0:
        raise ValueError("empty matrix")
    n = len(m[0])
    dmat, _, v = smith_normal_form(m)
    rank = sum(1 for i in range(min(rows, n)) if dmat[i][i] != 0)
    # kernel basis: columns of V past the rank
    return [tuple(v[i][j] for i in range(n)) for j in range(rank, n)]


def smith_normal_form(mat):
    """Smith normal form with transforms: returns (D, Ut, V) with Ut*M*V = D,
    Ut and V unimodular, D diagonal with d1 | d2 | ... ."""
    m = [[int(x) for x in row] for row in mat]
    rows, cols = len(m), len(m[0])
    ut = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        ut[i], ut[j] = ut[j], ut[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, c):
        m[dst] = [a + c * b for a, b in zip(m[dst], m[src])]
        ut[dst] = [a + c * b for a, b in zip(ut[dst], ut[src])]

    def addmul_col(dst, src, c):
        for r in m:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    t = 0
    while t < min(rows, cols):
        # find a nonzero pivot in the remaining block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < best):
                    best = abs(m[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            progressed = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    addmul_row(i, t, -q)
                    if m[i][t]:
                        swap_rows(t, i)
                        progressed = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    addmul_col(j, t, -q)
                    if m[t][j]:
                        swap_cols(t, j)
                        progressed = True
            if not progressed:
                break
        # divisibility condition: pivot must divide the remaining block
        fixed = True
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if m[i][j] % m[t][t]:
                    addmul_row(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if m[t][t] < 0:
                m[t] = [-x for x in m[t]]
                ut[t] = [-x for x in ut[t]]
            t += 1
    dmat = [[m[i][j] if i == j else 0 for j in range(cols)] for i in range(rows)]
    # sanity: D == Ut * mat * V
    chk = _mat_mul(_mat_mul(ut, [list(r) for r in mat]), v)
    assert chk == dmat, "SNF transform mismatch"
    return dmat, ut, v


def _mat_mul(a, b):
    rows, inner_, cols = len(a), len(b), len(b[0])
    return [[sum(a[i][k] * b[k][j] for k in range(inner_)) for j in range(cols)] for i in range(rows)]


def is_isometric(L1: GramLattice, L2: GramLattice, max_rank: int = 8) -> bool:
    """Backtracking isometry test for positive-definite lattices of rank <= max_rank."""
    if L1.rank != L2.rank:
        return False
    if L1.rank > max_rank:
        raise ValueError(f"rank {L1.rank} exceeds the configured cap {max_rank}")
    if L1.det != L2.det:
        return False
    if not (L1.is_positive_definite and L2.is_positive_definite):
        raise ValueError("is_isometric expects positive-definite lattices")
    norms = sorted({L1.gram[i][i] for i in range(L1.rank)})
    cands = {n: enumerate_norm(L2, n) for n in norms}
    for n in norms:
        if len(cands[n]) != len(enumerate_norm(L1, n)):
            return False
    g1, g2 = L1.gram, L2.gram
    rank = L1.rank
    # precompute Gram-image rows for candidate filtering
    gdot = {n: [tuple(sum(g2[i][j] * w[j] for j in range(rank)) for i in range(rank)) for w in cands[n]] for n in norms}
    chosen: list = []

    def place(i):
        if i == rank:
            return True
        want = [g1[i][j] for j in range(i)]
        pool = cands[g1[i][i]]
        rows = gdot[g1[i][i]]
        for w, gw in zip(pool, rows):
            ok = True
            for j in range(i):
                if sum(gw[k] * chosen[j][k] for k in range(rank)) != want[j]:
                    ok = False
                    break
            if ok:
                chosen.append(w)
                if place(i + 1):
                    return True
                chosen.pop()
        return False

    return place(0)


def reflection(L: GramLattice, r, x):
    """Image of x under the reflection in r: x - 2(x,r)/(r,r) * r."""
    r = tuple(getattr(r, "coords", r))
    x = tuple(getattr(x, "coords", x))
    rr = norm(L, r)
    if rr == 0:
        raise ValueError("cannot reflect in an isotropic vector")
    xr2 = 2 * inner(L, x, r)
    if xr2 % rr:
        raise ValueError("reflection image is not integral")
    c = xr2 // rr
    return tuple(xi - c * ri for xi, ri in zip(x, r))


# ---------------------------------------------------------------------------
# reflection orbits of sublattice descriptors


def _sign_normalize(vec):
    for c in vec:
        if c != 0:
            return vec if c > 0 else tuple(-x for x in vec)
    raise ValueError("zero vector in sublattice descriptor")


def canonical_object(obj):
    """Canonical form of a set of roots: each root sign-normalized by its
    first nonzero coordinate, the tuple sorted."""
    return tuple(sorted(_sign_normalize(tuple(v)) for v in obj))


def reflection_orbits(L: GramLattice, objects, generators=None):
    """Partition sublattice descriptors into orbits of the reflection group.

    ``objects``: iterable of root collections (each root a coordinate tuple).
    ``generators``: reflection vectors to close under; defaults to the basis
    vectors when the basis consists of roots (then they generate the full
    Weyl group), otherwise all roots of L.

    Returns (orbit_count, orbit_sizes, representatives); representatives are
    the lexicographically smallest canonical object of each orbit and
    orbit_sizes is sorted descending.
    """
    objs = [canonical_object(o) for o in objects]
    if len(set(objs)) != len(objs):
        raise ValueError("objects are not distinct after canonicalization")
    if generators is None:
        if all(L.gram[i][i] == 2 for i in range(L.rank)):
            generators = [tuple(1 if j == i else 0 for j in range(L.rank)) for i in range(L.rank)]
        else:
            generators = roots(L)
    index = {o: i for i, o in enumerate(objs)}
    parent = list(range(len(objs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj

    n = L.rank
    gram_np = np.array(L.gram, dtype=np.int64)
    arr = np.array(objs, dtype=np.int64)  # (N, k, n)
    for r in generators:
        rv = np.array(r, dtype=np.int64)
        gr = gram_np @ rv
        rr = int(rv @ gr)
        coeff = 2 * (arr @ gr)
        if np.any(coeff % rr):
            raise ValueError("reflection image is not integral")
        imgs = arr - (coeff // rr)[:, :, None] * rv[None, None, :]
        # sign-normalize each root: flip rows whose first nonzero entry is < 0
        flat = imgs.reshape(-1, n)
        nz = flat != 0
        first = np.argmax(nz, axis=1)
        lead = flat[np.arange(flat.shape[0]), first]
        flat = np.where((lead < 0)[:, None], -flat, flat)
        imgs = flat.reshape(imgs.shape)
        # sort the roots inside each object via packed keys
        packed = _pack_rows(imgs)
        order = np.argsort(packed, axis=1, kind="stable")
        imgs = np.take_along_axis(imgs, order[:, :, None], axis=1)
        for i in range(len(objs)):
            key = tuple(map(tuple, imgs[i]))
            j = index.get(key)
            if j is None:
                raise ValueError("object set is not closed under the reflection group")
            union(i, j)
    groups = {}
    for i in range(len(objs)):
        groups.setdefault(find(i), []).append(i)
    orbits = sorted(groups.values(), key=len, reverse=True)
    reps = [min(objs[i] for i in orb) for orb in orbits]
    return len(orbits), [len(o) for o in orbits], reps


def _pack_rows(arr3):
    """Pack the last axis of small integers into sortable int64 keys."""
    n = arr3.shape[-1]
    if np.any(arr3 > 120) or np.any(arr3 < -120):
        raise ValueError("coordinates too large to pack")
    base = np.int64(256)
    out = np.zeros(arr3.shape[:-1], dtype=np.int64)
    for i in range(n):
        out = out * base + (arr3[..., i].astype(np.int64) + 128)
    return out


# ---------------------------------------------------------------------------
# discriminant groups


@dataclass(frozen=True)
class DiscriminantGroup:
    """The finite quadratic group dual/L: invariant factors d1 | d2 | ...,
    generators in lattice-basis rational coordinates, q values mod 2 and
    bilinear values mod 1."""

    invariant_factors: tuple
    generators: tuple
    q_values: tuple
    b_matrix: tuple

    @property
    def order(self) -> int:
        o = 1
        for d in self.invariant_factors:
            o *= d
        return o

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) <= 1


def discriminant_group(L: GramLattice) -> DiscriminantGroup:
    g = [list(r) for r in L.gram]
    n = L.rank
    dmat, ut, v = smith_normal_form(g)
    dets = abs(L.det)
    facs = []
    gens = []
    for i in range(n):
        d = dmat[i][i]
        if d in (1, -1):
            continue
        d = abs(d)
        # generator: G * (V e_i) = d * (Ut^{-1} e_i)  =>  (V e_i)/d lies in the dual
        col = [Fraction(v[r][i], d) for r in range(n)]
        facs.append(d)
        gens.append(tuple(col))
    assert _prod(facs) == dets, "invariant factor product mismatch"
    qv = []
    for gvec in gens:
        val = _bilinear_fraction(g, gvec, gvec) % 2
        qv.append(val)
    bm = []
    for a in gens:
        row = []
        for b in gens:
            row.append(_bilinear_fraction(g, a, b) % 1)
        bm.append(tuple(row))
    return DiscriminantGroup(tuple(facs), tuple(gens), tuple(qv), tuple(bm))


def _bilinear_fraction(g, a, b) -> Fraction:
    n = len(g)
    return sum(a[i] * g[i][j] * b[j] for i in range(n) for j in range(n))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out
