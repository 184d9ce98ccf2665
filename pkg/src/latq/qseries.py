"""Truncated q-expansions with exact coefficients.

A QSeries stores coefficients on the exponent grid (1/N)*Z>=0, valid for all
exponents below its precision.  Coefficients are Python ints or Eisenstein
integers a + b*zeta with zeta^2 = zeta - 1 (a primitive sixth root of unity),
which is enough to expand the Jacobi theta function at the rational shifts
k/6 and hence the classical theta identities for the A_n (n+1 | 6) and D_n
root lattices.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache

from .lattices import GramLattice, theta_counts

__all__ = [
    "EisensteinInteger",
    "QSeries",
    "theta3",
    "theta3_shifted",
    "scale_tau",
    "shift_tau_by_one",
    "theta_A",
    "theta_D",
    "theta_by_enumeration",
    "save_theta_cache",
    "load_theta_cache",
]

DEFAULT_PREC = 128


@dataclass(frozen=True)
class EisensteinInteger:
    """a + b*zeta with zeta^2 = zeta - 1 (zeta = e^{i pi/3})."""

    a: int
    b: int

    def __add__(self, other):
        other = _eis(other)
        return EisensteinInteger(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinInteger(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-_eis(other))

    def __rsub__(self, other):
        return _eis(other) + (-self)

    def __mul__(self, other):
        other = _eis(other)
        # (a + b z)(c + d z) = ac + (ad + bc) z + bd (z - 1)
        a, b, c, d = self.a, self.b, other.a, other.b
        return EisensteinInteger(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def conjugate(self):
        return EisensteinInteger(self.a + self.b, -self.b)

    @property
    def is_rational(self):
        return self.b == 0

    def __bool__(self):
        return bool(self.a or self.b)

    @staticmethod
    def zeta_power(m: int) -> "EisensteinInteger":
        table = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
        a, b = table[m % 6]
        return EisensteinInteger(a, b)


def _eis(x):
    if isinstance(x, EisensteinInteger):
        return x
    if isinstance(x, int):
        return EisensteinInteger(x, 0)
    raise TypeError(f"cannot coerce {x!r} to an Eisenstein integer")


@dataclass(frozen=True)
class QSeries:
    """Coefficients c[k] at exponent k/grid, valid for exponents < prec.

    prec is measured in q-units; the number of stored coefficients is
    grid * prec (exponent units k with k/grid < prec).
    """

    grid: int
    prec: int
    coeffs: tuple

    def __post_init__(self):
        if self.grid < 1 or self.prec < 1:
            raise ValueError("grid and prec must be positive")
        if len(self.coeffs) != self.grid * self.prec:
            raise ValueError("coefficient array length must equal grid*prec")

    @property
    def units(self) -> int:
        return self.grid * self.prec

    def coefficient(self, exponent):
        """Coefficient at a rational exponent (int or Fraction)."""
        num = exponent * self.grid
        if num != int(num):
            return 0
        num = int(num)
        if num < 0 or num >= self.units:
            raise ValueError("exponent outside stored precision")
        return self.coeffs[num]

    def _common(self, other):
        if not isinstance(other, QSeries):
            raise TypeError("expected a QSeries")
        grid = _lcm(self.grid, other.grid)
        prec = min(self.prec, other.prec)
        return self.regrid(grid).truncate(prec), other.regrid(grid).truncate(prec)

    def __add__(self, other):
        a, b = self._common(other)
        return QSeries(a.grid, a.prec, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other):
        a, b = self._common(other)
        return QSeries(a.grid, a.prec, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __mul__(self, other):
        if isinstance(other, (int, EisensteinInteger)):
            return QSeries(self.grid, self.prec, tuple(other * c for c in self.coeffs))
        a, b = self._common(other)
        n = a.units
        out = [0] * n
        for i, ai in enumerate(a.coeffs):
            if ai:
                for j in range(n - i):
                    bj = b.coeffs[j]
                    if bj:
                        out[i + j] = out[i + j] + ai * bj
        return QSeries(a.grid, a.prec, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers: use inverse() first")
        result = QSeries(self.grid, self.prec, tuple([1] + [0] * (self.units - 1)))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse; the constant coefficient must be a unit."""
        c0 = self.coeffs[0]
        if isinstance(c0, EisensteinInteger):
            raise ValueError("inverse over the Eisenstein ring is not supported")
        if c0 not in (1, -1):
            raise ValueError("constant coefficient must be a unit")
        n = self.units
        inv = [0] * n
        inv[0] = c0
        for k in range(1, n):
            s = sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1) if self.coeffs[i])
            inv[k] = -c0 * s
        return QSeries(self.grid, self.prec, tuple(inv))

    def truncate(self, prec: int):
        if prec > self.prec:
            raise ValueError("cannot extend precision")
        return QSeries(self.grid, prec, self.coeffs[: self.grid * prec])

    def regrid(self, grid: int):
        """Re-express on a finer grid (grid must be a multiple of the old)."""
        if grid == self.grid:
            return self
        if grid % self.grid:
            raise ValueError("new grid must refine the old one")
        f = grid // self.grid
        out = [0] * (grid * self.prec)
        for k, c in enumerate(self.coeffs):
            out[k * f] = c
        return QSeries(grid, self.prec, tuple(out))

    def to_integer_grid(self):
        """Drop to grid 1; every off-grid coefficient must vanish."""
        out = []
        for k, c in enumerate(self.coeffs):
            if k % self.grid == 0:
                out.append(c)
            elif c:
                raise ValueError("series does not live on integer exponents")
        return QSeries(1, self.prec, tuple(out))

    def rationalize(self):
        """Convert Eisenstein coefficients with b=0 to plain ints."""
        out = []
        for c in self.coeffs:
            if isinstance(c, EisensteinInteger):
                if not c.is_rational:
                    raise ValueError("series has an irrational coefficient")
                out.append(c.a)
            else:
                out.append(c)
        return QSeries(self.grid, self.prec, tuple(out))

    def integer_coefficients(self):
        """Coefficient list on the integer grid (asserts integrality)."""
        return list(self.rationalize().to_integer_grid().coeffs)


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


# ---------------------------------------------------------------------------
# Jacobi theta building blocks


def theta3(prec: int = DEFAULT_PREC) -> QSeries:
    """Sum_n q^{n^2/2} on the half-integer grid."""
    units = 2 * prec
    c = [0] * units
    c[0] = 1
    n = 1
    while n * n < units:
        c[n * n] += 2
        n += 1
    return QSeries(2, prec, tuple(c))


def theta3_shifted(k: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Sum_n q^{n^2/2} zeta6^{nk} over the Eisenstein integers."""
    if not 0 <= k <= 5:
        raise ValueError("shift index must be in 0..5")
    units = 2 * prec
    c = [EisensteinInteger(0, 0)] * units
    c[0] = EisensteinInteger(1, 0)
    n = 1
    while n * n < units:
        c[n * n] = c[n * n] + EisensteinInteger.zeta_power(n * k) + EisensteinInteger.zeta_power(-n * k)
        n += 1
    return QSeries(2, prec, tuple(c))


def scale_tau(s: QSeries, m: int) -> QSeries:
    """q^e -> q^{me}; exponents leaving the window are truncated away."""
    if m < 1:
        raise ValueError("scale factor must be a positive integer")
    out = [0] * s.units
    for k, c in enumerate(s.coeffs):
        if c:
            if k * m < s.units:
                out[k * m] = c
    return QSeries(s.grid, s.prec, tuple(out))


def shift_tau_by_one(s: QSeries) -> QSeries:
    """Multiply the coefficient at exponent e by e^{2 pi i e}.

    On the grid N=2 this is (-1)^(2e); finer grids would need roots of unity
    outside the coefficient ring and are rejected.
    """
    if s.grid not in (1, 2):
        raise ValueError("tau -> tau+1 needs the half-integer exponent grid")
    out = []
    for k, c in enumerate(s.coeffs):
        sign = -1 if (s.grid == 2 and k % 2) else 1
        out.append(sign * c if sign < 0 else c)
    return QSeries(s.grid, s.prec, tuple(out))


# ---------------------------------------------------------------------------
# root-lattice theta series in closed form


@lru_cache(maxsize=32)
def theta_A(n: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Theta series of the root lattice A_n, for n+1 dividing 6.

    Classical identity: sum_{k mod n+1} theta3(tau, k/(n+1))^{n+1} divided by
    (n+1) * theta3((n+1) tau); integrality of the result is asserted.
    """
    if (n + 1) not in (2, 3, 6):
        raise ValueError("theta_A is implemented for n in {1, 2, 5}")
    step = 6 // (n + 1)
    num = None
    for k in range(n + 1):
        term = theta3_shifted((k * step) % 6, prec) ** (n + 1)
        num = term if num is None else num + term
    num = num.rationalize()
    den = scale_tau(theta3(prec), n + 1) * (n + 1)
    # constant terms: num starts with n+1, den with n+1 -> normalize exactly
    quotient = _divide_exact(num, den)
    return quotient.to_integer_grid()


def _divide_exact(num: QSeries, den: QSeries) -> QSeries:
    """num / den for integer series whose quotient must again be integral."""
    c0 = den.coeffs[0]
    if c0 == 0:
        raise ValueError("division by a series with zero constant term")
    n = min(num.units, den.units)
    out = [0] * n
    for k in range(n):
        s = num.coeffs[k] - sum(den.coeffs[i] * out[k - i] for i in range(1, k + 1) if den.coeffs[i])
        if s % c0:
            raise ValueError("quotient is not integral")
        out[k] = s // c0
    return QSeries(num.grid, n // num.grid, tuple(out[: (n // num.grid) * num.grid]))


@lru_cache(maxsize=32)
def theta_D(n: int, prec: int = DEFAULT_PREC) -> QSeries:
    """Theta series of D_n: (theta3(tau)^n + theta3(tau+1)^n) / 2."""
    if n < 2:
        raise ValueError("theta_D needs n >= 2")
    t3 = theta3(prec)
    t4 = shift_tau_by_one(t3)
    s = t3**n + t4**n
    half = []
    for c in s.coeffs:
        if c % 2:
            raise ValueError("theta_D coefficient is not an even integer")
        half.append(c // 2)
    return QSeries(s.grid, s.prec, tuple(half)).to_integer_grid()


def theta_by_enumeration(L: GramLattice, prec: int = DEFAULT_PREC, method: str = "auto") -> QSeries:
    """Theta series of an even positive-definite lattice by exhaustive
    counting (integer exponent grid)."""
    counts = theta_counts(L, prec, method=method)
    return QSeries(1, prec, tuple(counts))


# ---------------------------------------------------------------------------
# plain-text coefficient cache


CACHE_MAGIC = "latq-theta-cache v1"


def save_theta_cache(path, records):
    """Write {(name, grid, prec): coefficient list} to a plain-text file."""
    lines = [CACHE_MAGIC]
    for (name, grid, prec), coeffs in sorted(records.items()):
        payload = "\n".join(str(int(c)) for c in coeffs)
        digest = hashlib.sha256(payload.encode()).hexdigest()
        lines.append(f"record name={name} grid={grid} prec={prec} count={len(coeffs)} sha256={digest}")
        lines.append(payload)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_theta_cache(path):
    """Read a cache file; raises ValueError on version or integrity mismatch."""
    with open(path) as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != CACHE_MAGIC:
        raise ValueError("unrecognized cache file version")
    records = {}
    i = 1
    while i < len(lines):
        head = lines[i]
        if not head.startswith("record "):
            raise ValueError("malformed cache record header")
        fields = dict(kv.split("=", 1) for kv in head.split()[1:])
        count = int(fields["count"])
        body = lines[i + 1 : i + 1 + count]
        payload = "\n".join(body)
        if hashlib.sha256(payload.encode()).hexdigest() != fields["sha256"]:
            raise ValueError(f"cache integrity check failed for {fields['name']}")
        key = (fields["name"], int(fields["grid"]), int(fields["prec"]))
        records[key] = [int(x) for x in body]
        i += 1 + count
    return records
