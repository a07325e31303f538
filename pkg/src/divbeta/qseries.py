"""Truncated q-expansions over ZZ, QQ and GF(p), and the classical series.

A :class:`QSeries` with precision ``N`` knows its coefficients of
``q^0 .. q^N``; arithmetic between two series keeps the smaller precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import bernoulli, check_prime

__all__ = [
    "Ring",
    "ZZ",
    "QQ",
    "GF",
    "QSeries",
    "sigma",
    "verschiebung",
    "eisenstein_q",
    "e2_q",
    "delta_q",
    "gamma0_2_generators",
    "ord_q",
    "default_precision",
]


@dataclass(frozen=True)
class Ring:
    """Coefficient ring tag: ``ZZ``, ``QQ`` or ``GF(p)``."""

    name: str
    p: int | None = None

    def __repr__(self):
        return self.name if self.p is None else f"GF({self.p})"

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    def coerce(self, c):
        if self.p is not None:
            return _to_fp(c, self.p)
        if self.name == "ZZ":
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"{c} is not an integer")
                return int(c)
            return int(c)
        c = Fraction(c)
        return int(c) if c.denominator == 1 else c


ZZ = Ring("ZZ")
QQ = Ring("QQ")


@lru_cache(maxsize=None)
def GF(p: int) -> Ring:
    return Ring("GF", check_prime(p))


def _to_fp(c, p: int) -> int:
    if isinstance(c, Fraction):
        if c.denominator % p == 0:
            raise ValueError(f"{c} is not {p}-integral")
        return c.numerator * pow(c.denominator, -1, p) % p
    return int(c) % p


def _join(r: Ring, s: Ring) -> Ring:
    if r == s:
        return r
    if {r, s} == {ZZ, QQ}:
        return QQ
    raise ValueError(f"ring mismatch: {r!r} vs {s!r}")


class QSeries:
    """Truncated power series ``c_0 + c_1 q + ... + c_N q^N + O(q^(N+1))``."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, coeffs, prec: int | None = None, ring: Ring = ZZ):
        coeffs = list(coeffs)
        if prec is None:
            prec = len(coeffs) - 1
        if prec < 0:
            raise ValueError("precision must be non-negative")
        coeffs = coeffs[: prec + 1] + [0] * (prec + 1 - len(coeffs))
        self.ring = ring
        self.coeffs = tuple(ring.coerce(c) for c in coeffs)

    @classmethod
    def _raw(cls, coeffs, ring: Ring) -> QSeries:
        obj = object.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def one(cls, prec: int, ring: Ring = ZZ) -> QSeries:
        return cls._raw((1,) + (0,) * prec, ring)

    @classmethod
    def q(cls, prec: int, ring: Ring = ZZ) -> QSeries:
        return cls([0, 1], prec, ring)

    @property
    def prec(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        if n > self.prec:
            raise IndexError(f"coefficient q^{n} beyond precision {self.prec}")
        return self.coeffs[n]

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if len(self.coeffs) > 8 else ""
        return f"QSeries([{shown}{more}], prec={self.prec}, ring={self.ring!r})"

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.prec, other.prec)
        return self.ring == other.ring and self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None

    def truncate(self, prec: int) -> QSeries:
        return QSeries._raw(self.coeffs[: prec + 1], self.ring) if prec < self.prec else self

    def change_ring(self, ring: Ring) -> QSeries:
        return QSeries(self.coeffs, self.prec, ring)

    def reduce(self, p: int) -> QSeries:
        return self.change_ring(GF(p))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _norm(self, cs, ring: Ring):
        if ring.p is not None:
            p = ring.p
            return QSeries._raw([c % p for c in cs], ring)
        if ring is QQ:
            return QSeries._raw(
                [int(c) if isinstance(c, Fraction) and c.denominator == 1 else c for c in cs], ring
            )
        return QSeries._raw(cs, ring)

    def _binary(self, other):
        if isinstance(other, QSeries):
            return other, _join(self.ring, other.ring)
        return QSeries.one(self.prec, self.ring).scalar_mul(other), self.ring

    def __add__(self, other):
        other, ring = self._binary(other)
        n = min(self.prec, other.prec)
        return self._norm([a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], ring)

    __radd__ = __add__

    def __neg__(self):
        return self._norm([-c for c in self.coeffs], self.ring)

    def __sub__(self, other):
        other, ring = self._binary(other)
        n = min(self.prec, other.prec)
        return self._norm([a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)], ring)

    def __rsub__(self, other):
        return (-self) + other

    def scalar_mul(self, c) -> QSeries:
        c = self.ring.coerce(c) if self.ring.p is not None else c
        ring = self.ring
        if ring is ZZ and isinstance(c, Fraction) and c.denominator != 1:
            ring = QQ
        return self._norm([c * a for a in self.coeffs], ring)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scalar_mul(other)
        ring = _join(self.ring, other.ring)
        n = min(self.prec, other.prec)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for i in range(n + 1):
            x = a[i]
            if not x:
                continue
            for j in range(n + 1 - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
        return self._norm(out, ring)

    def __rmul__(self, other):
        return self.scalar_mul(other)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = QSeries.one(self.prec, self.ring)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def inverse(self) -> QSeries:
        """Multiplicative inverse; the constant term must be a unit."""
        a = self.coeffs
        ring = self.ring
        if not a[0]:
            raise ZeroDivisionError("constant term is zero")
        if ring.p is not None:
            p = ring.p
            inv0 = pow(a[0], -1, p)
        elif ring is ZZ:
            if a[0] not in (1, -1):
                ring = QQ
            inv0 = Fraction(1, a[0]) if ring is QQ else a[0]
        else:
            inv0 = 1 / Fraction(a[0])
        n = self.prec
        b = [0] * (n + 1)
        b[0] = inv0
        for k in range(1, n + 1):
            s = 0
            for i in range(1, k + 1):
                if a[i]:
                    s += a[i] * b[k - i]
            b[k] = -s * inv0
            if ring.p is not None:
                b[k] %= ring.p
        return self._norm(b, ring)

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.inverse()
        if self.ring.p is not None:
            return self.scalar_mul(pow(self.ring.coerce(other), -1, self.ring.p))
        return self.scalar_mul(Fraction(1) / Fraction(other))

    def ord_q(self) -> int | None:
        return ord_q(self)


def ord_q(f: QSeries) -> int | None:
    """Index of the first nonzero coefficient, ``None`` for a series that is
    zero through its precision."""
    for n, c in enumerate(f.coeffs):
        if c:
            return n
    return None


def verschiebung(f: QSeries, N: int) -> QSeries:
    """f(q) -> f(q^N), keeping the precision of ``f``."""
    if N < 1:
        raise ValueError("N must be positive")
    prec = f.prec
    out = [0] * (prec + 1)
    for k in range(prec // N + 1):
        out[k * N] = f.coeffs[k]
    return QSeries._raw(out, f.ring)


@lru_cache(maxsize=4096)
def _sigma(k: int, n: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def sigma(k: int, n: int) -> int:
    """Sum of k-th powers of the positive divisors of n."""
    return _sigma(k, n)


def _sigma_mod(k: int, n: int, p: int) -> int:
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += pow(d, k, p)
            e = n // d
            if e != d:
                total += pow(e, k, p)
        d += 1
    return total % p


def eisenstein_q(t: int, prec: int, ring: Ring = ZZ) -> QSeries:
    """Weight-t Eisenstein series 1 - (2t/B_t) sum sigma_{t-1}(n) q^n."""
    if t < 4 or t % 2:
        raise ValueError("weight must be an even integer >= 4")
    factor = Fraction(-2 * t) / bernoulli(t)
    if ring.p is not None:
        p = ring.p
        if factor.denominator % p == 0:
            raise ValueError(f"-2t/B_t is not {p}-integral for t={t}")
        c = _to_fp(factor, p)
        return QSeries._raw([1] + [c * _sigma_mod(t - 1, n, p) % p for n in range(1, prec + 1)], ring)
    out = [1] + [factor * sigma(t - 1, n) for n in range(1, prec + 1)]
    if factor.denominator == 1:
        return QSeries._raw([int(c) for c in out], ring)
    return QSeries(out, prec, QQ)


def e2_q(prec: int, ring: Ring = ZZ) -> QSeries:
    """Quasi-modular 1 - 24 sum sigma_1(n) q^n (only used to build delta)."""
    return QSeries([1] + [-24 * sigma(1, n) for n in range(1, prec + 1)], prec, ring)


def delta_q(prec: int, ring: Ring = ZZ) -> QSeries:
    """Ramanujan's Delta = (E4^3 - E6^2)/1728."""
    if ring.p is not None:
        return _delta_int(prec).reduce(ring.p)
    out = _delta_int(prec)
    return out if ring is ZZ else out.change_ring(ring)


@lru_cache(maxsize=16)
def _delta_int(prec: int) -> QSeries:
    e4 = eisenstein_q(4, prec)
    e6 = eisenstein_q(6, prec)
    diff = e4 * e4 * e4 - e6 * e6
    if any(c % 1728 for c in diff.coeffs):
        raise ArithmeticError("E4^3 - E6^2 not divisible by 1728")
    return QSeries._raw([c // 1728 for c in diff.coeffs], ZZ)


def gamma0_2_generators(prec: int, ring: Ring = QQ) -> tuple[QSeries, QSeries, QSeries]:
    """(delta, eps, mu) generating Gamma0(2) forms with 2 inverted.

    delta = (2 E2(q^2) - E2(q)) / 4, eps = (64 delta^2 - E4) / 48 and
    mu = delta^2 - eps.  ``ring`` may be QQ or GF(p) for odd p.
    """
    delta, eps, mu = _gamma0_2_qq(prec)
    if ring.p is not None:
        return delta.reduce(ring.p), eps.reduce(ring.p), mu.reduce(ring.p)
    if ring is not QQ:
        raise ValueError("Gamma0(2) generators need 2 inverted: use QQ or GF(p)")
    return delta, eps, mu


@lru_cache(maxsize=16)
def _gamma0_2_qq(prec: int):
    e2 = e2_q(prec)
    delta = (verschiebung(e2, 2) * 2 - e2).change_ring(QQ) / 4
    eps = (delta * delta * 64 - eisenstein_q(4, prec)) / 48
    mu = delta * delta - eps
    return delta, eps, mu


def default_precision(weight: int) -> int:
    """Guarded precision for a weight-t triangular solve."""
    return weight // 12 + 8
