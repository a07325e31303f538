"""Exact arithmetic: Bernoulli numbers and dense polynomials over GF(p).

Polynomials over GF(p) store their coefficients as a tuple of residues in
``[0, p)``, lowest degree first, with no trailing zeros (the zero polynomial
is the empty tuple).  Residues of GF(p) itself are plain Python ints; the
modulus is carried by whatever container holds them.

Heavy loops (long division, products) run on int64 numpy arrays whenever the
intermediate sums provably fit, and fall back to Python ints otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

__all__ = [
    "bernoulli",
    "is_prime",
    "check_prime",
    "binomial_mod",
    "FpPoly",
    "fp_poly_divrem",
    "factor_multiplicity",
    "linear_power_coeffs",
    "taylor_coefficients",
    "taylor_compose",
]

_INT64_LIMIT = 2**62


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def check_prime(p: int) -> int:
    """Return ``p`` if it is an odd prime, raise ``ValueError`` otherwise."""
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise ValueError(f"modulus must be an odd prime, got {p!r}")
    return p


# --------------------------------------------------------------------------
# Bernoulli numbers

_tangent_cache: list[int] = [0, 1]


def _tangent_numbers(n: int) -> list[int]:
    # Integer-only recurrence for T_1..T_n; B_2k follows by an exact quotient.
    if n < len(_tangent_cache):
        return _tangent_cache
    T = [0] * (n + 1)
    T[1] = 1
    for k in range(2, n + 1):
        T[k] = (k - 1) * T[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j]
    _tangent_cache[:] = T
    return T


@lru_cache(maxsize=None)
def bernoulli(t: int) -> Fraction:
    """Exact Bernoulli number B_t with B_1 = -1/2 (so B_4 = -1/30)."""
    if t < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if t == 0:
        return Fraction(1)
    if t == 1:
        return Fraction(-1, 2)
    if t % 2:
        return Fraction(0)
    k = t // 2
    T = _tangent_numbers(k)
    four_k = 4**k
    sign = 1 if k % 2 else -1
    return Fraction(sign * 2 * k * T[k], four_k * (four_k - 1))


# --------------------------------------------------------------------------
# Binomials mod p


def binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p via Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    out = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        out = out * math.comb(ni, ki) % p
        n //= p
        k //= p
    return out


def linear_power_coeffs(alpha: int, beta: int, b: int, p: int | None) -> list[int]:
    """Coefficients of (alpha*x + beta)^b, lowest degree first.

    With ``p`` given everything is reduced mod p; otherwise exact integers.
    """
    if p is None:
        return [math.comb(b, k) * alpha**k * beta ** (b - k) for k in range(b + 1)]
    alpha %= p
    beta %= p
    out = [0] * (b + 1)
    if beta == 0:
        out[b] = pow(alpha, b, p)
        return out
    # walk k upward: alpha^k * beta^(b-k) = beta^b * (alpha/beta)^k
    ratio = alpha * pow(beta, -1, p) % p
    term = pow(beta, b, p)
    for k in range(b + 1):
        if term:
            c = binomial_mod(b, k, p)
            if c:
                out[k] = c * term % p
        term = term * ratio % p
    return out


# --------------------------------------------------------------------------
# Polynomials over GF(p)


def _trim(coeffs) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(int(c) for c in coeffs[:n])


class FpPoly:
    """Immutable dense univariate polynomial over GF(p)."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        check_prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _trim([int(c) % p for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...], p: int) -> FpPoly:
        # coeffs already reduced and trimmed
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", coeffs)
        return obj

    @classmethod
    def x(cls, p: int) -> FpPoly:
        return cls((0, 1), p)

    @classmethod
    def monomial(cls, degree: int, p: int, coeff: int = 1) -> FpPoly:
        return cls([0] * degree + [coeff], p)

    @classmethod
    def from_roots(cls, roots, p: int) -> FpPoly:
        out = cls((1,), p)
        for r in roots:
            out = out * cls((-r, 1), p)
        return out

    # -- basic protocol -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == FpPoly((other,), self.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        return f"FpPoly({list(self.coeffs)!r}, p={self.p})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(terms)

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * value + c) % self.p
        return acc

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> FpPoly:
        if isinstance(other, FpPoly):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return FpPoly((other,), self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = (out[k] + c) % self.p
        return FpPoly._raw(_trim(out), self.p)

    __radd__ = __add__

    def __neg__(self):
        p = self.p
        return FpPoly._raw(tuple((-c) % p for c in self.coeffs), p)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: int) -> FpPoly:
        c %= self.p
        if not c:
            return FpPoly._raw((), self.p)
        return FpPoly._raw(tuple(v * c % self.p for v in self.coeffs), self.p)

    def shift(self, k: int) -> FpPoly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return FpPoly._raw((0,) * k + self.coeffs, self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FpPoly._raw(_poly_mul(self.coeffs, other.coeffs, self.p), self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = FpPoly((1,), self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        return fp_poly_divrem(self, self._coerce(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def powmod(self, e: int, modulus: FpPoly) -> FpPoly:
        """self^e mod modulus by square-and-multiply."""
        modulus = self._coerce(modulus)
        result = FpPoly((1,), self.p) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def monic(self) -> FpPoly:
        if not self.coeffs:
            return self
        return self.scale(pow(self.coeffs[-1], -1, self.p))

    def compose_linear(self, alpha: int, beta: int) -> FpPoly:
        """self(alpha*y + beta) as a polynomial in y."""
        return FpPoly(taylor_compose(self.coeffs, alpha, beta, self.p), self.p)


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if (p - 1) ** 2 * min(len(a), len(b)) < _INT64_LIMIT:
        out = np.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
        return _trim(out % p)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def fp_poly_divrem(a: FpPoly, b: FpPoly) -> tuple[FpPoly, FpPoly]:
    """Quotient and remainder with ``a = q*b + r`` and ``deg r < deg b``."""
    if not isinstance(a, FpPoly) or not isinstance(b, FpPoly):
        raise TypeError("FpPoly operands expected")
    if a.p != b.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {b.p}")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p = a.p
    db, da = b.degree, a.degree
    if da < db:
        return FpPoly._raw((), p), a
    inv = pow(b.coeffs[-1], -1, p)
    if db == 0:
        return a.scale(inv), FpPoly._raw((), p)
    if db == 1:
        return _divrem_linear(a, b, inv)
    bm = [c * inv % p for c in b.coeffs]
    if (p - 1) ** 2 + p >= _INT64_LIMIT:
        return _divrem_python(a.coeffs, bm, inv, p)
    rem = np.array(a.coeffs, dtype=np.int64)
    neg_b = (-np.array(bm[:-1], dtype=np.int64)) % p
    quot = np.zeros(da - db + 1, dtype=np.int64)
    for k in range(da - db, -1, -1):
        c = int(rem[k + db]) % p
        if c:
            quot[k] = c
            seg = rem[k : k + db]
            seg += c * neg_b
            seg %= p
    q = FpPoly._raw(_trim(quot * inv % p), p)
    r = FpPoly._raw(_trim(rem[:db] % p), p)
    return q, r


def _divrem_python(a, bm, inv, p):
    db = len(bm) - 1
    rem = list(a)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = rem[k + db] % p
        if c:
            quot[k] = c
            for i in range(db):
                rem[k + i] = (rem[k + i] - c * bm[i]) % p
    return (
        FpPoly._raw(_trim([c * inv % p for c in quot]), p),
        FpPoly._raw(_trim([c % p for c in rem[:db]]), p),
    )


def _divrem_linear(a: FpPoly, b: FpPoly, inv: int):
    # synthetic division by (x - root)
    p = a.p
    root = (-b.coeffs[0] * inv) % p
    coeffs = a.coeffs
    n = len(coeffs)
    quot = [0] * (n - 1)
    acc = 0
    for k in range(n - 1, 0, -1):
        acc = (acc * root + coeffs[k]) % p
        quot[k - 1] = acc
    r = (acc * root + coeffs[0]) % p
    q = FpPoly._raw(_trim([c * inv % p for c in quot]), p)
    return q, FpPoly._raw((r,) if r else (), p)


def factor_multiplicity(a: FpPoly, e: FpPoly) -> int | float:
    """Largest m with e^m dividing a; ``math.inf`` when a is zero."""
    if e.degree < 1:
        raise ValueError("factor must be non-constant")
    if a.p != e.p:
        raise ValueError(f"modulus mismatch: {a.p} vs {e.p}")
    if a.is_zero():
        return math.inf
    m = 0
    while a.degree >= e.degree:
        q, r = fp_poly_divrem(a, e)
        if r:
            break
        a = q
        m += 1
    return m


def taylor_coefficients(coeffs, alpha: int, beta: int, p: int):
    """Yield the coefficients of P(alpha*y + beta) in y, lowest degree first.

    Uses the column recurrence C(i, k) = sum_{i' < i} C(i', k - 1), so each
    output coefficient costs one cumulative sum over the input and callers
    can stop early.
    """
    d = len(coeffs)
    if d == 0:
        return
    if p * p * d >= _INT64_LIMIT:
        raise ValueError("modulus too large for vectorised composition")
    alpha %= p
    beta %= p
    P = np.array([int(c) % p for c in coeffs], dtype=np.int64)
    if beta == 0:
        apow = 1
        for k in range(d):
            yield int(P[k]) * apow % p
            apow = apow * alpha % p
        return
    # coefficient of y^k: alpha^k * sum_i C(i, k) beta^(i-k) p_i
    bpow = np.empty(d, dtype=np.int64)
    acc = 1
    for i in range(d):
        bpow[i] = acc
        acc = acc * beta % p
    weighted = P * bpow % p
    inv_beta = pow(beta, -1, p)
    col = np.ones(d, dtype=np.int64)
    scale = 1  # alpha^k * beta^-k
    step = alpha * inv_beta % p
    for k in range(d):
        if k:
            nxt = np.zeros(d, dtype=np.int64)
            np.cumsum(col[:-1], out=nxt[1:])
            col = nxt % p
        yield int(np.dot(col[k:], weighted[k:]) % p) * scale % p
        scale = scale * step % p


def taylor_compose(coeffs, alpha: int, beta: int, p: int, terms: int | None = None) -> list[int]:
    """Coefficients of P(alpha*y + beta) in y, optionally only the first ``terms``."""
    out = []
    for k, c in enumerate(taylor_coefficients(coeffs, alpha, beta, p)):
        if terms is not None and k >= terms:
            break
        out.append(c)
    return out
