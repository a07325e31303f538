"""Level-one modular forms in the Delta^a E4^b basis.

For weight t = 0 mod 4 the monomials Delta^a E4^b with 12a + 4b = t form a
ZZ-basis, and stay a basis after reduction mod p.  A :class:`Level1Form`
stores the coordinates in that basis, keyed by the Delta exponent.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .exactnum import binomial_mod, check_prime
from .qseries import GF, QQ, ZZ, QSeries, Ring, default_precision, delta_q, eisenstein_q

__all__ = [
    "Level1Form",
    "EE6Form",
    "NotInSpanError",
    "form_to_q",
    "basis_coords",
    "eisenstein_rep_mod_p",
    "to_e4e6",
    "e4e6_divrem",
    "c3_divisible_by_epm1",
    "format_e4e6",
]


class NotInSpanError(ValueError):
    """A q-expansion is not the expansion of a form of the requested kind."""


@dataclass(frozen=True)
class Level1Form:
    """Integer (or mod p) combination of Delta^a E4^b of a fixed weight.

    ``coeffs`` maps the Delta exponent a to its coefficient; the E4 exponent
    is (weight - 12a) / 4.  Zero coefficients are dropped.  ``p`` is None for
    forms over ZZ, otherwise the coefficients are residues mod p.
    """

    weight: int
    coeffs: tuple[tuple[int, int], ...] = field(default=())
    p: int | None = None

    def __init__(self, weight: int, coeffs: Mapping[int, int] | None = None, p: int | None = None):
        if weight < 0 or weight % 4:
            raise ValueError(f"weight must be a non-negative multiple of 4, got {weight}")
        if p is not None:
            check_prime(p)
        items = {}
        for a, c in (coeffs or {}).items():
            if a < 0 or 12 * a > weight:
                raise ValueError(f"Delta^{a} does not fit in weight {weight}")
            c = int(c) % p if p is not None else int(c)
            if c:
                items[a] = c
        object.__setattr__(self, "weight", weight)
        object.__setattr__(self, "coeffs", tuple(sorted(items.items(), reverse=True)))
        object.__setattr__(self, "p", p)

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1, p: int | None = None) -> Level1Form:
        return cls(12 * a + 4 * b, {a: c}, p)

    @classmethod
    def from_terms(cls, terms, p: int | None = None) -> Level1Form:
        """Build from (delta_exp, e4_exp, coeff) triples of one weight."""
        terms = list(terms)
        weights = {12 * a + 4 * b for a, b, _ in terms}
        if len(weights) != 1:
            raise ValueError("terms must share one weight")
        out = defaultdict(int)
        for a, _, c in terms:
            out[a] += c
        return cls(weights.pop(), out, p)

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    def terms(self) -> list[tuple[int, int, int]]:
        """(delta_exp, e4_exp, coeff) by descending Delta exponent."""
        return [(a, (self.weight - 12 * a) // 4, c) for a, c in self.coeffs]

    def coefficient(self, a: int) -> int:
        return self.as_dict().get(a, 0)

    def coordinates(self) -> list[int]:
        """Full coordinate vector c_0, c_1, ... with c_m on Delta^(top-m) E4^(b+3m)."""
        top = self.weight // 12
        d = self.as_dict()
        return [d.get(top - m, 0) for m in range(top + 1)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def ord_q(self) -> int | None:
        """q-order read off the coordinates: the smallest Delta exponent present."""
        return self.coeffs[-1][0] if self.coeffs else None

    def reduce(self, p: int) -> Level1Form:
        return Level1Form(self.weight, self.as_dict(), p)

    def lift(self) -> Level1Form:
        return Level1Form(self.weight, self.as_dict())

    def _check(self, other: Level1Form):
        if other.p != self.p:
            raise ValueError(f"ring mismatch: p={self.p} vs p={other.p}")

    def __add__(self, other: Level1Form) -> Level1Form:
        if not isinstance(other, Level1Form):
            return NotImplemented
        self._check(other)
        if other.weight != self.weight:
            raise ValueError(f"weight mismatch: {self.weight} vs {other.weight}")
        out = defaultdict(int, self.as_dict())
        for a, c in other.coeffs:
            out[a] += c
        return Level1Form(self.weight, out, self.p)

    def __neg__(self):
        return Level1Form(self.weight, {a: -c for a, c in self.coeffs}, self.p)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Level1Form(self.weight, {a: c * other for a, c in self.coeffs}, self.p)
        if not isinstance(other, Level1Form):
            return NotImplemented
        self._check(other)
        out = defaultdict(int)
        for a1, c1 in self.coeffs:
            for a2, c2 in other.coeffs:
                out[a1 + a2] += c1 * c2
        return Level1Form(self.weight + other.weight, out, self.p)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Level1Form:
        result = Level1Form(0, {0: 1}, self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for a, b, c in self.terms():
            mono = []
            if a:
                mono.append("D" if a == 1 else f"D^{a}")
            if b:
                mono.append("E4" if b == 1 else f"E4^{b}")
            body = "*".join(mono) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


@dataclass(frozen=True)
class EE6Form:
    """A form E6^parity * inner, with ``inner`` a :class:`Level1Form`."""

    weight: int
    e6_parity: int
    inner: Level1Form

    def __post_init__(self):
        if self.e6_parity not in (0, 1):
            raise ValueError("e6_parity must be 0 or 1")
        if self.inner.weight != self.weight - 6 * self.e6_parity:
            raise ValueError("inner weight does not match")
        if self.e6_parity != (self.weight // 2) % 2:
            raise ValueError("e6_parity must equal (weight/2) mod 2")


def _ring_of(p: int | None) -> Ring:
    return ZZ if p is None else GF(p)


@lru_cache(maxsize=64)
def _delta_e4(prec: int, ring: Ring):
    return delta_q(prec, ring), eisenstein_q(4, prec, ring)


def form_to_q(f: Level1Form, prec: int, ring: Ring | None = None) -> QSeries:
    """q-expansion of ``f`` through q^prec."""
    ring = ring if ring is not None else _ring_of(f.p)
    if f.p is not None and ring.p != f.p:
        raise ValueError("a mod-p form can only be expanded over GF(p)")
    D, E4 = _delta_e4(prec, ring)
    total = QSeries([0], prec, ring)
    for a, b, c in f.terms():
        if a > prec:
            continue
        total = total + (D**a * E4**b).scalar_mul(c)
    return total


def _triangular_fit(target: QSeries, base: QSeries, ratio: QSeries, count: int):
    """Solve target = sum_{k < count} c_k * base * ratio^k for the c_k.

    ``ratio`` has q-order 1 and ``base`` a unit constant term, so the k-th
    basis series has q-order exactly k.  Returns the coefficients, raising
    :class:`NotInSpanError` when the residual does not vanish.
    """
    ring = target.ring
    if ring is QQ:
        raise ValueError("fit over ZZ or GF(p)")
    prec = min(target.prec, base.prec, ratio.prec)
    if prec < count:
        raise ValueError(f"need precision >= {count}, have {prec}")
    residual = list(target.coeffs[: prec + 1])
    lead_base = base.coeffs[0]
    lead_ratio = ratio.coeffs[1]
    if ratio.coeffs[0]:
        raise ValueError("ratio must have positive q-order")
    p = ring.p
    sols = []
    term = base.truncate(prec)
    lead = lead_base
    for k in range(count):
        c = residual[k]
        if p is not None:
            c = c * pow(lead, -1, p) % p
        else:
            c, r = divmod(c, lead)
            if r:
                raise NotInSpanError(f"non-integral coordinate at step {k}")
        sols.append(c)
        if c:
            tc = term.coeffs
            for n in range(k, prec + 1):
                if tc[n]:
                    residual[n] -= c * tc[n]
            if p is not None:
                residual = [v % p for v in residual]
        if k + 1 < count:
            term = term * ratio
            lead = lead * lead_ratio if p is None else lead * lead_ratio % p
    if any(residual):
        raise NotInSpanError("residual tail is nonzero")
    return sols


def basis_coords(g: QSeries, t: int) -> Level1Form:
    """Coordinates of a weight-t q-expansion in the Delta^a E4^b basis."""
    if t % 4:
        raise ValueError("weight must be divisible by 4")
    top = t // 12
    ring = g.ring
    if ring is QQ:
        ring = ZZ
        try:
            g = g.change_ring(ZZ)
        except ValueError as exc:
            raise NotInSpanError(str(exc)) from None
    if g.prec < top + 1:
        raise ValueError(f"need the expansion through q^{top + 1}, have q^{g.prec}")
    prec = g.prec
    D, E4 = _delta_e4(prec, ring)
    base = E4 ** (t // 4)
    ratio = D * (E4**3).inverse()
    sols = _triangular_fit(g, base, ratio, top + 1)
    return Level1Form(t, {a: c for a, c in enumerate(sols)}, ring.p)


# --------------------------------------------------------------------------
# ZZ/p[E4, E6]


def to_e4e6(f: Level1Form, p: int) -> dict[tuple[int, int], int]:
    """Rewrite a form mod p as a polynomial in E4, E6 using
    Delta = (E4^3 - E6^2) / 1728.  Keys are (e4_exp, e6_exp)."""
    check_prime(p)
    inv1728 = pow(1728, -1, p)
    out: dict[tuple[int, int], int] = defaultdict(int)
    for a, b, c in f.terms():
        c %= p
        if not c:
            continue
        scale = c * pow(inv1728, a, p) % p
        # (E4^3 - E6^2)^a = sum_k C(a,k) (-1)^k E4^(3(a-k)) E6^(2k)
        for k in range(a + 1):
            bc = binomial_mod(a, k, p)
            if not bc:
                continue
            coef = scale * bc % p
            if k % 2:
                coef = -coef
            key = (3 * (a - k) + b, 2 * k)
            out[key] = (out[key] + coef) % p
    return {k: v for k, v in out.items() if v}


def e4e6_divrem(f: dict, g: dict, p: int):
    """Division with remainder in GF(p)[E4, E6], lex order with E4 > E6.

    With a single divisor the remainder vanishes iff g divides f.
    """
    if not g:
        raise ZeroDivisionError("division by zero polynomial")
    lead = max(g)
    inv = pow(g[lead], -1, p)
    rest = [(m, c) for m, c in g.items() if m != lead]
    work = dict(f)
    quot: dict[tuple[int, int], int] = {}
    rem: dict[tuple[int, int], int] = {}
    while work:
        m = max(work)
        c = work.pop(m)
        if m[0] >= lead[0] and m[1] >= lead[1]:
            qm = (m[0] - lead[0], m[1] - lead[1])
            qc = c * inv % p
            quot[qm] = qc
            for gm, gc in rest:
                key = (gm[0] + qm[0], gm[1] + qm[1])
                v = (work.get(key, 0) - qc * gc) % p
                if v:
                    work[key] = v
                else:
                    work.pop(key, None)
        else:
            rem[m] = c
    return quot, rem


@lru_cache(maxsize=None)
def eisenstein_rep_mod_p(p: int) -> EE6Form:
    """E_{p-1} mod p as E6^parity times a level-one form mod p.

    The q-expansion of E_{p-1} mod p is computed, divided by E6 when
    (p-1)/2 is odd, and fitted in the Delta^a E4^b basis.
    """
    check_prime(p)
    if p < 5:
        raise ValueError("need p >= 5")
    t = p - 1
    parity = (t // 2) % 2
    inner_weight = t - 6 * parity
    prec = default_precision(t)
    ring = GF(p)
    g = eisenstein_q(t, prec, ring)
    if parity:
        g = g / eisenstein_q(6, prec, ring)
    inner = basis_coords(g, inner_weight)
    return EE6Form(t, parity, inner)


def _ee6_to_e4e6(e: EE6Form, p: int) -> dict:
    base = to_e4e6(e.inner, p)
    if not e.e6_parity:
        return base
    return {(i, k + 1): c for (i, k), c in base.items()}


def c3_divisible_by_epm1(f: Level1Form, p: int) -> bool:
    """True iff f mod p is E_{p-1} times something in GF(p)[E4, E6]."""
    f = f.reduce(p)
    if f.is_zero():
        raise ValueError("form vanishes mod p")
    num = to_e4e6(f, p)
    den = _ee6_to_e4e6(eisenstein_rep_mod_p(p), p)
    _, rem = e4e6_divrem(num, den, p)
    return not rem


def format_e4e6(poly: dict, e6_shift: int = 0) -> str:
    """Human-readable E4/E6 polynomial, highest E4 power first."""
    if not poly:
        return "0"
    parts = []
    for (i, k), c in sorted(poly.items(), reverse=True):
        k += e6_shift
        mono = []
        if i:
            mono.append("E4" if i == 1 else f"E4^{i}")
        if k:
            mono.append("E6" if k == 1 else f"E6^{k}")
        body = "*".join(mono) or "1"
        parts.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(parts)
