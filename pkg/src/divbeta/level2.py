"""Gamma0(2) calculus: iota_2, V_2 and L_2 = V_2 - iota_2 on level-one forms.

Forms for Gamma0(2) with 2 inverted are polynomials in delta (weight 2) and
eps (weight 4); with mu = delta^2 - eps every form of weight w is
delta^parity times a homogeneous polynomial in mu, eps.  Level-one forms map
in through

    E4 -> 64 mu + 16 eps        V2 E4 -> 4 mu + 16 eps
    D  -> 64 mu eps^2           V2 D  -> mu^2 eps

so everything here is polynomial substitution; q-expansions are only used to
fit Eisenstein series and as a cross-check at small weight.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .exactnum import FpPoly, check_prime, factor_multiplicity, fp_poly_divrem, linear_power_coeffs, taylor_coefficients
from .level1 import Level1Form, NotInSpanError, _triangular_fit
from .qseries import GF, QSeries, gamma0_2_generators

__all__ = [
    "Level2Poly",
    "DehomogPoly",
    "iota2",
    "v2",
    "l2",
    "dehomogenize",
    "to_y_variable",
    "e4_div_order_p5",
    "fit_level2_from_q",
    "level2_to_q",
    "eisenstein_level2",
    "certificate_poly",
    "epm1_div_check",
    "epm1_certified_order",
    "cache_dir",
]

CACHE_ENV = "DIVBETA_CACHE_DIR"
CACHE_SCHEMA = 1


@dataclass(frozen=True)
class Level2Poly:
    """delta^delta_parity * sum_k coeffs[k] mu^k eps^(degree - k).

    ``p`` is None for exact (ZZ[1/2]) coefficients, otherwise residues mod p.
    """

    weight: int
    delta_parity: int
    coeffs: tuple[int, ...]
    p: int | None = None

    def __post_init__(self):
        if self.delta_parity not in (0, 1):
            raise ValueError("delta_parity must be 0 or 1")
        if self.weight % 2 or self.delta_parity != (self.weight // 2) % 2:
            raise ValueError(f"delta_parity {self.delta_parity} inconsistent with weight {self.weight}")
        if len(self.coeffs) != self.degree + 1:
            raise ValueError(f"expected {self.degree + 1} coefficients, got {len(self.coeffs)}")
        if self.p is not None:
            check_prime(self.p)
            object.__setattr__(self, "coeffs", tuple(int(c) % self.p for c in self.coeffs))

    @property
    def degree(self) -> int:
        """Total degree in (mu, eps)."""
        return (self.weight - 2 * self.delta_parity) // 4

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def coefficient(self, mu_exp: int) -> int:
        return self.coeffs[mu_exp]

    def terms(self) -> list[tuple[int, int, int]]:
        """(mu_exp, eps_exp, coeff) by descending mu exponent, nonzero only."""
        d = self.degree
        return [(k, d - k, c) for k in range(d, -1, -1) if (c := self.coeffs[k])]

    def reduce(self, p: int) -> Level2Poly:
        return Level2Poly(self.weight, self.delta_parity, self.coeffs, p)

    def _combine(self, other: Level2Poly, sign: int) -> Level2Poly:
        if (self.weight, self.delta_parity, self.p) != (other.weight, other.delta_parity, other.p):
            raise ValueError("incompatible level-2 polynomials")
        return Level2Poly(
            self.weight, self.delta_parity, tuple(a + sign * b for a, b in zip(self.coeffs, other.coeffs)), self.p
        )

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __mul__(self, other):
        if isinstance(other, int):
            return Level2Poly(self.weight, self.delta_parity, tuple(c * other for c in self.coeffs), self.p)
        if self.p != other.p:
            raise ValueError("ring mismatch")
        prod = _mul_lists(self.coeffs, other.coeffs, self.p)
        parity = self.delta_parity + other.delta_parity
        if parity == 2:
            # delta^2 = mu + eps
            prod = _mul_lists(prod, (1, 1), self.p)
            parity = 0
        return Level2Poly(self.weight + other.weight, parity, tuple(prod), self.p)

    __rmul__ = __mul__

    def __str__(self):
        parts = []
        for a, b, c in self.terms():
            mono = ["delta"] if self.delta_parity else []
            if a:
                mono.append("mu" if a == 1 else f"mu^{a}")
            if b:
                mono.append("eps" if b == 1 else f"eps^{b}")
            body = "*".join(mono) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class DehomogPoly:
    """A dehomogenised level-2 polynomial in x = mu/eps, or y = 4x + 1 (p = 5)."""

    poly: FpPoly
    var: str = "x"

    def __post_init__(self):
        if self.var not in ("x", "y"):
            raise ValueError("variable must be 'x' or 'y'")
        if self.var == "y" and self.poly.p != 5:
            raise ValueError("the y variable is only defined mod 5")


def _mul_lists(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return [c % p for c in out] if p is not None else out


def _substitute(f: Level1Form, p: int | None, delta_img: tuple[int, int], e4_img: tuple[int, int]) -> Level2Poly:
    # delta_img = (scale, mu power) for D -> scale * mu^k eps^(3-k);
    # e4_img = (mu coeff, eps coeff).
    if p is None and f.p is not None:
        p = f.p
    elif f.p is not None and f.p != p:
        raise ValueError("ring mismatch")
    if p is not None:
        check_prime(p)
    degree = f.weight // 4
    out = [0] * (degree + 1)
    d_scale, d_mu = delta_img
    for a, b, c in f.terms():
        lin = linear_power_coeffs(e4_img[0], e4_img[1], b, p)
        scale = c * (pow(d_scale, a, p) if p is not None else d_scale**a)
        offset = d_mu * a
        for k, v in enumerate(lin):
            if v:
                out[offset + k] += scale * v
    if p is not None:
        out = [v % p for v in out]
    return Level2Poly(f.weight, 0, tuple(out), p)


def iota2(f: Level1Form, p: int | None = None) -> Level2Poly:
    """f regarded as a Gamma0(2) form."""
    return _substitute(f, p, (64, 1), (64, 16))


def v2(f: Level1Form, p: int | None = None) -> Level2Poly:
    """The Verschiebung f(q) -> f(q^2) in mu, eps coordinates."""
    return _substitute(f, p, (1, 2), (4, 16))


def l2(f: Level1Form, p: int | None = None) -> Level2Poly:
    """L_2 f = V_2 f - f."""
    return v2(f, p) - iota2(f, p)


def dehomogenize(P: Level2Poly) -> DehomogPoly:
    """Set eps = 1: the coefficient of mu^a eps^b becomes that of x^a."""
    if P.delta_parity:
        raise ValueError("cannot dehomogenise a delta-odd polynomial")
    if P.p is None:
        raise ValueError("dehomogenisation works over GF(p)")
    return DehomogPoly(FpPoly(P.coeffs, P.p), "x")


def to_y_variable(P: DehomogPoly, terms: int | None = None) -> DehomogPoly:
    """Substitute x = 4y + 1 (mod 5), optionally keeping only ``terms`` terms."""
    if P.var != "x":
        raise ValueError("expected a polynomial in x")
    if P.poly.p != 5:
        raise ValueError("the y variable is only defined mod 5")
    coeffs = []
    for k, c in enumerate(taylor_coefficients(P.poly.coeffs, 4, 1, 5)):
        if terms is not None and k >= terms:
            break
        coeffs.append(c)
    return DehomogPoly(FpPoly(coeffs, 5), "y")


def y_order(P: DehomogPoly) -> int | float:
    """Exact power of y dividing P(y), computed lazily from P(x)."""
    if P.poly.is_zero():
        return math.inf
    if P.var == "y":
        return next(k for k, c in enumerate(P.poly.coeffs) if c)
    for k, c in enumerate(taylor_coefficients(P.poly.coeffs, 4, 1, 5)):
        if c:
            return k
    raise AssertionError("nonzero polynomial with vanishing Taylor expansion")


@lru_cache(maxsize=4096)
def e4_div_order_p5(f: Level1Form) -> int | float:
    """Exact E4-divisibility order of L_2 f in Gamma0(2) forms mod 5.

    Equals the power of y dividing P(y); ``math.inf`` when L_2 f vanishes.
    """
    if f.weight % 4:
        raise ValueError("weight must be divisible by 4")
    return y_order(dehomogenize(l2(f.reduce(5))))


# --------------------------------------------------------------------------
# q-expansions of level-2 polynomials


@lru_cache(maxsize=32)
def _generators(p: int, prec: int):
    delta, eps, mu = gamma0_2_generators(prec, GF(p))
    return delta, eps, mu * eps.inverse()


@lru_cache(maxsize=32)
def _ratio_powers(p: int, prec: int):
    h = _generators(p, prec)[2]
    powers = [QSeries.one(prec, GF(p))]
    for _ in range(prec):
        powers.append(powers[-1] * h)
    return powers


def level2_to_q(P: Level2Poly, prec: int) -> QSeries:
    """q-expansion mod p of a level-2 polynomial through q^prec."""
    if P.p is None:
        raise ValueError("expansion implemented over GF(p)")
    p = P.p
    delta, eps, _ = _generators(p, prec)
    powers = _ratio_powers(p, prec)
    # sum_k c_k mu^k eps^(d-k) = eps^d * sum_k c_k h^k, and h^k = O(q^k)
    acc = [0] * (prec + 1)
    for k, c in enumerate(P.coeffs[: prec + 1]):
        if c:
            for n, v in enumerate(powers[k].coeffs):
                if v:
                    acc[n] += c * v
    total = QSeries(acc, prec, GF(p)) * eps**P.degree
    if P.delta_parity:
        total = total * delta
    return total


def fit_level2_from_q(g: QSeries, weight: int, parity: int) -> Level2Poly:
    """Recover the unique level-2 polynomial with q-expansion ``g`` (mod p)."""
    if g.ring.p is None:
        raise ValueError("fit works over GF(p)")
    if parity != (weight // 2) % 2:
        raise ValueError("parity must equal (weight/2) mod 2")
    p = g.ring.p
    degree = (weight - 2 * parity) // 4
    if g.prec < degree + 1:
        raise ValueError(f"need the expansion through q^{degree + 1}")
    prec = g.prec
    delta, eps, h = _generators(p, prec)
    base = eps**degree
    if parity:
        base = base * delta
    try:
        sols = _triangular_fit(g, base, h, degree + 1)
    except NotInSpanError as exc:
        raise NotInSpanError(f"not a level-2 form of weight {weight}: {exc}") from None
    return Level2Poly(weight, parity, tuple(sols), p)


# --------------------------------------------------------------------------
# E_{p-1} in level 2, cached on disk


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "divbeta"


def _cache_path(p: int, directory: Path) -> Path:
    return directory / f"eisenstein_level2_p{p}.json"


def _read_cache(p: int, directory: Path) -> Level2Poly | None:
    path = _cache_path(p, directory)
    try:
        record = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if record.get("schema") != CACHE_SCHEMA or record.get("prime") != p:
        return None
    try:
        return Level2Poly(record["weight"], record["parity"], tuple(record["coefficients"]), p)
    except (KeyError, ValueError, TypeError):
        return None


def _write_cache(P: Level2Poly, directory: Path) -> None:
    record = {
        "schema": CACHE_SCHEMA,
        "prime": P.p,
        "weight": P.weight,
        "parity": P.delta_parity,
        "coefficients": list(P.coeffs),
    }
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".eis-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(record, fh, indent=1)
            fh.write("\n")
        os.replace(tmp, _cache_path(P.p, directory))
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def eisenstein_level2(p: int, directory: Path | str | None = None, use_cache: bool = True) -> Level2Poly:
    """E_{p-1} mod p as a level-2 polynomial, fitted to the series 1."""
    check_prime(p)
    if p < 5:
        raise ValueError("need p >= 5")
    directory = Path(directory) if directory is not None else cache_dir()
    if use_cache:
        hit = _memo.get((p, directory))
        if hit is not None:
            return hit
        hit = _read_cache(p, directory)
        if hit is not None:
            _memo[(p, directory)] = hit
            return hit
    weight = p - 1
    parity = (weight // 2) % 2
    degree = (weight - 2 * parity) // 4
    g = QSeries.one(degree + 8, GF(p))
    P = fit_level2_from_q(g, weight, parity)
    if use_cache:
        try:
            _write_cache(P, directory)
        except OSError:
            pass
        _memo[(p, directory)] = P
    return P


_memo: dict = {}


# --------------------------------------------------------------------------
# E_{p-1}^j divisibility certificates


def certificate_poly(p: int) -> FpPoly:
    """Polynomial in x whose j-th power dividing P(x) certifies E_{p-1}^j | L_2 f.

    For delta-even E_{p-1} this is its dehomogenisation e(x); for delta-odd
    E_{p-1} = delta * e it is (x + 1) e(x), using delta^2 = mu + eps.
    """
    E = eisenstein_level2(p)
    e = FpPoly(E.coeffs, p)
    if E.delta_parity:
        e = e * FpPoly((1, 1), p)
    return e


def _l2_dehomog(f: Level1Form, p: int) -> FpPoly:
    return dehomogenize(l2(f.reduce(p))).poly


def _check_weights(f: Level1Form, j: int, p: int):
    if j < 0:
        raise ValueError("j must be non-negative")
    if f.weight - j * (p - 1) < 0 or (f.weight - j * (p - 1)) % 2:
        raise ValueError(f"weight {f.weight} cannot contain E_{p - 1}^{j}")


def epm1_div_check(f: Level1Form, j: int, p: int) -> bool:
    """True when L_2 f is certified divisible by E_{p-1}^j mod p.

    A ``False`` for p != 5 means "not certified", not "not divisible".
    """
    _check_weights(f, j, p)
    P = _l2_dehomog(f, p)
    if P.is_zero() or j == 0:
        return True
    cert = certificate_poly(p) ** j
    if cert.degree > P.degree:
        return False
    return fp_poly_divrem(P, cert)[1].is_zero()


def epm1_certified_order(f: Level1Form, p: int) -> int | float:
    """Largest j for which :func:`epm1_div_check` succeeds (``inf`` if L_2 f = 0)."""
    P = _l2_dehomog(f, p)
    return factor_multiplicity(P, certificate_poly(p))
