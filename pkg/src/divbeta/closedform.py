"""Explicit forms f_{i/j} at p = 5 and the pure Delta-power forms at other primes.

At p = 5, with i = r * 5^n, the form is Delta^(2i) unless r > 1 and
5^n < j <= a_n.  In that range a level u in [1, n-1] is read off from j and a
sum of single-monomial corrections C_m, D_m (m < u) is added, possibly
dropping the last D.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betafamily import is_order_p, max_denominator, split_index
from .exactnum import check_prime
from .level1 import Level1Form

__all__ = [
    "CaseTag",
    "correction_c",
    "correction_d",
    "closed_form_p5",
    "recursive_top_form",
    "delta_power_form",
    "theorem_form",
]

PURE = "pure-delta"
FULL = "full-sum"
TRIMMED = "trimmed-sum"

THEOREM_PRIMES = (7, 11, 13, 677)


@dataclass(frozen=True)
class CaseTag:
    branch: str
    u: int | None = None

    def __post_init__(self):
        if (self.u is None) != (self.branch == PURE):
            raise ValueError("u is set exactly when the branch is not pure-delta")


def _check_indices(m: int, n: int, r: int):
    if r < 1:
        raise ValueError("r must be positive")
    if m == 0:
        if n < 2:
            raise ValueError("m = 0 needs n >= 2")
    elif not (n >= 3 and 1 <= m <= n - 2):
        raise ValueError(f"need n >= 3 and 1 <= m <= n-2, got m={m}, n={n}")


def _shift(n: int, r: int) -> int:
    return 2 * (r - 1) * 5**n


def correction_c(m: int, n: int, r: int) -> Level1Form:
    _check_indices(m, n, r)
    if m == 0:
        a = 42 * 5 ** (n - 2) + _shift(n, r)
        b = 24 * 5 ** (n - 2)
        return Level1Form.monomial(a, b, 4 * r)
    k = 5 ** (n - m - 2)
    a = 8 * 5 ** (n - 1) + 2 * k + _shift(n, r)
    b = 6 * 5 ** (n - 1) - 6 * k
    return Level1Form.monomial(a, b, 3 * r)


def correction_d(m: int, n: int, r: int) -> Level1Form:
    _check_indices(m, n, r)
    if m == 0:
        a = 41 * 5 ** (n - 2) + _shift(n, r)
        b = 27 * 5 ** (n - 2)
        return Level1Form.monomial(a, b, 3 * r)
    k = 5 ** (n - m - 2)
    a = 8 * 5 ** (n - 1) + k + _shift(n, r)
    b = 6 * 5 ** (n - 1) - 3 * k
    return Level1Form.monomial(a, b, r)


def _level(n: int, j: int) -> int:
    for u in range(1, n):
        lo = 5**n + 5 ** (n - 1) - 5 ** (n - u) + 1
        hi = 5**n + 5 ** (n - 1) - 5 ** (n - u - 1)
        if lo <= j <= hi:
            return u
    raise ValueError(f"no level u for n={n}, j={j}")


def closed_form_p5(i: int, j: int, allow_nonfamily: bool = False) -> tuple[Level1Form, CaseTag]:
    """f_{i/j} at p = 5 and which case produced it.

    With ``allow_nonfamily`` indices outside the family are accepted; the
    corrections then apply whenever 5^n < j <= a_n, which for r = 1 gives
    Delta^50 + 4 Delta^42 E4^24 + 3 Delta^41 E4^27 at (25, 29).
    """
    if not is_order_p(5, i, j):
        if not allow_nonfamily:
            raise ValueError(f"(i, j) = ({i}, {j}) is not an order-5 family index")
    r, n = split_index(5, i)
    top = Level1Form.monomial(2 * i, 0)
    if j <= 5**n or n == 0:
        return top, CaseTag(PURE)
    if j > max_denominator(5, n):
        raise ValueError(f"j = {j} exceeds a_{n}")
    u = _level(n, j)
    f = top
    for m in range(u - 1):
        f = f + correction_c(m, n, r) + correction_d(m, n, r)
    f = f + correction_c(u - 1, n, r)
    threshold = 5**n + 5 ** (n - 1) - 5 ** (n - u) + 2 * 5 ** (n - u - 1)
    if j > threshold:
        return f + correction_d(u - 1, n, r), CaseTag(FULL, u)
    return f, CaseTag(TRIMMED, u)


def recursive_top_form(n: int, r: int) -> Level1Form:
    """f_{r 5^(n+1) / a_(n+1)} built as (f_{r 5^n / a_n})^5 + C + D."""
    if n < 1 or r < 2 or r % 5 == 0:
        raise ValueError("need n >= 1 and r >= 2 prime to 5")
    f = Level1Form.monomial(10 * r, 0)  # a_1 = 5, so the n = 1 form is a pure power
    for k in range(1, n + 1):
        f = f**5 + correction_c(k - 1, k + 1, r) + correction_d(k - 1, k + 1, r)
    return f


def delta_power_form(p: int, r: int, n: int, conjecture: bool = False) -> Level1Form:
    """Delta^(i(p^2-1)/12) for i = r * p^n."""
    check_prime(p)
    if p == 5:
        raise ValueError("use closed_form_p5 at p = 5")
    if p < 5:
        raise ValueError("need p >= 5")
    if not conjecture and p not in THEOREM_PRIMES:
        raise ValueError(f"p = {p} is only covered in conjecture mode")
    if r < 1 or r % p == 0 or n < 0:
        raise ValueError("need r >= 1 prime to p and n >= 0")
    i = r * p**n
    return Level1Form.monomial(i * (p * p - 1) // 12, 0)


def theorem_form(p: int, i: int, j: int, allow_nonfamily: bool = False, conjecture: bool = False) -> Level1Form:
    """The known (or, with ``conjecture``, predicted) f_{i/j} at any p >= 5."""
    if p == 5:
        return closed_form_p5(i, j, allow_nonfamily)[0]
    if not allow_nonfamily and not is_order_p(p, i, j):
        raise ValueError(f"(i, j) = ({i}, {j}) is not an order-{p} family index")
    r, n = split_index(p, i)
    limit = 1 if (p == 7 and not conjecture) else p**n
    if j > limit:
        raise ValueError(f"no closed form known for j = {j} > {limit} at p = {p}")
    return delta_power_form(p, r, n, conjecture)
