"""Order-p elements of the divided beta family.

Write i = r * p^n with p not dividing r.  A pair (i, j) is admissible with
order p when

  (i)   r = 1 implies j <= p^n,
  (ii)  j <= a_n,
  (iii) p | j implies j > a_{n-1},

where a_0 = 0 and a_n = p^n + p^(n-1) - 1.  For n = 0 the bound in (ii) is
read as j <= 1, so that the undivided elements (i, 1) are always present.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import is_prime

__all__ = ["BetaIndex", "split_index", "max_denominator", "is_order_p", "enumerate_j"]


def split_index(p: int, i: int) -> tuple[int, int]:
    """Return (r, n) with i = r * p^n and p not dividing r."""
    if i < 1:
        raise ValueError("i must be positive")
    n = 0
    while i % p == 0:
        i //= p
        n += 1
    return i, n


def max_denominator(p: int, n: int) -> int:
    """a_n: 0 for n = 0, else p^n + p^(n-1) - 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 0
    return p**n + p ** (n - 1) - 1


@dataclass(frozen=True)
class BetaIndex:
    p: int
    i: int
    j: int

    def __post_init__(self):
        if self.p < 5 or not is_prime(self.p):
            raise ValueError(f"p must be a prime >= 5, got {self.p}")
        if self.i < 1 or self.j < 1:
            raise ValueError("indices must be positive")

    @property
    def r(self) -> int:
        return split_index(self.p, self.i)[0]

    @property
    def n(self) -> int:
        return split_index(self.p, self.i)[1]

    @property
    def weight(self) -> int:
        return self.i * (self.p**2 - 1)

    @property
    def valid(self) -> bool:
        return is_order_p(self.p, self.i, self.j)


def _upper_bound(p: int, r: int, n: int) -> int:
    if n == 0:
        return 1
    if r == 1:
        return min(p**n, max_denominator(p, n))
    return max_denominator(p, n)


def is_order_p(p: int, i: int, j: int) -> bool:
    if i < 1 or j < 1:
        return False
    r, n = split_index(p, i)
    if j > _upper_bound(p, r, n):
        return False
    if j % p == 0 and n >= 1 and j <= max_denominator(p, n - 1):
        return False
    return True


def enumerate_j(p: int, i: int) -> list[int]:
    """All j with (i, j) an order-p element, ascending."""
    r, n = split_index(p, i)
    return [j for j in range(1, _upper_bound(p, r, n) + 1) if is_order_p(p, i, j)]
