"""Slow, obviously-correct reference implementations used only by the tests."""

from fractions import Fraction
from math import comb


def bernoulli_recurrence(n_max):
    """B_0..B_n_max from sum_{k=0}^{n} C(n+1, k) B_k = 0 (so B_1 = -1/2)."""
    B = [Fraction(1)]
    for n in range(1, n_max + 1):
        s = sum(comb(n + 1, k) * B[k] for k in range(n))
        B.append(-s / (n + 1))
    return B


def divisor_sum(k, n):
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return trim(out)


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_eval(a, x, p):
    return sum(c * pow(x, k, p) for k, c in enumerate(a)) % p


def compose_linear(a, alpha, beta, p):
    """a(alpha*y + beta) by expanding each power with binomials."""
    out = [0] * len(a)
    for k, c in enumerate(a):
        for i in range(k + 1):
            out[i] = (out[i] + c * comb(k, i) * pow(alpha, i, p) * pow(beta, k - i, p)) % p
    return trim(out)


def series_mul(a, b, n):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1)]


def q_series_power(a, e, n):
    out = [1] + [0] * n
    for _ in range(e):
        out = series_mul(out, a, n)
    return out


def eisenstein(t, n, bern):
    c = Fraction(-2 * t) / bern[t]
    return [Fraction(1)] + [c * divisor_sum(t - 1, k) for k in range(1, n + 1)]


def a_seq(p, n):
    return 0 if n == 0 else p**n + p ** (n - 1) - 1


def family(p, i):
    """j admissible by rules (i)-(iii) with k = 1, by brute force over j."""
    r, n = i, 0
    while r % p == 0:
        r //= p
        n += 1
    out = []
    bound = 1 if n == 0 else a_seq(p, n)
    for j in range(1, bound + 1):
        if r == 1 and j > p**n:
            continue
        if j % p == 0 and j <= a_seq(p, max(n - 1, 0)):
            continue
        out.append(j)
    return out


def multiplicative_order(a, m):
    k, x = 1, a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k
