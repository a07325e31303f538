"""Golden checks for the reference computations, runnable from the CLI.

Each item returns a list of (label, ok) pairs.  Items tagged "long" only run
with ``tier="long"``.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import golden
from .betafamily import enumerate_j, max_denominator, split_index
from .closedform import closed_form_p5, delta_power_form, recursive_top_form
from .conditions import check_all, check_c2
from .exactnum import FpPoly
from .level1 import Level1Form, form_to_q
from .level2 import eisenstein_level2, l2, level2_to_q
from .qseries import GF, QQ, delta_q, eisenstein_q, gamma0_2_generators, verschiebung
from .search import SearchProblem, divisibility_table, solve

__all__ = ["ITEMS", "ItemResult", "run_item", "run_items"]


@dataclass
class ItemResult:
    item: str
    checks: list[tuple[str, bool]]
    seconds: float
    error: str | None = None

    @property
    def ok(self) -> bool:
        return self.error is None and all(ok for _, ok in self.checks)


def _terms_mod5(f: Level1Form):
    return tuple(f.reduce(5).terms())


def delta_powers():
    out = []
    for (i, j), a in golden.DELTA_POWERS.items():
        f = solve((i, j)).form
        out.append((f"f_{i}/{j} = D^{a}", f == Level1Form.monomial(a, 0)))
    return out


def f25_29():
    res = solve(SearchProblem(25, 29, allow_nonfamily=True))
    closed, _ = closed_form_p5(25, 29, allow_nonfamily=True)
    return [
        ("search coefficients", res.coefficients == {0: 1, 8: 4, 9: 3}),
        ("search terms", tuple(res.form.terms()) == golden.F25_29),
        ("closed form terms", tuple(closed.terms()) == golden.F25_29),
        ("conditions", res.report is not None and res.report.passed),
    ]


def e4_table():
    got = divisibility_table(25, range(10))
    return [(f"m={m}", got[m] == golden.E4_ORDERS_I25[m]) for m in range(10)]


def i1250_rows():
    out = []
    top = (2500, 0, 1)
    for (lo, hi), extra in golden.I1250_ROWS:
        want = (top,) + extra
        for j in range(lo, hi + 1):
            f, _ = closed_form_p5(1250, j)
            ok = _terms_mod5(f) == want and check_all(f, 5, 1250, j).passed
            out.append((f"j={j}", ok))
    for j in (1, 124, 625):
        f, _ = closed_form_p5(1250, j)
        out.append((f"j={j} pure", f == Level1Form.monomial(2500, 0) and check_all(f, 5, 1250, j).passed))
    return out


def p5_sweep():
    out = []
    for n in range(4):
        for r in (1, 2, 3):
            i = r * 5**n
            bad = []
            for j in enumerate_j(5, i):
                f, _ = closed_form_p5(i, j)
                if not check_all(f, 5, i, j).passed:
                    bad.append(j)
                elif n <= 2 and solve((i, j)).form.reduce(5) != f.reduce(5):
                    bad.append(j)
            out.append((f"i={i}", not bad))
    return out


def recursion():
    out = []
    for n, r in ((1, 2), (1, 3), (2, 2)):
        g = recursive_top_form(n, r)
        f, _ = closed_form_p5(r * 5 ** (n + 1), max_denominator(5, n + 1))
        out.append((f"n={n} r={r}", g.reduce(5) == f.reduce(5)))
    return out


def gamma0_2():
    delta, eps, _ = gamma0_2_generators(6)
    return [
        ("delta", tuple(delta.coeffs) == golden.DELTA_Q),
        ("eps", tuple(eps.coeffs) == golden.EPS_Q),
    ]


def identities():
    N = 100
    delta, eps, mu = gamma0_2_generators(N)
    e4 = eisenstein_q(4, N, QQ)
    d = delta_q(N, QQ)
    e6 = eisenstein_q(6, N)
    return [
        ("E4", e4 == mu * 64 + eps * 16),
        ("V2 E4", verschiebung(e4, 2) == mu * 4 + eps * 16),
        ("Delta", d == mu * eps * eps * 64),
        ("V2 Delta", verschiebung(d, 2) == mu * mu * eps),
        ("1728 Delta", delta_q(N) * 1728 == eisenstein_q(4, N) ** 3 - e6 * e6),
    ]


def l2_oracle(samples: int = 50, seed: int = 20240611):
    rng = random.Random(seed)
    pairs = [(a, b) for a in range(51) for b in range(151) if 12 * a + 4 * b <= 600]
    out = []
    prec = 60
    for p in (5, 11, 13):
        ok = True
        for a, b in rng.sample(pairs, samples):
            f = Level1Form.monomial(a, b)
            g = form_to_q(f, prec, GF(p))
            ok &= level2_to_q(l2(f, p), prec) == verschiebung(g, 2) - g
        out.append((f"p={p}", bool(ok)))
    return out


def _check_eisenstein(p, expected, factor):
    E = eisenstein_level2(p)
    got = (E.delta_parity, E.coeffs)
    return [(f"E_{p - 1} fit", got == expected), (f"E_{p - 1} factorisation", FpPoly(E.coeffs, p) == factor)]


def eisenstein_11():
    p = 11
    factor = FpPoly((3, 1), p) * FpPoly((4, 1), p)
    return _check_eisenstein(p, golden.EISENSTEIN_11, factor)


def eisenstein_13():
    p = 13
    factor = (FpPoly((12, 1), p) * FpPoly((1, 5, 1), p)).scale(12)
    return _check_eisenstein(p, golden.EISENSTEIN_13, factor)


def eisenstein_677():
    E = eisenstein_level2(677)
    return [("all 170 coefficients", (E.delta_parity, E.coeffs) == golden.EISENSTEIN_677)]


def other_primes():
    out = []
    x = FpPoly.x(11)
    prod = FpPoly((1,), 11)
    for a in range(1, 11):
        prod = prod * (x - a)
    out.append(("x^10 - 1 splits mod 11", prod == x**10 - 1))
    for p in (11, 13):
        for n in (0, 1):
            for r in (1, 2):
                f = delta_power_form(p, r, n)
                i = r * p**n
                for j in sorted({1, p**n}):
                    rep = check_all(f, p, i, j)
                    ok = rep.passed and rep.c4_at_2 == "certified" and rep.c4_witness.order >= p**n
                    out.append((f"p={p} i={i} j={j}", ok))
    return out


def p677_certificate():
    e = FpPoly(eisenstein_level2(677).coeffs, 677)
    x = FpPoly.x(677)
    out = [("e(x) | x^38194 - 1", x.powmod(38194, e) == FpPoly((1,), 677))]
    f = delta_power_form(677, 1, 0)
    rep = check_all(f, 677, 1, 1)
    out.append(("D^38194 conditions", rep.passed and rep.c4_at_2 == "certified"))
    return out


def p7():
    out = []
    for i in range(1, 21):
        # largest m whose monomial D^(4i-m) E4^(3m) still meets the C2 bound at j = 1
        M = max(m for m in range(4 * i + 1) if check_c2(Level1Form.monomial(4 * i - m, 3 * m), 7, i, 1)[0])
        f = delta_power_form(7, *split_index(7, i))
        rep = check_all(f, 7, i, 1)
        ok = M == 0 and f == Level1Form.monomial(4 * i, 0) and rep.passed and rep.c4_at_2 == "inapplicable"
        out.append((f"i={i}", ok))
    return out


def enumeration():
    return [
        ("p=5 i=25", tuple(enumerate_j(5, 25)) == golden.ENUM_5_25),
        ("p=5 i=5r", all(enumerate_j(5, 5 * r) == [1, 2, 3, 4, 5] for r in (2, 3, 4, 6, 7))),
        ("p=7 j=1", all(1 in enumerate_j(7, i) for i in range(1, 101))),
        ("p=5 i=1250", enumerate_j(5, 1250) == [j for j in range(1, 750) if j % 5 or j > 145]),
    ]


ITEMS = {
    "delta-powers": (delta_powers, "default"),
    "f25-29": (f25_29, "default"),
    "e4-table": (e4_table, "default"),
    "i1250-rows": (i1250_rows, "long"),
    "p5-sweep": (p5_sweep, "long"),
    "recursion": (recursion, "default"),
    "gamma0-2": (gamma0_2, "default"),
    "identities": (identities, "default"),
    "l2-oracle": (l2_oracle, "default"),
    "eisenstein-11": (eisenstein_11, "default"),
    "eisenstein-13": (eisenstein_13, "default"),
    "eisenstein-677": (eisenstein_677, "long"),
    "other-primes": (other_primes, "default"),
    "p677-certificate": (p677_certificate, "long"),
    "p7": (p7, "default"),
    "enumeration": (enumeration, "default"),
}


def run_item(name: str) -> ItemResult:
    if name not in ITEMS:
        raise KeyError(f"unknown item {name!r}")
    fn, _ = ITEMS[name]
    t0 = time.perf_counter()
    try:
        checks = fn()
        err = None
    except Exception as exc:  # report, don't crash the whole run
        checks, err = [], f"{type(exc).__name__}: {exc}"
    return ItemResult(name, checks, time.perf_counter() - t0, err)


def select(names=None, tier: str = "default") -> list[str]:
    if names:
        unknown = [n for n in names if n not in ITEMS]
        if unknown:
            raise KeyError(f"unknown item(s): {', '.join(unknown)}")
        return list(names)
    return [n for n, (_, t) in ITEMS.items() if tier == "long" or t == "default"]


def run_items(names, jobs: int = 1) -> list[ItemResult]:
    names = list(names)
    if jobs <= 1 or len(names) < 2:
        return [run_item(n) for n in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_item, names))
