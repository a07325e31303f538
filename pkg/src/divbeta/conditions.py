"""Checks of the four conditions a candidate f_{i/j} must satisfy mod p.

C1  f is nonzero mod p.
C2  12 ord_q f > (p^2-1)i - (p-1)j, or equals that bound minus 2.
C3  f mod p is not divisible by E_{p-1}.
C4  L_l f is divisible by E_{p-1}^j for every prime l != p.  When 2 is a
    topological generator of ZZ_p^x it suffices to take l = 2, which is what
    we certify; otherwise the check is reported as inapplicable.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .exactnum import check_prime
from .level1 import Level1Form, c3_divisible_by_epm1
from .level2 import e4_div_order_p5, epm1_certified_order, epm1_div_check

__all__ = [
    "C2Witness",
    "C4Witness",
    "ConditionReport",
    "check_c1",
    "check_c2",
    "check_c3",
    "is_topgen_2",
    "check_c4_at_2",
    "check_all",
    "check_many",
]

CERTIFIED = "certified"
NOT_CERTIFIED = "not-certified"
INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class C2Witness:
    ord_q: int | None
    threshold: int
    equality_branch: bool


@dataclass(frozen=True)
class C4Witness:
    status: str
    order: int | float | None
    required: int


@dataclass
class ConditionReport:
    p: int
    i: int
    j: int
    c1: bool | None = None
    c2: bool | None = None
    c2_witness: C2Witness | None = None
    c3: bool | None = None
    c4_at_2: str | None = None
    c4_witness: C4Witness | None = None
    generator_check: bool | None = None
    failed_stage: str | None = None

    @property
    def passed(self) -> bool:
        """C1-C3 hold and C4 was not refuted at l = 2."""
        return self.failed_stage is None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["passed"] = self.passed
        w = out.get("c4_witness")
        if w and w["order"] == math.inf:
            w["order"] = "inf"
        return out


def check_c1(f: Level1Form, p: int) -> bool:
    return any(c % p for _, c in f.coeffs)


def check_c2(f: Level1Form, p: int, i: int, j: int) -> tuple[bool, C2Witness]:
    if f.weight != i * (p * p - 1):
        raise ValueError(f"weight {f.weight} != i(p^2-1) = {i * (p * p - 1)}")
    bound = (p * p - 1) * i - (p - 1) * j
    order = f.ord_q()
    if order is None:
        return True, C2Witness(None, bound, False)
    if 12 * order > bound:
        return True, C2Witness(order, bound, False)
    hit = 12 * order == bound - 2
    return hit, C2Witness(order, bound, hit)


def check_c3(f: Level1Form, p: int) -> bool:
    return not c3_divisible_by_epm1(f, p)


def is_topgen_2(p: int) -> bool:
    """2 generates ZZ_p^x topologically iff its order mod p^2 is p(p-1)."""
    check_prime(p)
    n = p * (p - 1)
    mod = p * p
    if pow(2, n, mod) != 1:
        return False
    # order is n iff 2^(n/q) != 1 for every prime q | n
    m, q, primes = n, 2, set()
    while q * q <= m:
        while m % q == 0:
            primes.add(q)
            m //= q
        q += 1
    if m > 1:
        primes.add(m)
    return all(pow(2, n // q, mod) != 1 for q in primes)


def check_c4_at_2(f: Level1Form, p: int, j: int) -> C4Witness:
    if not is_topgen_2(p):
        return C4Witness(INAPPLICABLE, None, j)
    if p == 5:
        order = e4_div_order_p5(f.reduce(5))
        ok = order >= j
    else:
        ok = epm1_div_check(f, j, p)
        order = epm1_certified_order(f, p) if ok else None
    return C4Witness(CERTIFIED if ok else NOT_CERTIFIED, order, j)


def check_all(f: Level1Form, p: int, i: int, j: int) -> ConditionReport:
    """Run C1 -> C2 -> C3 -> C4, stopping at the first failure."""
    rep = ConditionReport(p, i, j)
    rep.c1 = check_c1(f, p)
    if not rep.c1:
        rep.failed_stage = "C1"
        return rep
    rep.c2, rep.c2_witness = check_c2(f, p, i, j)
    if not rep.c2:
        rep.failed_stage = "C2"
        return rep
    rep.c3 = check_c3(f, p)
    if not rep.c3:
        rep.failed_stage = "C3"
        return rep
    rep.generator_check = is_topgen_2(p)
    rep.c4_witness = check_c4_at_2(f, p, j)
    rep.c4_at_2 = rep.c4_witness.status
    if rep.c4_at_2 == NOT_CERTIFIED:
        rep.failed_stage = "C4"
    return rep


def _check_job(job):
    return check_all(*job)


def check_many(jobs, max_workers: int | None = None) -> list[ConditionReport]:
    """check_all over (f, p, i, j) tuples in worker processes, results in input order."""
    jobs = list(jobs)
    if max_workers == 1 or len(jobs) < 2:
        return [_check_job(job) for job in jobs]
    workers = max_workers or min(len(jobs), os.cpu_count() or 1)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_check_job, jobs, chunksize=1))
