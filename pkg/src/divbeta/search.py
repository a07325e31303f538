"""Find f_{i/j} at p = 5 by solving for its coefficients.

The ansatz is

    f = c_0 Delta^(2i) + sum_{m=1}^{M} c_m Delta^(2i-m) E4^(3m),   M < j/3,

where the bound on M is what C2 allows.  C4 at l = 2 asks that P(y), the
dehomogenised L_2 f in y = 4x + 1, vanish through y^(j-1); since L_2 is
linear this is a j x M linear system over GF(5) for c_1..c_M once c_0 is
fixed.  Free variables are set to zero.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .betafamily import is_order_p
from .conditions import ConditionReport, check_all
from .level1 import Level1Form
from .level2 import dehomogenize, e4_div_order_p5, l2, to_y_variable

__all__ = [
    "SearchProblem",
    "SearchResult",
    "NoSolution",
    "PostconditionFailure",
    "column",
    "system_matrix",
    "solve",
    "solve_mod_p",
    "divisibility_table",
]

P = 5


class NoSolution(ArithmeticError):
    """The divisibility system has no solution with the given leading coefficient."""


class PostconditionFailure(AssertionError):
    """A solution of the linear system fails C1-C3."""


@dataclass(frozen=True)
class SearchProblem:
    i: int
    j: int
    allow_nonfamily: bool = False
    p: int = P

    def __post_init__(self):
        if self.p != P:
            raise ValueError("the coefficient search is implemented for p = 5 only")
        if self.i < 1 or self.j < 1:
            raise ValueError("indices must be positive")
        if not self.allow_nonfamily and not is_order_p(P, self.i, self.j):
            raise ValueError(f"(i, j) = ({self.i}, {self.j}) is not an order-5 family index")

    @property
    def weight(self) -> int:
        return 24 * self.i

    @property
    def top(self) -> int:
        return 2 * self.i

    @property
    def M(self) -> int:
        """Largest m with 3m < j, capped by the number of basis elements."""
        return min((self.j - 1) // 3, self.top)

    def monomial(self, m: int, c: int = 1) -> Level1Form:
        return Level1Form.monomial(self.top - m, 3 * m, c)


@dataclass
class SearchResult:
    problem: SearchProblem
    form: Level1Form
    coefficients: dict[int, int]
    rank: int
    free: list[int] = field(default_factory=list)
    report: ConditionReport | None = None


def column(f: Level1Form, rows: int) -> list[int]:
    """First ``rows`` y-coefficients of L_2 f mod 5."""
    P_y = to_y_variable(dehomogenize(l2(f.reduce(P))), terms=rows).poly.coeffs
    return list(P_y) + [0] * (rows - len(P_y))


def system_matrix(problem: SearchProblem, workers: int | None = None) -> list[list[int]]:
    """Columns for c_1..c_M as a row-major j x M matrix."""
    rows, M = problem.j, problem.M
    monos = [problem.monomial(m) for m in range(1, M + 1)]
    if workers and workers > 1 and M > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            cols = list(pool.map(lambda f: column(f, rows), monos))
    else:
        cols = [column(f, rows) for f in monos]
    return [[cols[k][r] for k in range(M)] for r in range(rows)]


def solve_mod_p(A: list[list[int]], b: list[int], p: int) -> tuple[list[int], int, list[int]] | None:
    """Solve A x = b over GF(p) by row reduction.

    Returns (x, rank, free columns) with free variables zero, or None when
    the system is inconsistent.
    """
    rows = [list(r) + [bv % p] for r, bv in zip(A, b)]
    ncols = len(A[0]) if A else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [(v - f * w) % p for v, w in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    if any(row[-1] for row in rows[r:]):
        return None
    x = [0] * ncols
    for k, c in enumerate(pivots):
        x[c] = rows[k][-1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    return x, len(pivots), free


def _solve_with_lead(problem: SearchProblem, lead: int, A, check: bool) -> SearchResult:
    target = column(problem.monomial(0, lead), problem.j)
    if problem.M == 0:
        sol = ([], 0, [])
        if any(target):
            sol = None
    else:
        sol = solve_mod_p(A, [-v for v in target], P)
    if sol is None:
        raise NoSolution(f"no f_{{{problem.i}/{problem.j}}} with leading coefficient {lead}")
    x, rank, free = sol
    coeffs = {0: lead}
    coeffs.update({m + 1: c for m, c in enumerate(x) if c})
    form = Level1Form(problem.weight, {problem.top - m: c for m, c in coeffs.items()})
    result = SearchResult(problem, form, coeffs, rank, [c + 1 for c in free])
    if check:
        rep = check_all(form, P, problem.i, problem.j)
        result.report = rep
        if rep.failed_stage in ("C1", "C2", "C3"):
            raise PostconditionFailure(f"solution fails {rep.failed_stage}: {form}")
        if rep.failed_stage == "C4":
            raise AssertionError(f"solution of the system fails C4: {form}")
    return result


def solve(
    problem: SearchProblem | tuple[int, int],
    full_basis: bool = False,
    check: bool = True,
    workers: int | None = None,
) -> SearchResult:
    """Solve for f_{i/j}.  With ``full_basis`` every unit leading coefficient is tried."""
    if not isinstance(problem, SearchProblem):
        problem = SearchProblem(*problem)
    A = system_matrix(problem, workers) if problem.M else []
    leads = range(1, P) if full_basis else (1,)
    last = None
    for lead in leads:
        try:
            return _solve_with_lead(problem, lead, A, check)
        except NoSolution as exc:
            last = exc
    raise last


def divisibility_table(i: int, m_range) -> dict[int, int | float]:
    """Exact E4-divisibility of L_2(Delta^(2i-m) E4^(3m)) mod 5 for each m."""
    return {m: e4_div_order_p5(Level1Form.monomial(2 * i - m, 3 * m)) for m in m_range}
