"""Exact rational linear programming, two-phase simplex with Bland's rule.

Maximisation over constraints a.x <= b with optionally sign-restricted
variables.  All arithmetic is ``Fraction``; pivoting uses Bland's smallest
index rule, so the solver terminates on every input.  Every outcome carries
an exactly checkable witness:

* Optimal: a point satisfying all constraints, achieving the value.
* Infeasible: multipliers lam >= 0 with sum(lam_i a_i) vanishing on free
  variables (>= 0 on sign-restricted ones) and sum(lam_i b_i) < 0.
* Unbounded: a recession ray that strictly improves the objective.

``solve_lp`` re-verifies the witness before returning; a failure there is a
bug, not an input condition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Vector, dot, vector

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class LPProblem:
    """maximize objective . x  subject to  a . x <= b for (a, b) pairs.

    ``nonneg[j]`` restricts variable j to x_j >= 0; by default all variables
    are free.
    """

    objective: Vector
    constraints: tuple[tuple[Vector, Fraction], ...]
    nonneg: tuple[bool, ...] = ()

    def __post_init__(self) -> None:
        n = len(self.objective)
        for a, _ in self.constraints:
            if len(a) != n:
                raise ValueError("constraint dimension mismatch")
        if self.nonneg and len(self.nonneg) != n:
            raise ValueError("nonneg flags dimension mismatch")
        if not self.nonneg:
            object.__setattr__(self, "nonneg", (False,) * n)


@dataclass(frozen=True)
class Optimal:
    point: Vector
    value: Fraction


@dataclass(frozen=True)
class Infeasible:
    multipliers: tuple[Fraction, ...]


@dataclass(frozen=True)
class Unbounded:
    ray: Vector


LPOutcome = Optimal | Infeasible | Unbounded


def lp_problem(objective, constraints, nonneg=()) -> LPProblem:
    """Convenience constructor coercing entries to exact rationals."""
    cons = tuple((vector(a), Fraction(b)) for a, b in constraints)
    return LPProblem(vector(objective), cons, tuple(bool(f) for f in nonneg))


def verify_outcome(p: LPProblem, outcome: LPOutcome) -> bool:
    """Exact re-substitution check of an outcome's witness."""
    if isinstance(outcome, Optimal):
        x = outcome.point
        if len(x) != len(p.objective):
            return False
        if any(flag and xi < 0 for flag, xi in zip(p.nonneg, x)):
            return False
        if any(dot(a, x) > b for a, b in p.constraints):
            return False
        return dot(p.objective, x) == outcome.value
    if isinstance(outcome, Infeasible):
        lam = outcome.multipliers
        if len(lam) != len(p.constraints) or any(l < 0 for l in lam):
            return False
        for j in range(len(p.objective)):
            combo = sum((l * a[j] for l, (a, _) in zip(lam, p.constraints)), ZERO)
            if p.nonneg[j]:
                if combo < 0:
                    return False
            elif combo != 0:
                return False
        total = sum((l * b for l, (_, b) in zip(lam, p.constraints)), ZERO)
        return total < 0
    if isinstance(outcome, Unbounded):
        r = outcome.ray
        if len(r) != len(p.objective):
            return False
        if any(flag and ri < 0 for flag, ri in zip(p.nonneg, r)):
            return False
        if any(dot(a, r) > 0 for a, _ in p.constraints):
            return False
        return dot(p.objective, r) > 0
    return False


class _Tableau:
    """Dense simplex tableau in canonical form (basis columns are units)."""

    def __init__(self, p: LPProblem):
        self.p = p
        nvars = len(p.objective)
        self.cols: list[tuple[int, int]] = []  # (variable, sign) per y column
        for j in range(nvars):
            self.cols.append((j, 1))
            if not p.nonneg[j]:
                self.cols.append((j, -1))
        self.ny = len(self.cols)
        m = len(p.constraints)
        self.m = m
        self.sigma = [1 if b >= 0 else -1 for _, b in p.constraints]
        art_rows = [i for i in range(m) if self.sigma[i] < 0]
        self.art_col = {}
        for k, i in enumerate(art_rows):
            self.art_col[i] = self.ny + m + k
        self.nart = len(art_rows)
        self.track0 = self.ny + m + self.nart
        self.rhs = self.track0 + m
        width = self.rhs + 1
        self.rows: list[list[Fraction]] = []
        self.basis: list[int] = []
        for i, (a, b) in enumerate(p.constraints):
            row = [ZERO] * width
            s = self.sigma[i]
            for k, (j, sg) in enumerate(self.cols):
                row[k] = Fraction(s * sg) * a[j]
            row[self.ny + i] = Fraction(s)
            if i in self.art_col:
                row[self.art_col[i]] = ONE
                self.basis.append(self.art_col[i])
            else:
                self.basis.append(self.ny + i)
            row[self.track0 + i] = ONE
            row[self.rhs] = Fraction(s) * b
            self.rows.append(row)

    def pivot(self, zrow: list[Fraction], i: int, j: int) -> None:
        prow = self.rows[i]
        pval = prow[j]
        if pval != 1:
            prow = [a / pval for a in prow]
            self.rows[i] = prow
        for r in range(self.m):
            if r != i:
                f = self.rows[r][j]
                if f:
                    self.rows[r] = [a - f * b for a, b in zip(self.rows[r], prow)]
        f = zrow[j]
        if f:
            zrow[:] = [a - f * b for a, b in zip(zrow, prow)]
        self.basis[i] = j

    def bland(self, zrow: list[Fraction]) -> str:
        """Run Bland iterations until optimal or unbounded."""
        n_real = self.ny + self.m
        while True:
            enter = -1
            for j in range(n_real):
                if zrow[j] > 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            best: Fraction | None = None
            for i in range(self.m):
                coef = self.rows[i][enter]
                if coef > 0:
                    ratio = self.rows[i][self.rhs] / coef
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                self.unbounded_col = enter
                return "unbounded"
            self.pivot(zrow, leave, enter)

    def point(self) -> Vector:
        nvars = len(self.p.objective)
        x = [ZERO] * nvars
        for i, bcol in enumerate(self.basis):
            if bcol < self.ny:
                j, sg = self.cols[bcol]
                x[j] += sg * self.rows[i][self.rhs]
        return tuple(x)

    def ray(self, enter: int) -> Vector:
        # x-space recession direction as the entering column grows; an
        # entering slack contributes only through the basic adjustments
        nvars = len(self.p.objective)
        r = [ZERO] * nvars
        if enter < self.ny:
            j, sg = self.cols[enter]
            r[j] += Fraction(sg)
        for i, bcol in enumerate(self.basis):
            if bcol < self.ny:
                jj, sg2 = self.cols[bcol]
                r[jj] += sg2 * (-self.rows[i][enter])
        return tuple(r)


def solve_lp(p: LPProblem) -> LPOutcome:
    """Exact two-phase simplex with Bland's anti-cycling rule."""
    t = _Tableau(p)
    width = t.rhs + 1

    if t.nart:
        zrow = [ZERO] * width
        for col in t.art_col.values():
            zrow[col] = -ONE
        for i in t.art_col:
            zrow = [a + b for a, b in zip(zrow, t.rows[i])]
        status = t.bland(zrow)
        if status != "optimal":
            raise AssertionError("phase 1 cannot be unbounded")
        if zrow[t.rhs] > 0:
            lam = tuple(-t.sigma[i] * zrow[t.track0 + i] for i in range(t.m))
            outcome: LPOutcome = Infeasible(lam)
            if not verify_outcome(p, outcome):
                raise AssertionError("simplex produced an invalid Farkas certificate")
            return outcome
        # drive leftover artificials out of the basis
        for i in range(t.m):
            if t.basis[i] >= t.ny + t.m and t.basis[i] < t.track0:
                piv = next(
                    (j for j in range(t.ny + t.m) if t.rows[i][j] != 0), None
                )
                if piv is not None:
                    t.pivot(zrow, i, piv)
        keep = [i for i in range(t.m) if not (t.ny + t.m <= t.basis[i] < t.track0)]
        t.rows = [t.rows[i] for i in keep]
        t.basis = [t.basis[i] for i in keep]
        t.m = len(keep)

    zrow = [ZERO] * width
    for k, (j, sg) in enumerate(t.cols):
        zrow[k] = Fraction(sg) * p.objective[j]
    for i, bcol in enumerate(t.basis):
        f = zrow[bcol]
        if f:
            zrow = [a - f * b for a, b in zip(zrow, t.rows[i])]
    status = t.bland(zrow)
    if status == "unbounded":
        outcome = Unbounded(t.ray(t.unbounded_col))
        if not verify_outcome(p, outcome):
            raise AssertionError("simplex produced an invalid unbounded ray")
        return outcome
    x = t.point()
    outcome = Optimal(x, dot(p.objective, x))
    if not verify_outcome(p, outcome):
        raise AssertionError("simplex produced an invalid optimal point")
    return outcome
