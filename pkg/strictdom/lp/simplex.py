"""Two-phase primal simplex over exact rationals.

Pivoting follows Bland's rule (smallest entering index with positive reduced
cost, ties in the ratio test broken by the smallest basic index), which
guarantees termination without any tolerance.
"""
from fractions import Fraction

from strictdom import error, logger
from strictdom.lp.program import (EQ, GE, INFEASIBLE, LE, OPTIMAL, UNBOUNDED,
                                  LinearProgram, LpOutcome)

ZERO = Fraction(0)


class _Tableau(object):
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    @property
    def n_columns(self):
        return len(self.rows[0]) if self.rows else 0

    def pivot(self, r, c):
        logger.debug('pivot: column %d enters, column %d leaves (row %d)', c, self.basis[r], r)
        row = self.rows[r]
        piv = row[c]
        row = [v / piv for v in row]
        self.rows[r] = row
        self.rhs[r] = self.rhs[r] / piv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost):
        reduced = list(cost)
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(len(reduced)):
                    reduced[j] -= cb * row[j]
        return reduced

    def objective(self, cost):
        return sum((cost[b] * v for b, v in zip(self.basis, self.rhs)), ZERO)

    def optimize(self, cost, allowed):
        """Pivot until optimal. Returns (status, entering column if unbounded)."""
        while True:
            basic = set(self.basis)
            reduced = self.reduced_costs(cost)
            entering = next((j for j in sorted(allowed) if j not in basic and reduced[j] > 0), None)
            if entering is None:
                return OPTIMAL, None
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED, entering
            self.pivot(best[1], entering)

    def values(self):
        x = [ZERO] * self.n_columns
        for b, v in zip(self.basis, self.rhs):
            x[b] = v
        return x

    def drive_out(self, artificial):
        """Pivot zero-valued artificial variables out of the basis after phase
        one; rows where that is impossible are redundant and get dropped.
        """
        r = 0
        while r < len(self.rows):
            if self.basis[r] in artificial:
                row = self.rows[r]
                c = next((j for j in range(self.n_columns) if j not in artificial and row[j] != 0), None)
                if c is None:
                    logger.debug('dropping redundant row %d', r)
                    del self.rows[r]
                    del self.rhs[r]
                    del self.basis[r]
                    continue
                self.pivot(r, c)
            r += 1


def _structural_columns(lp):
    """Map each variable to (positive column, negative column or None)."""
    nonneg = set(lp.nonneg)
    columns = []
    n = 0
    for j in range(lp.dim):
        if j in nonneg:
            columns.append((n, None))
            n += 1
        else:
            columns.append((n, n + 1))
            n += 2
    return columns, n


def lp_maximize(lp):
    """Solve a LinearProgram exactly.

    Returns:
        LpOutcome: status is one of "optimal", "infeasible", "unbounded";
        for "unbounded" the solution field holds an improving ray.
    """
    if not isinstance(lp, LinearProgram):
        raise error.InvalidProgram('Expected a LinearProgram, got {}'.format(type(lp).__name__))
    columns, n_struct = _structural_columns(lp)

    rows, rhs, relations = [], [], []
    for c in lp.constraints:
        row = [ZERO] * n_struct
        for j, a in enumerate(c.normal):
            pos, neg = columns[j]
            row[pos] += a
            if neg is not None:
                row[neg] -= a
        offset, relation = c.offset, c.relation
        if offset < 0:
            row = [-a for a in row]
            offset = -offset
            relation = {LE: GE, GE: LE, EQ: EQ}[relation]
        rows.append(row)
        rhs.append(offset)
        relations.append(relation)

    n_slack = sum(1 for rel in relations if rel != EQ)
    n_art = sum(1 for rel in relations if rel != LE)
    total = n_struct + n_slack + n_art
    artificial = set(range(n_struct + n_slack, total))

    full_rows, basis = [], []
    next_slack, next_art = n_struct, n_struct + n_slack
    for row, rel in zip(rows, relations):
        full = row + [ZERO] * (n_slack + n_art)
        if rel == LE:
            full[next_slack] = Fraction(1)
            basis.append(next_slack)
            next_slack += 1
        else:
            if rel == GE:
                full[next_slack] = Fraction(-1)
                next_slack += 1
            full[next_art] = Fraction(1)
            basis.append(next_art)
            next_art += 1
        full_rows.append(full)

    tableau = _Tableau(full_rows, rhs, basis)

    if artificial:
        phase_one = [ZERO] * total
        for a in artificial:
            phase_one[a] = Fraction(-1)
        tableau.optimize(phase_one, range(total))
        if tableau.objective(phase_one) < 0:
            logger.debug('phase one ended at %s: infeasible', tableau.objective(phase_one))
            return LpOutcome(INFEASIBLE, None, None)
        tableau.drive_out(artificial)

    cost = [ZERO] * total
    for j, (pos, neg) in enumerate(columns):
        cost[pos] = lp.objective[j]
        if neg is not None:
            cost[neg] = -lp.objective[j]
    allowed = [j for j in range(total) if j not in artificial]

    if tableau.rows:
        status, entering = tableau.optimize(cost, allowed)
        x = tableau.values()
    else:
        # Only sign restrictions left: x = 0 is a vertex.
        entering = next((j for j in allowed if cost[j] > 0), None)
        status = OPTIMAL if entering is None else UNBOUNDED
        x = [ZERO] * total

    if status == UNBOUNDED:
        direction = [ZERO] * total
        direction[entering] = Fraction(1)
        for i, b in enumerate(tableau.basis):
            direction[b] = -tableau.rows[i][entering]
        return LpOutcome(UNBOUNDED, _to_original(direction, columns), None)

    solution = _to_original(x, columns)
    if not lp.is_feasible_point(solution):
        raise error.InternalConsistencyError('Simplex returned an infeasible point {}'.format(solution))
    value = sum((a * v for a, v in zip(lp.objective, solution)), ZERO)
    return LpOutcome(OPTIMAL, solution, value)


def _to_original(x, columns):
    return tuple(x[pos] - (x[neg] if neg is not None else ZERO) for pos, neg in columns)


def lp_feasible_point(constraints, nonneg=(), dim=None):
    """Exact feasible point of a constraint system, or None if infeasible.

    Args:
        constraints: iterable of (normal, relation, offset)
        nonneg: indices of variables that must be >= 0
        dim: number of variables; only needed when constraints is empty
    """
    constraints = list(constraints)
    if dim is None:
        if not constraints:
            raise error.InvalidProgram('Cannot infer the dimension of an empty constraint system')
        dim = len(constraints[0][0])
    lp = LinearProgram([0] * dim, constraints, nonneg)
    outcome = lp_maximize(lp)
    if outcome.status == INFEASIBLE:
        return None
    return outcome.solution
