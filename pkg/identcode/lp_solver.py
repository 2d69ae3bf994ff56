# -*- coding: utf-8 -*-
"""
    lp_solver

    Exact rational simplex for covering programs ``min c.x`` subject to
    ``A x >= b``, ``x >= 0``.

    :copyright: (c) 2026 by the identcode authors.
    :license: GPLv3, see LICENSE for more details.
"""
import logging
from collections import namedtuple
from fractions import Fraction

from .configuration import get_limit
from .exceptions import (
    CapExceededError, InfeasibleError, SolverError, raise_user_error,
    register_error_messages
)

__all__ = [
    'Constraint', 'LinearProgram', 'LpSolution', 'solve_lp',
    'has_consecutive_ones', 'OPTIMAL', 'INFEASIBLE', 'UNBOUNDED',
]

logger = logging.getLogger(__name__)

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
UNBOUNDED = 'unbounded'

register_error_messages({
    'lp_variable': 'Constraint %s uses variable %s outside 0 .. %s.',
    'lp_negative_cost': 'Variable %s has negative cost %s.',
    'lp_cost_count': 'Expected %s costs, got %s.',
    'lp_zero_row': 'Constraint %s has no nonzero coefficient but rhs %s.',
    'lp_cap': 'Program with %s %s exceeds the limit of %s.',
    'lp_point_infeasible':
        'Simplex returned a point violating constraint %s.',
    'lp_duality_gap': 'Primal value %s differs from dual value %s.',
})


class Constraint(namedtuple('Constraint', 'coefficients rhs label')):
    """
    ``sum(coef * x[var] for var, coef in coefficients) >= rhs``.

    ``coefficients`` is a tuple of ``(var, Fraction)`` pairs sorted by
    variable with no zero entries; ``label`` is free-form.
    """
    __slots__ = ()

    @property
    def support(self):
        return tuple(var for var, _ in self.coefficients)

    def activity(self, point):
        return sum(coef * point[var] for var, coef in self.coefficients)


def _coefficients(row):
    "Normalise a mapping, a sequence of pairs or of indices (coefficient 1)"
    if hasattr(row, 'items'):
        pairs = row.items()
    else:
        pairs = [
            item if isinstance(item, tuple) else (item, 1) for item in row
        ]
    merged = {}
    for var, coef in pairs:
        merged[var] = merged.get(var, 0) + Fraction(coef)
    return tuple(
        (var, coef) for var, coef in sorted(merged.items()) if coef != 0)


class LinearProgram(object):
    """
    Minimisation program over ``num_vars`` nonnegative variables with
    ``>=`` constraints.

    :param num_vars: number of variables
    :param constraints: iterable of ``(row, rhs)`` or ``(row, rhs, label)``;
        ``row`` is a mapping var -> coefficient, a sequence of
        ``(var, coefficient)`` pairs or a sequence of variable indices
    :param costs: objective coefficients, all 1 by default
    """

    def __init__(self, num_vars, constraints=(), costs=None):
        self.num_vars = num_vars
        rows = []
        for index, item in enumerate(constraints):
            row, rhs = item[0], item[1]
            label = item[2] if len(item) > 2 else index
            coefficients = _coefficients(row)
            for var, _ in coefficients:
                if not 0 <= var < num_vars:
                    raise_user_error('lp_variable',
                                     (label, var, num_vars - 1))
            rows.append(Constraint(coefficients, Fraction(rhs), label))
        self.constraints = tuple(rows)
        if costs is None:
            costs = [1] * num_vars
        if len(costs) != num_vars:
            raise_user_error('lp_cost_count', (num_vars, len(costs)))
        self.costs = tuple(Fraction(c) for c in costs)

    @classmethod
    def covering(cls, num_vars, rows, labels=None):
        """
        Unit-cost covering program: each row is a collection of variables
        whose sum must reach 1.
        """
        labels = list(labels) if labels is not None else None
        return cls(num_vars, [
            (tuple(row), 1, labels[i] if labels else i)
            for i, row in enumerate(rows)
        ])

    @property
    def num_constraints(self):
        return len(self.constraints)

    def __repr__(self):
        return 'LinearProgram(vars=%d, constraints=%d)' % (
            self.num_vars, self.num_constraints)


class LpSolution(namedtuple('LpSolution', 'status value point')):
    """
    ``value`` and ``point`` are exact rationals; both are ``None`` unless
    ``status`` is ``'optimal'``.
    """
    __slots__ = ()

    @property
    def is_optimal(self):
        return self.status == OPTIMAL

    def is_feasible_for(self, lp, scale=1):
        """
        True when ``scale * point`` satisfies every constraint of ``lp``
        (and the sign constraints).
        """
        if self.point is None:
            return False
        point = [scale * value for value in self.point]
        if any(value < 0 for value in point):
            return False
        return all(row.activity(point) >= row.rhs for row in lp.constraints)


class _Tableau(object):
    """
    Condensed simplex tableau of ``max p.y`` subject to ``M y <= q``,
    ``y >= 0`` with ``q >= 0``, starting from the slack basis.

    Variables ``0 .. n-1`` are the structural ones and ``n .. n+m-1`` the
    slacks; ``A`` holds the nonbasic columns, ``c`` the reduced profits.
    """

    def __init__(self, matrix, q, p):
        self.m = len(q)
        self.n = len(p)
        self.A = [list(row) for row in matrix]
        self.b = list(q)
        self.c = list(p)
        self.value = Fraction(0)
        self.nb_vars = list(range(self.n))
        self.b_vars = list(range(self.n, self.n + self.m))
        self.pivots = 0

    def pivot(self, i, j):
        A, b, c = self.A, self.b, self.c
        piv = A[i][j]
        row_i = A[i]
        self.value += c[j] * b[i] / piv
        delta = c[j] / piv
        for col in range(self.n):
            if row_i[col]:
                c[col] -= delta * row_i[col]
        c[j] = -delta
        for col in range(self.n):
            row_i[col] = row_i[col] / piv
        row_i[j] = 1 / piv
        b[i] /= piv
        for k in range(self.m):
            if k == i:
                continue
            row_k = A[k]
            f = row_k[j]
            if not f:
                continue
            for col in range(self.n):
                if row_i[col]:
                    row_k[col] -= f * row_i[col]
            row_k[j] = -f / piv
            b[k] -= f * b[i]
        self.nb_vars[j], self.b_vars[i] = self.b_vars[i], self.nb_vars[j]
        self.pivots += 1

    def bland_step(self):
        """
        Entering variable: lowest id with positive reduced profit. Leaving
        row: minimum ratio, ties to the lowest basic variable id.
        """
        entering = [
            (self.nb_vars[j], j) for j in range(self.n) if self.c[j] > 0
        ]
        if not entering:
            return OPTIMAL
        _, j = min(entering)
        ratios = [
            (self.b[i] / self.A[i][j], self.b_vars[i], i)
            for i in range(self.m) if self.A[i][j] > 0
        ]
        if not ratios:
            return UNBOUNDED
        _, _, i = min(ratios)
        self.pivot(i, j)
        return None

    def run(self):
        while True:
            status = self.bland_step()
            if status is not None:
                return status


def solve_lp(lp, var_cap=None, constraint_cap=None):
    """
    Exact optimum of ``lp``.

    The packing dual ``max b.y`` subject to ``A^T y <= c``, ``y >= 0`` is
    feasible at the origin because costs are nonnegative, so Bland's rule
    runs from the slack basis with no first phase. The primal point is the
    vector of shadow prices of the dual rows.

    :raises InfeasibleError: a constraint with no nonzero coefficient and a
        positive right-hand side
    :returns: :class:`LpSolution`; ``status`` is ``'infeasible'`` when the
        dual is unbounded
    """
    var_cap = get_limit('lp_var_cap', var_cap)
    constraint_cap = get_limit('lp_constraint_cap', constraint_cap)
    if lp.num_vars > var_cap:
        raise_user_error('lp_cap', (lp.num_vars, 'variables', var_cap),
                         exception=CapExceededError)
    if lp.num_constraints > constraint_cap:
        raise_user_error(
            'lp_cap', (lp.num_constraints, 'constraints', constraint_cap),
            exception=CapExceededError)
    for var, cost in enumerate(lp.costs):
        if cost < 0:
            raise_user_error('lp_negative_cost', (var, cost))
    for row in lp.constraints:
        if not row.coefficients and row.rhs > 0:
            raise_user_error('lp_zero_row', (row.label, row.rhs),
                             exception=InfeasibleError)

    # dual: one row per primal variable, one column per primal constraint
    matrix = [
        [Fraction(0)] * lp.num_constraints for _ in range(lp.num_vars)
    ]
    for col, row in enumerate(lp.constraints):
        for var, coef in row.coefficients:
            matrix[var][col] = coef
    tableau = _Tableau(matrix, lp.costs,
                       [row.rhs for row in lp.constraints])
    status = tableau.run()
    logger.debug('Simplex finished (%s) after %d pivots on %r',
                 status, tableau.pivots, lp)
    if status == UNBOUNDED:
        return LpSolution(INFEASIBLE, None, None)

    point = [Fraction(0)] * lp.num_vars
    slack_base = lp.num_constraints
    for j, var in enumerate(tableau.nb_vars):
        if var >= slack_base:
            point[var - slack_base] = -tableau.c[j]
    dual_value = tableau.value
    value = sum(cost * x for cost, x in zip(lp.costs, point))
    solution = LpSolution(OPTIMAL, value, tuple(point))

    for row in lp.constraints:
        if row.activity(point) < row.rhs:
            raise_user_error('lp_point_infeasible', (row.label,),
                             exception=SolverError)
    if value != dual_value:
        raise_user_error('lp_duality_gap', (value, dual_value),
                         exception=SolverError)
    return solution


def has_consecutive_ones(lp, order):
    """
    True when, with the variables laid out in ``order``, the nonzero
    coefficients of every constraint occupy consecutive positions.
    """
    position = dict((var, i) for i, var in enumerate(order))
    for row in lp.constraints:
        places = sorted(position[var] for var in row.support)
        if places and places[-1] - places[0] + 1 != len(places):
            return False
    return True
