"""Exhaustive zero counting for congruence systems over a box.

Counting evaluates every polynomial directly in the Galois ring at every box
point; the symbolic Teichmuller expansion is deliberately not used here, so
the count stays an independent oracle for everything derived from that
expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .box import BoxSpec, box_enumerate
from .errors import BudgetError, ValidationError
from .galois import GRParams, from_digits, int_to_gr, reduce_precision
from .poly import IntegerDomain, MultiPoly

DEFAULT_BUDGET = 1 << 24


def system_variable_names(n: int):
    return tuple(f"x{j}" for j in range(1, n + 1))


@dataclass(frozen=True)
class ProblemInstance:
    box: BoxSpec
    system: tuple  # ((f_k, m_k), ...) sorted by ascending m_k

    @property
    def field(self):
        return self.box.field

    @property
    def working_precision(self) -> int:
        return max(mk for _, mk in self.system)

    @property
    def enumeration_precision(self) -> int:
        # digits up to max(m, M') are needed to evaluate all residues
        return max(self.working_precision, self.box.m)

    @property
    def moduli(self):
        return tuple(mk for _, mk in self.system)

    @property
    def degrees(self):
        return tuple(f.total_degree() for f, _ in self.system)


def make_instance(box: BoxSpec, system) -> ProblemInstance:
    names = system_variable_names(box.n)
    clean = []
    for f, mk in system:
        if not isinstance(f, MultiPoly) or not isinstance(f.domain, IntegerDomain):
            raise ValidationError("system polynomials must have integer coefficients")
        if f.variables != names:
            raise ValidationError("system polynomial uses a foreign variable context")
        if f.total_degree() < 1:
            raise ValidationError("system polynomials must be nonconstant")
        if mk < 1:
            raise ValidationError("moduli must be >= 1")
        clean.append((f, mk))
    if not clean:
        raise ValidationError("system must contain at least one polynomial")
    clean.sort(key=lambda item: item[1])
    return ProblemInstance(box=box, system=tuple(clean))


@dataclass(frozen=True)
class CountReport:
    cardinality: int
    p: int
    h: int

    @property
    def ord_p(self):
        if self.cardinality == 0:
            return math.inf
        v = 0
        c = self.cardinality
        while c % self.p == 0:
            c //= self.p
            v += 1
        return v

    @property
    def ord_q(self):
        if self.cardinality == 0:
            return math.inf
        return Fraction(self.ord_p, self.h)


def evaluate_point(inst: ProblemInstance, pt):
    """Residues f_k(Y) in GR(p^{m_k}, h), computed once at working precision."""
    params = GRParams(inst.field, inst.enumeration_precision)
    ys = {
        name: from_digits(pt.digits[j], params)
        for j, name in enumerate(system_variable_names(inst.box.n))
    }
    out = []
    for f, mk in inst.system:
        value = f.evaluate(ys, coerce=lambda c: int_to_gr(c, params))
        out.append(reduce_precision(value, mk))
    return out


def count_zeros(inst: ProblemInstance, budget: int = DEFAULT_BUDGET,
                partitions: int = 1) -> CountReport:
    """Exact |V| over the box; refuses (never samples) past the budget.

    The base space is split into `partitions` contiguous ranges counted
    independently; results are identical for any partition count.
    """
    total = inst.box.base_size()
    if total > budget:
        raise BudgetError(f"{total} points exceed the enumeration budget {budget}")
    precision = inst.enumeration_precision
    if partitions < 1:
        raise ValidationError("partitions must be >= 1")
    bounds = [total * k // partitions for k in range(partitions + 1)]
    cardinality = 0
    for start, stop in zip(bounds, bounds[1:]):
        for pt in box_enumerate(inst.box, precision, start=start, stop=stop):
            residues = evaluate_point(inst, pt)
            if all(r.is_zero() for r in residues):
                cardinality += 1
    return CountReport(cardinality=cardinality, p=inst.field.p, h=inst.field.h)
