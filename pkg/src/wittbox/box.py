"""Boxes B_m in Z_q^n: representation by reduced generator polynomials,
enumeration, closeness checking, and interpolation from value tables.

A box is described by generators g[i][j] over F_q in the nm free digit
variables x[i][j] (i < m, 1 <= j <= n); digits at level i >= m are the
generator values at the base point.  The Teichmuller box has all generators
zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BudgetError, ValidationError
from .fqfield import FieldParams, fq_from_index
from .poly import FieldDomain, MultiPoly


def box_variable_names(n: int, m: int):
    """Free digit variables, i-major then j, matching the file syntax."""
    return tuple(f"x[{i}][{j}]" for i in range(m) for j in range(1, n + 1))


@dataclass(frozen=True)
class BoxSpec:
    field: FieldParams
    n: int
    m: int
    generators: dict  # (i, j) -> reduced MultiPoly over F_q, i >= m only

    @property
    def variables(self):
        return box_variable_names(self.n, self.m)

    def base_size(self) -> int:
        return self.field.q ** (self.n * self.m)

    def generator(self, i: int, j: int) -> MultiPoly:
        """g[i][j] for i >= m; unspecified generators are zero."""
        if i < self.m:
            raise ValidationError("digits below m are free variables, not generators")
        g = self.generators.get((i, j))
        if g is None:
            return MultiPoly.zero(FieldDomain(self.field), self.variables)
        return g

    def max_generator_index(self) -> int:
        return max((i for i, _ in self.generators), default=self.m - 1)


def box_make(field: FieldParams, n: int, m: int, generators=None, split=False) -> BoxSpec:
    if n < 1 or m < 1:
        raise ValidationError("n and m must be positive")
    names = box_variable_names(n, m)
    dom = FieldDomain(field)
    clean = {}
    for (i, j), g in (generators or {}).items():
        if i < m or not (1 <= j <= n):
            raise ValidationError(f"generator index ({i},{j}) out of range (need i >= m, 1 <= j <= n)")
        if not isinstance(g, MultiPoly) or g.domain != dom:
            raise ValidationError(f"generator g[{i}][{j}] must be a polynomial over F_q")
        if g.variables != names:
            raise ValidationError(f"generator g[{i}][{j}] uses a foreign variable context")
        if not g.is_reduced():
            raise ValidationError(f"generator g[{i}][{j}] is not reduced (variable exponent > q-1)")
        if split:
            column = {f"x[{k}][{j}]" for k in range(m)}
            used = {
                name
                for exps in g.terms
                for name, e in zip(names, exps)
                if e
            }
            if not used <= column:
                raise ValidationError(
                    f"split box violated: g[{i}][{j}] uses variables outside column {j}"
                )
        if not g.is_zero():
            clean[(i, j)] = g
    return BoxSpec(field=field, n=n, m=m, generators=clean)


def teichmuller_box(field: FieldParams, n: int, m: int) -> BoxSpec:
    return box_make(field, n, m, {})


def split_box(field: FieldParams, n: int, m: int, generators) -> BoxSpec:
    return box_make(field, n, m, generators, split=True)


@dataclass(frozen=True)
class BoxPoint:
    base: tuple  # nm FqElem values, i-major then j
    digits: tuple  # n tuples of M' FqElem values each


def decode_base(spec: BoxSpec, index: int):
    """Base point for a base-space index (big-endian base-q over flattened digits)."""
    q = spec.field.q
    nm = spec.n * spec.m
    codes = []
    for _ in range(nm):
        codes.append(index % q)
        index //= q
    codes.reverse()
    return tuple(fq_from_index(spec.field, c) for c in codes)


def expand_point(spec: BoxSpec, base, precision: int) -> BoxPoint:
    names = spec.variables
    assignment = dict(zip(names, base))
    digits = []
    for j in range(1, spec.n + 1):
        col = []
        for i in range(precision):
            if i < spec.m:
                col.append(base[i * spec.n + (j - 1)])
            else:
                col.append(spec.generator(i, j).evaluate(assignment))
        digits.append(tuple(col))
    return BoxPoint(base=tuple(base), digits=tuple(digits))


def box_enumerate(spec: BoxSpec, precision: int, start: int = 0, stop=None):
    """Stream the q^{nm} points with digits computed up to the given precision.

    `start`/`stop` select a contiguous index range of the base space, enabling
    independent partitioned iteration.
    """
    if precision < spec.m:
        raise ValidationError("precision must be at least m")
    total = spec.base_size()
    if stop is None:
        stop = total
    for index in range(start, min(stop, total)):
        yield expand_point(spec, decode_base(spec, index), precision)


def closeness_check(spec: BoxSpec, m_prime: int):
    """Degree test for B_m ~^{m'} T_m: deg g[i][j] <= p^(h*floor(i/h)) for i < m'.

    Indices below m are degree-1 variables and always pass.  Returns the
    verdict plus every violation as (i, j, degree, limit).
    """
    p = spec.field.p
    h = spec.field.h
    violations = []
    for i in range(spec.m, m_prime):
        limit = p ** (h * (i // h))
        for j in range(1, spec.n + 1):
            g = spec.generators.get((i, j))
            if g is None:
                continue
            deg = g.total_degree()
            if deg > limit:
                violations.append((i, j, deg, limit))
    return (not violations), violations


def box_from_table(field: FieldParams, n: int, m: int, precision: int, table,
                   budget: int = 1 << 20) -> BoxSpec:
    """Recover the unique reduced generators from a full enumeration table.

    `table` is an iterable of (base, digits) pairs shaped like BoxPoint
    contents, one per element of F_q^{nm}.  Interpolation expands the
    indicator formula sum_a v_a * prod_k (1 - (x_k - a_k)^(q-1)) symbolically
    and reduces, per-row indicators being shared across all (i, j).
    """
    q = field.q
    nm = n * m
    expected = q ** nm
    if expected > budget:
        raise BudgetError(f"table of {expected} rows exceeds the budget {budget}")
    names = box_variable_names(n, m)
    dom = FieldDomain(field)
    rows = []
    seen = set()
    for base, digits in table:
        base = tuple(base)
        if len(base) != nm:
            raise ValidationError("base point has wrong arity")
        key = tuple(a.to_index() for a in base)
        if key in seen:
            raise ValidationError("duplicate base point in table")
        seen.add(key)
        digits = tuple(tuple(col) for col in digits)
        if len(digits) != n or any(len(col) != precision for col in digits):
            raise ValidationError("digit table has wrong shape")
        for j in range(1, n + 1):
            for i in range(m):
                if digits[j - 1][i] != base[i * n + (j - 1)]:
                    raise ValidationError("table digits below m disagree with the base point")
        rows.append((base, digits))
    if len(rows) != expected:
        raise ValidationError(f"table must have exactly {expected} rows, got {len(rows)}")

    one = MultiPoly.constant(dom, names, 1)
    indicators = []
    for base, _ in rows:
        ind = one
        for name, a in zip(names, base):
            x = MultiPoly.variable(dom, names, name)
            ind = ind * (one - (x - MultiPoly.constant(dom, names, a)) ** (q - 1))
        indicators.append(ind.reduce_exponents())

    generators = {}
    for i in range(m, precision):
        for j in range(1, n + 1):
            g = MultiPoly.zero(dom, names)
            for (base, digits), ind in zip(rows, indicators):
                v = digits[j - 1][i]
                if not v.is_zero():
                    g = g + ind * MultiPoly.constant(dom, names, v)
            g = g.reduce_exponents()
            if not g.is_zero():
                generators[(i, j)] = g
    return box_make(field, n, m, generators)
