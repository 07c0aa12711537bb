"""Sparse exact multivariate polynomials over Z, F_q, or Z/p^M.

Terms map exponent tuples (one slot per declared variable) to nonzero
coefficients.  All arithmetic is exact; there is no floating point anywhere.
Serialization uses graded-lex term order in the declared variable order, and
golden tests depend on that exact rendering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError, ExactDivisionError, ValidationError
from .fqfield import FieldParams, FqElem, fq, fq_one, fq_zero


@dataclass(frozen=True)
class IntegerDomain:
    def coerce(self, v):
        if isinstance(v, int):
            return v
        raise ConfigError(f"cannot coerce {v!r} into Z")

    zero = 0
    one = 1

    def is_zero(self, c):
        return c == 0

    def render(self, c):
        return str(c)


@dataclass(frozen=True)
class ModularDomain:
    modulus: int

    def coerce(self, v):
        if isinstance(v, int):
            return v % self.modulus
        raise ConfigError(f"cannot coerce {v!r} into Z/{self.modulus}")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def is_zero(self, c):
        return c % self.modulus == 0

    def render(self, c):
        return str(c % self.modulus)


@dataclass(frozen=True)
class FieldDomain:
    params: FieldParams

    def coerce(self, v):
        if isinstance(v, FqElem):
            if v.params != self.params:
                raise ConfigError("F_q element from a different field")
            return v
        if isinstance(v, int):
            return fq(self.params, v)
        raise ConfigError(f"cannot coerce {v!r} into F_q")

    @property
    def zero(self):
        return fq_zero(self.params)

    @property
    def one(self):
        return fq_one(self.params)

    def is_zero(self, c):
        return c.is_zero()

    def render(self, c):
        return c.render()


ZZ = IntegerDomain()


class MultiPoly:
    __slots__ = ("domain", "variables", "terms")

    def __init__(self, domain, variables, terms):
        self.domain = domain
        self.variables = tuple(variables)
        clean = {}
        arity = len(self.variables)
        for exps, c in terms.items():
            if len(exps) != arity:
                raise ValidationError("exponent vector arity mismatch")
            c = domain.coerce(c)
            if not domain.is_zero(c):
                clean[tuple(exps)] = c
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, domain, variables):
        return cls(domain, variables, {})

    @classmethod
    def constant(cls, domain, variables, value):
        return cls(domain, variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, domain, variables, name):
        variables = tuple(variables)
        if name not in variables:
            raise ConfigError(f"unknown variable {name!r}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(domain, variables, {exps: domain.one})

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.variables == other.variables
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def _check(self, other):
        if self.domain != other.domain or self.variables != other.variables:
            raise ConfigError("polynomials from different contexts")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.domain, self.variables, other)
        self._check(other)
        terms = dict(self.terms)
        dom = self.domain
        for exps, c in other.terms.items():
            if exps in terms:
                s = terms[exps] + c
                if isinstance(s, int):
                    s = dom.coerce(s)
                if dom.is_zero(s):
                    del terms[exps]
                else:
                    terms[exps] = s
            else:
                terms[exps] = c
        out = MultiPoly.__new__(MultiPoly)
        out.domain, out.variables, out.terms = self.domain, self.variables, terms
        return out

    def __neg__(self):
        dom = self.domain
        if isinstance(dom, IntegerDomain):
            terms = {e: -c for e, c in self.terms.items()}
        elif isinstance(dom, ModularDomain):
            terms = {e: (-c) % dom.modulus for e, c in self.terms.items()}
        else:
            terms = {e: -c for e, c in self.terms.items()}
        out = MultiPoly.__new__(MultiPoly)
        out.domain, out.variables, out.terms = self.domain, self.variables, terms
        return out

    def __sub__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.domain, self.variables, other)
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(self.domain, self.variables, other)
        self._check(other)
        dom = self.domain
        acc = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                prod_ = c1 * c2
                if key in acc:
                    acc[key] = acc[key] + prod_
                else:
                    acc[key] = prod_
        terms = {}
        for e, c in acc.items():
            c = dom.coerce(c) if isinstance(c, int) else c
            if not dom.is_zero(c):
                terms[e] = c
        out = MultiPoly.__new__(MultiPoly)
        out.domain, out.variables, out.terms = self.domain, self.variables, terms
        return out

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValidationError("negative polynomial power")
        result = MultiPoly.constant(self.domain, self.variables, self.domain.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def exact_div_int(self, c: int):
        """Divide every coefficient by c; every coefficient must be divisible."""
        if not isinstance(self.domain, IntegerDomain):
            raise ConfigError("exact integer division needs integer coefficients")
        terms = {}
        for e, coeff in self.terms.items():
            if coeff % c != 0:
                raise ExactDivisionError(f"coefficient {coeff} not divisible by {c}")
            terms[e] = coeff // c
        out = MultiPoly.__new__(MultiPoly)
        out.domain, out.variables, out.terms = self.domain, self.variables, terms
        return out

    # -- degrees ------------------------------------------------------------

    def total_degree(self) -> int:
        """Max total degree over terms; the zero polynomial has degree 0."""
        if not self.terms:
            return 0
        return max(sum(e) for e in self.terms)

    def weighted_degrees(self, weights):
        """Set of per-term weighted degrees under the given variable weights."""
        for v in self.variables:
            if v not in weights:
                raise ConfigError(f"no weight for variable {v!r}")
        w = [weights[v] for v in self.variables]
        return {sum(x * wi for x, wi in zip(e, w)) for e in self.terms}

    def weighted_degree(self, weights) -> int:
        degs = self.weighted_degrees(weights)
        return max(degs) if degs else 0

    # -- structure maps -----------------------------------------------------

    def scale_exponents(self, factors):
        """Substitute x -> x^k per the variable->k map (unspecified vars keep 1)."""
        f = [factors.get(v, 1) for v in self.variables]
        terms = {}
        for e, c in self.terms.items():
            key = tuple(a * k for a, k in zip(e, f))
            terms[key] = terms[key] + c if key in terms else c
        return MultiPoly(self.domain, self.variables, terms)

    def reduce_exponents(self):
        """Reduce each positive exponent to its representative in [1, q-1].

        x^q = x on all of F_q (including 0), so a positive exponent never
        collapses to 0.
        """
        if not isinstance(self.domain, FieldDomain):
            raise ConfigError("exponent reduction is defined over F_q only")
        q = self.domain.params.q
        if q == 2:
            cap = lambda e: min(e, 1)
        else:
            cap = lambda e: ((e - 1) % (q - 1)) + 1 if e > 0 else 0
        terms = {}
        for e, c in self.terms.items():
            key = tuple(cap(x) for x in e)
            terms[key] = terms[key] + c if key in terms else c
        return MultiPoly(self.domain, self.variables, terms)

    def is_reduced(self) -> bool:
        if not isinstance(self.domain, FieldDomain):
            raise ConfigError("reducedness is defined over F_q only")
        q = self.domain.params.q
        return all(x <= q - 1 for e in self.terms for x in e)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, assignment, coerce=None):
        """Exact evaluation; `coerce` maps coefficients into the target ring."""
        for v in self.variables:
            if v not in assignment:
                raise ConfigError(f"no value assigned to variable {v!r}")
        if coerce is None:
            coerce = lambda c: c
        total = None
        for exps, c in self.terms.items():
            v = coerce(c)
            for name, e in zip(self.variables, exps):
                if e:
                    v = v * assignment[name] ** e
            total = v if total is None else total + v
        if total is None:
            return coerce(self.domain.zero)
        return total

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: graded-lex term order, explicit `*` and `^`."""
        if not self.terms:
            return "0"
        ordered = sorted(
            self.terms.items(),
            key=lambda item: (-sum(item[0]), tuple(-x for x in item[0])),
        )
        pieces = []
        for exps, c in ordered:
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.variables, exps)
                if e
            )
            if isinstance(c, int):
                sign = "-" if c < 0 else "+"
                mag = abs(c)
                body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            else:
                sign = "+"
                lit = self.domain.render(c)
                if mono and lit == "1":
                    body = mono
                elif mono:
                    lit = f"({lit})" if ("+" in lit or "-" in lit) else lit
                    body = f"{lit}*{mono}"
                else:
                    body = lit
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"MultiPoly({self.render()})"
