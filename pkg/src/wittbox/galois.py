"""The Galois ring GR(p^M, h) = (Z/p^M)[t]/(phi), Teichmuller lifting, the
digit codec, p-adic valuation, and Witt-coordinate digit arithmetic.

Two arithmetic paths coexist on purpose: direct polynomial arithmetic in GR
and the Witt-digit path through S/M coordinates with the Frobenius twist.
Each validates the other; the cross-check is a permanent test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConfigError, ValidationError
from .fqfield import FieldParams, FqElem
from .witt import witt_op_polys, witt_var
from .poly import FieldDomain

INF = math.inf


@dataclass(frozen=True)
class GRParams:
    field: FieldParams
    precision: int  # M >= 1

    def __post_init__(self):
        if self.precision < 1:
            raise ValidationError("precision must be >= 1")

    @property
    def p(self):
        return self.field.p

    @property
    def h(self):
        return self.field.h

    @property
    def char(self):
        return self.p ** self.precision


@dataclass(frozen=True)
class GRElem:
    params: GRParams
    coeffs: tuple  # length h, entries in [0, p^M - 1]

    def _check(self, other):
        if self.params != other.params:
            raise ConfigError("Galois ring mismatch")

    def __add__(self, other):
        self._check(other)
        mod = self.params.char
        return GRElem(self.params, tuple((a + b) % mod for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        mod = self.params.char
        return GRElem(self.params, tuple((a - b) % mod for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        mod = self.params.char
        return GRElem(self.params, tuple((-a) % mod for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        h = self.params.h
        mod = self.params.char
        phi = self.params.field.modulus
        prod_ = [0] * (2 * h - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod_[i + j] = (prod_[i + j] + a * b) % mod
        for d in range(2 * h - 2, h - 1, -1):
            lead = prod_[d]
            if lead:
                for i in range(h + 1):
                    prod_[d - h + i] = (prod_[d - h + i] - lead * phi[i]) % mod
        return GRElem(self.params, tuple(prod_[:h]))

    def __pow__(self, e: int):
        if e < 0:
            raise ValidationError("negative power in GR")
        result = gr_one(self.params)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def render(self) -> str:
        return ",".join(str(c) for c in self.coeffs)

    def __repr__(self):
        return f"GRElem([{self.render()}] mod {self.params.char})"


def gr_zero(params: GRParams) -> GRElem:
    return GRElem(params, (0,) * params.h)


def gr_one(params: GRParams) -> GRElem:
    return GRElem(params, (1,) + (0,) * (params.h - 1))


def int_to_gr(c: int, params: GRParams) -> GRElem:
    return GRElem(params, (c % params.char,) + (0,) * (params.h - 1))


def gr_make(params: GRParams, coeffs) -> GRElem:
    coeffs = list(coeffs)
    if len(coeffs) > params.h:
        raise ValidationError("coefficient list longer than h")
    coeffs += [0] * (params.h - len(coeffs))
    return GRElem(params, tuple(c % params.char for c in coeffs))


def gr_to_fq(y: GRElem) -> FqElem:
    """Residue of y modulo p."""
    p = y.params.p
    return FqElem(y.params.field, tuple(c % p for c in y.coeffs))


def reduce_precision(y: GRElem, m: int) -> GRElem:
    if m > y.params.precision:
        raise ValidationError("cannot raise precision by reduction")
    params = GRParams(y.params.field, m)
    mod = params.char
    return GRElem(params, tuple(c % mod for c in y.coeffs))


def teichmuller_lift(a: FqElem, params: GRParams) -> GRElem:
    """The unique z with z = a mod p and z^q = z, via M-1 Frobenius iterations.

    Each z -> z^q step gains one digit of agreement with the fixed point, so
    exactly precision-1 iterations suffice; no fixed-point polling.
    """
    if a.params != params.field:
        raise ConfigError("field mismatch in Teichmuller lift")
    z = GRElem(params, tuple(a.coeffs) + (0,) * (params.h - len(a.coeffs)))
    q = params.field.q
    for _ in range(params.precision - 1):
        z = z ** q
    return z


def to_digits(y: GRElem):
    """Teichmuller digit vector (a_0, ..., a_{M-1}) with y = sum tau(a_i) p^i."""
    params = y.params
    p = params.p
    digits = []
    coeffs = list(y.coeffs)
    for i in range(params.precision):
        level = params.precision - i
        mod = p ** level
        coeffs = [c % mod for c in coeffs]
        a = FqElem(params.field, tuple(c % p for c in coeffs))
        digits.append(a)
        tau = teichmuller_lift(a, GRParams(params.field, level))
        coeffs = [((c - t) % mod) // p for c, t in zip(coeffs, tau.coeffs)]
    return tuple(digits)


def from_digits(digits, params: GRParams) -> GRElem:
    if len(digits) != params.precision:
        raise ValidationError("digit vector length must equal the precision")
    acc = gr_zero(params)
    for i, d in enumerate(digits):
        acc = acc + teichmuller_lift(d, params) * int_to_gr(params.p ** i, params)
    return acc


def witt_digit_op(a, b, kind: str, params: GRParams):
    """Combine two digit vectors through the truncated Witt ring.

    Witt coordinates carry the Frobenius twist c_i = digit_i^(p^i); the S/M
    coordinate polynomials act on the twisted coordinates over F_q, and the
    results are untwisted by the i-fold inverse Frobenius.
    """
    if len(a) != len(b):
        raise ValidationError("digit vectors of different lengths")
    if len(a) != params.precision:
        raise ValidationError("digit vector length must equal the precision")
    m = params.precision
    p = params.p
    field = params.field
    polys = witt_op_polys(p, m - 1, 2, kind)
    assignment = {}
    for i in range(m):
        assignment[witt_var(m - 1, 2, i, 1)] = a[i].frobenius(i)
        assignment[witt_var(m - 1, 2, i, 2)] = b[i].frobenius(i)
    dom = FieldDomain(field)
    out = []
    for i, poly in enumerate(polys):
        value = poly.evaluate(assignment, coerce=dom.coerce)
        out.append(value.frobenius_inverse(i))
    return tuple(out)


def ord_p(y: GRElem):
    """Largest e < M with p^e dividing y; +inf for y = 0 (>= M at this precision)."""
    if y.is_zero():
        return INF
    p = y.params.p
    best = y.params.precision
    for c in y.coeffs:
        if c:
            v = 0
            while c % p == 0:
                c //= p
                v += 1
            best = min(best, v)
    return best


def gr_enumerate(params: GRParams):
    """All q^M elements in ascending coefficient-tuple (base p^M) order."""
    mod = params.char
    h = params.h
    total = mod ** h
    out = []
    for code in range(total):
        coeffs = []
        c = code
        for _ in range(h):
            coeffs.append(c % mod)
            c //= mod
        out.append(GRElem(params, tuple(coeffs)))
    return out
