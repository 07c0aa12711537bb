"""Arithmetic in the finite field F_q with q = p^h, realized as F_p[t]/(phi).

Elements are coefficient tuples of length h (ascending powers of t).  The
modulus is validated for irreducibility at construction time by trial
division; a silently reducible modulus would corrupt every downstream count.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ConfigError, DomainError, ValidationError

# Built-in irreducible moduli for the extension sizes used at desk scale.
# Users may override any of these by passing an explicit modulus.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),  # t^2 + t + 1
    (2, 3): (1, 1, 0, 1),  # t^3 + t + 1
    (3, 2): (1, 0, 1),  # t^2 + 1
    (5, 2): (2, 0, 1),  # t^2 + 2
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _polydeg(c):
    for i in range(len(c) - 1, -1, -1):
        if c[i]:
            return i
    return -1


def _polymod(c, modulus, p):
    """Remainder of c by the monic polynomial `modulus`, coefficients mod p."""
    c = [x % p for x in c]
    h = len(modulus) - 1
    for d in range(len(c) - 1, h - 1, -1):
        lead = c[d]
        if lead:
            for i in range(h + 1):
                c[d - h + i] = (c[d - h + i] - lead * modulus[i]) % p
    del c[h:]
    while len(c) < h:
        c.append(0)
    return c


def _polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _divides(divisor, poly, p):
    """Whether the monic `divisor` divides `poly` over F_p."""
    rem = [x % p for x in poly]
    ddeg = _polydeg(divisor)
    inv_lead = pow(divisor[ddeg], p - 2, p)
    while _polydeg(rem) >= ddeg:
        d = _polydeg(rem)
        factor = (rem[d] * inv_lead) % p
        for i in range(ddeg + 1):
            rem[d - ddeg + i] = (rem[d - ddeg + i] - factor * divisor[i]) % p
    return _polydeg(rem) < 0


def _is_irreducible(modulus, p):
    h = _polydeg(modulus)
    if h < 1:
        return False
    # Trial division by every monic polynomial of degree 1..h//2.
    for d in range(1, h // 2 + 1):
        for tail in product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if _divides(divisor, modulus, p):
                return False
    return True


@dataclass(frozen=True)
class FieldParams:
    p: int
    h: int
    modulus: tuple  # ascending coefficients, length h+1, monic

    @property
    def q(self) -> int:
        return self.p ** self.h


def field_params(p: int, h: int = 1, modulus=None) -> FieldParams:
    if not _is_prime(p):
        raise ValidationError(f"p={p} is not prime")
    if h < 1:
        raise ValidationError(f"h={h} must be >= 1")
    if modulus is None:
        if h == 1:
            modulus = (0, 1)  # plain t; irrelevant for prime fields
        elif (p, h) in DEFAULT_MODULI:
            modulus = DEFAULT_MODULI[(p, h)]
        else:
            raise ConfigError(f"no built-in modulus for (p,h)=({p},{h}); supply one")
    modulus = tuple(c % p for c in modulus)
    if len(modulus) != h + 1 or modulus[h] != 1:
        raise ValidationError("modulus must be monic of degree exactly h")
    if h > 1 and not _is_irreducible(modulus, p):
        raise ValidationError(f"modulus {modulus} is reducible over F_{p}")
    return FieldParams(p=p, h=h, modulus=modulus)


@dataclass(frozen=True)
class FqElem:
    params: FieldParams
    coeffs: tuple  # length h, entries in [0, p-1]

    def _check(self, other):
        if self.params != other.params:
            raise ConfigError("field mismatch")

    def __add__(self, other):
        self._check(other)
        p = self.params.p
        return FqElem(self.params, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        p = self.params.p
        return FqElem(self.params, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        p = self.params.p
        return FqElem(self.params, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        p = self.params.p
        prod_ = _polymul(self.coeffs, other.coeffs, p)
        return FqElem(self.params, tuple(_polymod(prod_, self.params.modulus, p)))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = fq_one(self.params)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        if self.is_zero():
            raise DomainError("inversion of zero in F_q")
        return self ** (self.params.q - 2)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_index(self) -> int:
        """Base-p integer encoding of the coefficient tuple (c_0 least significant)."""
        p = self.params.p
        code = 0
        for c in reversed(self.coeffs):
            code = code * p + c
        return code

    def frobenius(self, e: int = 1):
        if e < 0:
            raise ValidationError("frobenius exponent must be >= 0")
        return self ** (self.params.p ** (e % self.params.h))

    def frobenius_inverse(self, e: int = 1):
        if e < 0:
            raise ValidationError("frobenius exponent must be >= 0")
        return self.frobenius((-e) % self.params.h)

    def render(self) -> str:
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return "+".join(parts) if parts else "0"

    def __repr__(self):
        return f"FqElem({self.render()})"


def fq(params: FieldParams, coeffs) -> FqElem:
    """Build an element from an integer or a coefficient list of length <= h."""
    if isinstance(coeffs, int):
        coeffs = [coeffs]
    coeffs = list(coeffs)
    if len(coeffs) > params.h:
        raise ValidationError(f"coefficient list longer than h={params.h}")
    coeffs += [0] * (params.h - len(coeffs))
    return FqElem(params, tuple(c % params.p for c in coeffs))


def fq_zero(params: FieldParams) -> FqElem:
    return FqElem(params, (0,) * params.h)


def fq_one(params: FieldParams) -> FqElem:
    return fq(params, 1)


def fq_from_index(params: FieldParams, code: int) -> FqElem:
    p = params.p
    coeffs = []
    for _ in range(params.h):
        coeffs.append(code % p)
        code //= p
    return FqElem(params, tuple(coeffs))


def fq_enumerate(params: FieldParams):
    """All q elements, ordered by the base-p integer encoding of coefficients."""
    return [fq_from_index(params, i) for i in range(params.q)]
