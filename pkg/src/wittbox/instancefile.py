"""Instance-file parsing.

Format (one instance per file):

    [ring]
    p = 2
    h = 1            # optional, default 1
    modulus = t^2+t+1  # optional; required only when no built-in exists

    [problem]
    n = 4
    m = 2

    [system]
    f1 = x1 + 3*x2 + 5*x3 + 6*x4 mod p^3

    [box]                        # optional; absent = Teichmuller box
    g[2][1] = x[0][1]*x[1][1]*x[0][2]*x[1][4]

Polynomial expressions use integer literals, `+ - * ^` and parentheses.
System polynomials use variables x1..xn with integer coefficients; box
generators use variables x[i][j] and may use `t` for F_q coefficients.
"""

from __future__ import annotations

import re

from .box import box_make, box_variable_names, teichmuller_box
from .counting import ProblemInstance, make_instance, system_variable_names
from .errors import ParseError
from .fqfield import field_params, fq
from .poly import FieldDomain, MultiPoly, ZZ

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)"
    r"|(?P<boxvar>x\[\d+\]\[\d+\])"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^()]))"
)


def _tokenize(text: str, line=None):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in expression", line)
        pos = m.end()
        kind = m.lastgroup
        tokens.append((kind, m.group(kind)))
    return tokens


class _ExprParser:
    """Recursive-descent parser producing a MultiPoly in a fixed context."""

    def __init__(self, domain, variables, tokens, line=None, fq_params=None):
        self.domain = domain
        self.variables = tuple(variables)
        self.tokens = tokens
        self.i = 0
        self.line = line
        self.fq_params = fq_params

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _fail(self, message):
        raise ParseError(message, self.line)

    def parse(self) -> MultiPoly:
        poly = self._expr()
        if self.i != len(self.tokens):
            self._fail(f"trailing tokens starting at {self._peek()[1]!r}")
        return poly

    def _expr(self):
        poly = self._term()
        while True:
            kind, val = self._peek()
            if kind == "op" and val in "+-":
                self._next()
                rhs = self._term()
                poly = poly + rhs if val == "+" else poly - rhs
            else:
                return poly

    def _term(self):
        poly = self._factor()
        while True:
            kind, val = self._peek()
            if kind == "op" and val == "*":
                self._next()
                poly = poly * self._factor()
            else:
                return poly

    def _factor(self):
        kind, val = self._peek()
        if kind == "op" and val == "-":
            self._next()
            return -self._factor()
        poly = self._atom()
        kind, val = self._peek()
        if kind == "op" and val == "^":
            self._next()
            ekind, eval_ = self._next()
            if ekind != "int":
                self._fail("exponent must be an integer literal")
            poly = poly ** int(eval_)
        return poly

    def _atom(self):
        kind, val = self._next()
        if kind == "int":
            return MultiPoly.constant(self.domain, self.variables, int(val))
        if kind in ("boxvar", "name"):
            if val in self.variables:
                return MultiPoly.variable(self.domain, self.variables, val)
            if val == "t":
                if self.fq_params is None:
                    self._fail("`t` is only meaningful in F_q expressions")
                return MultiPoly.constant(
                    self.domain, self.variables, fq(self.fq_params, [0, 1])
                )
            self._fail(f"unknown variable {val!r}")
        if kind == "op" and val == "(":
            poly = self._expr()
            kind, val = self._next()
            if not (kind == "op" and val == ")"):
                self._fail("unbalanced parenthesis")
            return poly
        self._fail("malformed expression" if val is None else f"unexpected token {val!r}")


def parse_poly(text, domain, variables, line=None, fq_params=None) -> MultiPoly:
    return _ExprParser(domain, variables, _tokenize(text, line), line, fq_params).parse()


def _parse_modulus(text, p, line):
    """A monic polynomial in t over F_p, given as e.g. `t^2+t+1`."""
    poly = parse_poly(text, ZZ, ("t",), line=line)
    degree = poly.total_degree()
    coeffs = [0] * (degree + 1)
    for (e,), c in poly.terms.items():
        coeffs[e] = c % p
    return tuple(coeffs)


_SYSTEM_RE = re.compile(r"^f(\d+)\s*=\s*(.+?)\s+mod\s+p\^(\d+)$")
_BOX_RE = re.compile(r"^g\[(\d+)\]\[(\d+)\]\s*=\s*(.+)$")
_KEY_RE = re.compile(r"^(\w+)\s*=\s*(.+)$")


def _split_sections(text: str):
    sections = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current in sections:
                raise ParseError(f"duplicate section [{current}]", lineno)
            sections[current] = []
            continue
        if current is None:
            raise ParseError("content before any section header", lineno)
        sections[current].append((lineno, line))
    return sections


def _section_keys(lines, allowed, section):
    out = {}
    for lineno, line in lines:
        m = _KEY_RE.match(line)
        if not m:
            raise ParseError(f"expected `key = value` in [{section}]", lineno)
        key, value = m.group(1), m.group(2).strip()
        if key not in allowed:
            raise ParseError(f"unknown key {key!r} in [{section}]", lineno)
        out[key] = (lineno, value)
    return out


def _int_value(entry, name):
    lineno, value = entry
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{name} must be an integer, got {value!r}", lineno)


def parse_instance(text: str) -> ProblemInstance:
    sections = _split_sections(text)
    for required in ("ring", "problem", "system"):
        if required not in sections:
            raise ParseError(f"missing required section [{required}]")
    for name in sections:
        if name not in ("ring", "problem", "system", "box"):
            raise ParseError(f"unknown section [{name}]")

    ring = _section_keys(sections["ring"], {"p", "h", "modulus"}, "ring")
    if "p" not in ring:
        raise ParseError("missing p in [ring]")
    p = _int_value(ring["p"], "p")
    h = _int_value(ring["h"], "h") if "h" in ring else 1
    modulus = None
    if "modulus" in ring:
        lineno, value = ring["modulus"]
        modulus = _parse_modulus(value, p, lineno)
    field = field_params(p, h, modulus)

    problem = _section_keys(sections["problem"], {"n", "m"}, "problem")
    for key in ("n", "m"):
        if key not in problem:
            raise ParseError(f"missing {key} in [problem]")
    n = _int_value(problem["n"], "n")
    m = _int_value(problem["m"], "m")
    if n < 1 or m < 1:
        raise ParseError("n and m must be positive")

    sys_names = system_variable_names(n)
    system = []
    for lineno, line in sections["system"]:
        sm = _SYSTEM_RE.match(line)
        if not sm:
            raise ParseError("expected `f<k> = <expr> mod p^<mk>`", lineno)
        f = parse_poly(sm.group(2), ZZ, sys_names, line=lineno)
        system.append((f, int(sm.group(3))))
    if not system:
        raise ParseError("empty [system] section")

    if "box" in sections:
        box_names = box_variable_names(n, m)
        dom = FieldDomain(field)
        generators = {}
        for lineno, line in sections["box"]:
            bm = _BOX_RE.match(line)
            if not bm:
                raise ParseError("expected `g[<i>][<j>] = <expr>`", lineno)
            i, j = int(bm.group(1)), int(bm.group(2))
            g = parse_poly(bm.group(3), dom, box_names, line=lineno, fq_params=field)
            if (i, j) in generators:
                raise ParseError(f"duplicate generator g[{i}][{j}]", lineno)
            generators[(i, j)] = g
        box = box_make(field, n, m, generators)
    else:
        box = teichmuller_box(field, n, m)

    return make_instance(box, system)
