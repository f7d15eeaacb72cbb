"""Exact sparse multivariate polynomials over the rationals.

Variables are named ``x[vertex,j]``.  A :class:`PolyRing` fixes the ordered
tuple of variables; a :class:`Polynomial` is a dict from dense exponent
tuples to nonzero coefficients.  Coefficients are ``int`` whenever they are
integral and ``fractions.Fraction`` otherwise, which keeps the common
integral case fast while staying exact.
"""
from __future__ import annotations

import heapq
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Coeff = Union[int, Fraction]
Monomial = tuple


class DivisionError(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class InvariantViolation(ValueError):
    """Raised when a result that must be a polynomial or invariant is not."""


def norm_coeff(c) -> Coeff:
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def _div(a: Coeff, b: Coeff) -> Coeff:
    if isinstance(a, int) and isinstance(b, int) and a % b == 0:
        return a // b
    return norm_coeff(Fraction(a) / b)


def grlex_key(m: Monomial):
    return (sum(m), m)


@dataclass(frozen=True)
class PolyRing:
    """An ordered set of variables ``(vertex, j)``."""

    variables: tuple

    def __post_init__(self):
        object.__setattr__(self, "_index", {v: k for k, v in enumerate(self.variables)})

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, vertex, j: int) -> int:
        try:
            return self._index[(str(vertex), j)]
        except KeyError:
            raise KeyError(f"variable x[{vertex},{j}] not in ring") from None

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c) -> "Polynomial":
        c = norm_coeff(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def gen(self, k: int) -> "Polynomial":
        e = [0] * self.nvars
        e[k] = 1
        return Polynomial(self, {tuple(e): 1})

    def var(self, vertex, j: int) -> "Polynomial":
        return self.gen(self.index(vertex, j))

    def linear(self, coeffs: Mapping[int, Coeff]) -> "Polynomial":
        """Linear form sum c_k x_k from a map variable index -> coefficient."""
        terms = {}
        for k, c in coeffs.items():
            if c:
                e = [0] * self.nvars
                e[k] = 1
                terms[tuple(e)] = norm_coeff(c)
        return Polynomial(self, terms)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(self, text)

    def __repr__(self):
        names = ", ".join(f"x[{v},{j}]" for v, j in self.variables)
        return f"PolyRing({names})"


def ring_for(vars_by_vertex: Sequence[tuple[str, int]]) -> PolyRing:
    return PolyRing(tuple((str(v), j) for v, j in vars_by_vertex))


class Polynomial:
    """Immutable sparse polynomial.  Do not mutate ``terms``."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def constant_value(self):
        """The value if this is a constant polynomial, else None."""
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            if not any(m):
                return c
        return None

    def homogeneous_part(self, deg: int) -> "Polynomial":
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == deg})

    def leading_term(self):
        m = max(self.terms, key=grlex_key)
        return m, self.terms[m]

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = t.get(m, 0) + c
            if v:
                t[m] = norm_coeff(v)
            else:
                t.pop(m, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = norm_coeff(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {m: norm_coeff(v * c) for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Polynomial(self.ring, {m: norm_coeff(c) for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.constant_value() == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # -- substitutions -------------------------------------------------
    def signed_permute(self, target: Sequence[int], sign: Sequence[int]) -> "Polynomial":
        """Substitute x_v -> sign[v] * x_{target[v]} (target a permutation)."""
        n = self.ring.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            s = 1
            for v, k in enumerate(m):
                if k:
                    e[target[v]] = k
                    if sign[v] < 0 and k & 1:
                        s = -s
            out[tuple(e)] = c if s > 0 else -c
        return Polynomial(self.ring, out)

    def embed(self, ring: PolyRing, target: Sequence[int], sign: Sequence[int] | None = None) -> "Polynomial":
        """Map into another ring via x_v -> sign[v] * y_{target[v]} (injective target)."""
        n = ring.nvars
        out: dict = {}
        for m, c in self.terms.items():
            e = [0] * n
            s = 1
            for v, k in enumerate(m):
                if k:
                    e[target[v]] += k
                    if sign is not None and sign[v] < 0 and k & 1:
                        s = -s
            key = tuple(e)
            val = out.get(key, 0) + (c if s > 0 else -c)
            if val:
                out[key] = val
            else:
                out.pop(key, None)
        return Polynomial(ring, out)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """General substitution x_v -> images[v] (all images in one target ring)."""
        ring = images[0].ring if images else self.ring
        result = ring.zero()
        for m, c in self.terms.items():
            t = ring.const(c)
            for v, k in enumerate(m):
                if k:
                    t = t * images[v] ** k
            result = result + t
        return result

    # -- division ------------------------------------------------------
    def exact_divide(self, g: "Polynomial") -> "Polynomial":
        return exact_divide(self, g)

    # -- printing ------------------------------------------------------
    def to_text(self) -> str:
        return format_polynomial(self)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


# ----------------------------------------------------------------------
# division
# ----------------------------------------------------------------------

def _divide_linear(f: Polynomial, g: Polynomial) -> Polynomial:
    """Synthetic division by a degree-one polynomial g = a*x_p + r."""
    ring = f.ring
    # pivot: the first variable (in ring order) occurring in g
    p = None
    for m in g.terms:
        for v, k in enumerate(m):
            if k:
                p = v if p is None else min(p, v)
    unit = tuple(1 if v == p else 0 for v in range(ring.nvars))
    a = g.terms[unit]
    rest = {m: c for m, c in g.terms.items() if m != unit}

    # group f by the exponent of x_p
    by_power: dict[int, dict] = {}
    for m, c in f.terms.items():
        by_power.setdefault(m[p], {})[m[:p] + (0,) + m[p + 1:]] = c
    if not by_power:
        return ring.zero()
    top = max(by_power)
    quotient: dict = {}
    carry: dict = {}  # r * q_e, to be subtracted from f_{e}
    for e in range(top, -1, -1):
        cur = dict(by_power.get(e, {}))
        for m, c in carry.items():
            v = cur.get(m, 0) - c
            if v:
                cur[m] = v
            else:
                cur.pop(m, None)
        if e == 0:
            if cur:
                raise DivisionError(f"{f} is not divisible by {g}")
            break
        q = {m: _div(c, a) for m, c in cur.items()}
        for m, c in q.items():
            quotient[m[:p] + (e - 1,) + m[p + 1:]] = c
        carry = {}
        for mq, cq in q.items():
            for mr, cr in rest.items():
                mm = tuple(x + y for x, y in zip(mq, mr))
                carry[mm] = carry.get(mm, 0) + cq * cr
        carry = {m: c for m, c in carry.items() if c}
    return Polynomial(ring, {m: norm_coeff(c) for m, c in quotient.items() if c})


def exact_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    """Return q with q*g == f, raising DivisionError otherwise."""
    f._check(g)
    if g.is_zero():
        raise DivisionError("division by zero polynomial")
    if f.is_zero():
        return f.ring.zero()
    cv = g.constant_value()
    if cv is not None:
        return f.scale(Fraction(1) / Fraction(cv))
    if g.degree() == 1 and g.is_homogeneous():
        return _divide_linear(f, g)
    # general leading-term division with a max-heap of remainder monomials
    lm, lc = g.leading_term()
    rem = dict(f.terms)
    heap = [(-sum(m), tuple(-x for x in m)) for m in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while heap:
        _, neg = heapq.heappop(heap)
        m = tuple(-x for x in neg)
        c = rem.get(m)
        if not c:
            continue
        if any(x < y for x, y in zip(m, lm)):
            raise DivisionError(f"{f} is not divisible by {g}")
        t = tuple(x - y for x, y in zip(m, lm))
        qc = _div(c, lc)
        quot[t] = qc
        for mg, cg in g.terms.items():
            mm = tuple(x + y for x, y in zip(t, mg))
            v = rem.get(mm, 0) - qc * cg
            if v:
                if mm not in rem:
                    heapq.heappush(heap, (-sum(mm), tuple(-x for x in mm)))
                rem[mm] = norm_coeff(v)
            else:
                rem.pop(mm, None)
    return Polynomial(f.ring, quot)


# ----------------------------------------------------------------------
# text format
# ----------------------------------------------------------------------

def _coeff_text(c: Coeff) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: terms in decreasing graded-lex order."""
    if not f.terms:
        return "0"
    parts = []
    for m in sorted(f.terms, key=grlex_key, reverse=True):
        c = f.terms[m]
        factors = []
        for v, k in enumerate(m):
            if k:
                vert, j = f.ring.variables[v]
                name = f"x[{vert},{j}]"
                factors.append(name if k == 1 else f"{name}^{k}")
        neg = c < 0
        a = -c if neg else c
        if factors:
            body = "*".join(factors)
            body = body if a == 1 else f"{_coeff_text(a)}*{body}"
        else:
            body = _coeff_text(a)
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


_TOKEN = re.compile(r"\s*(?:(x\[[^\],]+,\s*\d+\])|(\d+(?:/\d+)?)|(\*\*|[-+*^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        var, num, op = m.groups()
        if var:
            inner = var[2:-1]
            vert, j = inner.rsplit(",", 1)
            tokens.append(("var", (vert.strip(), int(j))))
        elif num:
            tokens.append(("num", Fraction(num)))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


def parse_polynomial(ring: PolyRing, text: str) -> Polynomial:
    """Parse sums/differences/products/powers of variables and rationals."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def expr():
        kind, val = peek()
        sign = 1
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
        result = term().scale(sign)
        while True:
            kind, val = peek()
            if kind == "op" and val in "+-":
                take()
                t = term()
                result = result + t if val == "+" else result - t
            else:
                return result

    def term():
        result = power()
        while True:
            kind, val = peek()
            if kind == "op" and val == "*":
                take()
                result = result * power()
            elif kind in ("var", "num") or (kind == "op" and val == "("):
                result = result * power()
            else:
                return result

    def power():
        base = atom()
        kind, val = peek()
        if kind == "op" and val == "^":
            take()
            kind, n = take()
            if kind != "num" or n.denominator != 1:
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(n)
        return base

    def atom():
        if pos >= len(tokens):
            raise ValueError("unexpected end of polynomial text")
        kind, val = take()
        if kind == "num":
            return ring.const(val)
        if kind == "var":
            return ring.var(*val)
        if val == "(":
            inner = expr()
            k, v = take() if pos < len(tokens) else (None, None)
            if v != ")":
                raise ValueError("unbalanced parentheses")
            return inner
        if val == "-":
            return -atom()
        raise ValueError(f"unexpected token {val!r}")

    if not tokens:
        raise ValueError("empty polynomial text")
    result = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in polynomial text {text!r}")
    return result


def product(polys: Iterable[Polynomial], ring: PolyRing) -> Polynomial:
    result = ring.one()
    for p in polys:
        result = result * p
    return result
