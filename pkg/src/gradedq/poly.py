"""Exact multivariate polynomials over the rationals in x1..xd."""

from __future__ import annotations

from fractions import Fraction

from .kernel import poly_add, poly_mul, poly_neg, poly_partial, poly_scale


class PolyError(ValueError):
    pass


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise PolyError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Poly:
    """Sparse polynomial: exponent tuples of length d -> nonzero Fraction."""

    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms=None):
        self.d = d
        if terms is None:
            self.terms = {}
        else:
            self.terms = {tuple(e): _as_fraction(c) for e, c in dict(terms).items()
                          if _as_fraction(c) != 0}

    # constructors ----------------------------------------------------
    @classmethod
    def zero(cls, d: int) -> "Poly":
        return cls(d)

    @classmethod
    def const(cls, d: int, c) -> "Poly":
        c = _as_fraction(c)
        p = cls(d)
        if c:
            p.terms = {(0,) * d: c}
        return p

    @classmethod
    def var(cls, d: int, mu: int, power: int = 1) -> "Poly":
        """x^mu (1-based)."""
        if not 1 <= mu <= d:
            raise PolyError(f"variable index {mu} out of range 1..{d}")
        e = [0] * d
        e[mu - 1] = power
        return cls(d, {tuple(e): Fraction(1)})

    @classmethod
    def _raw(cls, d: int, terms: dict) -> "Poly":
        p = cls(d)
        p.terms = terms
        return p

    # arithmetic ------------------------------------------------------
    def _check(self, other: "Poly"):
        if self.d != other.d:
            raise PolyError(f"dimension mismatch: {self.d} vs {other.d}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.d, other)
        self._check(other)
        return Poly._raw(self.d, poly_add(self.terms, other.terms))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.d, poly_neg(self.terms))

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.d, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly._raw(self.d, poly_scale(self.terms, _as_fraction(other)))
        self._check(other)
        return Poly._raw(self.d, poly_mul(self.terms, other.terms))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolyError("negative powers not supported")
        out = Poly.const(self.d, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def partial(self, mu: int) -> "Poly":
        """Exact partial derivative with respect to x^mu (1-based)."""
        if not 1 <= mu <= self.d:
            raise PolyError(f"variable index {mu} out of range 1..{self.d}")
        return Poly._raw(self.d, poly_partial(self.terms, mu - 1))

    # queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Maximum total x-degree; 0 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=0)

    def constant_value(self) -> Fraction:
        """Value if the polynomial is constant."""
        if not self.terms:
            return Fraction(0)
        if list(self.terms) != [(0,) * self.d]:
            raise PolyError("polynomial is not constant")
        return self.terms[(0,) * self.d]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.d, other)
        return isinstance(other, Poly) and self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # rendering -------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for exp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"x{mu + 1}" + (f"^{k}" if k > 1 else "")
                for mu, k in enumerate(exp) if k)
            if mono:
                if c == 1:
                    t = mono
                elif c == -1:
                    t = f"-{mono}"
                else:
                    t = f"{c}*{mono}"
            else:
                t = str(c)
            bits.append(t)
        out = bits[0]
        for t in bits[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"Poly({self})"


# ---------------------------------------------------------------------
# polynomial expression parser: rationals, x1..xd, + - * ^ ( )
# ---------------------------------------------------------------------

class PolyParseError(PolyError):
    pass


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^()":
            tokens.append((ch, i))
            i += 1
        elif ch == "x":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise PolyParseError(f"bad variable at position {i}")
            tokens.append((("var", int(text[i + 1:j])), i))
            i = j
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            if j < n and text[j] == "/":
                k = j + 1
                while k < n and text[k].isdigit():
                    k += 1
                if k == j + 1:
                    raise PolyParseError(f"bad rational at position {i}")
                tokens.append((("num", Fraction(int(text[i:j]), int(text[j + 1:k]))), i))
                i = k
            else:
                tokens.append((("num", Fraction(int(text[i:j]))), i))
                i = j
        else:
            raise PolyParseError(f"unexpected character {ch!r} at position {i}")
    return tokens


def parse_poly(text: str, d: int) -> Poly:
    """Parse a polynomial expression like '3/2*x1^2 - x3'."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos][0] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_sum():
        t = peek()
        neg = False
        if t in ("+", "-"):
            take()
            neg = t == "-"
        acc = parse_product()
        if neg:
            acc = -acc
        while peek() in ("+", "-"):
            op, _ = take()
            rhs = parse_product()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def parse_product():
        acc = parse_power()
        while peek() == "*":
            take()
            acc = acc * parse_power()
        return acc

    def parse_power():
        base = parse_atom()
        if peek() == "^":
            take()
            t = peek()
            if not (isinstance(t, tuple) and t[0] == "num" and t[1].denominator == 1):
                raise PolyParseError("exponent must be a non-negative integer")
            take()
            n = int(t[1])
            if n < 0:
                raise PolyParseError("exponent must be a non-negative integer")
            base = base ** n
        return base

    def parse_atom():
        t = peek()
        if t == "(":
            take()
            inner = parse_sum()
            if peek() != ")":
                raise PolyParseError("missing closing parenthesis")
            take()
            return inner
        if isinstance(t, tuple) and t[0] == "num":
            take()
            return Poly.const(d, t[1])
        if isinstance(t, tuple) and t[0] == "var":
            take()
            if not 1 <= t[1] <= d:
                raise PolyParseError(f"variable x{t[1]} out of range 1..{d}")
            return Poly.var(d, t[1])
        raise PolyParseError(f"unexpected token at position "
                             f"{tokens[pos][1] if pos < len(tokens) else len(text)}")

    if not tokens:
        raise PolyParseError("empty polynomial expression")
    result = parse_sum()
    if pos != len(tokens):
        raise PolyParseError(f"trailing input at position {tokens[pos][1]}")
    return result
