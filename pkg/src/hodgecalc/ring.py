"""Exact Laurent polynomials in u, v with rational exponents.

Elements live in the ring Z[u^(1/n), v^(1/n), u^-1, v^-1] for arbitrary n.
Coefficients are Python ints and exponents are reduced ``Fraction`` values, so
every operation here is exact.

The text grammar understood by :func:`parse_poly` is::

    poly   := ["-"] term (("+"|"-") term)*
    term   := coeff ("*" factor)* | factor ("*" factor)*
    factor := ("u"|"v") ("^" exp)?
    exp    := integer | "(" integer "/" integer ")"
    coeff  := integer

Whitespace is ignored.  :func:`format_poly` produces the canonical form, with
terms in ascending lexicographic order of ``(uexp, vexp)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Integral, Rational
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Exponent = Fraction
Bidegree = Tuple[Fraction, Fraction]
RationalLike = Union[int, Fraction, str]


class PolySyntaxError(ValueError):
    """Malformed polynomial text; ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, pos: int, text: str = ""):
        self.pos = pos
        self.text = text
        super().__init__(f"{message} at offset {pos}")


def as_rational(x: RationalLike) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a reduced Fraction.

    Floats are refused: they would silently import rounding error.
    """
    t = type(x)
    if t is Fraction:
        return x
    if t is int:
        return Fraction(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not exponents")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Integral):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {x!r}") from exc
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def as_integer(c) -> int:
    if type(c) is int:
        return c
    if isinstance(c, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(c, Integral):
        return int(c)
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    raise TypeError(f"coefficients must be integers, got {c!r}")


def format_rational(x: Fraction) -> str:
    """``"p/q"`` or ``"p"``; the machine-readable form of a rational."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e.numerator}/{e.denominator})"


def _format_factor(name: str, e: Fraction) -> str:
    if e == 0:
        return ""
    if e == 1:
        return name
    return f"{name}^{_format_exponent(e)}"


def _join_terms(pieces: Iterable[Tuple[int, str]]) -> str:
    """Render signed terms; ``pieces`` yields (coeff, monomial text)."""
    out = []
    for c, mono in pieces:
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{mag}*{mono}"
        else:
            body = str(mag)
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out) if out else "0"


Key = Tuple[int, int, int]


def _key(eu: Fraction, ev: Fraction) -> Key:
    # u^(nu/d) v^(nv/d) with d = lcm of the denominators; already in lowest terms
    du, dv = eu.denominator, ev.denominator
    if du == dv:
        return (eu.numerator, ev.numerator, du)
    d = du * dv // gcd(du, dv)
    return (eu.numerator * (d // du), ev.numerator * (d // dv), d)


def _norm(nu: int, nv: int, d: int) -> Key:
    if d == 1:
        return (nu, nv, 1)
    g = gcd(nu, nv, d)
    return (nu // g, nv // g, d // g) if g != 1 else (nu, nv, d)


def _kadd(a: Key, b: Key) -> Key:
    da, db = a[2], b[2]
    # an integral summand cannot introduce a common factor
    if db == 1:
        return (a[0] + b[0] * da, a[1] + b[1] * da, da)
    if da == 1:
        return (b[0] + a[0] * db, b[1] + a[1] * db, db)
    if da == db:
        return _norm(a[0] + b[0], a[1] + b[1], da)
    d = da * db // gcd(da, db)
    ma, mb = d // da, d // db
    return _norm(a[0] * ma + b[0] * mb, a[1] * ma + b[1] * mb, d)


def _bidegree(k: Key) -> Bidegree:
    return (Fraction(k[0], k[2]), Fraction(k[1], k[2]))


class Poly:
    """An element of the bivariate rational-exponent Laurent ring.

    Instances are immutable.  ``Poly({(1, 1): 3, (0, 0): -2})`` is ``-2 + 3*u*v``.
    Integers are coerced on both sides of ``+``, ``-`` and ``*``.
    """

    # _terms is keyed on integer triples (see _key) because hashing Fractions
    # dominates the cost of large sums; _sorted caches the public view
    __slots__ = ("_terms", "_sorted", "_hash")

    def __init__(self, terms: Mapping[Tuple[RationalLike, RationalLike], int] | None = None):
        acc: dict = {}
        if terms:
            for (eu, ev), c in terms.items():
                key = _key(as_rational(eu), as_rational(ev))
                acc[key] = acc.get(key, 0) + as_integer(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self._sorted = None
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # trusted path: normalised keys, no zero coefficients
        p = object.__new__(cls)
        p._terms = terms
        p._sorted = None
        p._hash = None
        return p

    def _ordered(self) -> Dict[Bidegree, int]:
        if self._sorted is None:
            pairs = sorted((_bidegree(k), c) for k, c in self._terms.items())
            self._sorted = dict(pairs)
        return self._sorted

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, eu: RationalLike, ev: RationalLike, c: int = 1) -> "Poly":
        return cls({(eu, ev): c})

    @classmethod
    def coerce(cls, x) -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, Integral) and not isinstance(x, bool):
            return cls.const(int(x))
        raise TypeError(f"cannot use {type(x).__name__} as a polynomial")

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Bidegree, int]:
        return dict(self._ordered())

    def items(self) -> Iterator[Tuple[Bidegree, int]]:
        return iter(self._ordered().items())

    def coeff(self, eu: RationalLike, ev: RationalLike) -> int:
        return self._terms.get(_key(as_rational(eu), as_rational(ev)), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def has_integral_exponents(self) -> bool:
        return all(k[2] == 1 for k in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, Integral) and not isinstance(other, bool):
            return self == Poly.const(int(other))
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return Poly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "Poly":
        return self

    def __sub__(self, other) -> "Poly":
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Integral) and not isinstance(other, bool):
            return self.scale(int(other))
        if not isinstance(other, Poly):
            return NotImplemented
        acc: dict = {}
        for a_k, a in self._terms.items():
            for b_k, b in other._terms.items():
                k = _kadd(a_k, b_k)
                acc[k] = acc.get(k, 0) + a * b
        return Poly._raw({k: c for k, c in acc.items() if c})

    __rmul__ = __mul__

    def scale(self, n: int) -> "Poly":
        n = as_integer(n)
        if n == 0:
            return Poly()
        return Poly._raw({k: c * n for k, c in self._terms.items()})

    def __pow__(self, n: int) -> "Poly":
        n = as_integer(n)
        if n < 0:
            if len(self._terms) == 1:
                ((nu, nv, d), c), = self._terms.items()
                if c in (1, -1):
                    return Poly._raw({_norm(nu * n, nv * n, d): c ** (-n)})
            raise ValueError("negative powers only exist for unit monomials")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitutions -----------------------------------------------------

    def invert_vars(self) -> "Poly":
        """The substitution u -> 1/u, v -> 1/v."""
        return Poly._raw({(-nu, -nv, d): c for (nu, nv, d), c in self._terms.items()})

    def specialize_v(self) -> "TPoly":
        """Set u = t, v = 1."""
        acc: dict = {}
        for (eu, _), c in self.items():
            acc[eu] = acc.get(eu, 0) + c
        return TPoly._raw({e: c for e, c in acc.items() if c})

    def euler_characteristic(self) -> int:
        """Value at u = v = 1; only defined here for integral exponents."""
        if not self.has_integral_exponents():
            raise ValueError("evaluation at u=v=1 is restricted to integral exponents")
        return sum(self._terms.values())


class TPoly:
    """Univariate Laurent polynomial in t with rational exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[RationalLike, int] | None = None):
        acc: dict = {}
        for e, c in (terms or {}).items():
            e = as_rational(e)
            acc[e] = acc.get(e, 0) + as_integer(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e]}

    @classmethod
    def _raw(cls, terms: dict) -> "TPoly":
        p = object.__new__(cls)
        p._terms = {e: terms[e] for e in sorted(terms)}
        return p

    @property
    def terms(self) -> Mapping[Fraction, int]:
        return dict(self._terms)

    def items(self):
        return iter(self._terms.items())

    def coeff(self, e: RationalLike) -> int:
        return self._terms.get(as_rational(e), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, TPoly):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other: "TPoly") -> "TPoly":
        if not isinstance(other, TPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return TPoly._raw({e: c for e, c in acc.items() if c})

    def __neg__(self) -> "TPoly":
        return TPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other) -> "TPoly":
        if isinstance(other, Integral) and not isinstance(other, bool):
            return TPoly._raw({e: c * int(other) for e, c in self._terms.items() if other})
        if not isinstance(other, TPoly):
            return NotImplemented
        acc: dict = {}
        for a, x in self._terms.items():
            for b, y in other._terms.items():
                acc[a + b] = acc.get(a + b, 0) + x * y
        return TPoly._raw({e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def shift(self, k: RationalLike) -> "TPoly":
        """Multiply by t^k."""
        k = as_rational(k)
        return TPoly._raw({e + k: c for e, c in self._terms.items()})

    def __repr__(self) -> str:
        return f"TPoly({str(self)!r})"

    def __str__(self) -> str:
        return _join_terms((c, _format_factor("t", e)) for e, c in self._terms.items())


ZERO = Poly()
ONE = Poly.const(1)
U = Poly.monomial(1, 0)
V = Poly.monomial(0, 1)
L = Poly.monomial(1, 1)  # class of the affine line


def poly_arith(kind: str, a: Poly, b=None) -> Poly:
    """Dispatch ``add``/``neg``/``mul``/``scale`` by name."""
    if kind == "add":
        return a + b
    if kind == "neg":
        return -a
    if kind == "mul":
        return a * b
    if kind == "scale":
        return a.scale(b)
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def poly_sum(terms: Iterable[Tuple[Poly, int]]) -> Poly:
    """Sum of n * p over ``(p, n)`` pairs, accumulated in one pass."""
    acc: dict = {}
    for p, n in terms:
        for k, c in p._terms.items():
            acc[k] = acc.get(k, 0) + c * n
    return Poly._raw({k: c for k, c in acc.items() if c})


def poly_invert_vars(a: Poly) -> Poly:
    return a.invert_vars()


def poly_specialize_v(a: Poly) -> TPoly:
    return a.specialize_v()


def format_poly(a: Poly) -> str:
    def mono(eu, ev):
        return "*".join(f for f in (_format_factor("u", eu), _format_factor("v", ev)) if f)

    return _join_terms((c, mono(eu, ev)) for (eu, ev), c in a.items())


@lru_cache(maxsize=None)
def lefschetz(i: int) -> Poly:
    if i < 0:
        raise ValueError(f"lefschetz power must be >= 0, got {i}")
    return Poly.monomial(i, i)


@lru_cache(maxsize=None)
def projective(m: int) -> Poly:
    """Class of P^m: 1 + L + ... + L^m, with P^-1 = 0."""
    if m < -1:
        raise ValueError(f"projective space dimension must be >= -1, got {m}")
    return Poly._raw({(i, i, 1): 1 for i in range(m + 1)})


@lru_cache(maxsize=None)
def torus(n: int) -> Poly:
    if n < 0:
        raise ValueError(f"torus dimension must be >= 0, got {n}")
    return (L - 1) ** n


_BUILTINS = {"lefschetz": lefschetz, "projective": projective, "torus": torus}


def builtin_class(name: str, param: int) -> Poly:
    try:
        fn = _BUILTINS[name]
    except KeyError:
        raise ValueError(f"unknown builtin class {name!r}") from None
    return fn(as_integer(param))


# -- parsing -------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        self.offset = offset

    def error(self, message: str, pos: int | None = None) -> PolySyntaxError:
        where = self.pos if pos is None else pos
        return PolySyntaxError(message, where + self.offset, self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"syntax error: expected {ch!r}, found {found!r}")
        self.pos += 1

    def integer(self, signed: bool = False) -> int:
        self.skip()
        start = self.pos
        if signed and self.peek() == "-":
            self.pos += 1
            self.skip()
        digits_start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_start:
            found = self.peek() or "end of input"
            raise self.error(f"syntax error: expected integer, found {found!r}")
        value = int(self.text[digits_start:self.pos])
        return -value if self.text[start] == "-" else value

    def exponent(self) -> Fraction:
        if self.peek() == "(":
            open_pos = self.pos
            self.pos += 1
            num = self.integer(signed=True)
            self.expect("/")
            den = self.integer(signed=True)
            self.expect(")")
            if den == 0:
                raise self.error("exponent not a rational literal (zero denominator)", open_pos)
            return Fraction(num, den)
        if self.peek() in ("-",) or self.peek().isdigit():
            return Fraction(self.integer(signed=True))
        found = self.peek() or "end of input"
        raise self.error(f"syntax error: exponent must be an integer or (p/q), found {found!r}")

    def factor(self) -> Tuple[Fraction, Fraction]:
        ch = self.peek()
        if ch not in ("u", "v"):
            found = ch or "end of input"
            raise self.error(f"syntax error: expected 'u' or 'v', found {found!r}")
        self.pos += 1
        e = Fraction(1)
        if self.peek() == "^":
            self.pos += 1
            e = self.exponent()
        return (e, Fraction(0)) if ch == "u" else (Fraction(0), e)

    def term(self) -> Tuple[Bidegree, int]:
        coeff, eu, ev = 1, Fraction(0), Fraction(0)
        if self.peek().isdigit():
            coeff = self.integer()
            while self.peek() == "*":
                self.pos += 1
                du, dv = self.factor()
                eu, ev = eu + du, ev + dv
        else:
            du, dv = self.factor()
            eu, ev = du, dv
            while self.peek() == "*":
                self.pos += 1
                du, dv = self.factor()
                eu, ev = eu + du, ev + dv
        return (eu, ev), coeff

    def poly(self, stop: str = "") -> Poly:
        acc: dict = {}
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        while True:
            key, c = self.term()
            acc[key] = acc.get(key, 0) + sign * c
            ch = self.peek()
            if ch == "+":
                sign = 1
            elif ch == "-":
                sign = -1
            elif ch == "" or (stop and ch == stop):
                break
            else:
                raise self.error(f"syntax error: unexpected {ch!r}")
            self.pos += 1
        return Poly(acc)


def parse_poly(text: str) -> Poly:
    """Parse polynomial text; raises :class:`PolySyntaxError` with an offset."""
    if not isinstance(text, str):
        raise TypeError("parse_poly expects a string")
    p = _Parser(text)
    if p.peek() == "":
        raise p.error("syntax error: empty polynomial")
    return p.poly()


__all__ = [
    "ONE", "L", "U", "V", "ZERO", "Poly", "PolySyntaxError", "TPoly",
    "as_rational", "builtin_class", "format_poly", "format_rational",
    "lefschetz", "parse_poly", "poly_arith", "poly_invert_vars",
    "poly_specialize_v", "projective", "torus",
]
