"""Classes of standard varieties, evaluated through the Hodge-Euler polynomial.

Grothendieck classes are never kept formally; an expression such as
``2*curve(3) - projective(1)`` evaluates straight to its polynomial image.

Class-expression syntax::

    expr  := ["-"] term (("+"|"-") term)*
    term  := power (("*"|"·") power)*
    power := atom ("^" integer)?
    atom  := integer | name | name "(" args ")" | "poly(" <polynomial> ")" | "(" expr ")"

Names: point, p1xp1, projective(n), curve(g), blowup_p2(k), torus(n),
lefschetz(i), toric(s_0, ..., s_n), poly(...).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

from . import ring
from .ring import L, ONE, Poly, PolySyntaxError, parse_poly

# -- expression tree -----------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    name: str
    args: Tuple[int, ...] = ()


@dataclass(frozen=True)
class Literal:
    poly: Poly


@dataclass(frozen=True)
class BinOp:
    op: str  # "+", "-", "*"
    left: "ClassExpr"
    right: "ClassExpr"


@dataclass(frozen=True)
class Scale:
    factor: int
    expr: "ClassExpr"


@dataclass(frozen=True)
class Power:
    expr: "ClassExpr"
    n: int


ClassExpr = Union[Leaf, Literal, BinOp, Scale, Power]


def _nonneg(name: str, value: int, what: str) -> int:
    if value < 0:
        raise ValueError(f"{name}: {what} must be >= 0, got {value}")
    return value


def curve(g: int) -> Poly:
    """Smooth projective curve of genus g."""
    _nonneg("curve", g, "genus")
    return ONE - ring.U.scale(g) - ring.V.scale(g) + L


def blowup_p2(k: int) -> Poly:
    _nonneg("blowup_p2", k, "number of points")
    return ONE + L.scale(1 + k) + L * L


def toric(counts: Sequence[int]) -> Poly:
    """Toric variety with ``counts[k]`` torus orbits of dimension k."""
    if not counts:
        raise ValueError("toric: need at least one orbit count")
    total = Poly()
    for k, s in enumerate(counts):
        _nonneg("toric", s, f"orbit count s_{k}")
        total = total + ring.torus(k).scale(s)
    return total


def _arity(name: str, args: Tuple[int, ...], n: int) -> None:
    if len(args) != n:
        raise ValueError(f"{name} takes {n} argument(s), got {len(args)}")


def eval_leaf(leaf: Leaf) -> Poly:
    name, args = leaf.name, leaf.args
    if name == "point":
        _arity(name, args, 0)
        return ONE
    if name == "p1xp1":
        _arity(name, args, 0)
        return (ONE + L) ** 2
    if name == "projective":
        _arity(name, args, 1)
        _nonneg(name, args[0], "dimension")
        return ring.projective(args[0])
    if name == "curve":
        _arity(name, args, 1)
        return curve(args[0])
    if name == "blowup_p2":
        _arity(name, args, 1)
        return blowup_p2(args[0])
    if name == "torus":
        _arity(name, args, 1)
        return ring.torus(args[0])
    if name == "lefschetz":
        _arity(name, args, 1)
        return ring.lefschetz(args[0])
    if name == "toric":
        return toric(args)
    raise ValueError(f"unknown variety constructor {name!r}")


def eval_class(e) -> Poly:
    """Hodge-Euler polynomial of a class expression.

    Accepts an expression tree, a :class:`Poly` (returned as is), an int, or
    expression text.
    """
    if isinstance(e, Poly):
        return e
    if isinstance(e, int) and not isinstance(e, bool):
        return Poly.const(e)
    if isinstance(e, str):
        return eval_class(parse_class(e))
    if isinstance(e, Leaf):
        return eval_leaf(e)
    if isinstance(e, Literal):
        return e.poly
    if isinstance(e, Scale):
        return eval_class(e.expr).scale(e.factor)
    if isinstance(e, Power):
        return eval_class(e.expr) ** e.n
    if isinstance(e, BinOp):
        a, b = eval_class(e.left), eval_class(e.right)
        if e.op == "+":
            return a + b
        if e.op == "-":
            return a - b
        if e.op == "*":
            return a * b
        raise ValueError(f"unknown operator {e.op!r}")
    raise TypeError(f"not a class expression: {e!r}")


# -- class identities ----------------------------------------------------------


def blowup_class(total: Poly, center: Poly, c: int) -> Poly:
    """Class of the blow-up of ``total`` along a smooth centre of codimension c.

    [Z] = [X] + [Y]([P^{c-1}] - 1); the exceptional divisor is Y x P^{c-1}.
    """
    if c < 1:
        raise ValueError(f"codimension must be >= 1, got {c}")
    return total + center * (ring.projective(c - 1) - ONE)


def open_complement(ambient: Poly, levels: Iterable[Poly]) -> Poly:
    """Class of X minus a normal crossing divisor, from the classes of D(1), D(2), ..."""
    result = ambient
    for m, d in enumerate(levels, start=1):
        result = result + (d if m % 2 == 0 else -d)
    return result


def cubical_class(pieces: Iterable[Tuple[int, Poly]]) -> Poly:
    """Inclusion-exclusion over a cubical hyperresolution: pieces are (|I|, [X_I])."""
    result = Poly()
    for size, cls in pieces:
        if size < 1:
            raise ValueError(f"cubical index sets are nonempty, got |I| = {size}")
        result = result + (cls if size % 2 == 1 else -cls)
    return result


# -- parsing -------------------------------------------------------------------


class ClassSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} at offset {pos}")


_CONSTRUCTORS = {
    "point", "p1xp1", "projective", "curve", "blowup_p2", "torus", "lefschetz", "toric",
}


class _ClassParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> ClassSyntaxError:
        return ClassSyntaxError(message, self.pos if pos is None else pos)

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"syntax error: expected {ch!r}, found {self.peek() or 'end of input'!r}")
        self.pos += 1

    def integer(self) -> int:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error(f"syntax error: expected integer, found {self.peek() or 'end of input'!r}")
        return int(self.text[start:self.pos])

    def signed_integer(self) -> int:
        if self.peek() == "-":
            self.pos += 1
            return -self.integer()
        return self.integer()

    def name(self) -> str:
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]

    def poly_argument(self) -> Poly:
        # fractional exponents carry their own parentheses, so match depth
        start = self.pos
        depth = 1
        i = start
        while i < len(self.text):
            ch = self.text[i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    break
            i += 1
        else:
            raise self.error("syntax error: unterminated poly(", start)
        try:
            p = parse_poly(self.text[start:i])
        except PolySyntaxError as exc:
            raise ClassSyntaxError(f"in poly(...): {exc.args[0].rsplit(' at offset', 1)[0]}", start + exc.pos) from None
        self.pos = i + 1
        return p

    def atom(self) -> ClassExpr:
        ch = self.peek()
        if ch.isdigit():
            return Literal(Poly.const(self.integer()))
        if ch == "(":
            self.pos += 1
            e = self.expr()
            self.expect(")")
            return e
        if ch.isalpha():
            start = self.pos
            name = self.name()
            if name == "poly":
                self.expect("(")
                return Literal(self.poly_argument())
            if name not in _CONSTRUCTORS:
                raise self.error(f"unknown variety constructor {name!r}", start)
            args: list = []
            if self.peek() == "(":
                self.pos += 1
                if self.peek() != ")":
                    args.append(self.signed_integer())
                    while self.peek() == ",":
                        self.pos += 1
                        args.append(self.signed_integer())
                self.expect(")")
            leaf = Leaf(name, tuple(args))
            try:
                eval_leaf(leaf)
            except ValueError as exc:
                raise ClassSyntaxError(str(exc), start) from None
            return leaf
        raise self.error(f"syntax error: unexpected {ch or 'end of input'!r}")

    def power(self) -> ClassExpr:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            return Power(base, self.integer())
        return base

    def term(self) -> ClassExpr:
        e = self.power()
        while self.peek() in ("*", "·"):
            self.pos += 1
            rhs = self.power()
            if isinstance(e, Literal) and len(e.poly) == 1 and e.poly.coeff(0, 0):
                e = Scale(e.poly.coeff(0, 0), rhs)
            else:
                e = BinOp("*", e, rhs)
        return e

    def expr(self) -> ClassExpr:
        if self.peek() == "-":
            self.pos += 1
            e: ClassExpr = Scale(-1, self.term())
        else:
            e = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            e = BinOp(op, e, self.term())
        return e


def parse_class(text: str) -> ClassExpr:
    if not isinstance(text, str):
        raise TypeError("parse_class expects a string")
    p = _ClassParser(text)
    if p.peek() == "":
        raise p.error("syntax error: empty class expression")
    e = p.expr()
    if p.peek() != "":
        raise p.error(f"syntax error: unexpected {p.peek()!r}")
    return e
