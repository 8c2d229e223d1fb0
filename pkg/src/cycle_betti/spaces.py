"""Symbolic spaces with known rational homology.

Expressions are small immutable trees.  Each node knows whether it is
simply connected and whether its rational homology is concentrated in even
degrees; these flags are derived from the structure and are what the bundle
rule checks before it is allowed to multiply Poincare series.
"""

from __future__ import annotations

from dataclasses import dataclass

from .series import (
    PoincareSeries,
    even_em_product,
    em_series,
    gaussian_binomial,
    macdonald_sp,
    make_series,
    mul,
    projective_series,
)

__all__ = [
    "HypothesisViolation",
    "InfiniteDimensional",
    "SpaceExpr",
    "Point",
    "Projective",
    "Grassmannian",
    "Sphere",
    "SymProd",
    "EilenbergMacLane",
    "EvenEMProduct",
    "BU",
    "Bundle",
    "Product",
    "eval_space",
    "bundle_series",
    "euler_char",
    "parse_space",
    "SpaceSyntaxError",
]


class HypothesisViolation(ValueError):
    """The Leray degeneration argument does not apply to this bundle."""

    def __init__(self, hypothesis: str, detail: str):
        self.hypothesis = hypothesis
        super().__init__(f"{hypothesis}: {detail}")


class InfiniteDimensional(ValueError):
    pass


class SpaceExpr:
    simply_connected: bool = True
    evenly_graded: bool = True

    # Real dimension, or None for infinite-dimensional spaces.
    def dimension(self) -> int | None:
        raise NotImplementedError

    def syntax(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.syntax()


@dataclass(frozen=True)
class Point(SpaceExpr):
    def dimension(self):
        return 0

    def syntax(self):
        return "point"


@dataclass(frozen=True)
class Projective(SpaceExpr):
    m: int

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"projective dimension must be >= 0, got {self.m}")

    def dimension(self):
        return 2 * self.m

    def syntax(self):
        return f"p({self.m})"


@dataclass(frozen=True)
class Grassmannian(SpaceExpr):
    """k-dimensional linear subspaces of C^m."""

    k: int
    m: int

    def __post_init__(self):
        if not 0 <= self.k <= self.m:
            raise ValueError(f"Grassmannian needs 0 <= k <= m, got k={self.k}, m={self.m}")

    def dimension(self):
        return 2 * self.k * (self.m - self.k)

    def syntax(self):
        return f"gr({self.k},{self.m})"


@dataclass(frozen=True)
class Sphere(SpaceExpr):
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"sphere dimension must be >= 0, got {self.n}")

    @property
    def simply_connected(self):
        return self.n >= 2

    @property
    def evenly_graded(self):
        return self.n % 2 == 0

    def dimension(self):
        return self.n

    def syntax(self):
        return f"s({self.n})"


@dataclass(frozen=True)
class SymProd(SpaceExpr):
    d: int
    inner: SpaceExpr

    def __post_init__(self):
        if self.d < 0:
            raise ValueError(f"symmetric power must be >= 0, got {self.d}")

    @property
    def simply_connected(self):
        return self.d == 0 or self.inner.simply_connected

    @property
    def evenly_graded(self):
        return self.d == 0 or self.inner.evenly_graded

    def dimension(self):
        inner = self.inner.dimension()
        return None if inner is None else self.d * inner

    def syntax(self):
        return f"sp({self.d}, {self.inner.syntax()})"


@dataclass(frozen=True)
class EilenbergMacLane(SpaceExpr):
    n: int

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise ValueError(f"K(Z, n) needs even n >= 2, got {self.n}")

    def dimension(self):
        return None

    def syntax(self):
        return f"k({self.n})"


@dataclass(frozen=True)
class EvenEMProduct(SpaceExpr):
    def dimension(self):
        return None

    def syntax(self):
        return "evenk"


@dataclass(frozen=True)
class BU(SpaceExpr):
    def dimension(self):
        return None

    def syntax(self):
        return "bu"


@dataclass(frozen=True)
class _Pair(SpaceExpr):
    left: SpaceExpr
    right: SpaceExpr

    @property
    def simply_connected(self):
        return self.left.simply_connected and self.right.simply_connected

    @property
    def evenly_graded(self):
        return self.left.evenly_graded and self.right.evenly_graded

    def dimension(self):
        a, b = self.left.dimension(), self.right.dimension()
        return None if a is None or b is None else a + b


@dataclass(frozen=True)
class Product(_Pair):
    def syntax(self):
        return f"prod({self.left.syntax()}, {self.right.syntax()})"


@dataclass(frozen=True)
class Bundle(_Pair):
    """Fibre bundle with base ``left`` and fibre ``right``."""

    @property
    def base(self):
        return self.left

    @property
    def fiber(self):
        return self.right

    def syntax(self):
        return f"bundle({self.left.syntax()}, {self.right.syntax()})"


def eval_space(expr: SpaceExpr, trunc: int) -> PoincareSeries:
    """Rational Betti series of ``expr`` through degree ``trunc``."""
    if trunc < 0:
        raise ValueError(f"truncation must be >= 0, got {trunc}")
    if isinstance(expr, Point):
        return make_series([1], trunc)
    if isinstance(expr, Projective):
        return projective_series(expr.m, trunc)
    if isinstance(expr, Grassmannian):
        return gaussian_binomial(expr.m, expr.k, trunc)
    if isinstance(expr, Sphere):
        if expr.n == 0:
            return make_series([2], trunc)
        coeffs = [0] * (trunc + 1)
        coeffs[0] = 1
        if expr.n <= trunc:
            coeffs[expr.n] = 1
        return make_series(coeffs, trunc)
    if isinstance(expr, SymProd):
        return macdonald_sp(eval_space(expr.inner, trunc), expr.d, trunc)
    if isinstance(expr, EilenbergMacLane):
        return em_series(expr.n, trunc)
    if isinstance(expr, (EvenEMProduct, BU)):
        return even_em_product(trunc)
    if isinstance(expr, Bundle):
        return bundle_series(expr.base, expr.fiber, trunc)
    if isinstance(expr, Product):
        return mul(eval_space(expr.left, trunc), eval_space(expr.right, trunc))
    raise TypeError(f"not a space expression: {expr!r}")


def bundle_series(base: SpaceExpr, fiber: SpaceExpr, trunc: int) -> PoincareSeries:
    """Betti series of a bundle whose Leray spectral sequence degenerates at E^2.

    Only valid when the base is simply connected and neither base nor fibre
    has odd-degree rational homology through ``trunc``; otherwise
    :class:`HypothesisViolation` is raised.
    """
    if not base.simply_connected:
        raise HypothesisViolation("base not simply connected", base.syntax())
    b = eval_space(base, trunc)
    f = eval_space(fiber, trunc)
    if not b.is_evenly_graded():
        raise HypothesisViolation("odd homology in base", base.syntax())
    if not f.is_evenly_graded():
        raise HypothesisViolation("odd homology in fiber", fiber.syntax())
    return mul(b, f)


def euler_char(expr: SpaceExpr) -> int:
    dim = expr.dimension()
    if dim is None:
        raise InfiniteDimensional(f"{expr.syntax()} is infinite-dimensional")
    return eval_space(expr, dim).euler_characteristic()


class SpaceSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


_ATOMS = {"point": Point, "evenk": EvenEMProduct, "bu": BU}
# name -> (constructor, argument kinds); "i" integer, "s" space
_CALLS = {
    "p": (Projective, "i"),
    "gr": (Grassmannian, "ii"),
    "s": (Sphere, "i"),
    "k": (EilenbergMacLane, "i"),
    "sp": (SymProd, "is"),
    "bundle": (Bundle, "ss"),
    "prod": (Product, "ss"),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message):
        raise SpaceSyntaxError(message, self.text, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expect(self, ch):
        self.skip()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def word(self):
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        if start == self.pos:
            self.error("expected a name or integer")
        return self.text[start:self.pos], start

    def integer(self):
        token, start = self.word()
        if not token.isdigit():
            self.pos = start
            self.error("expected a nonnegative integer")
        return int(token)

    def space(self) -> SpaceExpr:
        name, start = self.word()
        name = name.lower()
        if name in _ATOMS:
            return _ATOMS[name]()
        if name not in _CALLS:
            self.pos = start
            self.error(f"unknown space {name!r}")
        ctor, kinds = _CALLS[name]
        self.expect("(")
        args = []
        for i, kind in enumerate(kinds):
            if i:
                self.expect(",")
            args.append(self.integer() if kind == "i" else self.space())
        self.expect(")")
        try:
            return ctor(*args)
        except ValueError as exc:
            self.pos = start
            self.error(str(exc))

    def parse(self):
        expr = self.space()
        self.skip()
        if self.pos != len(self.text):
            self.error("trailing input")
        return expr


def parse_space(text: str) -> SpaceExpr:
    """Parse the textual syntax, e.g. ``sp(2, gr(5,10))`` or ``bundle(gr(6,10), p(20))``."""
    return _Parser(text).parse()
