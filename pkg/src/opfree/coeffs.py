"""Exact coefficient rings: rationals and polynomials in the weight λ.

Rational coefficients are ``fractions.Fraction`` (arbitrary precision, always
reduced, positive denominator).  Symbolic weights live in ``LambdaPoly``, a
dense polynomial in λ over the rationals, canonical by stripping trailing
zeros.  A value of either kind is a "coefficient"; the two kinds never mix
inside one linear combination.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import MixedCoefficientTags

TAG_RATIONAL = "rational"
TAG_LAMBDA = "lambda"


class LambdaPoly:
    """Polynomial in the weight λ with Fraction coefficients, low degree first.

    Canonical form: no trailing zero coefficients; the zero polynomial is the
    empty tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "_hash", hash(("lpoly", self.coeffs)))

    def __setattr__(self, *a):
        raise AttributeError("LambdaPoly is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, LambdaPoly) and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @classmethod
    def _make(cls, coeffs: tuple) -> "LambdaPoly":
        """Wrap an already-canonical Fraction tuple without re-normalizing."""
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        object.__setattr__(p, "_hash", hash(("lpoly", coeffs)))
        return p

    def __add__(self, other):
        if not isinstance(other, LambdaPoly):
            raise MixedCoefficientTags()
        a, b = self.coeffs, other.coeffs
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly(out)

    def __neg__(self):
        return LambdaPoly._make(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LambdaPoly):
            raise MixedCoefficientTags()
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        if a == _ONE_T:
            return other
        if b == _ONE_T:
            return self
        if a == _LAM_T:  # multiplication by λ is a shift
            return LambdaPoly._make((_F0,) + b)
        if b == _LAM_T:
            return LambdaPoly._make((_F0,) + a)
        out = [_F0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return LambdaPoly(out)

    def evaluate(self, value: Fraction) -> Fraction:
        """Specialize λ to ``value`` by Horner's scheme."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    @staticmethod
    def from_rational(r) -> "LambdaPoly":
        return LambdaPoly((Fraction(r),))

    def __repr__(self):
        return f"LambdaPoly({self.coeffs!r})"

    def __str__(self):
        return render_lambda_poly(self)


_F0 = Fraction(0)
_F1 = Fraction(1)
_ONE_T = (_F1,)
_LAM_T = (_F0, _F1)

ZERO_POLY = LambdaPoly(())
ONE_POLY = LambdaPoly((1,))
LAMBDA = LambdaPoly((0, 1))

Coefficient = Union[Fraction, LambdaPoly]


def coeff_tag(c: Coefficient) -> str:
    if isinstance(c, LambdaPoly):
        return TAG_LAMBDA
    if isinstance(c, Fraction):
        return TAG_RATIONAL
    raise TypeError(f"not a coefficient: {c!r}")


def check_same_tag(a: Coefficient, b: Coefficient) -> str:
    ta, tb = coeff_tag(a), coeff_tag(b)
    if ta != tb:
        raise MixedCoefficientTags()
    return ta


def coefficient_arith(a: Coefficient, b: Coefficient, op: str):
    """Exact ring arithmetic on same-tag coefficients.

    ``op`` is one of add/mul/neg/eq; neg ignores ``b``.
    """
    if op == "neg":
        return -a
    check_same_tag(a, b)
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


def lambda_specialize(c: LambdaPoly, value) -> Fraction:
    """Evaluate a λ-polynomial at a rational weight."""
    return c.evaluate(Fraction(value))


def zero_of(tag: str) -> Coefficient:
    return ZERO_POLY if tag == TAG_LAMBDA else Fraction(0)


def one_of(tag: str) -> Coefficient:
    return ONE_POLY if tag == TAG_LAMBDA else Fraction(1)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def render_rational(r: Fraction) -> str:
    return str(r)


def render_lambda_poly(p: LambdaPoly) -> str:
    """Human form, highest degree first: ``λ^2 + λ``, ``2λ - 1``, ``0``."""
    if not p.coeffs:
        return "0"
    parts = []
    for deg in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[deg]
        if c == 0:
            continue
        if deg == 0:
            body = render_rational(abs(c))
        else:
            mag = abs(c)
            head = "" if mag == 1 else render_rational(mag)
            body = head + ("λ" if deg == 1 else f"λ^{deg}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


def render_coefficient(c: Coefficient) -> str:
    if isinstance(c, LambdaPoly):
        return render_lambda_poly(c)
    return render_rational(c)


def coeff_to_json(c: Coefficient) -> dict:
    if isinstance(c, LambdaPoly):
        return {"poly": [[str(q.numerator), str(q.denominator)] for q in c.coeffs]}
    return {"num": str(c.numerator), "den": str(c.denominator)}


def coeff_from_json(obj: dict, tag: str) -> Coefficient:
    if tag == TAG_LAMBDA:
        return LambdaPoly(tuple(Fraction(int(n), int(d)) for n, d in obj["poly"]))
    return Fraction(int(obj["num"]), int(obj["den"]))
