"""Formal linear combinations of basis elements of one combinatorial family.

A combination stores a family tag (``path``, ``word``, ``vforest`` or
``aforest``), a coefficient tag (``rational`` or ``lambda``) and a finite map
from basis elements to nonzero coefficients.  Terms are kept normalized (no
zeros) and serialized in the canonical basis order: by size, then by the step
sequence of the element's path image, with up < down < level and decoration
names compared lexicographically.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable

from . import forests, paths, words
from .coeffs import (
    Coefficient,
    LambdaPoly,
    TAG_LAMBDA,
    TAG_RATIONAL,
    coeff_from_json,
    coeff_tag,
    coeff_to_json,
    render_coefficient,
    zero_of,
)
from .errors import FamilyMismatch, MixedCoefficientTags

FAMILIES = ("path", "word", "vforest", "aforest")

_FAMILY_TYPE = {
    "path": paths.MotzkinPath,
    "word": words.BracketedWord,
    "vforest": forests.DecoratedForest,
    "aforest": forests.AngularForest,
}

FAMILY_TEXT = {
    "path": (paths.parse, paths.serialize),
    "word": (words.parse, words.serialize),
    "vforest": (forests.parse_forest, forests.serialize_forest),
    "aforest": (forests.parse_angular, forests.serialize_angular),
}


def family_of(basis) -> str:
    for fam, typ in _FAMILY_TYPE.items():
        if isinstance(basis, typ):
            return fam
    raise TypeError(f"not a basis element: {basis!r}")


class LinearCombination:
    __slots__ = ("family", "tag", "terms")

    def __init__(self, family: str, terms: dict, tag: str):
        if family not in FAMILIES:
            raise FamilyMismatch("|".join(FAMILIES), family)
        typ = _FAMILY_TYPE[family]
        clean = {}
        for basis, coeff in terms.items():
            if not isinstance(basis, typ):
                raise FamilyMismatch(family, family_of(basis))
            if coeff_tag(coeff) != tag:
                raise MixedCoefficientTags()
            if coeff:
                clean[basis] = coeff
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "tag", tag)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("LinearCombination is immutable")

    @classmethod
    def zero(cls, family: str, tag: str = TAG_LAMBDA) -> "LinearCombination":
        return cls(family, {}, tag)

    @classmethod
    def single(cls, basis, coeff: Coefficient) -> "LinearCombination":
        return cls(family_of(basis), {basis: coeff}, coeff_tag(coeff))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, LinearCombination)
            and self.family == other.family
            and self.tag == other.tag
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.family, self.tag, frozenset(self.terms.items())))

    def _check_compatible(self, other: "LinearCombination"):
        if self.family != other.family:
            raise FamilyMismatch(self.family, other.family)
        if self.tag != other.tag:
            raise MixedCoefficientTags()

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        self._check_compatible(other)
        out = dict(self.terms)
        for basis, c in other.terms.items():
            acc = out.get(basis)
            acc = c if acc is None else acc + c
            if acc:
                out[basis] = acc
            else:
                out.pop(basis, None)
        return _raw(self.family, out, self.tag)

    def __neg__(self):
        return _raw(self.family, {b: -c for b, c in self.terms.items()}, self.tag)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff: Coefficient) -> "LinearCombination":
        if coeff_tag(coeff) != self.tag:
            raise MixedCoefficientTags()
        if not coeff:
            return LinearCombination.zero(self.family, self.tag)
        return _raw(self.family, {b: coeff * c for b, c in self.terms.items()}, self.tag)

    def map_basis(self, fn: Callable) -> "LinearCombination":
        """Linear extension of a map sending basis elements to combinations."""
        out: dict = {}
        family = self.family
        for basis, c in self.terms.items():
            image = fn(basis)
            family = image.family
            if image.tag != self.tag:
                raise MixedCoefficientTags()
            for b2, c2 in image.terms.items():
                acc = out.get(b2)
                acc = c * c2 if acc is None else acc + c * c2
                if acc:
                    out[b2] = acc
                else:
                    out.pop(b2, None)
        return _raw(family, out, self.tag)

    def items_canonical(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def specialize(self, value) -> "LinearCombination":
        """Evaluate λ at a rational value, turning lambda tags into rationals."""
        if self.tag == TAG_RATIONAL:
            return self
        value = Fraction(value)
        out: dict = {}
        for b, c in self.terms.items():
            r = c.evaluate(value)
            if r:
                out[b] = r
        return _raw(self.family, out, TAG_RATIONAL)

    # -- text / JSON ---------------------------------------------------------

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for basis, coeff in self.items_canonical():
            c = render_coefficient(coeff)
            if " " in c:
                c = f"({c})"
            parts.append(f"{c}*{FAMILY_TEXT[self.family][1](basis)}")
        return " + ".join(parts)

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "coeff": self.tag,
            "terms": [
                {"coeff": coeff_to_json(c), "basis": FAMILY_TEXT[self.family][1](b)}
                for b, c in self.items_canonical()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), ensure_ascii=False)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LinearCombination":
        family = obj["family"]
        tag = obj["coeff"]
        parse = FAMILY_TEXT[family][0]
        terms: dict = {}
        for t in obj["terms"]:
            basis = parse(t["basis"])
            coeff = coeff_from_json(t["coeff"], tag)
            if basis in terms:
                terms[basis] = terms[basis] + coeff
            else:
                terms[basis] = coeff
        return cls(family, terms, tag)

    @classmethod
    def from_json(cls, text: str) -> "LinearCombination":
        return cls.from_json_obj(json.loads(text))

    def __repr__(self):
        return f"LinearCombination({self.to_text()!r})"

    def __str__(self):
        return self.to_text()


def _raw(family: str, terms: dict, tag: str) -> LinearCombination:
    """Internal constructor for terms already known valid and normalized."""
    lc = object.__new__(LinearCombination)
    object.__setattr__(lc, "family", family)
    object.__setattr__(lc, "tag", tag)
    object.__setattr__(lc, "terms", terms)
    return lc


def lincomb_arith(u: LinearCombination, v, op: str, fn: Callable = None):
    """Spec surface for the linear-combination operations."""
    if op == "add":
        return u + v
    if op == "scale":
        return u.scale(v)
    if op == "map-basis":
        return u.map_basis(fn if fn is not None else v)
    raise ValueError(f"unknown op {op!r}")
