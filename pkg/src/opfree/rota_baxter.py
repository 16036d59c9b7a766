"""Weight-λ Rota-Baxter products on the four basis families.

The product is characterized on each family by three rules: the family unit
(where one exists) is the multiplication identity; a product of two raised /
bracketed / grafted factors expands into the three-term recursion

    [u] * [v]  =  [u * [v]]  +  [[u] * v]  +  λ [u * v]

with a letter-like factor multiplying by plain concatenation; and a product
of two general elements splices at the boundary, multiplying only the last
factor of the left operand with the first factor of the right one.

The distinguished operator P wraps basis elements (raising a path, bracketing
a word, grafting a forest), extended linearly.  All arithmetic is exact; the
weight stays symbolic unless a rational weight is supplied.  Recursions are
memoized per call tree: callers may pass one memo dict through a whole test
suite as long as the weight does not change.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .coeffs import Coefficient, LAMBDA, coeff_tag, one_of
from .errors import FamilyMismatch, MixedCoefficientTags, NotInFamily, UnitInNonunitary, UnknownSymbol
from .forests import (
    ALeaf,
    ALeafType,
    AngularForest,
    DecoratedForest,
    Graft,
    Leaf,
    Node,
    forest_omega_singleton,
    is_leaf_spaced,
)
from .lincomb import LinearCombination, _raw
from .paths import (
    LEVEL,
    MotzkinPath,
    decompose_indecomposable,
    first_valley,
    inner,
    is_omega_singleton as path_omega_singleton,
    raised,
)
from .words import (
    Bracket,
    BracketedWord,
    Letter,
    is_omega_singleton as word_omega_singleton,
    is_rb_word,
    word_bracket,
)
from .paths import DEFAULT_OMEGA


def _acc(d: dict, basis, coeff):
    cur = d.get(basis)
    cur = coeff if cur is None else cur + coeff
    if cur:
        d[basis] = cur
    else:
        d.pop(basis, None)


@dataclass(frozen=True)
class _FamilyOps:
    """Structural hooks the generic three-term recursion needs."""

    is_unit: Callable
    factors: Callable          # element -> tuple of indecomposable factors
    from_factors: Callable     # tuple of factors -> element
    is_letter: Callable        # factor -> bool
    body: Callable             # non-letter factor -> inner element
    graft: Callable            # element -> factor
    graft_el: Callable         # element -> element (graft wrapped back up)


def _path_from_factors(fs):
    if len(fs) == 1:
        return fs[0]
    steps: list = []
    for f in fs:
        steps += f.steps
    return MotzkinPath._unsafe(tuple(steps))


_PATH_OPS = _FamilyOps(
    is_unit=lambda p: not p.steps,
    factors=decompose_indecomposable,
    from_factors=_path_from_factors,
    is_letter=lambda f: len(f.steps) == 1 and f.steps[0].kind == LEVEL,
    body=inner,
    graft=raised,
    graft_el=raised,
)

_WORD_OPS = _FamilyOps(
    is_unit=lambda w: not w.atoms,
    factors=lambda w: w.atoms,
    from_factors=BracketedWord,
    is_letter=lambda a: isinstance(a, Letter),
    body=lambda a: a.body,
    graft=lambda w: Bracket(DEFAULT_OMEGA, w),
    graft_el=lambda w: BracketedWord((Bracket(DEFAULT_OMEGA, w),)),
)

_LFOREST_OPS = _FamilyOps(
    is_unit=lambda f: False,  # the leaf-decorated family is nonunitary
    factors=lambda f: f.trees,
    from_factors=DecoratedForest,
    is_letter=lambda t: isinstance(t, Leaf),
    body=lambda t: DecoratedForest(t.children),
    graft=lambda f: Node(DEFAULT_OMEGA, f.trees),
    graft_el=lambda f: DecoratedForest((Node(DEFAULT_OMEGA, f.trees),)),
)


def _mul_generic(ops: _FamilyOps, u, v, lam: Coefficient, one: Coefficient, memo: dict):
    if ops.is_unit(u):
        return {v: one}
    if ops.is_unit(v):
        return {u: one}
    key = (u, v)
    hit = memo.get(key)
    if hit is not None:
        return hit
    uf = ops.factors(u)
    vf = ops.factors(v)
    a, b = uf[-1], vf[0]
    if ops.is_letter(a) or ops.is_letter(b):
        core = {ops.from_factors((a, b)): one}
    else:
        abody = ops.body(a)
        bbody = ops.body(b)
        t1 = _mul_generic(ops, abody, ops.from_factors((b,)), lam, one, memo)
        t2 = _mul_generic(ops, ops.from_factors((a,)), bbody, lam, one, memo)
        t3 = _mul_generic(ops, abody, bbody, lam, one, memo)
        graft_el = ops.graft_el
        core = {}
        for m, c in t1.items():
            _acc(core, graft_el(m), c)
        for m, c in t2.items():
            _acc(core, graft_el(m), c)
        for m, c in t3.items():
            _acc(core, graft_el(m), lam * c)
    prefix, suffix = uf[:-1], vf[1:]
    if prefix or suffix:
        out: dict = {}
        for m, c in core.items():
            _acc(out, ops.from_factors(prefix + ops.factors(m) + suffix), c)
    else:
        out = core
    memo[key] = out
    return out


def _as_lincomb(family: str, terms: dict, lam: Coefficient) -> LinearCombination:
    return _raw(family, dict(terms), coeff_tag(lam))


def rb_mul_path(
    p: MotzkinPath, q: MotzkinPath, lam: Coefficient = LAMBDA, memo: Optional[dict] = None
) -> LinearCombination:
    """Product of two valley-free paths (single operator)."""
    for x in (p, q):
        v = first_valley(x)
        if v is not None:
            raise NotInFamily("valley-free", v)
        if not path_omega_singleton(x):
            raise NotInFamily("omega-singleton")
    memo = {} if memo is None else memo
    return _as_lincomb("path", _mul_generic(_PATH_OPS, p, q, lam, one_of(coeff_tag(lam)), memo), lam)


def rb_mul_word(
    u: BracketedWord, v: BracketedWord, lam: Coefficient = LAMBDA, memo: Optional[dict] = None
) -> LinearCombination:
    """Product of two Rota-Baxter words (no adjacent brackets, single operator)."""
    for w in (u, v):
        if not is_rb_word(w):
            raise NotInFamily("rb")
        if not word_omega_singleton(w):
            raise NotInFamily("omega-singleton")
    memo = {} if memo is None else memo
    return _as_lincomb("word", _mul_generic(_WORD_OPS, u, v, lam, one_of(coeff_tag(lam)), memo), lam)


def rb_mul_lforest(
    f: DecoratedForest, g: DecoratedForest, lam: Coefficient = LAMBDA, memo: Optional[dict] = None
) -> LinearCombination:
    """Product of two leaf-spaced leaf-decorated forests (nonunitary family)."""
    for x in (f, g):
        if not x.trees:
            raise UnitInNonunitary()
        if not is_leaf_spaced(x):
            raise NotInFamily("leaf-spaced")
        if not forest_omega_singleton(x):
            raise NotInFamily("omega-singleton")
    memo = {} if memo is None else memo
    return _as_lincomb(
        "vforest", _mul_generic(_LFOREST_OPS, f, g, lam, one_of(coeff_tag(lam)), memo), lam
    )


def rb_mul_aforest(
    a: AngularForest, b: AngularForest, lam: Coefficient = LAMBDA, memo: Optional[dict] = None
) -> LinearCombination:
    """Product of two angularly decorated forests."""
    memo = {} if memo is None else memo
    one = one_of(coeff_tag(lam))
    return _as_lincomb("aforest", _mul_angular(a, b, lam, one, memo), lam)


def _mul_angular(a: AngularForest, b: AngularForest, lam, one, memo) -> dict:
    if a.is_unit():
        return {b: one}
    if b.is_unit():
        return {a: one}
    key = (a, b)
    hit = memo.get(key)
    if hit is not None:
        return hit
    core = _mul_angular_trees(a.blocks[-1], b.blocks[0], lam, one, memo)
    left = _items(a)[:-1]   # ends with the last separator (empty when breadth 1)
    right = _items(b)[1:]   # starts with the first separator
    out: dict = {}
    for tree, c in core.items():
        items = left + [tree] + right
        head = items[0]
        tail = [(items[i], items[i + 1]) for i in range(1, len(items), 2)]
        _acc(out, AngularForest(head, tail), c)
    memo[key] = out
    return out


def _mul_angular_trees(s, t, lam, one, memo) -> dict:
    """Product of two angular trees; the unit leaf is the identity."""
    if isinstance(s, ALeafType):
        return {t: one}
    if isinstance(t, ALeafType):
        return {s: one}
    key = (s, t)
    hit = memo.get(key)
    if hit is not None:
        return hit
    t1 = _mul_angular(s.body, AngularForest(t), lam, one, memo)
    t2 = _mul_angular(AngularForest(s), t.body, lam, one, memo)
    t3 = _mul_angular(s.body, t.body, lam, one, memo)
    out: dict = {}
    for forest, c in t1.items():
        _acc(out, Graft(forest), c)
    for forest, c in t2.items():
        _acc(out, Graft(forest), c)
    for forest, c in t3.items():
        _acc(out, Graft(forest), lam * c)
    memo[key] = out
    return out


def _items(a: AngularForest) -> list:
    items: list = [a.head]
    for x, t in a.tail:
        items.append(x)
        items.append(t)
    return items


_RB_MUL = {
    "path": rb_mul_path,
    "word": rb_mul_word,
    "vforest": rb_mul_lforest,
    "aforest": rb_mul_aforest,
}


def rb_mul(u: LinearCombination, v: LinearCombination, lam: Coefficient = LAMBDA,
           memo: Optional[dict] = None) -> LinearCombination:
    """Bilinear extension of the basis product to linear combinations."""
    if u.family != v.family:
        raise FamilyMismatch(u.family, v.family)
    if u.tag != v.tag or u.tag != coeff_tag(lam):
        raise MixedCoefficientTags()
    memo = {} if memo is None else memo
    mul = _RB_MUL[u.family]
    out = LinearCombination.zero(u.family, u.tag)
    for bu, cu in u.terms.items():
        for bv, cv in v.terms.items():
            out = out + mul(bu, bv, lam, memo).scale(cu * cv)
    return out


def _graft_basis(family: str, basis):
    if family == "path":
        return raised(basis)
    if family == "word":
        return word_bracket(basis)
    if family == "vforest":
        return DecoratedForest((Node(DEFAULT_OMEGA, basis.trees),))
    return AngularForest(Graft(basis))


def rb_operator_p(u: LinearCombination) -> LinearCombination:
    """The distinguished operator: linear extension of raise/bracket/graft."""
    return u.map_basis(
        lambda b: LinearCombination.single(_graft_basis(u.family, b), one_of(u.tag))
    )


# ---------------------------------------------------------------------------
# concrete Rota-Baxter targets


@dataclass(frozen=True)
class RBTarget:
    """A Rota-Baxter algebra to evaluate words into."""

    unit: Callable
    add: Callable
    scale: Callable
    mul: Callable
    P: Callable
    weight: Fraction
    assign: dict


def seq_rb_target(n: int, weight, assignment: dict) -> RBTarget:
    """Length-``n`` rational sequences with pointwise product.

    Weight +1 uses strict partial sums, weight -1 inclusive partial sums; the
    Rota-Baxter identity then holds exactly in every entry.
    """
    if n < 1:
        raise ValueError("sequence length must be positive")
    weight = Fraction(weight)
    if weight == 1:
        def op(a):
            out = []
            acc = Fraction(0)
            for x in a:
                out.append(acc)
                acc += x
            return tuple(out)
    elif weight == -1:
        def op(a):
            out = []
            acc = Fraction(0)
            for x in a:
                acc += x
                out.append(acc)
            return tuple(out)
    else:
        raise ValueError("sequence target supports weights +1 and -1 only")

    def normalize(seq):
        seq = tuple(Fraction(x) for x in seq)
        if len(seq) != n:
            raise ValueError(f"assigned sequences must have length {n}")
        return seq

    return RBTarget(
        unit=lambda: (Fraction(1),) * n,
        add=lambda a, b: tuple(x + y for x, y in zip(a, b)),
        scale=lambda r, a: tuple(Fraction(r) * x for x in a),
        mul=lambda a, b: tuple(x * y for x, y in zip(a, b)),
        P=op,
        weight=weight,
        assign={k: normalize(v) for k, v in assignment.items()},
    )


def _eval_word(w: BracketedWord, target: RBTarget):
    value = None
    for a in w.atoms:
        if isinstance(a, Letter):
            try:
                cur = target.assign[a.name]
            except KeyError:
                raise UnknownSymbol(a.name) from None
        else:
            cur = target.P(_eval_word(a.body, target))
        value = cur if value is None else target.mul(value, cur)
    return target.unit() if value is None else value


def rb_evaluate(u: LinearCombination, target: RBTarget):
    """Evaluate a word combination in a concrete Rota-Baxter algebra.

    Symbolic weights are specialized at the target's declared weight first;
    the result is the linear combination of the folded word values.
    """
    if u.family != "word":
        raise FamilyMismatch("word", u.family)
    u = u.specialize(target.weight)
    acc = target.scale(Fraction(0), target.unit())
    for w, c in u.terms.items():
        acc = target.add(acc, target.scale(c, _eval_word(w, target)))
    return acc
