"""Bijections between the four combinatorial families.

The maps implemented here, all compatible with the products and the
distinguished operators where defined:

  * words <-> paths: symbol-for-symbol coding (opening bracket = up step,
    closing bracket = down step, letter = level step), total in both
    directions;
  * vertex-decorated forests <-> peak-free paths: the vertex biorder word of
    a forest read as a path, inverted by stack parsing;
  * angularly decorated forests <-> valley-free paths (single operator):
    trivial blocks of the standard decomposition map to plain leaves, raised
    blocks to grafted trees, ground level steps to angle decorations.  The
    inverse direction is implemented twice, once by the recursive formula and
    once by the edge-biorder worm walk, so each serves as the other's oracle;
  * leaf-spaced forests <-> ladder-free angular forests (single operator):
    per-vertex rewriting of leaf blocks, equal to the composite through the
    path families.

``universal_extend`` is the single structural fold realizing the freeness of
each family: letters go to assigned generators, concatenation to the target
multiplication and the distinguished operators to the target operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import NotInFamily, NoRoute, UnknownSymbol
from .forests import (
    ALeaf,
    ALeafType,
    AngularForest,
    DecoratedForest,
    Graft,
    Leaf,
    Node,
    angular_edge_word,
    angular_path_tokens,
    forest_omega_singleton,
    vertex_biorder,
)
from .paths import (
    DEFAULT_OMEGA,
    DOWN,
    LEVEL,
    UP,
    MotzkinPath,
    Step,
    TRIVIAL,
    decompose_indecomposable,
    inner,
    is_omega_singleton,
    link,
    raised,
    standard_decomposition_path,
)
from .words import BracketedWord, Bracket, Letter as WordLetter, flat_to_word, word_flatten


# ---------------------------------------------------------------------------
# universal extension


@dataclass(frozen=True)
class OperatedTarget:
    """A monoid (or semigroup, when ``unit`` is None) with extra operators."""

    mul: Callable
    apply: Callable
    assign: dict
    unit: Optional[Callable] = None


def _lookup(assign: dict, name: str):
    try:
        return assign[name]
    except KeyError:
        raise UnknownSymbol(name) from None


def universal_extend(m, target: OperatedTarget):
    """Structural fold of a path, word or forest into an operated target.

    The unit element goes to the target unit, letters to assigned generator
    values, products to ``mul`` (folded left) and each distinguished operator
    application to ``apply``.  This single fold realizes the unique extension
    granted by the freeness of every family.
    """
    if isinstance(m, MotzkinPath):
        return _extend_path(m, target)
    if isinstance(m, BracketedWord):
        return _extend_word(m, target)
    if isinstance(m, DecoratedForest):
        return _extend_forest(m, target)
    raise TypeError(f"cannot extend over {type(m).__name__}")


def _fold(values, target: OperatedTarget):
    values = list(values)
    if not values:
        if target.unit is None:
            raise NotInFamily("nonunitary-target-needs-nonempty-input")
        return target.unit()
    acc = values[0]
    for v in values[1:]:
        acc = target.mul(acc, v)
    return acc


def _extend_path(p: MotzkinPath, target: OperatedTarget):
    def factor_value(f: MotzkinPath):
        s = f.steps
        if len(s) == 1 and s[0].kind == LEVEL:
            return _lookup(target.assign, s[0].name)
        return target.apply(s[0].name, _extend_path(inner(f), target))

    return _fold((factor_value(f) for f in decompose_indecomposable(p)), target)


def _extend_word(w: BracketedWord, target: OperatedTarget):
    def atom_value(a):
        if isinstance(a, WordLetter):
            return _lookup(target.assign, a.name)
        return target.apply(a.omega, _extend_word(a.body, target))

    return _fold((atom_value(a) for a in w.atoms), target)


def _extend_forest(f: DecoratedForest, target: OperatedTarget):
    def tree_value(t):
        if isinstance(t, Leaf):
            return _lookup(target.assign, t.name)
        return target.apply(t.omega, _fold((tree_value(c) for c in t.children), target))

    return _fold((tree_value(t) for t in f.trees), target)


def path_target(x_names) -> OperatedTarget:
    """The path family as a target of itself (used for uniqueness checks)."""
    return OperatedTarget(
        mul=link,
        apply=lambda w, p: raised(p, w),
        assign={x: MotzkinPath((Step(LEVEL, x),)) for x in x_names},
        unit=lambda: TRIVIAL,
    )


def word_target(x_names) -> OperatedTarget:
    from .words import letter_word, word_bracket, word_concat

    return OperatedTarget(
        mul=word_concat,
        apply=lambda w, u: word_bracket(u, w),
        assign={x: letter_word(x) for x in x_names},
        unit=lambda: BracketedWord(),
    )


def forest_target(x_names) -> OperatedTarget:
    from .forests import forest_concat, forest_graft

    return OperatedTarget(
        mul=forest_concat,
        apply=lambda w, f: DecoratedForest((forest_graft(f, w),)),
        assign={x: DecoratedForest((Leaf(x),)) for x in x_names},
        unit=None,
    )


# ---------------------------------------------------------------------------
# words <-> paths (total, any alphabets)


def word_to_path(w: BracketedWord) -> MotzkinPath:
    """Read the flat form of a word as a step sequence."""
    return MotzkinPath._unsafe(word_flatten(w))


def path_to_word(p: MotzkinPath) -> BracketedWord:
    """Stack-parse the steps of a path into bracketed atoms."""
    return flat_to_word(p.steps)


# ---------------------------------------------------------------------------
# vertex-decorated forests <-> peak-free paths (any alphabets)


def forest_to_path(f: DecoratedForest) -> MotzkinPath:
    """Vertex biorder word of the forest, read as a path.

    Lands in the peak-free family; single trees land in the indecomposable
    peak-free paths.
    """
    return MotzkinPath._unsafe(vertex_biorder(f))


def path_to_forest(p: MotzkinPath) -> DecoratedForest:
    """Inverse of :func:`forest_to_path`; requires a peak-free path."""
    if not p.steps:
        raise NotInFamily("peak-free", None)
    stack: list[list] = [[]]
    openers: list[tuple[str, int]] = []
    for i, s in enumerate(p.steps):
        if s.kind == LEVEL:
            stack[-1].append(Leaf(s.name))
        elif s.kind == UP:
            stack.append([])
            openers.append((s.name, i))
        else:
            children = stack.pop()
            omega, j = openers.pop()
            if not children:
                raise NotInFamily("peak-free", j)
            stack[-1].append(Node(omega, children))
    return DecoratedForest(stack[0])


# ---------------------------------------------------------------------------
# valley-free paths <-> angularly decorated forests (single operator)


def _require_omega_singleton(p: MotzkinPath):
    if not is_omega_singleton(p):
        bad = next(
            i for i, s in enumerate(p.steps) if s.kind != LEVEL and s.name != DEFAULT_OMEGA
        )
        raise NotInFamily("omega-singleton", bad)


def valleypath_to_aforest(p: MotzkinPath) -> AngularForest:
    """Standard decomposition of a valley-free path, block by block."""
    _require_omega_singleton(p)
    items = standard_decomposition_path(p)

    def block(v: MotzkinPath):
        if not v.steps:
            return ALeaf
        return Graft(valleypath_to_aforest(inner(v)))

    head = block(items[0])
    tail = [(items[i], block(items[i + 1])) for i in range(1, len(items), 2)]
    return AngularForest(head, tail)


def aforest_to_valleypath(a: AngularForest) -> MotzkinPath:
    """Recursive formula on the standard decomposition."""
    return MotzkinPath._unsafe(angular_path_tokens(a))


def aforest_to_valleypath_via_edges(a: AngularForest) -> MotzkinPath:
    """Independent route: worm walk over edges, then angle substitution."""
    return MotzkinPath._unsafe(angular_edge_word(a))


# ---------------------------------------------------------------------------
# leaf-spaced forests <-> ladder-free angular forests (single operator)


def lforest_to_aforest(f: DecoratedForest) -> AngularForest:
    """Rewrite each block of leaf siblings into a block of angles.

    A run of leaves between non-leaf branches keeps its letters as angle
    decorations; a run not bounded by a non-leaf branch gains a plain leaf at
    the open end, and a run bounded on both sides loses one sibling.
    """
    if not forest_omega_singleton(f):
        raise NotInFamily("omega-singleton")

    def convert(siblings) -> AngularForest:
        items: list = []  # alternating tree, letter, ..., tree
        for s in siblings:
            if isinstance(s, Leaf):
                if not items or isinstance(items[-1], str):
                    items.append(ALeaf)
                items.append(s.name)
            else:
                if items and not isinstance(items[-1], str):
                    raise NotInFamily("leaf-spaced", s)
                items.append(Graft(convert(s.children)))
        if not items or isinstance(items[-1], str):
            items.append(ALeaf)
        head = items[0]
        tail = [(items[i], items[i + 1]) for i in range(1, len(items), 2)]
        return AngularForest(head, tail)

    return convert(f.trees)


def aforest_to_lforest(a: AngularForest) -> DecoratedForest:
    """Inverse rewriting; requires a ladder-free angular forest."""
    if a.is_unit():
        raise NotInFamily("ladder-free", a)

    def convert(forest: AngularForest) -> list:
        siblings: list = []
        for item in _alternation(forest):
            if isinstance(item, str):
                siblings.append(Leaf(item))
            elif isinstance(item, Graft):
                if item.leaf_count < 2:
                    raise NotInFamily("ladder-free", item)
                siblings.append(Node(DEFAULT_OMEGA, convert(item.body)))
        return siblings

    return DecoratedForest(convert(a))


def _alternation(a: AngularForest):
    yield a.head
    for x, t in a.tail:
        yield x
        yield t


# ---------------------------------------------------------------------------
# the conversion hub


def family_convert(element, target_family: str):
    """Route an element along the bijection diagram to another family.

    Single-arrow routes are used where the diagram has one; everything else
    composes through the path family.  Any two routes between the same
    endpoints agree (tested exhaustively at small sizes).
    """
    from .lincomb import FAMILIES, family_of

    source = family_of(element)
    if target_family not in FAMILIES:
        raise NoRoute(source, target_family)
    if source == target_family:
        return element
    direct = {
        ("vforest", "aforest"): lforest_to_aforest,
        ("aforest", "vforest"): aforest_to_lforest,
    }
    if (source, target_family) in direct:
        return direct[(source, target_family)](element)
    to_path = {
        "word": word_to_path,
        "vforest": forest_to_path,
        "aforest": aforest_to_valleypath,
        "path": lambda p: p,
    }
    from_path = {
        "word": path_to_word,
        "vforest": path_to_forest,
        "aforest": valleypath_to_aforest,
        "path": lambda p: p,
    }
    return from_path[target_family](to_path[source](element))
