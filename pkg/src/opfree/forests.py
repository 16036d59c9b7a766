"""Planar rooted forests with two decoration disciplines.

Vertex-decorated forests put a letter from X on every leaf and an operator
name from Ω on every internal vertex (a childless vertex is a leaf by
definition, so internal vertices always have children).  Grafting adds a new
decorated root above a forest; concatenation places forests side by side.

Angularly decorated forests instead put one X letter in every angle: the gap
between adjacent sibling subtrees, including the gaps between the trees of
the forest itself.  They are stored structurally as the alternation

    tree, letter, tree, letter, ..., tree

(the standard decomposition), which makes a malformed decoration count
unrepresentable and the decomposition itself free.  The single plain leaf
with no angles is the unit element.

Sizes are chosen so that every bijective image has the same size: a
vertex-decorated forest counts leaves + 2 * internal vertices, an angularly
decorated forest counts angles + 2 * grafted (internal) vertices; both equal
the number of steps of the corresponding Motzkin path.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError, UnbalancedBrackets
from .paths import DEFAULT_OMEGA, DOWN, IDENT_RE, LEVEL, UP, Step

# ---------------------------------------------------------------------------
# vertex-decorated trees and forests


class Leaf:
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_hash", hash(("leaf", name)))

    def __setattr__(self, *a):
        raise AttributeError("Leaf is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Leaf) and self.name == other.name

    def __repr__(self):
        return f"Leaf({self.name!r})"

    leaf_count = 1
    internal_count = 0
    depth = 0


class Node:
    __slots__ = ("omega", "children", "_hash", "leaf_count", "internal_count", "depth")

    def __init__(self, omega: str, children: Iterable):
        children = tuple(children)
        if not children:
            raise ValueError("an internal vertex needs at least one child")
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "_hash", hash(("node", omega, children)))
        object.__setattr__(self, "leaf_count", sum(c.leaf_count for c in children))
        object.__setattr__(
            self, "internal_count", 1 + sum(c.internal_count for c in children)
        )
        object.__setattr__(self, "depth", 1 + max(c.depth for c in children))

    def __setattr__(self, *a):
        raise AttributeError("Node is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, Node)
            and self.omega == other.omega
            and self.children == other.children
        )

    def __repr__(self):
        return f"Node({self.omega!r}, {self.children!r})"


DecoratedTree = (Leaf, Node)


class DecoratedForest:
    """Non-empty sequence of decorated trees (the family is a semigroup)."""

    __slots__ = ("trees", "_hash")

    def __init__(self, trees: Iterable):
        trees = tuple(trees)
        if not trees:
            raise ValueError("a forest has at least one tree")
        object.__setattr__(self, "trees", trees)
        object.__setattr__(self, "_hash", hash(("forest", trees)))

    def __setattr__(self, *a):
        raise AttributeError("DecoratedForest is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, DecoratedForest) and self.trees == other.trees

    @property
    def size(self) -> int:
        return sum(t.leaf_count + 2 * t.internal_count for t in self.trees)

    def sort_key(self):
        bi = vertex_biorder(self)
        return (len(bi), bi)

    def __repr__(self):
        return f"DecoratedForest({serialize_forest(self)!r})"

    def __str__(self):
        return serialize_forest(self)


def forest_concat(f: DecoratedForest, g: DecoratedForest) -> DecoratedForest:
    return DecoratedForest(f.trees + g.trees)


def forest_graft(f: DecoratedForest, omega: str = DEFAULT_OMEGA) -> Node:
    """Add a new root decorated by ``omega`` above all trees of ``f``."""
    return Node(omega, f.trees)


def vertex_biorder(obj) -> tuple[Step, ...]:
    """Flat word of a tree/forest: leaves once, internal vertices twice.

    A leaf emits its letter; an internal vertex emits an opening symbol on
    first visit and the matching closing symbol after its children.
    """
    out: list[Step] = []

    def emit(t):
        if isinstance(t, Leaf):
            out.append(Step(LEVEL, t.name))
        else:
            out.append(Step(UP, t.omega))
            for c in t.children:
                emit(c)
            out.append(Step(DOWN, t.omega))

    trees = obj.trees if isinstance(obj, DecoratedForest) else (obj,)
    for t in trees:
        emit(t)
    return tuple(out)


def is_leaf_spaced(obj) -> bool:
    """No two adjacent non-leaf siblings, at any vertex or at the top level."""
    if isinstance(obj, (AngularForest, ALeafType, Graft)):
        return _angular_leaf_spaced(obj)

    def row_ok(siblings):
        for a, b in zip(siblings, siblings[1:]):
            if isinstance(a, Node) and isinstance(b, Node):
                return False
        return all(row_ok(s.children) for s in siblings if isinstance(s, Node))

    trees = obj.trees if isinstance(obj, DecoratedForest) else (obj,)
    return row_ok(trees)


def is_ladder_free(obj) -> bool:
    """Not the bare one-leaf forest, and no full subtree with exactly one leaf."""
    if isinstance(obj, (AngularForest, ALeafType, Graft)):
        return _angular_ladder_free(obj)
    trees = obj.trees if isinstance(obj, DecoratedForest) else (obj,)
    if len(trees) == 1 and isinstance(trees[0], Leaf):
        return False

    def ok(t):
        if isinstance(t, Leaf):
            return True
        return t.leaf_count >= 2 and all(ok(c) for c in t.children)

    return all(ok(t) for t in trees)


def forest_omega_singleton(obj) -> bool:
    trees = obj.trees if isinstance(obj, DecoratedForest) else (obj,)

    def ok(t):
        if isinstance(t, Leaf):
            return True
        return t.omega == DEFAULT_OMEGA and all(ok(c) for c in t.children)

    return all(ok(t) for t in trees)


@dataclass(frozen=True)
class ForestMeasures:
    depth: int
    breadth: int
    leaf_count: int
    size: int


def forest_measures(obj) -> ForestMeasures:
    if isinstance(obj, (AngularForest, ALeafType, Graft)):
        f = obj if isinstance(obj, AngularForest) else AngularForest(obj)
        return ForestMeasures(
            depth=f.depth,
            breadth=len(f.blocks),
            leaf_count=f.leaf_count,
            size=f.size,
        )
    trees = obj.trees if isinstance(obj, DecoratedForest) else (obj,)
    return ForestMeasures(
        depth=max(t.depth for t in trees),
        breadth=len(trees),
        leaf_count=sum(t.leaf_count for t in trees),
        size=sum(t.leaf_count + 2 * t.internal_count for t in trees),
    )


# ---------------------------------------------------------------------------
# angularly decorated forests


class ALeafType:
    """The plain one-vertex tree (no edges, no angles); a singleton."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __hash__(self):
        return hash("aleaf")

    def __eq__(self, other):
        return isinstance(other, ALeafType)

    def __repr__(self):
        return "ALeaf"

    leaf_count = 1
    graft_count = 0
    angle_count = 0
    depth = 0


ALeaf = ALeafType()


class Graft:
    """A tree obtained by grafting: a new root above an angular forest."""

    __slots__ = ("body", "_hash", "leaf_count", "graft_count", "angle_count", "depth")

    def __init__(self, body: "AngularForest"):
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "_hash", hash(("graft", body)))
        object.__setattr__(self, "leaf_count", body.leaf_count)
        object.__setattr__(self, "graft_count", 1 + body.graft_count)
        object.__setattr__(self, "angle_count", body.angle_count)
        object.__setattr__(self, "depth", 1 + body.depth)

    def __setattr__(self, *a):
        raise AttributeError("Graft is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Graft) and self.body == other.body

    def __repr__(self):
        return f"Graft({self.body!r})"


AngularTree = (ALeafType, Graft)


class AngularForest:
    """Alternation head-tree, (letter, tree), ...: the standard decomposition."""

    __slots__ = (
        "head",
        "tail",
        "_hash",
        "leaf_count",
        "graft_count",
        "angle_count",
        "depth",
    )

    def __init__(self, head, tail: Iterable = ()):
        tail = tuple(tail)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", tail)
        object.__setattr__(self, "_hash", hash(("aforest", head, tail)))
        blocks = (head,) + tuple(t for _, t in tail)
        object.__setattr__(self, "leaf_count", sum(b.leaf_count for b in blocks))
        object.__setattr__(self, "graft_count", sum(b.graft_count for b in blocks))
        object.__setattr__(
            self, "angle_count", len(tail) + sum(b.angle_count for b in blocks)
        )
        object.__setattr__(self, "depth", max(b.depth for b in blocks))

    def __setattr__(self, *a):
        raise AttributeError("AngularForest is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, AngularForest)
            and self.head == other.head
            and self.tail == other.tail
        )

    @property
    def blocks(self) -> tuple:
        return (self.head,) + tuple(t for _, t in self.tail)

    @property
    def separators(self) -> tuple[str, ...]:
        return tuple(x for x, _ in self.tail)

    @property
    def size(self) -> int:
        return self.angle_count + 2 * self.graft_count

    def is_unit(self) -> bool:
        return isinstance(self.head, ALeafType) and not self.tail

    def sort_key(self):
        toks = angular_path_tokens(self)
        return (len(toks), toks)

    def __repr__(self):
        return f"AngularForest({serialize_angular(self)!r})"

    def __str__(self):
        return serialize_angular(self)


ANGULAR_UNIT = AngularForest(ALeaf)


def angular_graft(a: AngularForest) -> Graft:
    """Graft an angular forest under a new root; decorations ride along."""
    return Graft(a)


def angular_standard_decomposition(a: AngularForest) -> list:
    """The alternation [D1, x1, D2, ..., x_{b-1}, Db] as a flat list."""
    items: list = [a.head]
    for x, t in a.tail:
        items.append(x)
        items.append(t)
    return items


def angular_from_alternation(items: Sequence) -> AngularForest:
    """Rebuild a forest from a [tree, letter, tree, ...] alternation."""
    head = items[0]
    tail = []
    for i in range(1, len(items), 2):
        tail.append((items[i], items[i + 1]))
    return AngularForest(head, tail)


def angular_path_tokens(a: AngularForest) -> tuple[Step, ...]:
    """Step sequence of the path image, by the standard-decomposition rule."""
    out: list[Step] = []

    def emit_tree(t):
        if isinstance(t, Graft):
            out.append(Step(UP, DEFAULT_OMEGA))
            emit_forest(t.body)
            out.append(Step(DOWN, DEFAULT_OMEGA))

    def emit_forest(f):
        emit_tree(f.head)
        for x, t in f.tail:
            out.append(Step(LEVEL, x))
            emit_tree(t)

    emit_forest(a)
    return tuple(out)


def _angular_leaf_spaced(obj) -> bool:
    f = obj if isinstance(obj, AngularForest) else AngularForest(obj)

    def ok(forest):
        blocks = forest.blocks
        for a, b in zip(blocks, blocks[1:]):
            if isinstance(a, Graft) and isinstance(b, Graft):
                return False
        return all(ok(b.body) for b in blocks if isinstance(b, Graft))

    return ok(f)


def _angular_ladder_free(obj) -> bool:
    f = obj if isinstance(obj, AngularForest) else AngularForest(obj)
    if f.is_unit():
        return False

    def ok(t):
        if isinstance(t, ALeafType):
            return True
        return t.leaf_count >= 2 and all(ok(b) for b in t.body.blocks)

    return all(ok(b) for b in f.blocks)


def angle_letters(obj) -> list[str]:
    """All angle decorations in left-to-right planar order."""
    out: list[str] = []

    def walk_tree(t):
        if isinstance(t, Graft):
            walk_forest(t.body)

    def walk_forest(f):
        walk_tree(f.head)
        for x, t in f.tail:
            out.append(x)
            walk_tree(t)

    if isinstance(obj, AngularForest):
        walk_forest(obj)
    else:
        walk_tree(obj)
    return out


_GAP = -1


def _edge_dyck(t) -> list[int]:
    """Undecorated worm walk of a tree: one open/close per edge."""
    out: list[int] = []

    def walk(tree):
        if isinstance(tree, ALeafType):
            return
        for child in tree.body.blocks:
            out.append(UP)
            walk(child)
            out.append(DOWN)

    walk(t)
    return out


def _substitute_angles(raw: list[int], decorations: Sequence[str]) -> tuple[Step, ...]:
    """Replace every close-open adjacency (and explicit gap) by a level step."""
    out: list[Step] = []
    di = 0
    i = 0
    n = len(raw)
    while i < n:
        c = raw[i]
        if c == _GAP:
            out.append(Step(LEVEL, decorations[di]))
            di += 1
            i += 1
        elif c == DOWN and i + 1 < n and raw[i + 1] == UP:
            out.append(Step(LEVEL, decorations[di]))
            di += 1
            i += 2
        elif c == DOWN:
            out.append(Step(DOWN, DEFAULT_OMEGA))
            i += 1
        else:
            out.append(Step(UP, DEFAULT_OMEGA))
            i += 1
    if di != len(decorations):
        raise ValueError("angle decorations not fully consumed")
    return tuple(out)


def edge_biorder(t) -> tuple[Step, ...]:
    """Flat word of an angular tree via the worm walk over its edges.

    Every edge is recorded twice, opening on the way out and closing on the
    way back; each close-open adjacency is an angle and gets replaced by a
    level step carrying the next decoration in planar order.
    """
    return _substitute_angles(_edge_dyck(t), angle_letters(t))


def angular_edge_word(f: AngularForest) -> tuple[Step, ...]:
    """Forest version of :func:`edge_biorder` with gaps between the trees."""
    raw: list[int] = []
    for i, b in enumerate(f.blocks):
        if i:
            raw.append(_GAP)
        raw.extend(_edge_dyck(b))
    return _substitute_angles(raw, angle_letters(f))


# ---------------------------------------------------------------------------
# text grammars
#   forest := tree+ ;  tree := IDENT | "(" (IDENT ":")? tree+ ")"
#   aforest := atree (IDENT atree)* ;  atree := "*" | "<" aforest ">"

_FOREST_TOKEN_RE = re.compile(r"\s*(\(|\)|:|[A-Za-z_][A-Za-z0-9_]*|\S)")
_ANGULAR_TOKEN_RE = re.compile(r"\s*(<|>|\*|[A-Za-z_][A-Za-z0-9_]*|\S)")


def _tokens(text: str, pattern, allowed: tuple[str, ...]):
    toks = []
    pos = 0
    while pos < len(text):
        m = pattern.match(text, pos)
        if not m:
            break
        tok = m.group(1)
        if tok not in allowed and not IDENT_RE.match(tok):
            raise ParseError(m.start(1), "letter or " + "/".join(allowed))
        toks.append((tok, m.start(1)))
        pos = m.end()
    return toks


def parse_forest(text: str) -> DecoratedForest:
    toks = _tokens(text, _FOREST_TOKEN_RE, ("(", ")", ":"))
    idx = 0

    def peek(k=0):
        return toks[idx + k] if idx + k < len(toks) else (None, len(text))

    def parse_trees(stop_at_close: bool):
        nonlocal idx
        trees = []
        while idx < len(toks):
            tok, pos = toks[idx]
            if tok == ")":
                if stop_at_close:
                    return trees
                raise ParseError(pos, "letter or '('")
            if tok == "(":
                open_pos = pos
                idx += 1
                omega = DEFAULT_OMEGA
                if peek()[0] not in (None, "(", ")", ":") and peek(1)[0] == ":":
                    omega = peek()[0]
                    idx += 2
                children = parse_trees(stop_at_close=True)
                if not children:
                    raise ParseError(peek()[1], "child tree")
                if peek()[0] != ")":
                    raise UnbalancedBrackets(open_pos)
                idx += 1
                trees.append(Node(omega, children))
            elif tok == ":":
                raise ParseError(pos, "letter or '('")
            else:
                idx += 1
                trees.append(Leaf(tok))
        return trees

    trees = parse_trees(stop_at_close=False)
    if not trees:
        raise ParseError(0, "forest")
    return DecoratedForest(trees)


def serialize_tree(t) -> str:
    if isinstance(t, Leaf):
        return t.name
    head = "(" if t.omega == DEFAULT_OMEGA else f"({t.omega}: "
    return head + " ".join(serialize_tree(c) for c in t.children) + ")"


def serialize_forest(f: DecoratedForest) -> str:
    return " ".join(serialize_tree(t) for t in f.trees)


def parse_angular(text: str) -> AngularForest:
    toks = _tokens(text, _ANGULAR_TOKEN_RE, ("<", ">", "*"))
    idx = 0

    def peek():
        return toks[idx] if idx < len(toks) else (None, len(text))

    def parse_atree():
        nonlocal idx
        tok, pos = peek()
        if tok == "*":
            idx += 1
            return ALeaf
        if tok == "<":
            open_pos = pos
            idx += 1
            body = parse_aforest()
            if peek()[0] != ">":
                raise UnbalancedBrackets(open_pos)
            idx += 1
            return Graft(body)
        raise ParseError(pos, "'*' or '<'")

    def parse_aforest():
        nonlocal idx
        head = parse_atree()
        tail = []
        while True:
            tok, pos = peek()
            if tok is None or tok == ">":
                return AngularForest(head, tail)
            if tok in ("*", "<"):
                raise ParseError(pos, "angle letter between trees")
            idx += 1
            tail.append((tok, parse_atree()))

    forest = parse_aforest()
    if idx != len(toks):
        raise ParseError(toks[idx][1], "end of input")
    return forest


def serialize_atree(t) -> str:
    if isinstance(t, ALeafType):
        return "*"
    return "<" + serialize_angular(t.body) + ">"


def serialize_angular(f: AngularForest) -> str:
    parts = [serialize_atree(f.head)]
    for x, t in f.tail:
        parts.append(x)
        parts.append(serialize_atree(t))
    return " ".join(parts)


def render_forest(f: DecoratedForest) -> str:
    """One vertex per line, indented by depth, decorations in parentheses."""
    lines = []

    def emit(t, indent):
        if isinstance(t, Leaf):
            lines.append(" " * indent + t.name)
        else:
            lines.append(" " * indent + f"({t.omega})")
            for c in t.children:
                emit(c, indent + 2)

    for t in f.trees:
        emit(t, 0)
    return "\n".join(lines)


def render_angular(f: AngularForest) -> str:
    """Blocks one per line (leaves ``*``, grafts ``<>``), angles interleaved."""
    lines = []

    def emit_tree(t, indent):
        if isinstance(t, ALeafType):
            lines.append(" " * indent + "*")
        else:
            lines.append(" " * indent + "<>")
            emit_forest(t.body, indent + 2)

    def emit_forest(forest, indent):
        emit_tree(forest.head, indent)
        for x, t in forest.tail:
            lines.append(" " * indent + x)
            emit_tree(t, indent)

    emit_forest(f, 0)
    return "\n".join(lines)
