"""Decorated Motzkin paths.

A Motzkin path is a lattice path in the upper half plane from (0,0) to (n,0)
built from up steps, down steps and level steps.  Level steps carry a letter
from the alphabet X; each matched up/down pair carries one operator name from
Ω (stored on both steps and checked by stack pairing).  The empty path is the
trivial path, written ``•``.

The link product concatenates paths end to end; the raising operator wraps a
path in a fresh matched pair.  Together these make the set of paths an
operated monoid, and the submonoid structure of the peak-free / valley-free /
Dyck subfamilies is what the rest of the library is built on.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import (
    DecorationMismatch,
    NegativePrefix,
    NotInFamily,
    ParseError,
    Unbalanced,
)

UP, DOWN, LEVEL = 0, 1, 2  # ranks double as the canonical token order U < D < L

DEFAULT_OMEGA = "_"

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def check_ident(name: str) -> str:
    if not IDENT_RE.match(name):
        raise ValueError(f"not a valid letter token: {name!r}")
    return name


class Step(NamedTuple):
    kind: int  # UP / DOWN / LEVEL
    name: str  # decoration: Ω letter for UP/DOWN, X letter for LEVEL


def up(omega: str = DEFAULT_OMEGA) -> Step:
    return Step(UP, omega)


def down(omega: str = DEFAULT_OMEGA) -> Step:
    return Step(DOWN, omega)


def level(x: str) -> Step:
    return Step(LEVEL, x)


def scan_steps(steps: Sequence[Step]):
    """Stack-pair the steps; returns (pairs, max_height) or raises.

    Checks the three path invariants: no prefix dips below the axis, the walk
    returns to the axis, and every matched pair carries one decoration.
    """
    stack = []
    pairs = []
    h = 0
    maxh = 0
    for i, s in enumerate(steps):
        if s.kind == UP:
            stack.append(i)
            h += 1
            maxh = max(maxh, h)
        elif s.kind == DOWN:
            if not stack:
                raise NegativePrefix(i)
            j = stack.pop()
            if steps[j].name != s.name:
                raise DecorationMismatch(j, i)
            pairs.append((j, i))
            h -= 1
    if stack:
        raise Unbalanced(len(stack))
    pairs.sort()
    return pairs, maxh


class MotzkinPath:
    """Immutable validated step sequence.  Hashable; size = number of steps."""

    __slots__ = ("steps", "_hash", "_factors")

    def __init__(self, steps: Iterable[Step] = ()):
        steps = tuple(steps)
        scan_steps(steps)
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "_hash", hash(("path", steps)))
        object.__setattr__(self, "_factors", None)

    @classmethod
    def _unsafe(cls, steps: tuple) -> "MotzkinPath":
        """Wrap steps already known to satisfy the invariants."""
        p = object.__new__(cls)
        object.__setattr__(p, "steps", steps)
        object.__setattr__(p, "_hash", hash(("path", steps)))
        object.__setattr__(p, "_factors", None)
        return p

    def __setattr__(self, *a):
        raise AttributeError("MotzkinPath is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, MotzkinPath) and self.steps == other.steps

    def __len__(self):
        return len(self.steps)

    def __bool__(self):
        return bool(self.steps)

    @property
    def size(self) -> int:
        return len(self.steps)

    def sort_key(self):
        return (len(self.steps), self.steps)

    def __repr__(self):
        return f"MotzkinPath({serialize(self)!r})"

    def __str__(self):
        return serialize(self)


TRIVIAL = MotzkinPath()


def path_validate(steps: Sequence[Step]) -> MotzkinPath:
    """Validate a raw step sequence into a path (raises on violation)."""
    return MotzkinPath(steps)


def link(*paths: MotzkinPath) -> MotzkinPath:
    """Link product: join paths end to end.  Associative, unit ``•``."""
    if len(paths) == 1:
        return paths[0]
    out = []
    for p in paths:
        out.extend(p.steps)
    return MotzkinPath._unsafe(tuple(out))


def raised(p: MotzkinPath, omega: str = DEFAULT_OMEGA) -> MotzkinPath:
    """Raise a path by wrapping it in a matched pair decorated by ``omega``."""
    return MotzkinPath._unsafe((Step(UP, omega),) + p.steps + (Step(DOWN, omega),))


def inner(p: MotzkinPath) -> MotzkinPath:
    """Strip the outer matched pair of an indecomposable non-level path."""
    s = p.steps
    if not s or s[0].kind != UP or s[-1].kind != DOWN:
        raise ValueError("path is not a raised pair")
    return MotzkinPath._unsafe(s[1:-1])


def matching_pairs(p: MotzkinPath) -> list[tuple[int, int]]:
    """All (up_index, down_index) matched pairs, sorted by up index."""
    pairs, _ = scan_steps(p.steps)
    return pairs


def height(p: MotzkinPath) -> int:
    _, maxh = scan_steps(p.steps)
    return maxh


@dataclass(frozen=True)
class PathClass:
    is_peak_free: bool
    is_valley_free: bool
    is_dyck: bool
    is_indecomposable: bool
    height: int


def is_peak_free(p: MotzkinPath) -> bool:
    s = p.steps
    if not s:
        return False
    return not any(a.kind == UP and b.kind == DOWN for a, b in zip(s, s[1:]))


def is_valley_free(p: MotzkinPath) -> bool:
    s = p.steps
    return not any(a.kind == DOWN and b.kind == UP for a, b in zip(s, s[1:]))


def is_dyck(p: MotzkinPath) -> bool:
    return all(s.kind != LEVEL for s in p.steps)


def is_indecomposable(p: MotzkinPath) -> bool:
    s = p.steps
    if not s:
        return False
    h = 0
    for step in s[:-1]:  # interior vertices are those after steps 0..n-2
        h += 1 if step.kind == UP else -1 if step.kind == DOWN else 0
        if h == 0:
            return False
    return True


def path_measures(p: MotzkinPath) -> PathClass:
    return PathClass(
        is_peak_free=is_peak_free(p),
        is_valley_free=is_valley_free(p),
        is_dyck=is_dyck(p),
        is_indecomposable=is_indecomposable(p),
        height=height(p),
    )


def decompose_indecomposable(p: MotzkinPath) -> tuple[MotzkinPath, ...]:
    """Unique factorization of a path into indecomposable paths.

    Splits at every return to the axis; the empty tuple iff ``p`` is trivial.
    """
    if p._factors is not None:
        return p._factors
    out = []
    h = 0
    start = 0
    for i, s in enumerate(p.steps):
        h += 1 if s.kind == UP else -1 if s.kind == DOWN else 0
        if h == 0:
            out.append(MotzkinPath._unsafe(p.steps[start : i + 1]))
            start = i + 1
    factors = tuple(out)
    object.__setattr__(p, "_factors", factors)
    return factors


def first_valley(p: MotzkinPath) -> Optional[int]:
    for i in range(len(p.steps) - 1):
        if p.steps[i].kind == DOWN and p.steps[i + 1].kind == UP:
            return i
    return None


def standard_decomposition_path(p: MotzkinPath) -> list:
    """Rewrite a valley-free path as blocks alternating with ground letters.

    Returns ``[V1, x1, V2, ..., x_{b-1}, Vb]`` where each ``V`` is the trivial
    path or an indecomposable valley-free path of height >= 1, and each ``x``
    is the X letter of a ground-level level step.  Re-linking the blocks with
    ``L:x`` separators reproduces ``p``.
    """
    v = first_valley(p)
    if v is not None:
        raise NotInFamily("valley-free", v)
    items: list = []
    for f in decompose_indecomposable(p):
        if len(f) == 1 and f.steps[0].kind == LEVEL:
            if not items or isinstance(items[-1], str):
                items.append(TRIVIAL)
            items.append(f.steps[0].name)
        else:
            # two height>=1 blocks cannot be adjacent in a valley-free path
            items.append(f)
    if not items or isinstance(items[-1], str):
        items.append(TRIVIAL)
    return items


def reassemble_standard(items: Sequence) -> MotzkinPath:
    """Inverse of :func:`standard_decomposition_path`."""
    parts = []
    for it in items:
        if isinstance(it, str):
            parts.append(MotzkinPath._unsafe((Step(LEVEL, it),)))
        else:
            parts.append(it)
    return link(*parts)


def omega_names(p: MotzkinPath) -> set[str]:
    return {s.name for s in p.steps if s.kind != LEVEL}


def is_omega_singleton(p: MotzkinPath) -> bool:
    """True when every up/down step carries the reserved default decoration."""
    return all(s.name == DEFAULT_OMEGA for s in p.steps if s.kind != LEVEL)


# ---------------------------------------------------------------------------
# text format: whitespace-separated "U[:w]", "D[:w]", "L:x"; "•" or "" = trivial


def parse(text: str) -> MotzkinPath:
    stripped = text.strip()
    if stripped in ("", "•"):
        return TRIVIAL
    steps = []
    for m in re.finditer(r"\S+", text):
        tok, pos = m.group(), m.start()
        if tok == "•":
            raise ParseError(pos, "step token (• stands alone)")
        head, colon, name = tok.partition(":")
        if head in ("U", "D"):
            omega = name if colon else DEFAULT_OMEGA
            if not IDENT_RE.match(omega):
                raise ParseError(pos, "decoration identifier")
            steps.append(Step(UP if head == "U" else DOWN, omega))
        elif head == "L":
            if not colon or not IDENT_RE.match(name):
                raise ParseError(pos, "L:<letter>")
            steps.append(Step(LEVEL, name))
        else:
            raise ParseError(pos, "one of U, D, L:<letter>")
    return MotzkinPath(steps)


def serialize(p: MotzkinPath) -> str:
    if not p.steps:
        return "•"
    toks = []
    for s in p.steps:
        if s.kind == LEVEL:
            toks.append(f"L:{s.name}")
        else:
            head = "U" if s.kind == UP else "D"
            toks.append(head if s.name == DEFAULT_OMEGA else f"{head}:{s.name}")
    return " ".join(toks)


def render(p: MotzkinPath) -> str:
    """ASCII picture: one row per height level, then a decoration row.

    Up steps draw ``/``, down steps ``\\``, level steps ``_``; each step owns
    one column, widened when its decoration label needs the room.  Default Ω
    decorations are not labelled.
    """
    if not p.steps:
        return "•"
    labels = []
    for s in p.steps:
        if s.kind == LEVEL:
            labels.append(s.name)
        else:
            labels.append("" if s.name == DEFAULT_OMEGA else s.name)
    widths = [max(1, len(lab)) for lab in labels]
    maxh = height(p)
    rows_payload = {}
    h = 0
    placements = []  # (row, col, glyph-maker)
    for i, s in enumerate(p.steps):
        if s.kind == UP:
            placements.append((h + 1, i, "/"))
            h += 1
        elif s.kind == DOWN:
            placements.append((h, i, "\\"))
            h -= 1
        else:
            placements.append((h, i, "_"))
    min_row = min(r for r, _, _ in placements)
    lines = []
    for row in range(maxh, min_row - 1, -1):
        cells = []
        for i, w in enumerate(widths):
            glyph = ""
            for r, c, g in placements:
                if r == row and c == i:
                    glyph = g
            if glyph == "/":
                cells.append("/" + " " * (w - 1))
            elif glyph == "\\":
                cells.append(" " * (w - 1) + "\\")
            elif glyph == "_":
                cells.append("_" * w)
            else:
                cells.append(" " * w)
        lines.append("".join(cells).rstrip())
    if any(labels):
        lines.append("".join(lab.ljust(w) for lab, w in zip(labels, widths)).rstrip())
    return "\n".join(lines)
