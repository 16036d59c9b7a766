"""Bracketed words and their flat Motzkin-word form.

A bracketed word is a sequence of atoms, each either a letter from X or a
decorated bracket enclosing another bracketed word; the empty sequence is the
unit word ``1``.  Concatenation and the bracketing operators make these the
recursive counterpart of decorated Motzkin paths.

The flat form spells a word symbol by symbol: a bracket becomes an opening
symbol, its body, and a closing symbol.  Flat symbols reuse the step encoding
of :mod:`opfree.paths` (Open=UP, Close=DOWN, Letter=LEVEL), which is exactly
the path coding, so a flat word validates with the same stack scan.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import NotAnOpen, ParseError, UnbalancedBrackets
from .paths import DEFAULT_OMEGA, DOWN, IDENT_RE, LEVEL, UP, Step, scan_steps


class Letter:
    __slots__ = ("name", "_hash")

    def __init__(self, name: str):
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "_hash", hash(("letter", name)))

    def __setattr__(self, *a):
        raise AttributeError("Letter is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Letter) and self.name == other.name

    def __repr__(self):
        return f"Letter({self.name!r})"


class Bracket:
    __slots__ = ("omega", "body", "_hash")

    def __init__(self, omega: str, body: "BracketedWord"):
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "_hash", hash(("bracket", omega, body)))

    def __setattr__(self, *a):
        raise AttributeError("Bracket is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return (
            isinstance(other, Bracket)
            and self.omega == other.omega
            and self.body == other.body
        )

    def __repr__(self):
        return f"Bracket({self.omega!r}, {self.body!r})"


class BracketedWord:
    """Immutable atom sequence; the grammar is the type, so always well formed."""

    __slots__ = ("atoms", "_hash", "_flat")

    def __init__(self, atoms: Iterable = ()):
        atoms = tuple(atoms)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "_hash", hash(("word", atoms)))
        object.__setattr__(self, "_flat", None)

    def __setattr__(self, *a):
        raise AttributeError("BracketedWord is immutable")

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, BracketedWord) and self.atoms == other.atoms

    def __bool__(self):
        return bool(self.atoms)

    @property
    def size(self) -> int:
        return len(word_flatten(self))

    def sort_key(self):
        flat = word_flatten(self)
        return (len(flat), flat)

    def __repr__(self):
        return f"BracketedWord({serialize(self)!r})"

    def __str__(self):
        return serialize(self)


UNIT = BracketedWord()


def letter_word(name: str) -> BracketedWord:
    return BracketedWord((Letter(name),))


def word_concat(u: BracketedWord, v: BracketedWord) -> BracketedWord:
    return BracketedWord(u.atoms + v.atoms)


def word_bracket(w: BracketedWord, omega: str = DEFAULT_OMEGA) -> BracketedWord:
    return BracketedWord((Bracket(omega, w),))


def word_flatten(w: BracketedWord) -> tuple[Step, ...]:
    """Flat symbol sequence; inverse recoverable by :func:`flat_to_word`."""
    if w._flat is not None:
        return w._flat
    out: list[Step] = []

    def emit(word):
        for a in word.atoms:
            if isinstance(a, Letter):
                out.append(Step(LEVEL, a.name))
            else:
                out.append(Step(UP, a.omega))
                emit(a.body)
                out.append(Step(DOWN, a.omega))

    emit(w)
    flat = tuple(out)
    object.__setattr__(w, "_flat", flat)
    return flat


def flat_validate(symbols: Sequence[Step]) -> tuple[Step, ...]:
    """Check the balanced-bracket and conjugate-decoration conditions."""
    symbols = tuple(symbols)
    scan_steps(symbols)
    return symbols


def flat_to_word(symbols: Sequence[Step]) -> BracketedWord:
    """Stack-parse a flat word back into its bracketed form."""
    stack: list[list] = [[]]
    openers: list[str] = []
    for s in symbols:
        if s.kind == LEVEL:
            stack[-1].append(Letter(s.name))
        elif s.kind == UP:
            stack.append([])
            openers.append(s.name)
        else:
            atoms = stack.pop()
            stack[-1].append(Bracket(openers.pop(), BracketedWord(atoms)))
    return BracketedWord(stack[0])


def conjugate_index(symbols: Sequence[Step], i: int) -> int:
    """Index of the closing symbol conjugate to the opening symbol at ``i``."""
    if i < 0 or i >= len(symbols) or symbols[i].kind != UP:
        raise NotAnOpen(i)
    depth = 0
    for j in range(i, len(symbols)):
        if symbols[j].kind == UP:
            depth += 1
        elif symbols[j].kind == DOWN:
            depth -= 1
            if depth == 0:
                return j
    raise NotAnOpen(i)  # unreachable on validated input


def is_nonunitary(w: BracketedWord) -> bool:
    """Membership in the nonunitary family: no unit word at any bracket depth."""

    def ok(word):
        return bool(word.atoms) and all(
            ok(a.body) for a in word.atoms if isinstance(a, Bracket)
        )

    return ok(w)


def is_rb_word(w: BracketedWord) -> bool:
    """No two adjacent bracket atoms at any nesting level."""

    def ok(atoms):
        for a, b in zip(atoms, atoms[1:]):
            if isinstance(a, Bracket) and isinstance(b, Bracket):
                return False
        return all(ok(a.body.atoms) for a in atoms if isinstance(a, Bracket))

    return ok(w.atoms)


def word_predicates(w: BracketedWord) -> dict:
    return {"in_S": is_nonunitary(w), "in_R": is_rb_word(w)}


def is_omega_singleton(w: BracketedWord) -> bool:
    return all(s.name == DEFAULT_OMEGA for s in word_flatten(w) if s.kind != LEVEL)


# ---------------------------------------------------------------------------
# grammar:  word := "1" | atom+ ;  atom := IDENT | "[" (IDENT ":")? word? "]"

_TOKEN_RE = re.compile(r"\s*(\[|\]|:|1|[A-Za-z_][A-Za-z0-9_]*|\S)")


def _tokenize(text: str):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        tok = m.group(1)
        if tok not in ("[", "]", ":", "1") and not IDENT_RE.match(tok):
            raise ParseError(m.start(1), "letter, '[' or ']'")
        toks.append((tok, m.start(1)))
        pos = m.end()
    return toks


def parse(text: str) -> BracketedWord:
    toks = _tokenize(text)
    if len(toks) == 1 and toks[0][0] == "1":
        return UNIT

    idx = 0

    def peek(k=0):
        return toks[idx + k] if idx + k < len(toks) else (None, len(text))

    def parse_atoms(stop_at_close: bool):
        nonlocal idx
        atoms = []
        while idx < len(toks):
            tok, pos = toks[idx]
            if tok == "]":
                if stop_at_close:
                    return atoms
                raise ParseError(pos, "letter or '['")
            if tok == "[":
                open_pos = pos
                idx += 1
                omega = DEFAULT_OMEGA
                if peek()[0] not in (None, "[", "]") and peek(1)[0] == ":":
                    if peek()[0] == "1" or not IDENT_RE.match(peek()[0]):
                        raise ParseError(peek()[1], "decoration identifier")
                    omega = peek()[0]
                    idx += 2
                if peek()[0] == "1":
                    body_atoms = []
                    idx += 1
                else:
                    body_atoms = parse_atoms(stop_at_close=True)
                if peek()[0] != "]":
                    raise UnbalancedBrackets(open_pos)
                idx += 1
                atoms.append(Bracket(omega, BracketedWord(body_atoms)))
            elif tok == ":":
                raise ParseError(pos, "letter or '['")
            elif tok == "1":
                raise ParseError(pos, "letter ('1' stands alone as the unit)")
            else:
                idx += 1
                atoms.append(Letter(tok))
        return atoms

    atoms = parse_atoms(stop_at_close=False)
    if not atoms:
        raise ParseError(0, "word")
    return BracketedWord(atoms)


def serialize(w: BracketedWord) -> str:
    if not w.atoms:
        return "1"

    def atom_text(a):
        if isinstance(a, Letter):
            return a.name
        head = "[" if a.omega == DEFAULT_OMEGA else f"[{a.omega}:"
        body = " ".join(atom_text(x) for x in a.body.atoms)
        if body:
            return f"{head} {body}]" if head.endswith(":") else f"{head}{body}]"
        return head + "]"

    return " ".join(atom_text(a) for a in w.atoms)


def render(w: BracketedWord) -> str:
    """Bracket structure, one atom per line, bodies indented."""
    lines = []

    def emit(word, indent):
        for a in word.atoms:
            if isinstance(a, Letter):
                lines.append(" " * indent + a.name)
            else:
                head = "[]" if a.omega == DEFAULT_OMEGA else f"[{a.omega}:]"
                lines.append(" " * indent + head)
                emit(a.body, indent + 2)

    if not w.atoms:
        return "1"
    emit(w, 0)
    return "\n".join(lines)
