"""Exhaustive generation of each family by size, plus counting oracles.

Generation follows the unique first-factor decomposition of each family, so
every element is produced exactly once; results are returned in the canonical
basis order.  Sizes are the shared grading (path length through the
bijections), and a configurable cap guards against accidental blow-ups.
"""

from __future__ import annotations

import os
from typing import Callable, Iterable, Optional

from . import forests, paths, words
from .errors import SizeLimitExceeded
from .forests import ALeaf, AngularForest, DecoratedForest, Graft, Leaf, Node
from .paths import DEFAULT_OMEGA, DOWN, LEVEL, UP, MotzkinPath, Step
from .words import Bracket, BracketedWord, Letter

DEFAULT_MAX_SIZE = 14


def size_cap(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        return explicit
    env = os.environ.get("OPFREE_MAX_SIZE")
    return int(env) if env else DEFAULT_MAX_SIZE


def motzkin_number(n: int) -> int:
    """M0=1, M_{n+1} = M_n + sum_{k<n} M_k M_{n-1-k}; arbitrary precision."""
    ms = [1]
    for m in range(n):
        ms.append(ms[m] + sum(ms[k] * ms[m - 1 - k] for k in range(m)))
    return ms[n]


def catalan_number(n: int) -> int:
    """C0=1, C_{n+1} = sum_{k<=n} C_k C_{n-k}."""
    cs = [1]
    for m in range(n):
        cs.append(sum(cs[k] * cs[m - k] for k in range(m + 1)))
    return cs[n]


class FamilyGenerator:
    """Size-indexed generators over fixed alphabets, memoized per instance."""

    def __init__(self, x_alphabet: Iterable[str] = ("x",), omega_alphabet: Iterable[str] = (DEFAULT_OMEGA,)):
        self.x = tuple(x_alphabet)
        self.omega = tuple(omega_alphabet)
        self._paths: dict[int, list] = {}
        self._words: dict[int, list] = {}
        self._forests: dict[int, list] = {}
        self._blocks: dict[int, list] = {}
        self._tails: dict[int, list] = {}

    def step_seqs(self, n: int) -> list:
        """All step tuples of length n (first indecomposable factor recursion)."""
        hit = self._paths.get(n)
        if hit is not None:
            return hit
        if n == 0:
            out = [()]
        else:
            out = []
            for x in self.x:
                head = (Step(LEVEL, x),)
                out.extend(head + rest for rest in self.step_seqs(n - 1))
            for k in range(n - 1):
                for w in self.omega:
                    u, d = Step(UP, w), Step(DOWN, w)
                    for inner in self.step_seqs(k):
                        head = (u,) + inner + (d,)
                        out.extend(head + rest for rest in self.step_seqs(n - 2 - k))
        self._paths[n] = out
        return out

    def paths(self, n: int) -> list[MotzkinPath]:
        return [MotzkinPath._unsafe(s) for s in self.step_seqs(n)]

    def atom_seqs(self, n: int) -> list:
        hit = self._words.get(n)
        if hit is not None:
            return hit
        if n == 0:
            out = [()]
        else:
            out = []
            for x in self.x:
                head = (Letter(x),)
                out.extend(head + rest for rest in self.atom_seqs(n - 1))
            for k in range(n - 1):
                for w in self.omega:
                    for body in self.atom_seqs(k):
                        head = (Bracket(w, BracketedWord(body)),)
                        out.extend(head + rest for rest in self.atom_seqs(n - 2 - k))
        self._words[n] = out
        return out

    def words(self, n: int) -> list[BracketedWord]:
        return [BracketedWord(a) for a in self.atom_seqs(n)]

    def tree_seqs(self, n: int) -> list:
        """Possibly-empty forests (tuples of trees) of total size n."""
        hit = self._forests.get(n)
        if hit is not None:
            return hit
        if n == 0:
            out = [()]
        else:
            out = []
            for x in self.x:
                head = (Leaf(x),)
                out.extend(head + rest for rest in self.tree_seqs(n - 1))
            for k in range(1, n - 1):  # children forests are non-empty
                for w in self.omega:
                    for children in self.tree_seqs(k):
                        if not children:
                            continue
                        head = (Node(w, children),)
                        out.extend(head + rest for rest in self.tree_seqs(n - 2 - k))
        self._forests[n] = out
        return out

    def vforests(self, n: int) -> list[DecoratedForest]:
        return [DecoratedForest(t) for t in self.tree_seqs(n) if t]

    def angular_blocks(self, n: int) -> list:
        hit = self._blocks.get(n)
        if hit is not None:
            return hit
        if n == 0:
            out = [ALeaf]
        elif n < 2:
            out = []
        else:
            out = [Graft(f) for f in self.aforests(n - 2)]
        self._blocks[n] = out
        return out

    def _angular_tails(self, n: int) -> list:
        hit = self._tails.get(n)
        if hit is not None:
            return hit
        if n == 0:
            out = [()]
        else:
            out = []
            for x in self.x:
                for j in range(n):  # block size j, separator costs 1
                    for b in self.angular_blocks(j):
                        head = ((x, b),)
                        out.extend(head + rest for rest in self._angular_tails(n - 1 - j))
        self._tails[n] = out
        return out

    def aforests(self, n: int) -> list[AngularForest]:
        out = []
        for k in range(n + 1):
            for head in self.angular_blocks(k):
                out.extend(AngularForest(head, tail) for tail in self._angular_tails(n - k))
        return out


FILTERS: dict[str, Callable] = {
    "peak-free": paths.is_peak_free,
    "valley-free": paths.is_valley_free,
    "dyck": paths.is_dyck,
    "indecomposable": paths.is_indecomposable,
    "rb": words.is_rb_word,
    "nonunitary": words.is_nonunitary,
    "leaf-spaced": forests.is_leaf_spaced,
    "ladder-free": forests.is_ladder_free,
}

_FILTER_FAMILIES = {
    "peak-free": {"path"},
    "valley-free": {"path"},
    "dyck": {"path"},
    "indecomposable": {"path"},
    "rb": {"word"},
    "nonunitary": {"word"},
    "leaf-spaced": {"vforest", "aforest"},
    "ladder-free": {"vforest", "aforest"},
}


def _resolve_predicate(family: str, predicate):
    if predicate is None or callable(predicate):
        return predicate
    if predicate not in FILTERS:
        raise ValueError(f"unknown filter {predicate!r}")
    if family not in _FILTER_FAMILIES[predicate]:
        raise ValueError(f"filter {predicate!r} does not apply to {family}")
    return FILTERS[predicate]


def _generate(gen: FamilyGenerator, family: str, size: int) -> list:
    if family == "path":
        return gen.paths(size)
    if family == "word":
        return gen.words(size)
    if family == "vforest":
        return gen.vforests(size)
    if family == "aforest":
        return gen.aforests(size)
    raise ValueError(f"unknown family {family!r}")


def enumerate_family(
    family: str,
    size: int,
    x_alphabet: Iterable[str] = ("x",),
    omega_alphabet: Iterable[str] = (DEFAULT_OMEGA,),
    predicate=None,
    max_size: Optional[int] = None,
) -> list:
    """Every member of the family with exactly this size, canonically ordered."""
    cap = size_cap(max_size)
    if size > cap:
        raise SizeLimitExceeded(size, cap)
    if size < 0:
        return []
    predicate = _resolve_predicate(family, predicate)
    out = _generate(FamilyGenerator(x_alphabet, omega_alphabet), family, size)
    if predicate is not None:
        out = [e for e in out if predicate(e)]
    out.sort(key=lambda e: e.sort_key())
    return out


def elements_up_to(
    family: str,
    max_size: int,
    x_alphabet: Iterable[str] = ("x",),
    omega_alphabet: Iterable[str] = (DEFAULT_OMEGA,),
    predicate=None,
) -> list:
    """All members of size 0..max_size, ordered by size (one shared memo)."""
    predicate = _resolve_predicate(family, predicate)
    gen = FamilyGenerator(x_alphabet, omega_alphabet)
    out = []
    for n in range(max_size + 1):
        batch = _generate(gen, family, n)
        if predicate is not None:
            batch = [e for e in batch if predicate(e)]
        batch.sort(key=lambda e: e.sort_key())
        out.extend(batch)
    return out
