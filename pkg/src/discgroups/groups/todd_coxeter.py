"""Coset enumeration, HLT style.

Every live coset in turn is closed under every relator (scan and fill),
missing entries of the coset are then defined, and coincidences are
resolved immediately with a union-find queue.  The definition order is
fixed, so tables are reproducible.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

from ..errors import InvalidInput
from ..presentation import Presentation
from ..words import Word

DEFAULT_MAX_COSETS = 10**6


@dataclass(frozen=True)
class CosetTable:
    generators: tuple[int, ...]
    # row c: (c.t1, c.t1^-1, c.t2, c.t2^-1, ...), 0-based coset ids
    table: tuple[tuple[int, ...], ...] | None
    status: str
    cosets_defined: int

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    @property
    def index(self) -> int | None:
        return len(self.table) if self.complete else None

    def action(self, gen: int) -> tuple[int, ...]:
        """Permutation of the cosets induced by right multiplication."""
        col = 2 * self.generators.index(gen)
        return tuple(row[col] for row in self.table)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["coset"]
        for g in self.generators:
            header += [f"t{g}", f"t{g}^-1"]
        w.writerow(header)
        for c, row in enumerate(self.table or ()):
            w.writerow([c + 1] + [x + 1 for x in row])
        return buf.getvalue()


class _Overflow(Exception):
    pass


class _Enumerator:
    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list] = [[None] * self.ncols]
        self.parent = [0]

    def define(self, c: int, x: int) -> int:
        if len(self.table) >= self.max_cosets:
            raise _Overflow
        new = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(new)
        self.table[c][x] = new
        self.table[new][x ^ 1] = c
        return new

    def rep(self, c: int) -> int:
        p = self.parent
        root = c
        while p[root] != root:
            root = p[root]
        while p[c] != root:
            p[c], c = root, p[c]
        return root

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def _merge(self, a: int, b: int, queue: list) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        a, b = min(a, b), max(a, b)
        self.parent[b] = a
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = table[e][x]
                if f is None:
                    continue
                table[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] is not None:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] is not None:
                    self._merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        table = self.table
        f = b = c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] is not None:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            self.define(f, word[i])


def _columns(word: Word, position: dict[int, int]) -> list[int]:
    cols = []
    for x in word:
        try:
            g = position[abs(x)]
        except KeyError:
            raise InvalidInput(f"t{abs(x)} is not a generator of the presentation") from None
        cols.append(2 * g + (x < 0))
    return cols


def coset_enumerate(
    pres: Presentation,
    subgroup_words: Sequence[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """Enumerate the cosets of the subgroup generated by ``subgroup_words``.

    Running out of room is reported by ``status == "bound-exceeded"``.
    """
    if max_cosets < 1:
        raise InvalidInput("max_cosets must be >= 1")
    gens = tuple(pres.generators)
    position = {g: k for k, g in enumerate(gens)}
    rels = [_columns(r, position) for r in pres.relators if r]
    subs = [_columns(Word(w), position) for w in subgroup_words]
    en = _Enumerator(len(gens), max_cosets)
    try:
        for w in subs:
            if w:
                en.scan_and_fill(0, w)
        c = 0
        while c < len(en.table):
            if en.alive(c):
                for r in rels:
                    en.scan_and_fill(c, r)
                    if not en.alive(c):
                        break
                if en.alive(c):
                    for x in range(en.ncols):
                        if en.table[c][x] is None:
                            en.define(c, x)
            c += 1
    except _Overflow:
        return CosetTable(gens, None, "bound-exceeded", len(en.table))

    live = [c for c in range(len(en.table)) if en.alive(c)]
    renum = {c: k for k, c in enumerate(live)}
    table = tuple(tuple(renum[en.rep(x)] for x in en.table[c]) for c in live)
    return CosetTable(gens, table, "complete", len(en.table))


def group_order(pres: Presentation, max_cosets: int = DEFAULT_MAX_COSETS) -> int | None:
    return coset_enumerate(pres, (), max_cosets).index
