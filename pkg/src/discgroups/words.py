"""Free-group words as tuples of signed generator ids.

A letter ``k > 0`` stands for ``t_k`` and ``-k`` for its inverse, the same
convention as most integer-list word code.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import InvalidInput

RELATION_TAGS = (
    "commutation",
    "braid",
    "triangle",
    "asymptote",
    "projective",
    "zariski",
    "identification",
)


class Word:
    """An immutable word.  Construction does not reduce; use :func:`reduce`."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        if isinstance(letters, Word):
            letters = letters.letters
        else:
            letters = tuple(letters)
            for x in letters:
                if not isinstance(x, int) or isinstance(x, bool) or x == 0:
                    raise InvalidInput(f"letters must be nonzero integers, got {x!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _raw(cls, letters: tuple) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def gen(cls, k: int, sign: int = 1) -> "Word":
        return cls((k * sign,))

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __eq__(self, other):
        if isinstance(other, Word):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.letters + _letters(other))

    def __invert__(self) -> "Word":
        return inverse(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __repr__(self):
        return f"Word({to_text(self) or '1'})"

    @property
    def generators(self) -> frozenset[int]:
        return frozenset(abs(x) for x in self.letters)


def _letters(w) -> tuple:
    return w.letters if isinstance(w, Word) else Word(w).letters


def _reduce(letters) -> list:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def reduce(w) -> Word:
    """Freely reduced representative."""
    return Word._raw(tuple(_reduce(_letters(w))))


def cyclic_reduce(w) -> Word:
    letters = _reduce(_letters(w))
    i, j = 0, len(letters) - 1
    while i < j and letters[i] == -letters[j]:
        i += 1
        j -= 1
    return Word._raw(tuple(letters[i : j + 1]))


def inverse(w) -> Word:
    return Word._raw(tuple(-x for x in reversed(_reduce(_letters(w)))))


def power(w, k: int) -> Word:
    w = reduce(w)
    if k < 0:
        w, k = inverse(w), -k
    return Word._raw(tuple(_reduce(w.letters * k)))


def conjugate(w, by) -> Word:
    """``by * w * by^-1``."""
    by = _letters(by)
    return reduce(by + _letters(w) + inverse(by).letters)


def concat(*words) -> Word:
    letters: list[int] = []
    for w in words:
        letters.extend(_letters(w))
    return Word._raw(tuple(_reduce(letters)))


def substitute(w, images: Mapping[int, "Word"]) -> Word:
    """Image of ``w`` under the homomorphism ``t_k -> images[k]``."""
    letters: list[int] = []
    for x in _letters(w):
        try:
            img = images[abs(x)]
        except KeyError:
            raise InvalidInput(f"no image given for generator t{abs(x)}") from None
        img = _letters(img)
        letters.extend(img if x > 0 else (-y for y in reversed(img)))
    return Word._raw(tuple(_reduce(letters)))


def exponent_sums(w, generator_count: int) -> list[int]:
    sums = [0] * generator_count
    for x in _letters(w):
        g = abs(x)
        if g > generator_count:
            raise InvalidInput(f"generator t{g} out of range 1..{generator_count}")
        sums[g - 1] += 1 if x > 0 else -1
    return sums


def canonical_relator(w) -> Word:
    """Representative of the cyclic class of ``w`` and ``w^-1``.

    Two relators define the same normal closure contribution when their
    canonical forms agree; used for deduplication and golden comparisons.
    """
    c = cyclic_reduce(w)
    if not c:
        return c
    best = None
    for cand in (c.letters, inverse(c).letters):
        for s in range(len(cand)):
            rot = cand[s:] + cand[:s]
            key = (tuple(abs(x) for x in rot), tuple(-x for x in rot))
            if best is None or key < best[0]:
                best = (key, rot)
    return Word(best[1])


# text and json forms

_TOKEN = re.compile(r"^t(\d+)(\^-1)?$")


def to_text(w) -> str:
    return " ".join(f"t{x}" if x > 0 else f"t{-x}^-1" for x in Word(w))


def from_text(s: str) -> Word:
    letters = []
    for tok in s.split():
        m = _TOKEN.match(tok)
        if not m or int(m.group(1)) == 0:
            raise InvalidInput(f"bad word token {tok!r}")
        k = int(m.group(1))
        letters.append(-k if m.group(2) else k)
    return Word(letters)


def to_json(w) -> str:
    return json.dumps(list(Word(w)))


def from_json(s: str) -> Word:
    data = json.loads(s)
    if not isinstance(data, list):
        raise InvalidInput("word JSON must be an array")
    return Word(data)


def to_cas(w) -> str:
    """``t1*t2^-1`` style, ``1`` for the empty word."""
    w = Word(w)
    if not w:
        return "1"
    return "*".join(f"t{x}" if x > 0 else f"t{-x}^-1" for x in w)


@dataclass(frozen=True)
class Relation:
    """``lhs = rhs`` in a presentation, tagged by the family it belongs to."""

    lhs: Word
    rhs: Word
    tag: str
    note: str = ""

    def __post_init__(self):
        if self.tag not in RELATION_TAGS:
            raise InvalidInput(f"unknown relation tag {self.tag!r}")
        object.__setattr__(self, "lhs", Word(self.lhs))
        object.__setattr__(self, "rhs", Word(self.rhs))

    @cached_property
    def relator(self) -> Word:
        return cyclic_reduce(self.lhs.letters + inverse(self.rhs).letters)

    @property
    def generators(self) -> frozenset[int]:
        return self.lhs.generators | self.rhs.generators

    def map_words(self, fn) -> "Relation":
        return Relation(fn(self.lhs), fn(self.rhs), self.tag, self.note)
