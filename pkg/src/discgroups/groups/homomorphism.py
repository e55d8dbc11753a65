"""Evaluating presentations in explicit target groups.

Targets are permutations of ``m`` points (tuples of 0-based images),
``SL_2 Z`` as 2x2 integer matrices of determinant one, and ``PSL_2 Z``,
the same matrices taken up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from ..errors import InvalidInput
from ..presentation import Presentation
from ..words import Word, to_text

TARGETS = ("perm", "sl2z", "psl2z")

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

I2: Matrix2 = ((1, 0), (0, 1))


def mat_mul(x: Matrix2, y: Matrix2) -> Matrix2:
    (a, b), (c, d) = x
    (e, f), (g, h) = y
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def mat_inv(x: Matrix2) -> Matrix2:
    (a, b), (c, d) = x
    return ((d, -b), (-c, a))


def perm_mul(p, q):
    """``p`` then ``q``: the point ``i`` goes to ``q[p[i]]``."""
    return tuple(q[x] for x in p)


def perm_inv(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def perm_from_cycles(m: int, *cycles) -> tuple[int, ...]:
    """Permutation of ``0..m-1`` from 1-based cycles, e.g. ``(1, 2)``."""
    img = list(range(m))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


@dataclass(frozen=True)
class FiniteImage:
    """An assignment of target elements to generators."""

    target: str
    assignment: Mapping[int, tuple]
    degree: int = 0  # number of points for permutation targets

    def __post_init__(self):
        if self.target not in TARGETS:
            raise InvalidInput(f"unknown target {self.target!r}")
        fixed = {}
        for g, x in self.assignment.items():
            if self.target == "perm":
                x = tuple(x)
                if sorted(x) != list(range(len(x))):
                    raise InvalidInput(f"image of t{g} is not a permutation: {x}")
                if self.degree and len(x) != self.degree:
                    raise InvalidInput(f"image of t{g} has the wrong degree")
            else:
                x = tuple(tuple(int(v) for v in row) for row in x)
                if len(x) != 2 or any(len(row) != 2 for row in x):
                    raise InvalidInput(f"image of t{g} is not a 2x2 matrix")
                (a, b), (c, d) = x
                if a * d - b * c != 1:
                    raise InvalidInput(f"image of t{g} does not have determinant 1")
            fixed[g] = x
        object.__setattr__(self, "assignment", fixed)
        if self.target == "perm" and not self.degree:
            deg = len(next(iter(fixed.values()))) if fixed else 0
            object.__setattr__(self, "degree", deg)

    @property
    def identity(self):
        return tuple(range(self.degree)) if self.target == "perm" else I2

    def mul(self, x, y):
        return perm_mul(x, y) if self.target == "perm" else mat_mul(x, y)

    def inv(self, x):
        return perm_inv(x) if self.target == "perm" else mat_inv(x)

    def is_identity(self, x) -> bool:
        if self.target == "psl2z":
            return x in (I2, ((-1, 0), (0, -1)))
        return x == self.identity

    def evaluate(self, w):
        x = self.identity
        for letter in Word(w):
            try:
                g = self.assignment[abs(letter)]
            except KeyError:
                raise InvalidInput(f"no image for generator t{abs(letter)}") from None
            x = self.mul(x, g if letter > 0 else self.inv(g))
        return x

    def equal(self, x, y) -> bool:
        return self.is_identity(self.mul(x, self.inv(y)))


@dataclass
class HomomorphismReport:
    valid: bool
    image_abelian: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.valid


def check_homomorphism(pres: Presentation, image: FiniteImage) -> HomomorphismReport:
    """Do all relators die in the target, and do the images commute?"""
    missing = [g for g in pres.generators if g not in image.assignment]
    if missing:
        raise InvalidInput(f"no image for generators {missing}")
    failures = [
        to_text(r) for r in pres.relators if not image.is_identity(image.evaluate(r))
    ]
    elems = [image.assignment[g] for g in pres.generators]
    abelian = all(
        image.equal(image.mul(x, y), image.mul(y, x)) for x, y in combinations(elems, 2)
    )
    return HomomorphismReport(not failures, abelian, failures)
