from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..presentation import Presentation
from ..words import exponent_sums
from .snf import SmithForm, in_row_lattice, lattice_basis, smith_normal_form
from ..errors import ConsistencyError


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple[int, ...]
    free_rank: int
    certificate: SmithForm | None = field(default=None, compare=False, repr=False)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{k}" for k in self.torsion)
        return " x ".join(parts) if parts else "1"

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` when infinite."""
        if self.free_rank:
            return None
        out = 1
        for k in self.torsion:
            out *= k
        return out

    def to_dict(self) -> dict:
        return {"torsion": list(self.torsion), "free_rank": self.free_rank}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def relation_matrix(pres: Presentation) -> list[list[int]]:
    """Exponent-sum rows of every relator, columns in generator order."""
    top = pres.max_id
    cols = [g - 1 for g in pres.generators]
    rows = []
    for rel in pres.relations:
        # exponent sums are invariant under reduction, so skip forming relators
        a = exponent_sums(rel.lhs, top)
        b = exponent_sums(rel.rhs, top)
        rows.append([a[c] - b[c] for c in cols])
    return rows


def abelianize(pres: Presentation, certify: bool = True) -> AbelianInvariants:
    """Invariant factors of the abelianized group.

    The relation matrix is first replaced by an echelon basis of its row
    lattice (same quotient, at most one row per generator); the Smith form
    of that basis is then computed and, with ``certify``, checked by
    multiplying ``U * B * V`` back out.
    """
    ngens = len(pres.generators)
    rows = relation_matrix(pres)
    seen = set()
    unique = []
    for row in rows:
        if not any(row):
            continue
        key = tuple(row)
        neg = tuple(-x for x in row)
        if key in seen or neg in seen:
            continue
        seen.add(key)
        unique.append(row)
    basis = lattice_basis(unique, ngens)
    if certify and not all(in_row_lattice(r, basis) for r in unique):
        raise ConsistencyError("echelon basis lost part of the relation lattice")
    if basis:
        snf = smith_normal_form(basis)
        if certify:
            snf.certify(basis)
        diag = snf.diagonal
    else:
        snf, diag = None, []
    rank = sum(1 for x in diag if x)
    torsion = tuple(x for x in diag if x > 1)
    return AbelianInvariants(torsion, ngens - rank, snf)
