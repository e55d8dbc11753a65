"""The presentations of the discriminant complement groups.

Generator ids follow a *labeling*:

``"lex"`` (default)
    ``t_k`` is the ``k``-th multi-index in increasing lexicographic order, so
    that for ``(n, d) = (2, 3)`` we get ``t1 = 11, t2 = 12, t3 = 21, t4 = 22``
    and ``delta_0 = t4 t3 t2 t1``.
``"enumeration"``
    ``t_k`` is the ``k``-th multi-index of the ``prec_0`` enumeration, so
    ``delta_0 = t1 t2 ... t_N``.

The two labelings differ by the renaming ``k -> N + 1 - k`` only; the order
in which pairs and triangles are written is fixed on multi-indices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

from .errors import InvalidInput
from .lattice import (
    MultiIndex,
    Params,
    as_params,
    build_graph,
    enumerate_indices,
    label,
    natural_indices,
)
from .words import (
    Relation,
    Word,
    canonical_relator,
    concat,
    inverse,
    power,
    substitute,
    to_cas,
    to_text,
)

LABELINGS = ("lex", "enumeration")
VARIANTS = ("affine", "projective", "zariski")


@dataclass(frozen=True)
class Presentation:
    params: Params | None
    generators: tuple[int, ...]
    relations: tuple[Relation, ...]
    variant: str
    labels: Mapping[int, MultiIndex] = field(default_factory=dict, compare=False)
    labeling: str = "lex"

    @property
    def relators(self) -> list[Word]:
        return [r.relator for r in self.relations]

    def count(self, tag: str) -> int:
        return sum(r.tag == tag for r in self.relations)

    def by_tag(self, tag: str) -> list[Relation]:
        return [r for r in self.relations if r.tag == tag]

    @property
    def max_id(self) -> int:
        return max(self.generators, default=0)

    def canonical_relators(self) -> set[Word]:
        """Nontrivial relators up to cyclic permutation and inversion."""
        return {c for c in map(canonical_relator, self.relators) if c}

    def contains_relation(self, lhs, rhs=()) -> bool:
        target = canonical_relator(concat(lhs, inverse(Word(rhs))))
        return target in self.canonical_relators()

    def with_relations(self, relations, generators=None) -> "Presentation":
        gens = self.generators if generators is None else tuple(generators)
        return replace(self, relations=tuple(relations), generators=gens)

    # exports

    def to_dict(self) -> dict:
        return {
            "n": self.params.n if self.params else None,
            "d": self.params.d if self.params else None,
            "variant": self.variant,
            "labeling": self.labeling,
            "ids": list(self.generators),
            "generators": [list(self.labels.get(g, ())) for g in self.generators],
            "relations": [
                {"tag": r.tag, "lhs": list(r.lhs), "rhs": list(r.rhs)}
                | ({"note": r.note} if r.note else {})
                for r in self.relations
            ],
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        params = Params(data["n"], data["d"]) if data.get("n") is not None else None
        gens = data.get("ids") or list(range(1, len(data["generators"]) + 1))
        labels = {g: tuple(lab) for g, lab in zip(gens, data["generators"]) if lab}
        rels = tuple(
            Relation(Word(r["lhs"]), Word(r["rhs"]), r["tag"], r.get("note", ""))
            for r in data["relations"]
        )
        return cls(params, tuple(gens), rels, data["variant"], labels,
                   data.get("labeling", "lex"))

    @classmethod
    def from_json(cls, s: str) -> "Presentation":
        return cls.from_dict(json.loads(s))

    def to_text(self) -> str:
        out = []
        if self.params is not None:
            out.append(f"# n={self.params.n} d={self.params.d} variant={self.variant}")
        for g in self.generators:
            lab = self.labels.get(g)
            out.append(f"# t{g} = {label(lab)}" if lab else f"# t{g}")
        for r in self.relations:
            lhs = to_text(r.lhs) or "1"
            rhs = to_text(r.rhs) or "1"
            out.append(f"{lhs} = {rhs}  [{r.tag}]")
        return "\n".join(out) + "\n"

    def to_cas(self) -> str:
        """One relator ``lhs*rhs^-1`` per line."""
        lines = [to_cas(r.relator) for r in self.relations if r.relator]
        return "\n".join(lines) + ("\n" if lines else "")


# labelings


def generator_ids(params, labeling: str = "lex") -> dict[MultiIndex, int]:
    p = as_params(params)
    if labeling == "lex":
        order = natural_indices(p)
    elif labeling == "enumeration":
        order = enumerate_indices(p, 0)
    else:
        raise InvalidInput(f"unknown labeling {labeling!r}")
    return {i: k for k, i in enumerate(order, start=1)}


def _word(indices, ids) -> Word:
    return Word(ids[i] for i in indices)


def delta(params, kappa: int, labeling: str = "lex", convention: str = "leading") -> Word:
    """The product of all generators in the ``kappa``-th enumeration order."""
    p = as_params(params)
    return _word(enumerate_indices(p, kappa, convention), generator_ids(p, labeling))


def bundle_expansion(params, prefix: Sequence[int], labeling: str = "lex") -> Word:
    """``t_{i'(d-1)} ... t_{i'2} t_{i'1}`` for a multi-index ``i'`` of length n-1."""
    p = as_params(params)
    if p.n < 2:
        raise InvalidInput("bundle expansion needs n >= 2")
    prefix = tuple(prefix)
    if len(prefix) != p.n - 1 or not all(1 <= x <= p.d - 1 for x in prefix):
        raise InvalidInput(f"{prefix} is not a multi-index of length {p.n - 1}")
    ids = generator_ids(p, labeling)
    return Word(ids[prefix + (k,)] for k in range(p.d - 1, 0, -1))


def present(
    params,
    variant: str = "projective",
    *,
    labeling: str = "lex",
    triangle_order: str = "prec0",
    intro_asymptote: bool = False,
    convention: str = "leading",
) -> Presentation:
    """Presentation of the discriminant complement group.

    ``variant="affine"`` omits the relation ``delta_0 ... delta_n = 1`` and
    presents the complement of the affine cone.  ``triangle_order`` is
    ``"natural"`` or ``"prec0"`` and fixes how each triangle is written.
    ``intro_asymptote`` adds the alternative form
    ``t (t delta_0)^(d-1) = (t delta_0)^(d-1) t`` of the asymptote relations.
    """
    p = as_params(params)
    if variant not in ("affine", "projective"):
        raise InvalidInput(f"variant must be 'affine' or 'projective', got {variant!r}")
    g = build_graph(p)
    ids = generator_ids(p, labeling)
    t = {i: Word((k,)) for i, k in ids.items()}
    rels: list[Relation] = []

    for a, b in g.ordered_non_edges("natural"):
        rels.append(Relation(concat(t[a], t[b]), concat(t[b], t[a]), "commutation"))
    for a, b in g.ordered_edges("natural"):
        rels.append(Relation(concat(t[a], t[b], t[a]), concat(t[b], t[a], t[b]), "braid"))
    for i, j, k in g.ordered_triangles(triangle_order):
        rels.append(Relation(
            concat(t[i], t[j], t[k], t[i]), concat(t[j], t[k], t[i], t[j]), "triangle"
        ))

    d0 = delta(p, 0, labeling, convention)
    for i in natural_indices(p):
        ti = t[i]
        rels.append(Relation(
            power(concat(inverse(ti), d0), p.d - 1),
            power(concat(d0, inverse(ti)), p.d - 1),
            "asymptote",
        ))
    if intro_asymptote:
        for i in natural_indices(p):
            ti = t[i]
            x = power(concat(ti, d0), p.d - 1)
            rels.append(Relation(concat(ti, x), concat(x, ti), "asymptote", "intro"))

    if variant == "projective":
        word = Word(
            x for kappa in range(p.n + 1) for x in delta(p, kappa, labeling, convention)
        )
        rels.append(Relation(word, Word(), "projective"))

    gens = tuple(sorted(ids.values()))
    labels = {k: i for i, k in ids.items()}
    return Presentation(p, gens, tuple(rels), variant, labels, labeling)


def present_zariski(d: int) -> Presentation:
    """The classical presentation of the sphere braid group on ``d`` strands."""
    if not isinstance(d, int) or d < 2:
        raise InvalidInput(f"d must be an integer >= 2, got {d!r}")
    m = d - 1
    s = {i: Word((i,)) for i in range(1, m + 1)}
    rels = []
    for i in range(1, m + 1):
        for j in range(i + 2, m + 1):
            rels.append(Relation(concat(s[i], s[j]), concat(s[j], s[i]), "commutation"))
    for i in range(1, m):
        j = i + 1
        rels.append(Relation(concat(s[i], s[j], s[i]), concat(s[j], s[i], s[j]), "braid"))
    up = list(range(1, m + 1))
    sphere = Word(up + up[::-1])
    rels.append(Relation(sphere, Word(), "zariski"))
    labels = {i: (i,) for i in up}
    return Presentation(Params(1, d), tuple(up), tuple(rels), "zariski", labels)


def _check_perm(perm, n):
    perm = tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise InvalidInput(f"{perm} is not a permutation of 1..{n}")
    return perm


def relabel_map(params, perm, labeling: str = "lex") -> dict[int, Word]:
    """Generator map ``t_{i_1...i_n} -> t_{i_perm(1)...i_perm(n)}``.

    ``perm`` lists the images ``perm(1), ..., perm(n)`` (1-based).
    """
    p = as_params(params)
    perm = _check_perm(perm, p.n)
    ids = generator_ids(p, labeling)
    return {
        k: Word((ids[tuple(i[perm[v] - 1] for v in range(p.n))],)) for i, k in ids.items()
    }


def relabel_word(params, w, perm, labeling: str = "lex") -> Word:
    return substitute(w, relabel_map(params, perm, labeling))


def relabel(pres: Presentation, perm) -> Presentation:
    if pres.params is None:
        raise InvalidInput("relabel needs a presentation with parameters")
    mapping = relabel_map(pres.params, perm, pres.labeling)
    rels = [r.map_words(lambda w: substitute(w, mapping)) for r in pres.relations]
    return pres.with_relations(rels)
