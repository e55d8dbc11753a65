"""Quotients for partial smoothings of generic plane sections of the discriminant.

Smoothing a cusp turns braid relations into identifications, smoothing a
node does the same to commutation relations.  Identifications are always
applied to a whole family (every edge, or every non-edge of the graph), and
when they end up merging the two ends of a pair from the other family,
that family is replaced too.

In the two cases where node smoothing does not collapse the group to a
cyclic one, ``(n, d) = (1, 4)`` and ``(2, 3)``, the quotient is reduced to
its classical two-relator form: the core relators are checked to be
present and every other relator is dropped after it evaluates to the
identity in ``PSL_2 Z`` respectively ``SL_2 Z``.  This uses that the
standard matrices give faithful representations of
``<a, b | aba = bab, (aba)^2>`` and ``<a, b | aba = bab, (ba)^6>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import UnsupportedInput
from ..lattice import as_params, build_graph
from ..presentation import Presentation, generator_ids, present
from ..words import Relation, Word, canonical_relator, concat, power
from .homomorphism import FiniteImage, check_homomorphism, perm_from_cycles
from .tietze import identify_generators, tietze_simplify

KINDS = ("cusp", "node")

A = ((1, 1), (0, 1))
B = ((1, 0), (-1, 1))


@dataclass(frozen=True)
class Exceptional:
    # extra substitutions written in lex generator ids: gen -> word
    extra: dict
    core: tuple  # (lhs, rhs) pairs of the expected two-relator form
    matrices: FiniteImage
    permutations: FiniteImage


def _exceptional(params) -> Exceptional | None:
    p = as_params(params)
    braid = (Word([1, 2, 1]), Word([2, 1, 2]))
    if (p.n, p.d) == (1, 4):
        return Exceptional(
            extra={},
            core=(braid, (Word([1, 2, 1, 1, 2, 1]), Word())),
            matrices=FiniteImage("psl2z", {1: A, 2: B}),
            permutations=FiniteImage(
                "perm", {1: perm_from_cycles(3, (1, 2)), 2: perm_from_cycles(3, (2, 3))}
            ),
        )
    if (p.n, p.d) == (2, 3):
        return Exceptional(
            extra={4: Word([2, 1, -2])},
            core=(braid, (power(Word([2, 1]), 6), Word())),
            matrices=FiniteImage("sl2z", {1: A, 2: B}),
            permutations=FiniteImage(
                "perm", {1: perm_from_cycles(3, (1, 2)), 2: perm_from_cycles(3, (2, 3))}
            ),
        )
    return None


def _kinds(kind) -> set[str]:
    kinds = {kind} if isinstance(kind, str) else set(kind)
    if "both" in kinds:
        kinds = set(KINDS)
    bad = kinds - set(KINDS)
    if bad or not kinds:
        raise UnsupportedInput(f"smoothing kind must be 'cusp', 'node' or both, got {kind!r}")
    return kinds


def identification_pairs(params, kind) -> tuple[list[tuple[int, int]], set[str]]:
    """Generator pairs identified by the smoothing, after propagation.

    Returns the pairs (in lex ids) and the set of families that ended up
    replaced.
    """
    p = as_params(params)
    kinds = _kinds(kind)
    g = build_graph(p)
    ids = generator_ids(p)
    if "node" in kinds:
        if len(g.vertices) < 2:
            raise UnsupportedInput("node smoothing needs at least two generators")
        if not g.ordered_non_edges():
            raise UnsupportedInput("the graph is complete, there is no node to smooth")
    fam = {
        "cusp": [(ids[a], ids[b]) for a, b in g.ordered_edges()],
        "node": [(ids[a], ids[b]) for a, b in g.ordered_non_edges()],
    }
    while True:
        parent = {k: k for k in ids.values()}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for k in kinds:
            for a, b in fam[k]:
                parent[find(a)] = find(b)
        spread = {
            k for k in KINDS
            if k not in kinds and any(find(a) == find(b) for a, b in fam[k])
        }
        if not spread:
            break
        kinds |= spread
    pairs = [pr for k in KINDS if k in kinds for pr in fam[k]]
    return pairs, kinds


def prune_in_faithful_image(pres: Presentation, core, image: FiniteImage) -> Presentation:
    """Keep the ``core`` relations, drop every other relator trivial in ``image``.

    ``image`` must be faithful on the group presented by ``core`` alone; a
    relator that does not evaluate to the identity is kept.
    """
    core_keys = [canonical_relator(concat(l, power(r, -1))) for l, r in core]
    have = {canonical_relator(r.relator): r for r in pres.relations}
    if any(k not in have for k in core_keys):
        return pres
    kept = [Relation(l, r, have[k].tag) for (l, r), k in zip(core, core_keys)]
    for rel in pres.relations:
        key = canonical_relator(rel.relator)
        if key in core_keys:
            continue
        if not image.is_identity(image.evaluate(rel.relator)):
            kept.append(rel)
    return pres.with_relations(kept)


def smoothing_quotient(params, kind="cusp") -> Presentation:
    """Presentation of the complement after smoothing cusps and/or nodes."""
    p = as_params(params)
    pairs, kinds = identification_pairs(p, kind)
    pres = present(p)
    exc = _exceptional(p) if kinds == {"node"} else None
    if exc is not None:
        extra = [
            Relation(Word((g,)), w, "identification", "imposed")
            for g, w in exc.extra.items()
        ]
        pres = pres.with_relations(list(pres.relations) + extra)
    q = tietze_simplify(identify_generators(pres, pairs))
    if exc is not None:
        q = prune_in_faithful_image(q, exc.core, exc.matrices)
    return q


@dataclass
class SmoothingReport:
    kinds: set
    abelianization_ok: bool
    expected_order: int
    certificates: dict
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (
            self.abelianization_ok
            and all(r.valid and not r.image_abelian for r in self.certificates.values())
            and all(self.extra.values())
        )


def verify_smoothing(params, kind="cusp") -> SmoothingReport:
    """Abelianization check and, in the exceptional cases, image certificates."""
    from .abelian import abelianize

    p = as_params(params)
    _, kinds = identification_pairs(p, kind)
    q = smoothing_quotient(p, kind)
    expected = (p.n + 1) * (p.d - 1) ** p.n
    ab = abelianize(q)
    certs, extra = {}, {}
    exc = _exceptional(p) if kinds == {"node"} else None
    if exc is not None:
        certs[exc.matrices.target] = check_homomorphism(q, exc.matrices)
        certs["perm"] = check_homomorphism(q, exc.permutations)
        if exc.matrices.target == "sl2z":
            # (t2 t1)^3 is the central element -I, so (t2 t1)^6 is the first trivial power
            x = exc.matrices.evaluate(power(Word([2, 1]), 3))
            extra["(t2t1)^3 = -I"] = x == ((-1, 0), (0, -1))
    ab_ok = ab.free_rank == 0 and list(ab.torsion) == ([expected] if expected > 1 else [])
    return SmoothingReport(kinds, ab_ok, expected, certs, extra)
