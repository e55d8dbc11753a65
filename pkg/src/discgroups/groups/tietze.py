from __future__ import annotations

from collections import Counter
from typing import Iterable

from ..presentation import Presentation
from ..words import Relation, Word, canonical_relator, inverse, substitute


def _cleanup(relations: Iterable[Relation]) -> list[Relation]:
    """Drop trivial relations and repeats of earlier ones (cyclic/inverse)."""
    out, seen = [], set()
    for r in relations:
        key = canonical_relator(r.relator)
        if not key or key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _substitute_all(pres: Presentation, images: dict[int, Word], drop: set[int]) -> Presentation:
    full = {g: images.get(g, Word((g,))) for g in pres.generators}
    rels = [r.map_words(lambda w: substitute(w, full)) for r in pres.relations]
    gens = [g for g in pres.generators if g not in drop]
    return pres.with_relations(_cleanup(rels), gens)


def identify_generators(pres: Presentation, pairs: Iterable[tuple[int, int]]) -> Presentation:
    """Quotient by ``t_i = t_j`` for each pair.

    Each identification class keeps its smallest generator; the others are
    eliminated by substitution and relations that become trivial or repeat
    an earlier one are dropped.
    """
    pairs = list(pairs)
    if not pairs:
        return pres
    parent = {g: g for g in pres.generators}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    for a, b in pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    images = {g: Word((find(g),)) for g in pres.generators if find(g) != g}
    return _substitute_all(pres, images, set(images))


def eliminate(pres: Presentation, gen: int, image: Word) -> Presentation:
    """Replace ``gen`` by ``image`` everywhere (``image`` must avoid ``gen``)."""
    if gen in Word(image).generators:
        raise ValueError(f"t{gen} occurs in its own image")
    return _substitute_all(pres, {gen: Word(image)}, {gen})


def _elimination(pres: Presentation):
    order = sorted(range(len(pres.relations)), key=lambda k: (len(pres.relations[k].relator), k))
    for k in order:
        r = pres.relations[k].relator
        counts = Counter(abs(x) for x in r)
        once = [g for g, c in counts.items() if c == 1]
        if not once:
            continue
        g = max(once)
        pos = next(p for p, x in enumerate(r) if abs(x) == g)
        rot = r.letters[pos:] + r.letters[:pos]
        rest = Word(rot[1:])
        # g^e * rest = 1
        image = inverse(rest) if rot[0] > 0 else rest
        return g, image
    return None


def tietze_simplify(pres: Presentation, max_rounds: int | None = None) -> Presentation:
    """Drop trivial and repeated relators and eliminate generators to a fixpoint.

    A generator is eliminated when it occurs exactly once in some relator.
    Relators are scanned shortest first, and within a relator the largest
    generator id is removed, so lower-numbered generators survive.
    """
    cur = pres.with_relations(_cleanup(pres.relations))
    rounds = 0
    while max_rounds is None or rounds < max_rounds:
        step = _elimination(cur)
        if step is None:
            break
        g, image = step
        cur = eliminate(cur, g, image)
        rounds += 1
    return cur
