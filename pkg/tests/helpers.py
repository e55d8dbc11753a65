from discgroups import Presentation, Word
from discgroups.words import Relation


def fp(ngens, *relators):
    """Ad hoc presentation ``<t1..tn | relators = 1>``."""
    rels = tuple(Relation(Word(r), Word(), "identification") for r in relators)
    return Presentation(None, tuple(range(1, ngens + 1)), rels, "affine")
