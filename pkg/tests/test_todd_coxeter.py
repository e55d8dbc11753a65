import pytest
from hypothesis import given, settings, strategies as st

from discgroups import InvalidInput, Word, present, present_zariski
from discgroups.groups.todd_coxeter import coset_enumerate, group_order

from helpers import fp


def test_examples():
    assert group_order(present((1, 2))) == 2
    assert group_order(present((1, 3))) == 12
    assert group_order(present_zariski(3)) == 12


@pytest.mark.parametrize("n", range(1, 9))
def test_d2_orders(n):
    t = coset_enumerate(present((n, 2)), max_cosets=10**4)
    assert t.complete and t.index == n + 1


def test_classical_groups():
    assert group_order(fp(2, [1, 1], [2, 2, 2], [1, 2] * 5)) == 60
    assert group_order(fp(2, [1, 1], [2, 2], [1, 2] * 3)) == 6
    q8 = fp(2, [1, 1, 1, 1], [1, 1, -2, -2], [1, 2, 1, -2])
    assert group_order(q8) == 8


def test_subgroup_index():
    s3 = fp(2, [1, 1], [2, 2], [1, 2] * 3)
    assert coset_enumerate(s3, [Word([1])]).index == 3
    assert coset_enumerate(s3, [Word([1, 2])]).index == 2


def test_bound_exceeded():
    t = coset_enumerate(fp(1), max_cosets=50)
    assert t.status == "bound-exceeded" and t.index is None
    with pytest.raises(InvalidInput):
        coset_enumerate(fp(1), max_cosets=0)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.integers(1, 6))
def test_dihedral_and_cyclic(k, extra):
    assert group_order(fp(1, [1] * k)) == k
    dih = fp(2, [1] * k, [2, 2], [1, 2, 1, 2])
    assert group_order(dih) == 2 * k
    # order is independent of the bound once the enumeration completes
    assert coset_enumerate(dih, max_cosets=1000).index == coset_enumerate(
        dih, max_cosets=1000 * extra).index


def test_table_is_closed_and_transitive():
    pres = present((1, 3))
    t = coset_enumerate(pres)
    gens = {g: k for k, g in enumerate(t.generators)}
    for r in pres.relators:
        for c in range(t.index):
            x = c
            for letter in r:
                col = 2 * gens[abs(letter)] + (letter < 0)
                x = t.table[x][col]
            assert x == c
    seen, stack = {0}, [0]
    while stack:
        c = stack.pop()
        for x in t.table[c]:
            if x not in seen:
                seen.add(x)
                stack.append(x)
    assert len(seen) == t.index
    for g in t.generators:
        act = t.action(g)
        assert sorted(act) == list(range(t.index))


def test_csv_export():
    t = coset_enumerate(fp(1, [1, 1, 1]))
    lines = t.to_csv().splitlines()
    assert lines[0] == "coset,t1,t1^-1"
    assert len(lines) == 4
    assert coset_enumerate(present((1, 3))).to_csv() == coset_enumerate(present((1, 3))).to_csv()
