import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics.named_groups import DihedralGroup

from brumer_forge.group import (
    FiniteGroup,
    Subgroup,
    abelianization,
    center,
    commutator_subgroup,
    complex_conjugation_element,
    conjugacy_classes,
    cyclic,
    d12_paper,
    dihedral,
    direct_product,
    find_isomorphism,
    generalized_quaternion,
    quotient,
    subgroups,
    z2_times_a4,
)

GROUPS = {
    "D12": lambda: dihedral(12),
    "D20": lambda: dihedral(20),
    "Q8": lambda: generalized_quaternion(1),
    "Q16": lambda: generalized_quaternion(2),
    "Z2xA4": z2_times_a4,
    "Z2xS3": d12_paper,
}


def brute_center(G):
    return [g for g in range(G.size) if all(G.mul(g, h) == G.mul(h, g) for h in range(G.size))]


def brute_closure(G, gens):
    S = {G.identity, *gens}
    while True:
        new = {G.mul(a, b) for a in S for b in S} - S
        if not new:
            return frozenset(S)
        S |= new


def brute_subgroups(G):
    # every subgroup of these groups is generated by at most three elements
    found = set()
    for k in (1, 2, 3):
        for gens in itertools.combinations(range(G.size), k):
            found.add(brute_closure(G, gens))
    return found


def test_dihedral_basics():
    G = dihedral(12)
    assert G.size == 12
    assert len(center(G).members) == 2
    x = G.element("x")
    assert G.element_order(x) == 6
    assert center(G).members == (0, G.power(x, 3))
    assert complex_conjugation_element(G) == G.element("x^3")
    assert dihedral(4).is_abelian


def test_dihedral_invalid():
    for N in (2, 3, 7):
        with pytest.raises(ValueError):
            dihedral(N)


def test_dihedral_class_count_matches_sympy():
    for N in (12, 20):
        ref = DihedralGroup(N // 2)
        assert len(conjugacy_classes(dihedral(N))) == len(ref.conjugacy_classes())


def test_quaternion():
    Q8 = generalized_quaternion(1)
    assert Q8.size == 8
    assert len(conjugacy_classes(Q8)) == 5
    subs = subgroups(Q8)
    assert len(subs) == 6 and all(H.is_normal() for H in subs)
    assert complex_conjugation_element(Q8) == Q8.element("x^2")
    Q16 = generalized_quaternion(2)
    assert Q16.size == 16 and Q16.element_order(Q16.element("x")) == 8
    assert set(center(Q16).members) == {0, Q16.element("x^4")}
    with pytest.raises(ValueError):
        generalized_quaternion(0)


def test_z2_times_a4():
    G = z2_times_a4()
    assert G.size == 24
    assert len(center(G).members) == 2
    assert len(conjugacy_classes(G)) == 8
    Q, _ = abelianization(G)
    assert Q.size == 6 and Q.is_abelian
    assert commutator_subgroup(G).size == 4
    A4 = G.subgroup(["x", "y"])
    QA, _ = abelianization(A4)
    assert QA.size == 3


def test_direct_product():
    P = direct_product(cyclic(2, "j"), dihedral(6))
    assert find_isomorphism(P, dihedral(12)) is not None
    assert find_isomorphism(direct_product(dihedral(6), cyclic(1)), dihedral(6)) is not None
    assert direct_product(cyclic(3), cyclic(4)).size == 12


def test_quotient_quaternion_is_dihedral():
    for n in (1, 2):
        G = generalized_quaternion(n)
        N = G.subgroup([f"x^{2 ** n}"])
        Q, proj = quotient(G, N)
        assert find_isomorphism(Q, dihedral(2 ** (n + 1))) is not None


def test_quotient_requires_normal():
    G = dihedral(12)
    with pytest.raises(ValueError):
        quotient(G, G.subgroup(["y"]))


def test_center_d20():
    G = dihedral(20)
    assert set(center(G).members) == {0, G.element("x^5")}


def test_no_central_involution():
    with pytest.raises(ValueError):
        complex_conjugation_element(cyclic(3))
    with pytest.raises(ValueError):
        complex_conjugation_element(direct_product(cyclic(2), cyclic(2)))


def test_enumeration_is_shortlex():
    G = dihedral(8)
    assert G.labels[:4] == ("1", "x", "y", "x^2")
    words = [G.label(g) for g in range(G.size)]
    assert words[0] == "1"


def test_text_round_trip():
    G = z2_times_a4()
    H = FiniteGroup.from_text(G.to_text())
    assert H.size == 24
    assert np.array_equal(H.table, G.table)
    assert G.to_text().splitlines()[0] == f"group {G.name} 24"


def test_bad_table_rejected():
    t = np.array([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    with pytest.raises(ValueError):
        FiniteGroup(t)


def test_d12_paper_classes():
    G = d12_paper()
    reps = [G.labels[r] for r in conjugacy_classes(G).representatives]
    assert reps == ["1", "σ", "τ", "j", "σj", "τj"]


# ---------------------------------------------------------------- invariants
@pytest.mark.parametrize("name", sorted(GROUPS))
def test_class_equation(name):
    G = GROUPS[name]()
    cls = conjugacy_classes(G)
    assert sum(cls.sizes) == G.size
    assert all(G.size % s == 0 for s in cls.sizes)
    for c in cls.classes:
        assert {G.conj(g, t) for g in c for t in range(G.size)} == set(c)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_center_brute_force(name):
    G = GROUPS[name]()
    assert list(center(G).members) == brute_center(G)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_subgroups_brute_force(name):
    G = GROUPS[name]()
    subs = subgroups(G)
    assert {frozenset(H.members) for H in subs} == brute_subgroups(G)
    for H in subs:
        assert brute_closure(G, H.members) == frozenset(H.members)


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_quotient_cosets(name):
    G = GROUPS[name]()
    for N in subgroups(G):
        if not N.is_normal():
            continue
        Q, proj = quotient(G, N)
        fibres = {}
        for g in range(G.size):
            fibres.setdefault(proj[g], set()).add(g)
        assert {frozenset(f) for f in fibres.values()} == {frozenset(c) for c in N.left_cosets()}
        # the projection is a homomorphism
        assert all(proj[G.mul(a, b)] == Q.mul(proj[a], proj[b]) for a in range(G.size) for b in range(G.size))


@given(st.sampled_from(sorted(GROUPS)), st.data())
def test_group_axioms_sampled(name, data):
    G = GROUPS[name]()
    a, b, c = (data.draw(st.integers(0, G.size - 1)) for _ in range(3))
    assert G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
    assert G.mul(a, G.inv(a)) == G.identity
    assert G.element(G.label(a)) == a
