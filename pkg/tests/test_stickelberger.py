import copy
import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from brumer_forge.character import builtin_table
from brumer_forge.exactnum import Cyclotomic, determinant
from brumer_forge.groupring import GroupRingElement, algebra, parse_element, reduced_norm
from brumer_forge.stickelberger import (
    PlaceData,
    a_s_generator,
    a_s_generator_via_nr,
    assemble_theta_from_L,
    assemble_theta_reduction,
    bundled_input,
    bundled_json,
    delta_T,
    epsilon_S,
    epsilon_via_reduced_norm,
    euler_factor_eps,
    integrality_check,
    load_input,
)


@pytest.fixture(scope="module")
def inp():
    return bundled_input()


def fixed_space_det(rep, place):
    """``det(1 - rho(phi) | V^I)`` from an explicit basis of the inertia invariants."""
    d = rep.dim
    n = rep.character.order
    P = [[Cyclotomic.rational(0, n)] * d for _ in range(d)]
    for h in place.inertia.members:
        M = rep.matrix(h)
        P = [[P[i][k] + M[i][k] for k in range(d)] for i in range(d)]
    # columns of P span V^I; pick a basis greedily
    basis = []
    for k in range(d):
        col = [P[i][k] for i in range(d)]
        if _independent(basis + [col], d):
            basis.append(col)
    r = len(basis)
    if r == 0:
        return Cyclotomic.rational(1)
    F = rep.matrix(place.frobenius_lift)
    images = [[sum((F[i][k] * v[k] for k in range(d)), Cyclotomic.rational(0)) for i in range(d)] for v in basis]
    # express each image in the basis: solve by picking r independent coordinates
    rows = _independent_rows(basis, d)
    B = [[basis[c][i] for c in range(r)] for i in rows]
    coeffs = []
    for img in images:
        rhs = [img[i] for i in rows]
        coeffs.append(_solve(B, rhs))
    A = [[coeffs[c][i] for c in range(r)] for i in range(r)]
    one = Cyclotomic.rational(1)
    return determinant([[(one if i == k else Cyclotomic.rational(0)) - A[i][k] for k in range(r)] for i in range(r)])


def _independent(vectors, d):
    try:
        _independent_rows(vectors, d)
        return True
    except AssertionError:
        return False


def _independent_rows(vectors, d):
    r = len(vectors)
    for rows in itertools.combinations(range(d), r):
        M = [[v[i] for v in vectors] for i in rows]
        if determinant(M) != 0:
            return list(rows)
    raise AssertionError("dependent basis")


def _solve(B, rhs):
    # Cramer's rule; r is at most 3 here
    D = determinant(B)
    r = len(B)
    out = []
    for c in range(r):
        Bc = [[rhs[i] if k == c else B[i][k] for k in range(r)] for i in range(r)]
        out.append(determinant(Bc) / D)
    return out


# ---------------------------------------------------------------- places
def test_place_validation(inp):
    G = inp.group
    with pytest.raises(ValueError):
        PlaceData("bad", 2, G.subgroup(["j"]), G.subgroup(["σj"]), G.element("σj"))
    with pytest.raises(ValueError):
        PlaceData("bad", 2, G.subgroup(["σj"]), G.subgroup(["j"]), G.element("τ"))
    with pytest.raises(ValueError):
        # σ^... coset must generate the quotient
        PlaceData("bad", 2, G.subgroup(["σj"]), G.subgroup(["j"]), G.element("1"))


def test_disjoint_S_T(inp):
    with pytest.raises(ValueError):
        inp.with_sets(S=["P5"], T=["P5"])
    with pytest.raises(ValueError):
        inp.with_sets(T=["P3"])


# ---------------------------------------------------------------- Euler factors
def test_worked_example_eps(inp):
    alg = inp.algebra
    ram = [inp.places[s] for s in inp.ramified]
    eps = epsilon_S(alg, ram)
    assert [str(eps[n]) for n in ("χ2", "χ4", "χ6")] == ["0", "1", "0"]
    chi2 = alg.characters[1]
    assert euler_factor_eps(chi2, inp.places["P3"]) == 0
    for P in ram:
        assert euler_factor_eps(alg.characters[3], P) == 1


def test_eps_literal_variant(inp):
    alg = inp.algebra
    ram = [inp.places[s] for s in inp.ramified]
    eps = epsilon_S(alg, ram, variant="literal-np")
    assert str(eps["χ2"]) == "20"
    with pytest.raises(ValueError):
        euler_factor_eps(alg.characters[0], ram[0], variant="other")


def test_eps_unramified_trivial_action(inp):
    alg = inp.algebra
    G = inp.group
    P = PlaceData("Q", 7, G.subgroup(["τ"]), G.trivial, G.element("τ"))
    assert euler_factor_eps(alg.characters[0], P) == 0
    assert euler_factor_eps(alg.characters[2], P) == 2


@pytest.mark.parametrize("label", ["P2", "P3", "P11", "P5"])
def test_eps_matches_fixed_space_oracle(inp, label):
    alg = inp.algebra
    P = inp.places[label]
    for chi, rep in zip(alg.characters, alg.reps):
        assert euler_factor_eps(chi, P, rep) == fixed_space_det(rep, P)


@pytest.mark.parametrize("label", ["P2", "P3", "P11"])
def test_eps_matches_reduced_norm(inp, label):
    alg = inp.algebra
    P = inp.places[label]
    assert epsilon_via_reduced_norm(alg, P) == epsilon_S(alg, [P])
    assert epsilon_via_reduced_norm(alg, P, "literal-np") == epsilon_S(alg, [P], "literal-np")


def test_eps_invariance(inp):
    alg = inp.algebra
    G = inp.group
    for label in inp.ramified:
        P = inp.places[label]
        base = epsilon_S(alg, [P])
        for lift in P.frobenius_lifts():
            assert epsilon_S(alg, [P.with_lift(lift)]) == base
        for t in range(G.size):
            assert epsilon_S(alg, [P.conjugated(t)]) == base


def test_eps_multiplicative_and_empty(inp):
    alg = inp.algebra
    ps = [inp.places[s] for s in inp.ramified]
    assert epsilon_S(alg, []) == alg.one()
    prod = alg.one()
    for P in ps:
        prod = prod * epsilon_S(alg, [P])
    assert prod == epsilon_S(alg, ps)


@pytest.mark.parametrize("family,kw", [("quaternion", {"n": 2}), ("z2a4", {}), ("d4p", {"p": 5})])
def test_eps_oracle_other_groups(family, kw):
    t = builtin_table(family, **kw)
    G = t.group
    alg = algebra(t)
    from brumer_forge.group import subgroups
    count = 0
    for D in subgroups(G):
        for I in subgroups(G):
            if not (I <= D) or any(G.conj(h, s) not in I for h in I.members for s in D.members):
                continue
            for phi in D.members:
                try:
                    P = PlaceData("p", 3, D, I, phi)
                except ValueError:
                    continue
                for chi, rep in zip(alg.characters, alg.reps):
                    assert euler_factor_eps(chi, P, rep) == fixed_space_det(rep, P)
                count += 1
                break
            if count > 12:
                return


# ---------------------------------------------------------------- delta_T
def test_delta_trivial_and_empty(inp):
    alg = inp.algebra
    P5 = inp.places["P5"]
    assert delta_T(alg.characters[0], [P5]) == -4
    assert delta_T(alg.characters[5], []) == 1


def test_delta_rejects_ramified(inp):
    with pytest.raises(ValueError):
        delta_T(inp.algebra.characters[0], [inp.places["P2"]])


def test_delta_conjugation_invariant(inp):
    alg = inp.algebra
    P5 = inp.places["P5"]
    for t in range(inp.group.size):
        Q = P5.conjugated(t)
        for chi in alg.characters:
            assert delta_T(chi, [Q]) == delta_T(chi, [P5])


def test_a_s_generator_two_ways(inp):
    alg = inp.algebra
    T = [inp.places["P5"]]
    a = a_s_generator(alg, T)
    assert a == a_s_generator_via_nr(alg, T)
    assert a.components_integral()


def test_a_s_generator_abelian():
    from brumer_forge.group import cyclic
    G = cyclic(6)
    alg = algebra(G)
    P = PlaceData("q", 7, G.subgroup(["x^2"]), G.trivial, G.element("x^2"))
    want = GroupRingElement.one(G) - GroupRingElement.basis(G, G.inv(P.frobenius_lift), 7)
    assert a_s_generator(alg, [P]).element == want


# ---------------------------------------------------------------- assembly
def test_components_from_L(inp):
    th = assemble_theta_from_L(inp)
    assert [str(c) for c in th.components] == ["0", "1", "0", "8", "0", "48"]


def test_S_ram_theta(inp):
    th = assemble_theta_from_L(inp.with_sets(S=list(inp.ramified)))
    G = inp.group
    assert th.element == parse_element(G, "(2/3)(1-j)(1+σ+σ^2-τ-στ-σ^2τ)")
    assert th.element == algebra(G).idempotents[3] * 8


def test_zero_L_values(inp):
    z = copy.copy(inp)
    z.l_values = {k: Cyclotomic.rational(0) for k in inp.l_values}
    assert assemble_theta_from_L(z).central.is_zero()


def test_missing_L_value(inp):
    z = copy.copy(inp)
    z.l_values = {"χ2": Cyclotomic.rational(1)}
    with pytest.raises(KeyError):
        assemble_theta_from_L(z)


def test_L_values_imprimitive_at_unlisted_place(inp):
    z = copy.copy(inp)
    z.l_values_set = ("P2",)
    with pytest.raises(ValueError):
        assemble_theta_from_L(z)
    # an S containing the imprimitive place only applies the remaining factors
    a = assemble_theta_from_L(z.with_sets(S=["P2", "P3"]))
    b = assemble_theta_from_L(inp.with_sets(S=["P3"]))
    assert a == b


def test_reduction_matches_L_modes(inp):
    for S, T in [([], []), (list(inp.ramified), []), ([], ["P5"]), (["P3"], ["P5"])]:
        x = inp.with_sets(S=S, T=T)
        assert assemble_theta_from_L(x) == assemble_theta_reduction(x)


def test_reduction_quadratic_component(inp):
    assert inp.abelian["χ2"].value() == 1
    assert inp.abelian["χ4"].value() == 8
    assert inp.abelian["χ6"].value() == 48


def test_reduction_zero_theta(inp):
    z = copy.copy(inp)
    z.abelian = {k: copy.copy(v) for k, v in inp.abelian.items()}
    for ab in z.abelian.values():
        ab.theta = GroupRingElement.zero(ab.quotient)
    assert assemble_theta_reduction(z).central.is_zero()


def test_reduction_witness_mismatch():
    data = bundled_json()
    data["abelian"][2]["character"] = "χ4"
    bad = load_input(data)
    with pytest.raises(ValueError):
        assemble_theta_reduction(bad)


def test_even_components_vanish(inp):
    for S in ([], ["P2"], list(inp.ramified)):
        th = assemble_theta_from_L(inp.with_sets(S=S, T=["P5"]))
        for c, odd in zip(th.components, inp.algebra.odd_mask()):
            if not odd:
                assert c.is_zero()


def test_eps_scales_theta(inp):
    base = assemble_theta_from_L(inp)
    for label in inp.ramified:
        more = assemble_theta_from_L(inp.with_sets(S=[label]))
        eps = epsilon_S(inp.algebra, [inp.places[label]])
        assert more.central == eps * base.central


# ---------------------------------------------------------------- integrality
def test_integrality_worked_example(inp):
    rep = integrality_check(assemble_theta_from_L(inp))
    assert rep.in_maximal_order and not rep.in_group_ring
    assert rep.coefficient_denominators["1"] == 4
    assert rep.group_ring_denominator == 12


def test_integrality_trivial_cases(inp):
    alg = inp.algebra
    assert integrality_check(alg.central([0] * 6)).in_group_ring
    half = alg.central([0, Fraction(1, 2), 0, 0, 0, 0])
    assert not integrality_check(half).in_maximal_order


def test_integrality_with_T(inp):
    rep = integrality_check(assemble_theta_reduction(inp.with_sets(T=["P5"])))
    assert rep.in_maximal_order


# ---------------------------------------------------------------- loading
def test_json_values_round_trip():
    data = bundled_json()
    inp = load_input(data)
    assert set(inp.places) == {"P2", "P3", "P11", "P5"}
    P2 = inp.places["P2"]
    G = inp.group
    assert P2.decomposition.members == G.subgroup(["σj"]).members
    assert P2.inertia.members == G.subgroup(["j"]).members
    assert P2.frobenius_lift == G.element("σ")
    assert inp.l_values["χ6"] == 48
