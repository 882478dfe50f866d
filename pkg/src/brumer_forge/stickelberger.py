"""Euler factors, T-modifications and (S,T)-modified Stickelberger elements.

Arithmetic data (decomposition and inertia groups, Frobenius lifts, L-values
at s = 0, Stickelberger elements of abelian subextensions) is ingested, never
computed.  Two assembly paths are provided: directly from L-values, and by
reduction to abelian subextensions through induction and inflation; they must
agree whenever the inputs are consistent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from .character import (
    Character,
    CharacterTable,
    builtin_table,
    galois_orbit_exponents,
    induce,
    is_odd,
    one_dim_characters,
)
from .exactnum import Cyclotomic, as_cyclotomic, determinant, lcm, units_mod
from .group import (
    FiniteGroup,
    Subgroup,
    complex_conjugation_element,
    cyclic,
    dihedral,
    direct_product,
    quotient,
)
from .groupring import (
    CentralElement,
    GroupAlgebra,
    GroupRingElement,
    MonomialRep,
    algebra,
    norm_element,
    reduced_norm,
)

__all__ = [
    "PlaceData",
    "AbelianInput",
    "ArithmeticInput",
    "StickelbergerElement",
    "IntegralityReport",
    "euler_factor_eps",
    "epsilon_S",
    "epsilon_via_reduced_norm",
    "delta_T",
    "a_s_generator",
    "a_s_generator_via_nr",
    "assemble_theta_from_L",
    "assemble_theta_reduction",
    "integrality_check",
    "load_input",
    "bundled_input",
    "group_from_description",
    "EPS_VARIANTS",
]

EPS_VARIANTS = ("limit", "literal-np")


# ---------------------------------------------------------------------- places
@dataclass(frozen=True)
class PlaceData:
    """A fixed prime above ``p``: decomposition group, inertia group, Frobenius lift."""

    label: str
    norm: int
    decomposition: Subgroup
    inertia: Subgroup
    frobenius_lift: int

    def __post_init__(self):
        D, I = self.decomposition, self.inertia
        G = D.parent
        if I.parent is not G:
            raise ValueError("decomposition and inertia live in different groups")
        if not I <= D:
            raise ValueError(f"{self.label}: inertia is not contained in the decomposition group")
        if any(G.conj(h, t) not in I for h in I.members for t in D.members):
            raise ValueError(f"{self.label}: inertia is not normal in the decomposition group")
        phi = self.frobenius_lift
        if phi not in D:
            raise ValueError(f"{self.label}: Frobenius lift is outside the decomposition group")
        gen = set(G.subgroup(list(I.members) + [phi]).members)
        if gen != set(D.members):
            raise ValueError(f"{self.label}: Frobenius coset does not generate G_P/I_P")
        if self.norm < 2:
            raise ValueError(f"{self.label}: norm must be at least 2")

    @property
    def group(self) -> FiniteGroup:
        return self.decomposition.parent

    @property
    def unramified(self) -> bool:
        return self.inertia.size == 1

    def conjugated(self, t: int) -> "PlaceData":
        """The same data for the prime ``t^-1 P``: everything conjugated by ``t``."""
        G = self.group
        D = Subgroup(G, [G.conj(g, t) for g in self.decomposition.members])
        I = Subgroup(G, [G.conj(g, t) for g in self.inertia.members])
        return PlaceData(self.label, self.norm, D, I, G.conj(self.frobenius_lift, t))

    def with_lift(self, lift: int) -> "PlaceData":
        return replace(self, frobenius_lift=lift)

    def frobenius_lifts(self) -> list[int]:
        G = self.group
        return [G.mul(self.frobenius_lift, h) for h in self.inertia.members]


def _identity(d: int, n: int):
    return [[Cyclotomic.rational(1 if i == k else 0, n) for k in range(d)] for i in range(d)]


def _matmul(A, B):
    d = len(A)
    return [[sum((A[i][k] * B[k][j] for k in range(d)), Cyclotomic.rational(0)) for j in range(d)] for i in range(d)]


def _rep_for(chi: Character, rep: MonomialRep | None) -> MonomialRep:
    if rep is not None:
        return rep
    alg = algebra(chi.group)
    return alg.reps[alg.index(chi)]


def euler_factor_eps(chi: Character, place: PlaceData, rep: MonomialRep | None = None,
                     variant: str = "limit") -> Cyclotomic:
    """``det(1 - c rho(phi_P) P_I | V_chi)`` with ``P_I`` the inertia projector.

    ``variant="limit"`` takes ``c = 1`` (the value at s = 0 of ``Np^-s``);
    ``variant="literal-np"`` takes ``c = Np``.
    """
    if variant not in EPS_VARIANTS:
        raise ValueError(f"unknown Euler factor variant {variant!r}")
    rep = _rep_for(chi, rep)
    n = chi.order
    d = rep.dim
    P = [[Cyclotomic.rational(0, n) for _ in range(d)] for _ in range(d)]
    for h in place.inertia.members:
        Mh = rep.matrix(h)
        P = [[P[i][k] + Mh[i][k] for k in range(d)] for i in range(d)]
    inv = Fraction(1, place.inertia.size)
    P = [[v * inv for v in row] for row in P]
    FP = _matmul(rep.matrix(place.frobenius_lift), P)
    c = 1 if variant == "limit" else place.norm
    one = _identity(d, n)
    M = [[one[i][k] - FP[i][k] * c for k in range(d)] for i in range(d)]
    return as_cyclotomic(determinant(M))


def epsilon_S(alg: GroupAlgebra, places: Sequence[PlaceData], variant: str = "limit") -> CentralElement:
    """``eps_S`` as a central element: product over the finite places of ``S``."""
    comps = []
    for chi, rep in zip(alg.characters, alg.reps):
        v = Cyclotomic.rational(1, alg.order)
        for P in places:
            v = v * euler_factor_eps(chi, P, rep, variant)
        comps.append(v)
    return alg.central(comps)


def epsilon_via_reduced_norm(alg: GroupAlgebra, place: PlaceData, variant: str = "limit") -> CentralElement:
    """``nr(1 - c phi_P e_I)`` with ``e_I = Norm_I/|I|``."""
    G = alg.group
    c = 1 if variant == "limit" else place.norm
    eI = norm_element(place.inertia) * Fraction(1, place.inertia.size)
    y = GroupRingElement.one(G) - GroupRingElement.basis(G, place.frobenius_lift) * eI * c
    return reduced_norm(y, alg)


def delta_T(chi: Character, T: Sequence[PlaceData], rep: MonomialRep | None = None) -> Cyclotomic:
    """``prod_{p in T} det(1 - Np rho(phi_P^-1) | V_chi)``."""
    rep = _rep_for(chi, rep)
    n = chi.order
    d = rep.dim
    G = chi.group
    out = Cyclotomic.rational(1, n)
    for P in T:
        if not P.unramified:
            raise ValueError(f"T-place {P.label} is ramified")
        F = rep.matrix(G.inv(P.frobenius_lift))
        one = _identity(d, n)
        M = [[one[i][k] - F[i][k] * P.norm for k in range(d)] for i in range(d)]
        out = out * determinant(M)
    return out


def a_s_generator(alg: GroupAlgebra, T: Sequence[PlaceData]) -> CentralElement:
    """``delta_T`` as a central element, componentwise."""
    return alg.central([delta_T(c, T, r) for c, r in zip(alg.characters, alg.reps)])


def a_s_generator_via_nr(alg: GroupAlgebra, T: Sequence[PlaceData]) -> CentralElement:
    """``nr(prod_{p in T} (1 - Np phi_P^-1))``."""
    G = alg.group
    y = GroupRingElement.one(G)
    for P in T:
        y = y * (GroupRingElement.one(G) - GroupRingElement.basis(G, G.inv(P.frobenius_lift), P.norm))
    return reduced_norm(y, alg)


# ---------------------------------------------------------------------- inputs
@dataclass
class AbelianInput:
    """Stickelberger element of an abelian subextension attached to ``chi = Ind_H phi``.

    ``theta`` lives in the group ring of ``Hbar = H / ker phi`` and
    ``phi_bar`` is the character of ``Hbar`` inflating to ``phi``.
    """

    character: str
    subgroup: Subgroup
    phi: Character
    quotient: FiniteGroup
    projection: tuple[int, ...]
    phi_bar: Character
    theta: GroupRingElement

    @classmethod
    def build(cls, character: str, H: Subgroup, phi: Character, theta_terms: dict) -> "AbelianInput":
        ker = phi.kernel()
        Hbar, proj = quotient(H.group, ker)
        vals = [phi(next(h for h in range(H.size) if proj[h] == q)) for q in range(Hbar.size)]
        phibar = Character.from_function(Hbar, lambda q: vals[q], check=False)
        if isinstance(theta_terms, GroupRingElement):
            theta = theta_terms
        else:
            coeffs: list = [Cyclotomic.rational(0)] * Hbar.size
            for word, c in theta_terms.items():
                q = proj[H.local(H.parent.element(word))]
                coeffs[q] = coeffs[q] + Cyclotomic.from_json(c)
            theta = GroupRingElement(Hbar, coeffs)
        return cls(character, H, phi, Hbar, tuple(proj), phibar, theta)

    def value(self) -> Cyclotomic:
        """``phi_bar(theta) = sum_h theta_h phi_bar(h)``."""
        return self.theta.evaluate(self.phi_bar)


@dataclass
class ArithmeticInput:
    group: FiniteGroup
    table: CharacterTable
    j: int
    places: dict[str, PlaceData]
    S: tuple[str, ...] = ()
    T: tuple[str, ...] = ()
    mu_order: int = 2
    torsion_free: bool = True
    l_values: dict[str, Cyclotomic] = field(default_factory=dict)
    l_values_set: tuple[str, ...] = ()
    abelian: dict[str, AbelianInput] = field(default_factory=dict)
    omit_trivial: bool = False
    ramified: tuple[str, ...] = ()
    name: str = ""
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if set(self.S) & set(self.T):
            raise ValueError("S and T must be disjoint")
        for lab in self.T:
            if not self.places[lab].unramified:
                raise ValueError(f"T-place {lab} is ramified")
        for lab in tuple(self.S) + tuple(self.T):
            if lab not in self.places:
                raise ValueError(f"unknown place {lab}")

    @property
    def algebra(self) -> GroupAlgebra:
        return algebra(self.table)

    def S_places(self) -> list[PlaceData]:
        return [self.places[s] for s in self.S]

    def T_places(self) -> list[PlaceData]:
        return [self.places[t] for t in self.T]

    def with_sets(self, S: Sequence[str] | None = None, T: Sequence[str] | None = None) -> "ArithmeticInput":
        return replace(self, S=tuple(self.S if S is None else S), T=tuple(self.T if T is None else T))


@dataclass
class StickelbergerElement:
    central: CentralElement
    S: tuple[str, ...]
    T: tuple[str, ...]
    mode: str
    eps_variant: str = "limit"

    @property
    def element(self) -> GroupRingElement:
        return self.central.element

    @property
    def components(self):
        return self.central.components

    def __eq__(self, other):
        if isinstance(other, StickelbergerElement):
            return self.central == other.central
        return NotImplemented

    def __str__(self):
        return str(self.central)


@dataclass
class IntegralityReport:
    per_character: list[tuple[str, bool]]
    in_maximal_order: bool
    in_group_ring: bool
    group_ring_denominator: int
    coefficient_denominators: dict[str, int]

    def __str__(self):
        lines = [f"  {n}: {'integral' if ok else 'NOT integral'}" for n, ok in self.per_character]
        lines.append(f"  centre of maximal order: {'yes' if self.in_maximal_order else 'no'}")
        lines.append(f"  Z[G]: {'yes' if self.in_group_ring else 'no'} (denominator {self.group_ring_denominator})")
        return "\n".join(lines)


# ---------------------------------------------------------------------- assembly
def _l_value(inp: ArithmeticInput, chi: Character) -> Cyclotomic:
    """``L(0, chi)`` from the input, using ``L(chi^sigma) = L(chi)^sigma`` when only a conjugate is given."""
    alg = inp.algebra
    names = alg.names
    i = alg.index(chi)
    if names[i] in inp.l_values:
        return inp.l_values[names[i]]
    for a in units_mod(alg.order):
        k = alg.galois_permutation(a)[i]
        if names[k] in inp.l_values:
            # chi^{sigma_a} = chi_k, so chi = chi_k^{sigma_a^-1}
            b = pow(a, -1, alg.order) if alg.order > 1 else 1
            return as_cyclotomic(inp.l_values[names[k]]).to_order(alg.order).galois(b)
    raise KeyError(f"missing L-value for {names[i]}")


def _eps_places(inp: ArithmeticInput, base: Sequence[str]) -> list[PlaceData]:
    missing = [s for s in base if s not in inp.S]
    if missing:
        raise ValueError(f"L-values are imprimitive at {missing}, which are not in S")
    return [inp.places[s] for s in inp.S if s not in base]


def assemble_theta_from_L(inp: ArithmeticInput, eps_variant: str = "limit",
                          omit_trivial: bool | None = None) -> StickelbergerElement:
    """``sum_chi delta_T(chi) eps_{chi,S} L(0, conj chi) e_chi`` with even components 0."""
    alg = inp.algebra
    eps_places = _eps_places(inp, inp.l_values_set)
    T = inp.T_places()
    comps = []
    for chi, rep in zip(alg.characters, alg.reps):
        if not is_odd(chi, inp.j):
            comps.append(0)
            continue
        L = as_cyclotomic(_l_value(inp, chi.conj()))
        v = L * delta_T(chi, T, rep)
        for P in eps_places:
            v = v * euler_factor_eps(chi, P, rep, eps_variant)
        comps.append(v)
    # the trivial character is even, so omitting its component is automatic
    return StickelbergerElement(alg.central(comps), tuple(inp.S), tuple(inp.T), "L-values", eps_variant)


def reduction_component(inp: ArithmeticInput, ab: AbelianInput) -> Cyclotomic:
    """``phi'(theta_{K_i/k_i})`` after checking that the witness induces the named character."""
    alg = inp.algebra
    chi = alg.characters[alg.names.index(ab.character)]
    if induce(alg.group, ab.subgroup, ab.phi) != chi:
        raise ValueError(f"witness for {ab.character} does not induce it")
    v = ab.value()
    if not chi.field.subfield().contains(v):
        raise ValueError(f"phi'(theta) for {ab.character} does not lie in Q({ab.character})")
    return v


def assemble_theta_reduction(inp: ArithmeticInput, eps_variant: str = "limit") -> StickelbergerElement:
    """``sum_i eps_{chi_i,S} delta_T(chi_i) phi_i'(theta_{K_i/k_i}) e_{chi_i}``.

    Abelian data is needed for one character per Galois orbit of odd
    characters; conjugates follow by Galois equivariance.
    """
    alg = inp.algebra
    eps_places = [inp.places[s] for s in inp.S]
    T = inp.T_places()
    n = alg.order
    base: dict[int, Cyclotomic] = {}
    for name, ab in inp.abelian.items():
        i = alg.names.index(name)
        base[i] = reduction_component(inp, ab).to_order(n)
    comps: list = [None] * len(alg.characters)
    for i, chi in enumerate(alg.characters):
        if not is_odd(chi, inp.j):
            comps[i] = Cyclotomic.rational(0, n)
            continue
        val = None
        for a in units_mod(n):
            k = alg.galois_permutation(a)[i]
            if k in base:
                # chi = chi_k^{sigma_b}, b = a^-1
                b = pow(a, -1, n) if n > 1 else 1
                val = base[k].galois(b)
                break
        if val is None:
            raise KeyError(f"missing abelian input for {alg.names[i]}")
        rep = alg.reps[i]
        v = val * delta_T(chi, T, rep)
        for P in eps_places:
            v = v * euler_factor_eps(chi, P, rep, eps_variant)
        comps[i] = v
    return StickelbergerElement(alg.central(comps), tuple(inp.S), tuple(inp.T), "reduction", eps_variant)


def integrality_check(theta: StickelbergerElement | CentralElement) -> IntegralityReport:
    x = theta.central if isinstance(theta, StickelbergerElement) else theta
    alg = x.algebra
    per = [(n, c.is_integral()) for n, c in zip(alg.names, x.components)]
    el = x.element
    dens = {alg.group.labels[g]: c.denominator() for g, c in enumerate(el.coeffs) if not c.is_zero()}
    return IntegralityReport(per, all(ok for _, ok in per), el.is_integral(), el.denominator(), dens)


# ---------------------------------------------------------------------- loading
def group_from_description(desc: dict) -> tuple[FiniteGroup, CharacterTable]:
    """Group and character table from a ``{"family": ...}`` block."""
    fam = desc["family"]
    if fam in ("d4p", "quaternion", "q", "z2a4", "d12_paper"):
        t = builtin_table(fam, p=desc.get("p"), n=desc.get("n"))
        return t.group, t
    if fam == "product":
        from .character import monomial_table
        p = int(desc["p"])
        G = direct_product(dihedral(2 * p), cyclic(2, "j"), name=f"C2xD{2 * p}")
        t = monomial_table(G)
        G.__dict__["preferred_table"] = t
        return G, t
    if fam == "table":
        from .character import monomial_table
        text = desc.get("text") or Path(desc["path"]).read_text()
        G = FiniteGroup.from_text(text)
        t = monomial_table(G)
        G.__dict__["preferred_table"] = t
        return G, t
    raise ValueError(f"unknown group family {fam!r}")


def _subgroup(G: FiniteGroup, words) -> Subgroup:
    return G.subgroup(list(words))


def _match_phi(H: Subgroup, values: dict) -> Character:
    G = H.parent
    want = {H.local(G.element(w)): Cyclotomic.from_json(v) for w, v in values.items()}
    for phi in one_dim_characters(H):
        if all(phi(h) == v for h, v in want.items()):
            return phi
    raise ValueError(f"no linear character of {H.describe()} takes the values {values}")


def load_input(source) -> ArithmeticInput:
    """Read an :class:`ArithmeticInput` from a JSON path, string or dict."""
    if isinstance(source, dict):
        data = source
    else:
        text = Path(source).read_text() if not str(source).lstrip().startswith("{") else str(source)
        data = json.loads(text)
    G, table = group_from_description(data["group"])
    j = G.element(data["j"]) if "j" in data else complex_conjugation_element(G)
    places = {}
    for pd in data.get("places", []):
        places[pd["label"]] = PlaceData(
            pd["label"], int(pd["norm"]),
            _subgroup(G, pd["decomposition"]), _subgroup(G, pd["inertia"]),
            G.element(pd["frobenius"]))
    lv = data.get("l_values", {})
    l_values = {k: Cyclotomic.from_json(v) for k, v in lv.get("values", {}).items()}
    abelian = {}
    for ab in data.get("abelian", []):
        H = _subgroup(G, ab["subgroup"])
        phi = _match_phi(H, ab["phi"])
        abelian[ab["character"]] = AbelianInput.build(ab["character"], H, phi, ab["theta"])
    return ArithmeticInput(
        group=G, table=table, j=j, places=places,
        S=tuple(data.get("S", [])), T=tuple(data.get("T", [])),
        mu_order=int(data.get("mu_order", 2)), torsion_free=bool(data.get("torsion_free", True)),
        l_values=l_values, l_values_set=tuple(lv.get("S", [])),
        abelian=abelian, omit_trivial=bool(data.get("omit_trivial", False)),
        ramified=tuple(data.get("ramified", [])), name=data.get("name", ""),
        extra={k: v for k, v in data.items() if k in ("expected", "synthetic_T", "description")},
    )


def bundled_input(name: str = "d12_paper") -> ArithmeticInput:
    """Load one of the data files shipped with the package."""
    text = resources.files("brumer_forge").joinpath("data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return load_input(json.loads(text))


def bundled_json(name: str = "d12_paper") -> dict:
    text = resources.files("brumer_forge").joinpath("data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)
