"""Exact arithmetic in ``Q(zeta_N)[G]`` and its centre.

A :class:`GroupAlgebra` fixes an ordered list of irreducible characters of a
group (a builtin table when the group came from one, otherwise the monomial
search) and hands out idempotents, monomial representations and component
maps.  Central elements carry both the component vector and the group-ring
form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .character import (
    Character,
    CharacterTable,
    galois_orbit_exponents,
    induce,
    irreducible_characters_monomial,
    is_odd,
    one_dim_characters,
)
from .exactnum import Cyclotomic, as_cyclotomic, determinant, lcm, units_mod
from .group import FiniteGroup, Subgroup, complex_conjugation_element

__all__ = [
    "GroupRingElement",
    "CentralElement",
    "GroupAlgebra",
    "MonomialRep",
    "algebra",
    "e_chi",
    "pr_chi",
    "to_components",
    "from_components",
    "orbit_element",
    "conductor_member",
    "conductor_pushdown",
    "induced_idempotent_sum",
    "monomial_representation",
    "reduced_norm",
    "reduced_norm_matrix",
    "nr_ideal_sample",
    "w_K",
    "minus_part_iso",
    "minus_complement",
    "h_equals_conductor",
    "include",
    "lift_from_quotient",
    "norm_element",
    "parse_element",
]


def _zero(n: int) -> Cyclotomic:
    return Cyclotomic.rational(0, n)


def _at(v, n: int) -> Cyclotomic:
    v = as_cyclotomic(v)
    if v.order == n:
        return v
    if v.is_rational():
        return Cyclotomic.rational(v.coords[0], n)
    if n % v.order == 0:
        return v.embed(n)
    return v.to_order(n)


class GroupRingElement:
    """``sum_g coeffs[g] * g`` with coefficients in ``Q(zeta_order)``."""

    __slots__ = ("group", "order", "coeffs")

    def __init__(self, group: FiniteGroup, coeffs: Sequence, order: int | None = None):
        vals = [as_cyclotomic(c) for c in coeffs]
        if len(vals) != group.size:
            raise ValueError("need one coefficient per group element")
        if order is None:
            order = 1
            for v in vals:
                if not v.is_rational():
                    order = lcm(order, v.order)
        self.group = group
        self.order = order
        self.coeffs = tuple(_at(v, order) for v in vals)

    @classmethod
    def _raw(cls, group, coeffs, order):
        obj = object.__new__(cls)
        obj.group, obj.coeffs, obj.order = group, tuple(coeffs), order
        return obj

    # ------------------------------------------------------------------ constructors
    @classmethod
    def zero(cls, G: FiniteGroup, order: int = 1) -> "GroupRingElement":
        z = _zero(order)
        return cls._raw(G, [z] * G.size, order)

    @classmethod
    def one(cls, G: FiniteGroup) -> "GroupRingElement":
        return cls.basis(G, 0)

    @classmethod
    def basis(cls, G: FiniteGroup, g, coeff=1) -> "GroupRingElement":
        g = G.element(g)
        c = as_cyclotomic(coeff)
        z = _zero(c.order)
        vals = [z] * G.size
        vals[g] = c
        return cls._raw(G, vals, c.order)

    @classmethod
    def from_dict(cls, G: FiniteGroup, terms: dict) -> "GroupRingElement":
        vals: list = [0] * G.size
        for g, c in terms.items():
            i = G.element(g)
            vals[i] = as_cyclotomic(vals[i]) + as_cyclotomic(c)
        return cls(G, vals)

    @classmethod
    def parse(cls, G: FiniteGroup, text: str) -> "GroupRingElement":
        return parse_element(G, text)

    # ------------------------------------------------------------------ queries
    def __getitem__(self, g) -> Cyclotomic:
        return self.coeffs[self.group.element(g)]

    def support(self) -> list[int]:
        return [g for g, c in enumerate(self.coeffs) if not c.is_zero()]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs)

    def denominator(self) -> int:
        d = 1
        for c in self.coeffs:
            d = lcm(d, c.denominator())
        return d

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def is_central(self) -> bool:
        G = self.group
        gens = list(G.generators.values()) or list(range(G.size))
        for h in gens:
            # coefficient of g in h^-1 x h is x_{h g h^-1}
            for g in range(G.size):
                if self.coeffs[G.conj(g, G.inv(h))] != self.coeffs[g]:
                    return False
        return True

    def evaluate(self, chi) -> Cyclotomic:
        """``sum_g x_g chi(g)`` for a character (or any callable on elements)."""
        acc = _zero(lcm(self.order, getattr(chi, "order", 1)))
        for g, c in enumerate(self.coeffs):
            if not c.is_zero():
                acc = acc + c * chi(g)
        return acc

    def augmentation(self) -> Cyclotomic:
        acc = _zero(self.order)
        for c in self.coeffs:
            acc = acc + c
        return acc

    # ------------------------------------------------------------------ arithmetic
    def _coerce(self, other):
        if not isinstance(other, GroupRingElement):
            other = GroupRingElement.basis(self.group, 0, other)
        if other.group is not self.group:
            raise ValueError("elements of different group rings")
        if other.order == self.order:
            return self, other
        n = lcm(self.order, other.order)
        return self.to_order(n), other.to_order(n)

    def to_order(self, n: int) -> "GroupRingElement":
        if n == self.order:
            return self
        return GroupRingElement._raw(self.group, [_at(c, n) for c in self.coeffs], n)

    def __add__(self, other):
        if not isinstance(other, (GroupRingElement, Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._coerce(other)
        return GroupRingElement._raw(a.group, [x + y for x, y in zip(a.coeffs, b.coeffs)], a.order)

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement._raw(self.group, [-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other if isinstance(other, GroupRingElement) else -as_cyclotomic(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            c = as_cyclotomic(other)
            n = lcm(self.order, 1 if c.is_rational() else c.order)
            return GroupRingElement._raw(self.group, [_at(x * c, n) for x in self.coeffs], n)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        a, b = self._coerce(other)
        G, n = a.group, a.order
        T = G._t
        acc: dict[int, Cyclotomic] = {}
        bs = [(h, y) for h, y in enumerate(b.coeffs) if not y.is_zero()]
        for g, x in enumerate(a.coeffs):
            if x.is_zero():
                continue
            row = T[g]
            for h, y in bs:
                k = row[h]
                p = x * y
                acc[k] = acc[k] + p if k in acc else p
        z = _zero(n)
        return GroupRingElement._raw(G, [_at(acc.get(k, z), n) for k in range(G.size)], n)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return self * (1 / as_cyclotomic(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        r = GroupRingElement.one(self.group)
        for _ in range(k):
            r = r * self
        return r

    def galois(self, a: int) -> "GroupRingElement":
        return GroupRingElement._raw(self.group, [c.galois(a % self.order or 1) if self.order > 1 else c
                                                  for c in self.coeffs], self.order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyclotomic)):
            other = GroupRingElement.basis(self.group, 0, other)
        if not isinstance(other, GroupRingElement) or other.group is not self.group:
            return NotImplemented
        return all(x == y for x, y in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.group), tuple(hash(c) for c in self.coeffs)))

    # ------------------------------------------------------------------ printing
    def __str__(self):
        terms = []
        for g, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            lab = self.group.labels[g]
            cs = str(c)
            if not c.is_rational():
                cs = f"({cs})"
            if g == 0:
                terms.append(cs)
            elif cs == "1":
                terms.append(lab)
            elif cs == "-1":
                terms.append("-" + lab)
            else:
                terms.append(f"{cs}*{lab}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"GroupRingElement({self.group.name}: {self})"

    def to_json(self) -> dict:
        return {"group": self.group.name,
                "coeffs": {self.group.labels[g]: c.to_json() for g, c in enumerate(self.coeffs) if not c.is_zero()}}


# ---------------------------------------------------------------------- algebra context
@dataclass
class MonomialRep:
    """Monomial matrices of ``Ind_H^G phi`` on the basis of left cosets ``t_i H``.

    ``perm[g][j] = i`` and ``scalar[g][j] = phi(t_i^-1 g t_j)``; so
    ``rho(g)`` has the single nonzero entry ``scalar[g][j]`` in column ``j``,
    row ``perm[g][j]``.
    """

    character: Character
    subgroup: Subgroup
    phi: Character
    cosets: tuple[int, ...]
    perm: tuple[tuple[int, ...], ...]
    scalar: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.cosets)

    def matrix(self, g: int) -> list[list[Cyclotomic]]:
        n = self.character.order
        d = self.dim
        M = [[_zero(n) for _ in range(d)] for _ in range(d)]
        for j in range(d):
            M[self.perm[g][j]][j] = self.scalar[g][j]
        return M

    def apply(self, x: GroupRingElement) -> list[list[Cyclotomic]]:
        """``rho(x) = sum_g x_g rho(g)``."""
        n = lcm(self.character.order, x.order)
        d = self.dim
        M = [[_zero(n) for _ in range(d)] for _ in range(d)]
        for g, c in enumerate(x.coeffs):
            if c.is_zero():
                continue
            for j in range(d):
                i = self.perm[g][j]
                M[i][j] = M[i][j] + c * self.scalar[g][j]
        return M

    def trace(self, g: int) -> Cyclotomic:
        t = _zero(self.character.order)
        for j in range(self.dim):
            if self.perm[g][j] == j:
                t = t + self.scalar[g][j]
        return t


class CentralElement:
    """A central element of ``Q(zeta_N)[G]``: components (table order) plus group-ring form."""

    __slots__ = ("algebra", "components", "_element")

    def __init__(self, alg: "GroupAlgebra", components: Sequence, element: GroupRingElement | None = None):
        if len(components) != len(alg.characters):
            raise ValueError("need one component per irreducible character")
        self.algebra = alg
        self.components = tuple(as_cyclotomic(c) for c in components)
        self._element = element

    @property
    def group(self) -> FiniteGroup:
        return self.algebra.group

    @property
    def element(self) -> GroupRingElement:
        if self._element is None:
            acc = GroupRingElement.zero(self.group, self.algebra.order)
            for c, e in zip(self.components, self.algebra.idempotents):
                if not c.is_zero():
                    acc = acc + e * c
            self._element = acc
        return self._element

    def __getitem__(self, key) -> Cyclotomic:
        if isinstance(key, str):
            return self.components[self.algebra.names.index(key)]
        if isinstance(key, Character):
            return self.components[self.algebra.index(key)]
        return self.components[key]

    def _check(self, other):
        if not isinstance(other, CentralElement) or other.algebra is not self.algebra:
            raise ValueError("central elements of different algebras")

    def __add__(self, other):
        self._check(other)
        return CentralElement(self.algebra, [a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        self._check(other)
        return CentralElement(self.algebra, [a - b for a, b in zip(self.components, other.components)])

    def __neg__(self):
        return CentralElement(self.algebra, [-a for a in self.components])

    def __mul__(self, other):
        if isinstance(other, CentralElement):
            self._check(other)
            return CentralElement(self.algebra, [a * b for a, b in zip(self.components, other.components)])
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return CentralElement(self.algebra, [a * other for a in self.components])
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CentralElement) or other.algebra is not self.algebra:
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def components_integral(self) -> bool:
        """Membership in the maximal order of the centre (each component an algebraic integer)."""
        return all(c.is_integral() for c in self.components)

    def is_galois_equivariant(self) -> bool:
        alg = self.algebra
        for a in units_mod(alg.order):
            perm = alg.galois_permutation(a)
            for i, c in enumerate(self.components):
                if self.components[perm[i]] != _at(c, alg.order).galois(a):
                    return False
        return True

    def text_components(self) -> str:
        return "[" + ", ".join(f"{n}: {c}" for n, c in zip(self.algebra.names, self.components)) + "]"

    def __str__(self):
        return f"{self.text_components()} = {self.element}"

    def __repr__(self):
        return f"CentralElement({self.text_components()})"

    def to_json(self) -> dict:
        return {"components": {n: c.to_json() for n, c in zip(self.algebra.names, self.components)},
                "element": self.element.to_json()}


class GroupAlgebra:
    """Wedderburn data of ``Q[G]`` for a fixed ordered list of irreducible characters."""

    def __init__(self, G: FiniteGroup, table: CharacterTable | None = None):
        self.group = G
        table = table or G.__dict__.get("preferred_table")
        mono = irreducible_characters_monomial(G)
        if table is None:
            chars = mono
            names = [c.name for c in mono]
        else:
            chars = list(table.characters)
            names = list(table.names)
        witnesses = []
        for c in chars:
            match = next((m for m in mono if m == c), None)
            if match is None:
                raise ValueError(f"character {c} is not irreducible / not found by the monomial search")
            witnesses.append(match.witness)
        self.characters: tuple[Character, ...] = tuple(chars)
        self.names = tuple(names)
        self.witnesses = tuple(witnesses)
        self.order = G.exponent
        self._gperm: dict[int, tuple[int, ...]] = {}

    def index(self, chi: Character) -> int:
        for i, c in enumerate(self.characters):
            if c == chi:
                return i
        raise KeyError("character not in this algebra's table")

    def galois_permutation(self, a: int) -> tuple[int, ...]:
        a %= self.order
        if a not in self._gperm:
            self._gperm[a] = tuple(self.index(c.galois(a)) for c in self.characters)
        return self._gperm[a]

    @cached_property
    def idempotents(self) -> tuple[GroupRingElement, ...]:
        return tuple(_idempotent(c) for c in self.characters)

    @cached_property
    def reps(self) -> tuple[MonomialRep, ...]:
        return tuple(_monomial_rep(c, w) for c, w in zip(self.characters, self.witnesses))

    @cached_property
    def j(self) -> int:
        return complex_conjugation_element(self.group)

    def odd_mask(self) -> list[bool]:
        return [is_odd(c, self.j) for c in self.characters]

    def central(self, components: Sequence) -> CentralElement:
        return CentralElement(self, [_at(c, self.order) for c in components])

    def one(self) -> CentralElement:
        return CentralElement(self, [1] * len(self.characters))

    def orbit(self, i: int) -> list[int]:
        """Indices of the Galois conjugates of character ``i`` (with ``i`` first)."""
        out = []
        for a in galois_orbit_exponents(self.characters[i]):
            k = self.galois_permutation(a)[i]
            if k not in out:
                out.append(k)
        return out

    def orbit_representatives(self) -> list[int]:
        seen: set[int] = set()
        reps = []
        for i in range(len(self.characters)):
            if i not in seen:
                reps.append(i)
                seen.update(self.orbit(i))
        return reps


def algebra(G: FiniteGroup | CharacterTable) -> GroupAlgebra:
    """The (cached) :class:`GroupAlgebra` of a group or of a specific table."""
    if isinstance(G, CharacterTable):
        key = "_algebra_" + str(id(G))
        grp = G.group
        if key not in grp.__dict__:
            grp.__dict__[key] = GroupAlgebra(grp, G)
        return grp.__dict__[key]
    if "_algebra" not in G.__dict__:
        G.__dict__["_algebra"] = GroupAlgebra(G)
    return G.__dict__["_algebra"]


# ---------------------------------------------------------------------- idempotents
def _idempotent(chi: Character) -> GroupRingElement:
    G = chi.group
    N = chi.order
    scale = Fraction(chi.degree, G.size)
    coeffs = [chi(G.inv(g)) * scale for g in range(G.size)]
    return GroupRingElement._raw(G, coeffs, N)


def e_chi(chi: Character) -> GroupRingElement:
    """``e_chi = (chi(1)/|G|) sum_g chi(g^-1) g``."""
    return _idempotent(chi)


def pr_chi(chi: Character) -> GroupRingElement:
    """``pr_chi = sum_g chi(g^-1) g = (|G|/chi(1)) e_chi``."""
    G = chi.group
    return GroupRingElement._raw(G, [chi(G.inv(g)) for g in range(G.size)], chi.order)


def norm_element(H: Subgroup | FiniteGroup) -> GroupRingElement:
    """``Norm_H = sum_{h in H} h`` in the group ring of the parent."""
    if isinstance(H, FiniteGroup):
        H = H.whole
    G = H.parent
    return GroupRingElement(G, [1 if g in H else 0 for g in range(G.size)])


def include(x: GroupRingElement, H: Subgroup) -> GroupRingElement:
    """Push an element of ``Q(zeta)[H.group]`` into ``Q(zeta)[G]``."""
    if x.group is not H.group:
        raise ValueError("element does not live on H.group")
    G = H.parent
    z = _zero(x.order)
    vals = [z] * G.size
    for i, c in enumerate(x.coeffs):
        vals[H.members[i]] = c
    return GroupRingElement._raw(G, vals, x.order)


def lift_from_quotient(xbar: GroupRingElement, Hgroup: FiniteGroup, projection: Sequence[int]) -> GroupRingElement:
    """Lift along ``projection``, sending each coset to its smallest representative."""
    rep: dict[int, int] = {}
    for h in range(Hgroup.size):
        rep.setdefault(projection[h], h)
    z = _zero(xbar.order)
    vals = [z] * Hgroup.size
    for q, c in enumerate(xbar.coeffs):
        vals[rep[q]] = c
    return GroupRingElement._raw(Hgroup, vals, xbar.order)


def induced_idempotent_sum(chi: Character, H: Subgroup) -> GroupRingElement:
    """``sum e_phi`` over linear ``phi`` of ``H`` with ``Ind phi = chi``, as an element of ``Q(zeta)[G]``."""
    G = chi.group
    acc = GroupRingElement.zero(G, G.exponent)
    for phi in one_dim_characters(H):
        if induce(G, H, phi) == chi:
            acc = acc + include(e_chi(phi), H)
    return acc


# ---------------------------------------------------------------------- components
def to_components(x: GroupRingElement, alg: GroupAlgebra | None = None) -> CentralElement:
    """Scalar by which a central ``x`` acts on each ``V_chi``: ``chi(x)/chi(1)``."""
    alg = alg or algebra(x.group)
    if not x.is_central():
        raise ValueError("element is not central")
    comps = []
    n = lcm(alg.order, x.order)
    for chi in alg.characters:
        comps.append(_at(x.evaluate(chi) / chi.degree, n))
    return CentralElement(alg, comps, element=x)


def from_components(components, alg: GroupAlgebra | FiniteGroup) -> CentralElement:
    if isinstance(alg, FiniteGroup):
        alg = algebra(alg)
    if isinstance(components, dict):
        comps = [components.get(n, 0) for n in alg.names]
    else:
        comps = list(components)
    return CentralElement(alg, comps)


def orbit_element(alg: GroupAlgebra, i: int, alpha) -> CentralElement:
    """``sum_sigma alpha^sigma pr_{chi^sigma}`` over ``Gal(Q(chi)/Q)``; ``alpha`` must lie in ``Q(chi)``."""
    chi = alg.characters[i]
    alpha = _at(alpha, alg.order)
    if not chi.field.subfield().contains(alpha):
        raise ValueError("alpha does not lie in Q(chi)")
    scale = Fraction(alg.group.size, chi.degree)
    comps = [_zero(alg.order)] * len(alg.characters)
    for a in galois_orbit_exponents(chi):
        k = alg.galois_permutation(a)[i]
        comps[k] = alpha.galois(a) * scale
    return CentralElement(alg, comps)


def conductor_member(x: CentralElement | GroupRingElement, method: str = "trace") -> bool:
    """Membership in the central conductor of the maximal order over ``Z[G]``.

    Componentwise: ``(chi(1)/|G|) x_chi`` must lie in ``Q(chi)`` and in its
    inverse different, and the component map must be Galois-equivariant.
    ``method="trace"`` tests the inverse different of ``Q(chi)`` exactly via
    the trace pairing; ``method="cyclotomic"`` tests the inverse different of
    the cyclotomic overfield ``Q(zeta_m)``, which is only equivalent when
    ``Q(chi) = Q(zeta_m)`` or the extension is tamely ramified.
    """
    from .exactnum import in_inverse_different
    if isinstance(x, GroupRingElement):
        x = to_components(x)
    alg = x.algebra
    if not x.is_galois_equivariant():
        return False
    G = alg.group
    for chi, c in zip(alg.characters, x.components):
        y = c * Fraction(chi.degree, G.size)
        F = chi.field
        sub = F.subfield()
        if not sub.contains(y):
            return False
        if method == "trace":
            if not sub.in_inverse_different(y):
                return False
        elif method == "cyclotomic":
            if not in_inverse_different(y, F.m):
                return False
        else:
            raise ValueError(f"unknown method {method!r}")
    return True


def conductor_pushdown(x: CentralElement, i: int, H: Subgroup | None = None,
                       check: bool = True) -> GroupRingElement:
    """Rewrite ``x = sum_sigma x_chi^sigma pr_{chi^sigma}`` over the subgroup ``H``.

    Returns ``sum sigma_a(x_chi) pr_phi`` over the linear characters ``phi`` of
    ``H`` with ``Ind phi = chi^{sigma_a}``, as an element of ``Q(zeta)[H.group]``.
    With ``check`` the result is pushed back into ``G`` and compared with ``x``.
    """
    alg = x.algebra
    G = alg.group
    chi = alg.characters[i]
    if H is None:
        H = alg.witnesses[i][0]
    orbit = {alg.galois_permutation(a)[i]: a for a in reversed(galois_orbit_exponents(chi))}
    for k, c in enumerate(x.components):
        if k not in orbit and not c.is_zero():
            raise ValueError("element is not supported on the Galois orbit of chi")
    xchi = x.components[i] * Fraction(chi.degree, G.size)
    Hg = H.group
    acc = GroupRingElement.zero(Hg, alg.order)
    used = False
    for phi in one_dim_characters(H):
        ind = induce(G, H, phi)
        for k, a in orbit.items():
            if alg.characters[k] == ind:
                acc = acc + pr_chi(phi) * _at(xchi, alg.order).galois(a)
                used = True
                break
    if not used:
        raise ValueError("chi is not induced from a linear character of H")
    if check and include(acc, H) != x.element:
        raise ArithmeticError("pushdown does not reproduce x")
    return acc


# ---------------------------------------------------------------------- representations
def _monomial_rep(chi: Character, witness) -> MonomialRep:
    H, phi = witness
    G = chi.group
    N = chi.order
    cosets = tuple(H.coset_representatives())
    d = len(cosets)
    perm, scal = [], []
    for g in range(G.size):
        prow, srow = [], []
        for j, tj in enumerate(cosets):
            gt = G.mul(g, tj)
            for i, ti in enumerate(cosets):
                h = G.mul(G.inv(ti), gt)
                if h in H:
                    prow.append(i)
                    srow.append(_at(phi(H.local(h)), N))
                    break
        perm.append(tuple(prow))
        scal.append(tuple(srow))
    return MonomialRep(chi, H, phi, cosets, tuple(perm), tuple(scal))


def monomial_representation(chi: Character, witness=None) -> MonomialRep:
    """Monomial matrices realizing ``chi = Ind_H^G phi`` on the cosets of ``H``."""
    if witness is None:
        witness = chi.witness
    if witness is None:
        alg = algebra(chi.group)
        witness = alg.witnesses[alg.index(chi)]
    return _monomial_rep(chi, witness)


def reduced_norm(x: GroupRingElement, alg: GroupAlgebra | None = None) -> CentralElement:
    """Component at ``chi`` is ``det rho_chi(x)``."""
    alg = alg or algebra(x.group)
    comps = [determinant(rep.apply(x)) for rep in alg.reps]
    return CentralElement(alg, [_at(c, lcm(alg.order, x.order)) for c in comps])


def reduced_norm_matrix(M: Sequence[Sequence[GroupRingElement]], alg: GroupAlgebra | None = None) -> CentralElement:
    """Reduced norm of a square matrix over the group ring (determinant of the block matrix)."""
    n = len(M)
    if n == 0 or any(len(row) != n for row in M):
        raise ValueError("matrix must be square and non-empty")
    G = M[0][0].group
    alg = alg or algebra(G)
    order = alg.order
    for row in M:
        for e in row:
            order = lcm(order, e.order)
    comps = []
    for rep in alg.reps:
        d = rep.dim
        big = [[None] * (n * d) for _ in range(n * d)]
        for r in range(n):
            for c in range(n):
                blk = rep.apply(M[r][c])
                for i in range(d):
                    for k in range(d):
                        big[r * d + i][c * d + k] = blk[i][k]
        comps.append(_at(determinant(big), order))
    return CentralElement(alg, comps)


def random_element(G: FiniteGroup, rng: np.random.Generator, bound: int) -> GroupRingElement:
    return GroupRingElement(G, [int(v) for v in rng.integers(-bound, bound + 1, size=G.size)])


def nr_ideal_sample(G: FiniteGroup, count: int, matrix_size_bound: int = 2, coefficient_bound: int = 2,
                    seed: int = 0) -> list[CentralElement]:
    """Reduced norms of seeded pseudo-random integral matrices over ``Z[G]``."""
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(1, matrix_size_bound + 1))
        M = [[random_element(G, rng, coefficient_bound) for _ in range(n)] for _ in range(n)]
        out.append(reduced_norm_matrix(M))
    return out


def w_K(G: FiniteGroup | GroupAlgebra, mu_order: int) -> CentralElement:
    """``sum_chi mu^{chi(1)} e_chi``."""
    if mu_order < 1:
        raise ValueError("mu_order must be positive")
    alg = G if isinstance(G, GroupAlgebra) else algebra(G)
    return CentralElement(alg, [mu_order ** c.degree for c in alg.characters])


def h_equals_conductor(G: FiniteGroup, p: int) -> str:
    """``"equal"`` when every irreducible degree is prime to ``p``, else ``"unknown"``.

    Equality additionally presumes that the reduced-norm ideal is the whole
    centre of the maximal order; that part is taken as given.
    """
    degrees = [c.degree for c in algebra(G).characters]
    return "equal" if all(d % p for d in degrees) else "unknown"


# ---------------------------------------------------------------------- minus part
def minus_complement(G: FiniteGroup, j: int | None = None) -> Subgroup:
    """A complement ``H`` with ``G = H x <j>``.

    Prefers the subgroup generated by the generators other than ``j``.
    """
    if j is None:
        j = complex_conjugation_element(G)
    others = [g for lab, g in G.generators.items() if g != j]
    H = G.subgroup(others) if others else G.trivial
    if H.size * 2 == G.size and j not in H:
        return H
    from .group import subgroups
    for K in subgroups(G):
        if K.size * 2 == G.size and j not in K:
            return K
    raise ValueError("no complement to <j>")


def minus_part_iso(G: FiniteGroup, alpha: GroupRingElement, H: Subgroup | None = None) -> GroupRingElement:
    """Image of ``((1-j)/2) alpha`` in ``Q(zeta)[H]`` under ``j -> -1``."""
    j = complex_conjugation_element(G)
    H = H or minus_complement(G, j)
    Hg = H.group
    z = _zero(alpha.order)
    vals = [z] * Hg.size
    for g, c in enumerate(alpha.coeffs):
        if c.is_zero():
            continue
        if g in H:
            k = H.local(g)
            vals[k] = vals[k] + c
        else:
            k = H.local(G.mul(g, j))
            vals[k] = vals[k] - c
    return GroupRingElement._raw(Hg, vals, alpha.order)


# ---------------------------------------------------------------------- parsing
_SUPERSCRIPT = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹⁻", "0123456789-")


def _tokenize(text: str):
    text = text.replace("−", "-").replace("·", "*")
    # σ² -> σ^2
    text = re.sub("[⁻⁰¹²³⁴⁵⁶⁷⁸⁹]+", lambda m: "^" + m.group().translate(_SUPERSCRIPT), text)
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        c = text[pos]
        if c.isdigit():
            m = re.match(r"\d+", text[pos:])
            toks.append(("num", int(m.group())))
            pos += m.end()
        elif c.isalpha():
            m = re.match(r"(?:[^\W\d_]'*(?:\^-?\d+)?)+", text[pos:])
            toks.append(("word", m.group()))
            pos += m.end()
        elif c in "+-*/()":
            toks.append((c, c))
            pos += 1
        else:
            raise ValueError(f"unexpected character {c!r} in {text!r}")
    return toks


def parse_element(G: FiniteGroup, text: str) -> GroupRingElement:
    """Parse expressions like ``"(1/4)(1-j)(67-29(σ+σ^2)-7(τ+στ+σ^2τ))"``.

    Supports ``+ - * /`` (division by integers only), parentheses, implicit
    multiplication and group words in the generator labels.
    """
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    def expr():
        v = term()
        while peek() in ("+", "-"):
            op = take()[0]
            r = term()
            v = v + r if op == "+" else v - r
        return v

    def term():
        v = unary()
        while True:
            p = peek()
            if p == "*":
                take()
                v = _mul(v, unary())
            elif p == "/":
                take()
                d = unary()
                if isinstance(d, GroupRingElement):
                    raise ValueError("division by a group-ring element is not supported")
                v = v / d
            elif p in ("num", "word", "("):
                v = _mul(v, unary())
            else:
                return v

    def unary():
        if peek() == "-":
            take()
            return -unary()
        if peek() == "+":
            take()
            return unary()
        return atom()

    def atom():
        if peek() is None:
            raise ValueError(f"unexpected end of {text!r}")
        kind, val = take()
        if kind == "num":
            return Fraction(val)
        if kind == "word":
            return GroupRingElement.basis(G, G.element(val))
        if kind == "(":
            v = expr()
            if peek() != ")":
                raise ValueError(f"missing ')' in {text!r}")
            take()
            return v
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    v = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    if not isinstance(v, GroupRingElement):
        v = GroupRingElement.basis(G, 0, v)
    return v


def _mul(a, b):
    if isinstance(a, GroupRingElement) or isinstance(b, GroupRingElement):
        if not isinstance(a, GroupRingElement):
            return b * a
        return a * b
    return a * b
