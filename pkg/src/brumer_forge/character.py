"""Characters as exact class functions.

All values of a character of ``G`` are stored in ``Q(zeta_N)`` with ``N`` the
exponent of ``G``, so value vectors compare exactly and componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Callable, Sequence

from .exactnum import Cyclotomic, CyclotomicSubfield, as_cyclotomic, units_mod
from .group import (
    FiniteGroup,
    Subgroup,
    abelianization,
    complex_conjugation_element,
    d12_paper,
    dihedral,
    generalized_quaternion,
    subgroups,
    z2_times_a4,
)

__all__ = [
    "Character",
    "CharacterField",
    "CharacterTable",
    "one_dim_characters",
    "induce",
    "restrict",
    "inflate",
    "inner_product",
    "irreducible_characters_monomial",
    "galois_orbit",
    "character_field",
    "is_odd",
    "builtin_table",
    "monomial_table",
    "trivial_character",
]


def _to_order(v, N: int) -> Cyclotomic:
    v = as_cyclotomic(v)
    if v.order == N:
        return v
    if v.is_rational():
        return Cyclotomic.rational(v.coords[0], N)
    if N % v.order == 0:
        return v.embed(N)
    return v.to_order(N)


class Character:
    """A class function on ``group`` with cyclotomic values, one per conjugacy class.

    ``witness`` optionally records ``(H, phi)`` with ``self = Ind_H^G phi``
    and ``phi`` one-dimensional on ``H.group``.
    """

    __slots__ = ("group", "values", "name", "witness", "__dict__")

    def __init__(self, group: FiniteGroup, values: Sequence, name: str | None = None, witness=None):
        N = group.exponent
        vals = tuple(_to_order(v, N) for v in values)
        if len(vals) != len(group.classes):
            raise ValueError("need one value per conjugacy class")
        self.group = group
        self.values = vals
        self.name = name
        self.witness = witness

    @classmethod
    def from_function(cls, group: FiniteGroup, f: Callable[[int], object], name=None, check: bool = True):
        """Evaluate ``f`` on class representatives (and, with ``check``, verify it is a class function)."""
        cls_part = group.classes
        values = [f(r) for r in cls_part.representatives]
        if check:
            for c, v in zip(cls_part.classes, values):
                for g in c[1:]:
                    if as_cyclotomic(f(g)) != as_cyclotomic(v):
                        raise ValueError("function is not constant on conjugacy classes")
        return cls(group, values, name=name)

    def __call__(self, g: int) -> Cyclotomic:
        return self.values[self.group.classes.class_of[g]]

    @property
    def order(self) -> int:
        return self.group.exponent

    @cached_property
    def degree(self) -> int:
        d = self.values[0].rational_value()
        return int(d) if d.denominator == 1 else d

    def is_linear(self) -> bool:
        return self.degree == 1

    def conj(self) -> "Character":
        return Character(self.group, [v.conjugate() for v in self.values], name=_bar(self.name))

    def galois(self, a: int) -> "Character":
        a %= self.order
        if self.order == 1 or a == 1:
            return self
        return Character(self.group, [v.galois(a) for v in self.values])

    def __add__(self, other: "Character") -> "Character":
        _same(self, other)
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "Character") -> "Character":
        _same(self, other)
        return Character(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, Character):
            _same(self, other)
            return Character(self.group, [a * b for a, b in zip(self.values, other.values)])
        return Character(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Character) and other.group is self.group and other.values == self.values

    def __hash__(self):
        return hash((id(self.group), tuple(v.coords for v in self.values)))

    def norm2(self):
        return inner_product(self, self)

    def is_irreducible(self) -> bool:
        return self.norm2() == 1 and self.values[0].rational_value() > 0

    @cached_property
    def field(self) -> "CharacterField":
        return character_field(self)

    @property
    def field_order(self) -> int:
        return self.field.m

    def kernel(self) -> Subgroup:
        d = self.values[0]
        return Subgroup(self.group, [g for g in range(self.group.size) if self(g) == d])

    def __repr__(self):
        vals = ", ".join(str(v) for v in self.values)
        return f"Character({self.name or '?'}: [{vals}])"


def _bar(name):
    return None if name is None else name + "~"


def _same(a: Character, b: Character):
    if a.group is not b.group:
        raise ValueError("characters live on different groups")


@dataclass(frozen=True)
class CharacterField:
    """``Q(chi)`` as the fixed field of ``stabilizer <= (Z/m)^*`` inside ``Q(zeta_m)``."""

    m: int
    stabilizer: frozenset

    @property
    def degree(self) -> int:
        from .exactnum import totient
        return totient(self.m) // len(self.stabilizer)

    def subfield(self) -> CyclotomicSubfield:
        return _subfield(self.m, self.stabilizer)


_SUBFIELDS: dict = {}


def _subfield(m, stab) -> CyclotomicSubfield:
    key = (m, stab)
    if key not in _SUBFIELDS:
        _SUBFIELDS[key] = CyclotomicSubfield(m, stab)
    return _SUBFIELDS[key]


def _lift_unit(a: int, m: int, N: int) -> int:
    """A unit modulo ``N`` congruent to ``a`` modulo ``m`` (``m | N``)."""
    b = a % m if m > 1 else 1
    while gcd(b, N) != 1:
        b += m
    return b % N if N > 1 else 1


def character_field(chi: Character) -> CharacterField:
    from math import lcm
    m = 1
    for v in chi.values:
        m = lcm(m, v.minimal_order())
    N = chi.order
    stab = frozenset(a for a in units_mod(m) if chi.galois(_lift_unit(a, m, N)) == chi)
    return CharacterField(m, stab)


def galois_orbit(chi: Character) -> list[Character]:
    """Distinct conjugates ``chi^{sigma_a}``, ordered by the smallest ``a`` producing each."""
    out: list[Character] = []
    for a in units_mod(chi.order):
        c = chi.galois(a)
        if c not in out:
            out.append(c)
    return out


def galois_orbit_exponents(chi: Character) -> list[int]:
    """Smallest exponents ``a`` (mod ``chi.order``) giving each conjugate in :func:`galois_orbit` order."""
    seen: list[Character] = []
    exps: list[int] = []
    for a in units_mod(chi.order):
        c = chi.galois(a)
        if c not in seen:
            seen.append(c)
            exps.append(a)
    return exps


def trivial_character(G: FiniteGroup) -> Character:
    return Character(G, [1] * len(G.classes), name="1")


def inner_product(chi: Character, psi: Character):
    """``(1/|G|) sum_g chi(g) conj(psi(g))``; a Fraction when the result is rational."""
    _same(chi, psi)
    G = chi.group
    total = Cyclotomic.rational(0, G.exponent)
    for size, a, b in zip(G.classes.sizes, chi.values, psi.values):
        total = total + a * b.conjugate() * size
    total = total / G.size
    return total.rational_value() if total.is_rational() else total


def is_odd(chi: Character, j: int | None = None) -> bool:
    if j is None:
        j = complex_conjugation_element(chi.group)
    return chi(j) == -chi.values[0]


# ---------------------------------------------------------------------- construction
def _group_of(H) -> tuple[FiniteGroup, Subgroup]:
    if isinstance(H, Subgroup):
        return H.group, H
    return H, H.whole


def one_dim_characters(H) -> list[Character]:
    """All homomorphisms ``H -> C^*`` as characters of ``H`` (of ``H.group`` for a subgroup).

    Built on the abelianization by extending one generator at a time; the
    trivial character comes first.
    """
    Hg, Hs = _group_of(H)
    A, proj_parent = abelianization(Hs)
    proj = [proj_parent[g] for g in Hs.members]
    e = A.exponent
    gens = A.small_generating_set()
    # exponents psi(a) = zeta_e^{k(a)} for all a in A, built generator by generator
    partial = [{0: 0}]
    span = [0]
    for g in gens:
        og = A.element_order(g)
        new_partial = []
        for pmap in partial:
            # smallest power of g landing in the current span
            r, x = 1, g
            while x not in pmap:
                x = A.mul(x, g)
                r += 1
            base = pmap[x]
            for t in range(e):
                if (t * r - base) % e:
                    continue
                if (t * og) % e:
                    continue
                ext = dict(pmap)
                frontier = list(pmap.items())
                ok = True
                while frontier and ok:
                    nxt = []
                    for a, k in frontier:
                        b = A.mul(a, g)
                        kb = (k + t) % e
                        if b in ext:
                            if ext[b] != kb:
                                ok = False
                                break
                        else:
                            ext[b] = kb
                            nxt.append((b, kb))
                    frontier = nxt
                if ok:
                    new_partial.append(ext)
        partial = new_partial
    chars = []
    for pmap in partial:
        if len(pmap) != A.size:
            raise ArithmeticError("incomplete one-dimensional character")
        for a in range(A.size):
            for b in range(A.size):
                if (pmap[a] + pmap[b] - pmap[A.mul(a, b)]) % e:
                    raise ArithmeticError("extension is not a homomorphism")
        vals = [Cyclotomic.zeta(e, pmap[proj[r]]) for r in Hg.classes.representatives]
        chars.append(Character(Hg, vals))
    if len(chars) != A.size:
        raise ArithmeticError("wrong number of one-dimensional characters")
    chars.sort(key=lambda c: [v.coords for v in c.values] != [(1,) + (0,) * (c.values[0].phi - 1)] * len(c.values))
    return chars


def induce(G: FiniteGroup, H: Subgroup, phi: Character) -> Character:
    """``Ind_H^G phi (g) = (1/|H|) sum_{tau in G, tau^-1 g tau in H} phi(tau^-1 g tau)``."""
    if H.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if phi.group is not H.group:
        raise ValueError("phi must be a character of H.group")
    N = G.exponent
    vals = []
    for g in G.classes.representatives:
        counts: dict[int, int] = {}
        for t in range(G.size):
            c = G.conj(g, t)
            if c in H:
                k = phi.group.classes.class_of[H.local(c)]
                counts[k] = counts.get(k, 0) + 1
        acc = Cyclotomic.rational(0, N)
        for k, cnt in counts.items():
            acc = acc + _to_order(phi.values[k], N) * cnt
        vals.append(acc / H.size)
    return Character(G, vals, witness=(H, phi) if phi.degree == 1 else None)


def restrict(chi: Character, H: Subgroup) -> Character:
    if H.parent is not chi.group:
        raise ValueError("subgroup belongs to a different group")
    Hg = H.group
    return Character(Hg, [chi(H.members[r]) for r in Hg.classes.representatives])


def inflate(chibar: Character, G: FiniteGroup, projection: Sequence[int]) -> Character:
    """Pull back a character of ``G/N`` along ``projection[g]``."""
    return Character(G, [chibar(projection[r]) for r in G.classes.representatives], name=chibar.name)


def irreducible_characters_monomial(G: FiniteGroup) -> list[Character]:
    """Irreducible characters of a monomial group, each with a witness ``(H, phi)``.

    Subgroups are tried from largest to smallest (only those with
    ``[G:H]^2 <= |G|``), and within one order in enumeration order, so the
    witness of ``chi`` has ``|H| = |G|/chi(1)`` and the lowest index among such
    subgroups.  Raises if ``sum chi(1)^2 != |G|``.
    """
    cands = [H for H in subgroups(G) if (G.size // H.size) ** 2 <= G.size]
    cands.sort(key=lambda H: -H.size)     # stable: enumeration order within a size
    found: list[Character] = []
    total = 0
    for H in cands:
        if total == G.size:
            break
        for phi in one_dim_characters(H):
            chi = induce(G, H, phi)
            if chi in found:
                continue
            if inner_product(chi, chi) == 1:
                found.append(chi)
                total += chi.degree ** 2
    if total != G.size:
        raise ArithmeticError(f"{G.name}: monomial search found sum chi(1)^2 = {total} != {G.size}")
    for i, chi in enumerate(found):
        chi.name = f"χ{i + 1}"
    return found


# ---------------------------------------------------------------------- tables
class CharacterTable:
    def __init__(self, group: FiniteGroup, characters: Sequence[Character], names: Sequence[str] | None = None):
        self.group = group
        self.characters = tuple(characters)
        if names is not None:
            for c, n in zip(self.characters, names):
                c.name = n
        self.names = tuple(c.name or f"χ{i + 1}" for i, c in enumerate(self.characters))

    def __len__(self):
        return len(self.characters)

    def __iter__(self):
        return iter(self.characters)

    def __getitem__(self, key) -> Character:
        if isinstance(key, str):
            return self.characters[self.names.index(key)]
        return self.characters[key]

    @property
    def degrees(self) -> list[int]:
        return [c.degree for c in self.characters]

    def row_orthogonal(self) -> bool:
        return all(inner_product(a, b) == (1 if i == k else 0)
                   for i, a in enumerate(self.characters) for k, b in enumerate(self.characters))

    def column_orthogonal(self) -> bool:
        G = self.group
        ncls = len(G.classes)
        if len(self.characters) != ncls:
            return False
        for r in range(ncls):
            centralizer = G.size // G.classes.sizes[r]
            for s in range(ncls):
                tot = Cyclotomic.rational(0, G.exponent)
                for c in self.characters:
                    tot = tot + c.values[r] * c.values[s].conjugate()
                if tot != (centralizer if r == s else 0):
                    return False
        return True

    def row_permutation_to(self, other: "CharacterTable") -> list[int] | None:
        """``perm`` with ``self[i] == other[perm[i]]``, or None."""
        if other.group is not self.group or len(other) != len(self):
            return None
        perm = []
        for c in self.characters:
            try:
                perm.append(other.characters.index(c))
            except ValueError:
                return None
        return perm if len(set(perm)) == len(perm) else None

    def odd_characters(self, j: int | None = None) -> list[Character]:
        return [c for c in self.characters if is_odd(c, j)]

    def to_text(self) -> str:
        G = self.group
        head = [""] + [G.labels[r] for r in G.classes.representatives]
        rows = [[n] + [str(v) for v in c.values] for n, c in zip(self.names, self.characters)]
        widths = [max(len(r[i]) for r in [head] + rows) for i in range(len(head))]
        def fmt(r):
            return " | ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip()
        lines = [fmt(head), "-" * len(fmt(head))] + [fmt(r) for r in rows]
        return "\n".join(lines) + "\n"

    def to_machine(self) -> dict:
        G = self.group
        return {
            "group": G.name,
            "order": G.size,
            "classes": [{"representative": G.labels[r], "size": len(c)}
                        for r, c in zip(G.classes.representatives, G.classes.classes)],
            "characters": [{"name": n, "values": [v.to_json() for v in c.values]}
                           for n, c in zip(self.names, self.characters)],
        }


def monomial_table(G: FiniteGroup) -> CharacterTable:
    return CharacterTable(G, irreducible_characters_monomial(G))


def _nf(G: FiniteGroup, words: dict) -> dict[int, tuple]:
    out = {G.element(w): key for key, w in words.items()}
    if len(out) != G.size:
        raise AssertionError("normal forms do not cover the group")
    return out


def _table_d4p(p: int) -> CharacterTable:
    if p < 3 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
        raise ValueError("d4p needs an odd prime p")
    G = dihedral(4 * p)
    n = 2 * p
    nf = _nf(G, {(b, k): ("y" if b else "") + f"x^{k}" for b in (0, 1) for k in range(n)})
    lin = [
        ("χ1", lambda b, k: 1),
        ("χ2", lambda b, k: (-1) ** b),
        ("χ3", lambda b, k: (-1) ** k),
        ("χ4", lambda b, k: (-1) ** (k + b)),
    ]
    chars = [Character.from_function(G, lambda g, f=f: f(*nf[g]), name=name) for name, f in lin]

    def two_dim(t):
        def f(g):
            b, k = nf[g]
            return 0 if b else Cyclotomic.zeta(n, t * k) + Cyclotomic.zeta(n, -t * k)
        return f

    half = (p - 1) // 2
    # odd: x^2 -> zeta_p^m, x^p -> -1 ; even: x^2 -> zeta_p^m, x^p -> 1
    for m in range(1, half + 1):
        t = m if m % 2 else m + p
        chars.append(Character.from_function(G, two_dim(t), name=f"χ{4 + m}"))
    for m in range(1, half + 1):
        t = m + p if m % 2 else m
        chars.append(Character.from_function(G, two_dim(t), name=f"χ{4 + half + m}"))
    return CharacterTable(G, chars)


def _table_quaternion(n: int) -> CharacterTable:
    G = generalized_quaternion(n)
    M = 2 ** (n + 1)
    nf = _nf(G, {(b, k): ("y" if b else "") + f"x^{k}" for b in (0, 1) for k in range(M)})
    lin = [lambda b, k: 1, lambda b, k: (-1) ** b, lambda b, k: (-1) ** k, lambda b, k: (-1) ** (k + b)]
    chars = [Character.from_function(G, lambda g, f=f: f(*nf[g])) for f in lin]

    def two_dim(t):
        def f(g):
            b, k = nf[g]
            return 0 if b else Cyclotomic.zeta(M, t * k) + Cyclotomic.zeta(M, -t * k)
        return f

    for s in range(1, 2 ** (n - 1)):          # even, through the dihedral quotient
        chars.append(Character.from_function(G, two_dim(2 * s)))
    for m in range(1, 2 ** n, 2):             # odd and faithful
        chars.append(Character.from_function(G, two_dim(m)))
    return CharacterTable(G, chars, names=[f"χ{i + 1}" for i in range(len(chars))])


def _table_z2a4() -> CharacterTable:
    G = z2_times_a4()
    j = G.element("j")
    V = G.subgroup(["x", "yxy^2"])
    nf = {}
    for s in (0, 1):
        for c in range(3):
            for v in V.members:
                g = G.mul(G.power(j, s), G.mul(G.power(G.element("y"), c), v))
                nf[g] = (s, c, v)
    assert len(nf) == G.size

    def lin(c_exp, sign):
        return lambda g: Cyclotomic.zeta(3, c_exp * nf[g][1]) * ((-1) ** (sign * nf[g][0]))

    def three(sign):
        def f(g):
            s, c, v = nf[g]
            base = 0 if c else (3 if v == 0 else -1)
            return base * (-1) ** (sign * s)
        return f

    fs = [lin(0, 0), lin(0, 1), lin(1, 0), lin(1, 1), lin(2, 0), lin(2, 1), three(0), three(1)]
    chars = [Character.from_function(G, f) for f in fs]
    return CharacterTable(G, chars, names=[f"χ{i + 1}" for i in range(8)])


def _table_d12_paper() -> CharacterTable:
    G = d12_paper()
    nf = _nf(G, {(s, b, k): f"j^{s}τ^{b}σ^{k}" for s in (0, 1) for b in (0, 1) for k in range(3)})
    fs = [
        lambda s, b, k: 1,
        lambda s, b, k: (-1) ** s,
        lambda s, b, k: (-1) ** b,
        lambda s, b, k: (-1) ** (s + b),
        lambda s, b, k: 0 if b else (2 if k == 0 else -1),
        lambda s, b, k: 0 if b else (2 if k == 0 else -1) * (-1) ** s,
    ]
    chars = [Character.from_function(G, lambda g, f=f: f(*nf[g])) for f in fs]
    return CharacterTable(G, chars, names=[f"χ{i + 1}" for i in range(6)])


_TABLE_CACHE: dict = {}


def builtin_table(family: str, p: int | None = None, n: int | None = None) -> CharacterTable:
    """Character tables from closed forms.

    ``d4p`` (needs ``p``): linear characters ``χ1..χ4`` on ``y^b x^k``, then the
    odd two-dimensional ``χ(4+m) = Ind phi^m`` (``x^2 -> zeta_p^m, x^p -> -1``)
    for ``m = 1..(p-1)/2``, then the even two-dimensional ones.
    ``quaternion`` / ``q`` (needs ``n``): four linear characters, the even
    two-dimensional characters through the dihedral quotient, then the odd
    faithful ``Ind phi^m`` for odd ``m < 2^n``.
    ``z2a4``: rows ordered as (trivial, sign) x (A4 linear characters), then
    the two three-dimensional characters.
    ``d12_paper``: ``Z/2 x S3`` on generators ``σ, τ, j`` with ``χ5`` even and
    ``χ6`` odd.

    Cached per parameters, so repeated calls share one group object.
    """
    if family == "q":
        family = "quaternion"
    key = (family, p, n)
    if key not in _TABLE_CACHE:
        if family == "d4p":
            if p is None:
                raise ValueError("d4p needs p")
            t = _table_d4p(p)
        elif family in ("quaternion", "q"):
            if n is None:
                raise ValueError("quaternion needs n")
            t = _table_quaternion(n)
        elif family == "z2a4":
            t = _table_z2a4()
        elif family == "d12_paper":
            t = _table_d12_paper()
        else:
            raise ValueError(f"unknown family {family!r}")
        t.group.__dict__["preferred_table"] = t
        _TABLE_CACHE[key] = t
    return _TABLE_CACHE[key]
