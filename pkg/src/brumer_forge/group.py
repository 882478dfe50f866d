"""Finite groups as explicit multiplication tables.

Every constructor enumerates elements breadth-first from the identity by
right multiplication with the generators, so the element order is shortlex
in the generator words and each element carries its shortest word as a
printable label.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "ConjClassPartition",
    "cyclic",
    "dihedral",
    "generalized_quaternion",
    "z2_times_a4",
    "d12_paper",
    "direct_product",
    "conjugacy_classes",
    "center",
    "subgroups",
    "quotient",
    "abelianization",
    "complex_conjugation_element",
    "find_isomorphism",
    "SUBGROUP_LIMIT",
]

SUBGROUP_LIMIT = 1000
_FULL_ASSOC_LIMIT = 64
_ASSOC_SAMPLES = 100_000


def _compress_word(letters: Sequence[str]) -> str:
    if not letters:
        return "1"
    out = []
    for name, run in itertools.groupby(letters):
        k = len(list(run))
        out.append(name if k == 1 else f"{name}^{k}")
    return "".join(out)


@dataclass(frozen=True)
class ConjClassPartition:
    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    class_of: tuple[int, ...]

    def __len__(self):
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


class FiniteGroup:
    """A finite group given by its Cayley table.

    Parameters
    ----------
    table : array-like, shape (n, n)
        ``table[a][b]`` is the index of ``a*b``; index 0 must be the identity.
    name : str
        Used in printing and in the text serialization.
    labels : sequence of str, optional
        A printable word for each element.
    generators : dict, optional
        Generator label -> element index, used to parse words.
    check : bool
        Verify the group axioms (associativity exhaustively for ``n <= 64``,
        on 10^5 seeded random triples above).
    """

    def __init__(self, table, name: str = "G", labels: Sequence[str] | None = None,
                 generators: dict[str, int] | None = None, check: bool = True):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise ValueError("table must be a non-empty square array")
        self.size = int(arr.shape[0])
        self.name = name
        self.table = arr
        self.table.setflags(write=False)
        self._t = [tuple(int(v) for v in row) for row in arr]
        self.labels = tuple(labels) if labels is not None else tuple(
            "1" if i == 0 else f"g{i}" for i in range(self.size))
        self.generators = dict(generators or {})
        if check:
            self._validate()
        self._inv = tuple(row.index(0) for row in self._t)

    # ------------------------------------------------------------------ validation
    def _validate(self):
        n, T = self.size, self.table
        if T.min() < 0 or T.max() >= n:
            raise ValueError("table entries out of range")
        ident = np.arange(n)
        if not (np.array_equal(T[0], ident) and np.array_equal(T[:, 0], ident)):
            raise ValueError("index 0 is not a two-sided identity")
        for row in T:
            if len(set(row.tolist())) != n:
                raise ValueError("table is not a Latin square (missing inverses)")
        for col in T.T:
            if len(set(col.tolist())) != n:
                raise ValueError("table is not a Latin square (missing inverses)")
        if n <= _FULL_ASSOC_LIMIT:
            left = T[T]                      # left[a, b, c] = (ab)c
            right = T[np.arange(n)[:, None, None], T[None, :, :]]
            if not np.array_equal(left, right):
                raise ValueError("table is not associative")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, _ASSOC_SAMPLES))
            if not np.array_equal(T[T[a, b], c], T[a, T[b, c]]):
                raise ValueError("table is not associative")

    # ------------------------------------------------------------------ arithmetic
    @property
    def identity(self) -> int:
        return 0

    def mul(self, a: int, b: int) -> int:
        return self._t[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def conj(self, g: int, t: int) -> int:
        """``t^-1 g t``."""
        return self._t[self._t[self._inv[t]][g]][t]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self._inv[a], -k
        r = 0
        for _ in range(k % self.element_order(a) if a else 0):
            r = self._t[r][a]
        return r

    def element_order(self, a: int) -> int:
        return self._orders[a]

    @cached_property
    def _orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.size):
            k, x = 1, a
            while x != 0:
                x = self._t[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def exponent(self) -> int:
        from math import lcm
        e = 1
        for k in self._orders:
            e = lcm(e, k)
        return e

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def product(self, elems: Iterable[int]) -> int:
        r = 0
        for e in elems:
            r = self._t[r][e]
        return r

    # ------------------------------------------------------------------ words
    def element(self, word) -> int:
        """Parse a word such as ``"x^3y"``, ``"σ^2τ"`` or ``"σj"`` into an element index."""
        if isinstance(word, (int, np.integer)):
            return int(word)
        w = word.replace(" ", "").replace("*", "").replace("·", "")
        if w in ("", "1", "e"):
            return 0
        if w in self.labels:
            return self.labels.index(w)
        names = sorted(self.generators, key=len, reverse=True)
        if not names:
            raise ValueError(f"group {self.name} has no generator labels")
        pat = re.compile("(" + "|".join(map(re.escape, names)) + r")(?:\^(-?\d+))?")
        pos, r = 0, 0
        while pos < len(w):
            m = pat.match(w, pos)
            if not m:
                raise ValueError(f"cannot parse {word!r} in group {self.name}")
            g = self.generators[m.group(1)]
            r = self._t[r][self.power(g, int(m.group(2) or 1))]
            pos = m.end()
        return r

    def label(self, a: int) -> str:
        return self.labels[a]

    # ------------------------------------------------------------------ structure
    @cached_property
    def classes(self) -> ConjClassPartition:
        class_of = [-1] * self.size
        classes = []
        for g in range(self.size):
            if class_of[g] >= 0:
                continue
            cls = sorted({self.conj(g, t) for t in range(self.size)})
            for h in cls:
                class_of[h] = len(classes)
            classes.append(tuple(cls))
        return ConjClassPartition(tuple(classes), tuple(c[0] for c in classes), tuple(class_of))

    def subgroup(self, generators: Iterable) -> "Subgroup":
        gens = [self.element(g) for g in generators]
        return Subgroup(self, _closure(self, gens))

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.size)))

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, (0,))

    def small_generating_set(self, within: Sequence[int] | None = None) -> list[int]:
        elems = list(within) if within is not None else list(range(self.size))
        target = set(elems)
        gens: list[int] = []
        cur = {0}
        for g in sorted(elems, key=lambda e: (-self._orders[e], e)):
            if cur == target:
                break
            if g not in cur:
                gens.append(g)
                cur = set(_closure(self, gens))
        return gens

    def to_text(self) -> str:
        lines = [f"group {self.name} {self.size}"]
        lines += [" ".join(str(v) for v in row) for row in self._t]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FiniteGroup":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        head = lines[0].split()
        if len(head) != 3 or head[0] != "group":
            raise ValueError("expected header 'group <name> <order>'")
        n = int(head[2])
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError(f"expected {n} rows of {n} entries")
        return cls(rows, name=head[1])

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.size})"


class Subgroup:
    """A subgroup of a :class:`FiniteGroup`, stored as sorted member indices."""

    __slots__ = ("parent", "members", "_set", "__dict__")

    def __init__(self, parent: FiniteGroup, members: Iterable[int], check: bool = False):
        self.parent = parent
        self.members = tuple(sorted(set(members)))
        self._set = frozenset(self.members)
        if check:
            if 0 not in self._set:
                raise ValueError("subgroup must contain the identity")
            for a in self.members:
                for b in self.members:
                    if parent.mul(a, parent.inv(b)) not in self._set:
                        raise ValueError("member set is not closed")

    @property
    def size(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g) -> bool:
        return g in self._set

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.parent is self.parent and other._set == self._set

    def __hash__(self):
        return hash((id(self.parent), self._set))

    def __le__(self, other: "Subgroup"):
        return self._set <= other._set

    def index(self) -> int:
        return self.parent.size // self.size

    def is_normal(self) -> bool:
        G = self.parent
        return all(G.conj(h, t) in self._set for h in self.members for t in range(G.size))

    @cached_property
    def group(self) -> FiniteGroup:
        """The subgroup as a standalone group; element ``i`` is ``members[i]``."""
        pos = {g: i for i, g in enumerate(self.members)}
        P = self.parent
        table = [[pos[P.mul(a, b)] for b in self.members] for a in self.members]
        labels = [P.labels[g] for g in self.members]
        gens = {k: pos[v] for k, v in P.generators.items() if v in pos}
        name = f"{P.name}{self.describe()}" if self.size < P.size else P.name
        return FiniteGroup(table, name=name, labels=labels, generators=gens, check=False)

    def local(self, g: int) -> int:
        """Index inside :attr:`group` of the parent element ``g``."""
        return self._pos[g]

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {g: i for i, g in enumerate(self.members)}

    def left_cosets(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        G = self.parent
        for g in range(G.size):
            if g in seen:
                continue
            c = tuple(sorted(G.mul(g, h) for h in self.members))
            seen.update(c)
            out.append(c)
        return out

    def coset_representatives(self) -> list[int]:
        """Minimal representatives ``t_i`` of the left cosets ``t_i H``."""
        return [c[0] for c in self.left_cosets()]

    def describe(self) -> str:
        gens = _gens_idx(self)
        return "<" + ", ".join(self.parent.labels[g] for g in gens) + ">" if gens else "<1>"

    def __repr__(self):
        return f"Subgroup({self.describe()} of {self.parent.name}, order={self.size})"


def _gens_idx(H: Subgroup) -> list[int]:
    return H.parent.small_generating_set(H.members)


def _closure(G: FiniteGroup, gens: Iterable[int]) -> tuple[int, ...]:
    gens = [g for g in gens if g != 0]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return tuple(sorted(seen))


# ---------------------------------------------------------------------- constructors
def _from_generators(name: str, identity: Hashable, gens: Sequence[tuple[str, Hashable]],
                     mul: Callable[[Hashable, Hashable], Hashable], check: bool = True) -> FiniteGroup:
    elems = [identity]
    words: list[list[str]] = [[]]
    index = {identity: 0}
    k = 0
    while k < len(elems):
        for lab, g in gens:
            e = mul(elems[k], g)
            if e not in index:
                index[e] = len(elems)
                elems.append(e)
                words.append(words[k] + [lab])
        k += 1
    n = len(elems)
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    labels = [_compress_word(w) for w in words]
    return FiniteGroup(table, name=name, labels=labels,
                       generators={lab: index[g] for lab, g in gens}, check=check)


def cyclic(n: int, label: str = "x") -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic order must be positive")
    gens = [(label, 1 % n)] if n > 1 else []
    G = _from_generators(f"C{n}", 0, gens, lambda a, b: (a + b) % n)
    if n == 1:
        G.generators = {label: 0}
    return G


def dihedral(N: int, labels: tuple[str, str] = ("x", "y")) -> FiniteGroup:
    """Dihedral group of order ``N``: ``<x, y | x^(N/2) = y^2 = 1, y x y^-1 = x^-1>``."""
    if N < 4 or N % 2:
        raise ValueError("dihedral order must be even and at least 4")
    n = N // 2

    def mul(a, b):
        # elements (b, k) = y^b x^k
        (b1, k1), (b2, k2) = a, b
        return ((b1 + b2) % 2, ((-k1 if b2 else k1) + k2) % n)

    return _from_generators(f"D{N}", (0, 0), [(labels[0], (0, 1)), (labels[1], (1, 0))], mul)


def generalized_quaternion(n: int) -> FiniteGroup:
    """``Q_{2^(n+2)} = <x, y | x^(2^n) = y^2, x^(2^(n+1)) = 1, y x y^-1 = x^-1>``."""
    if n < 1:
        raise ValueError("generalized quaternion parameter must be at least 1")
    M = 2 ** (n + 1)

    def mul(a, b):
        (b1, k1), (b2, k2) = a, b
        k = (-k1 if b2 else k1) + k2
        if b1 + b2 == 2:
            k += M // 2
        return ((b1 + b2) % 2, k % M)

    return _from_generators(f"Q{2 * M}", (0, 0), [("x", (0, 1)), ("y", (1, 0))], mul)


def _perm_mul(p, q):
    # composition "p then q" so words read left to right act on the right
    return tuple(q[p[i]] for i in range(len(p)))


def z2_times_a4() -> FiniteGroup:
    """``Z/2 x A_4`` with ``x = (12)(34)``, ``y = (123)`` and the central ``j``."""
    e = (0, 1, 2, 3)
    x = (1, 0, 3, 2)
    y = (1, 2, 0, 3)

    def mul(a, b):
        return ((a[0] + b[0]) % 2, _perm_mul(a[1], b[1]))

    return _from_generators("Z2xA4", (0, e), [("x", (0, x)), ("y", (0, y)), ("j", (1, e))], mul)


def d12_paper() -> FiniteGroup:
    """``Z/2 x S_3`` with ``σ`` of order 3, ``τ`` of order 2 and central ``j``."""
    def mul(a, b):
        (s1, b1, k1), (s2, b2, k2) = a, b
        return ((s1 + s2) % 2, (b1 + b2) % 2, ((-k1 if b2 else k1) + k2) % 3)

    return _from_generators("D12", (0, 0, 0),
                            [("σ", (0, 0, 1)), ("τ", (0, 1, 0)), ("j", (1, 0, 0))], mul)


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """``A x B`` with componentwise law; generator labels of ``B`` are primed on collision."""
    gens = [(lab, (g, 0)) for lab, g in A.generators.items()]
    taken = set(A.generators)
    for lab, g in B.generators.items():
        while lab in taken:
            lab += "'"
        taken.add(lab)
        gens.append((lab, (0, g)))
    if not gens:
        gens = [("e", (0, 0))]

    def mul(a, b):
        return (A.mul(a[0], b[0]), B.mul(a[1], b[1]))

    G = _from_generators(name or f"{A.name}x{B.name}", (0, 0), gens, mul, check=False)
    if G.size != A.size * B.size:
        # generator labels missing on one factor: fall back to all elements
        gens = [(A.labels[a] + "|" + B.labels[b], (a, b)) for a in range(A.size) for b in range(B.size) if a or b]
        G = _from_generators(name or f"{A.name}x{B.name}", (0, 0), gens, mul, check=False)
    return G


# ---------------------------------------------------------------------- queries
def conjugacy_classes(G: FiniteGroup) -> ConjClassPartition:
    return G.classes


def center(G: FiniteGroup) -> Subgroup:
    T = G.table
    members = [g for g in range(G.size) if np.array_equal(T[g], T[:, g])]
    return Subgroup(G, members)


def subgroups(G: FiniteGroup) -> list[Subgroup]:
    """All subgroups, by closing cyclic subgroups under joins with cyclic ones.

    Sorted by order, then by member list.
    """
    return list(_subgroups(G))


_SUBGROUP_CACHE: dict[int, tuple] = {}


def _subgroups(G: FiniteGroup) -> tuple[Subgroup, ...]:
    cached = G.__dict__.get("_subgroup_list")
    if cached is not None:
        return cached
    if G.size > SUBGROUP_LIMIT:
        raise ValueError(f"subgroup enumeration limited to order {SUBGROUP_LIMIT}")
    cyc = {}
    for g in range(G.size):
        c = frozenset(_closure(G, [g]))
        cyc.setdefault(c, g)
    found = set(cyc)
    frontier = list(found)
    cyclic_gens = list(cyc.values())
    while frontier:
        nxt = []
        for H in frontier:
            for g in cyclic_gens:
                if g in H:
                    continue
                K = frozenset(_closure(G, list(H) + [g]))
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    out = tuple(Subgroup(G, sorted(s)) for s in sorted(found, key=lambda s: (len(s), sorted(s))))
    G.__dict__["_subgroup_list"] = out
    return out


def commutator_subgroup(H: Subgroup | FiniteGroup) -> Subgroup:
    if isinstance(H, FiniteGroup):
        H = H.whole
    G = H.parent
    comms = {G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b)) for a in H.members for b in H.members}
    return Subgroup(G, _closure(G, comms))


def quotient(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """``G/N`` and the surjection as a tuple ``projection[g]``."""
    if N.parent is not G:
        raise ValueError("subgroup belongs to a different group")
    if not N.is_normal():
        raise ValueError("quotient requires a normal subgroup")
    cosets = N.left_cosets()             # already ordered by minimal element
    proj = [0] * G.size
    for i, c in enumerate(cosets):
        for g in c:
            proj[g] = i
    reps = [c[0] for c in cosets]
    table = [[proj[G.mul(a, b)] for b in reps] for a in reps]
    labels = [G.labels[r] for r in reps]
    gens = {}
    for lab, g in G.generators.items():
        if proj[g] != 0:
            gens[lab] = proj[g]
    Q = FiniteGroup(table, name=f"{G.name}/{N.describe()}", labels=labels, generators=gens)
    return Q, tuple(proj)


def abelianization(H: Subgroup | FiniteGroup) -> tuple[FiniteGroup, dict[int, int]]:
    """``H/[H,H]`` together with the projection, keyed by parent element index."""
    if isinstance(H, FiniteGroup):
        H = H.whole
    Hg = H.group
    D = commutator_subgroup(Hg)
    Q, proj = quotient(Hg, D)
    return Q, {g: proj[i] for i, g in enumerate(H.members)}


def complex_conjugation_element(G: FiniteGroup) -> int:
    """The unique central involution ``j``; raises if there is none or several."""
    invs = [g for g in center(G).members if G.element_order(g) == 2]
    if len(invs) != 1:
        raise ValueError(f"{G.name} has {len(invs)} central involutions; expected exactly one")
    return invs[0]


def find_isomorphism(A: FiniteGroup, B: FiniteGroup) -> tuple[int, ...] | None:
    """Brute-force isomorphism search by generator images; returns ``f`` with ``f[a]`` in ``B``."""
    if A.size != B.size or sorted(A._orders) != sorted(B._orders):
        return None
    gens = A.small_generating_set()
    # words: each element of A expressed through gens by BFS
    parent = {0: None}
    order = [0]
    k = 0
    while k < len(order):
        a = order[k]
        for i, g in enumerate(gens):
            b = A.mul(a, g)
            if b not in parent:
                parent[b] = (a, i)
                order.append(b)
        k += 1
    cands = [[b for b in range(B.size) if B.element_order(b) == A.element_order(g)] for g in gens]
    for images in itertools.product(*cands):
        f = [0] * A.size
        for a in order[1:]:
            p, i = parent[a]
            f[a] = B.mul(f[p], images[i])
        if len(set(f)) != A.size:
            continue
        if all(f[A.mul(a, b)] == B.mul(f[a], f[b]) for a in range(A.size) for b in range(A.size)):
            return tuple(f)
    return None
