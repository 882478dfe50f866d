"""Exact rational and cyclotomic arithmetic.

Elements of ``Q(zeta_n)`` are stored in the power basis ``1, zeta_n, ...,
zeta_n^(phi(n)-1)`` with :class:`fractions.Fraction` coordinates.  Because the
n-th cyclotomic polynomial is monic with integer coefficients, ``Z[zeta_n]``
is exactly the set of elements with integer coordinates.

Mixed-order arithmetic always embeds both operands into ``Q(zeta_lcm)``;
finding the smallest field containing a value is a separate, explicit step
(:meth:`Cyclotomic.minimal`).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "Fraction",
    "Cyclotomic",
    "GaloisAutomorphism",
    "CyclotomicSubfield",
    "totient",
    "cyclotomic_polynomial",
    "units_mod",
    "galois_apply",
    "complex_conjugate",
    "is_integral",
    "in_inverse_different",
    "arith",
    "as_cyclotomic",
    "determinant",
    "solve_rational",
]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def units_mod(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    return tuple(a for a in range(1, n) if gcd(a, n) == 1)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def _poly_divexact(num: list[int], den: Sequence[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] // lead
        out[i] = q
        for j, c in enumerate(den):
            num[i + j] -= q * c
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    # row k: power-basis coordinates of zeta_n^k, 0 <= k < n
    phi = totient(n)
    poly = cyclotomic_polynomial(n)
    rows = []
    cur = [1] + [0] * (phi - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for i in range(phi):
                cur[i] -= top * poly[i]
    return tuple(rows)


@lru_cache(maxsize=None)
def _nonzero_table(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    return tuple(tuple((i, v) for i, v in enumerate(row) if v) for row in _power_table(n))


_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(q) -> Fraction:
    if isinstance(q, Fraction):
        return q
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q)
    raise TypeError(f"cannot interpret {q!r} as a rational number")


class Cyclotomic:
    """An exact element of the cyclotomic field ``Q(zeta_order)``.

    Parameters
    ----------
    order : int
        The cyclotomic order ``n``.  Any positive integer is accepted; orders
        ``n`` and ``2n`` (n odd) describe the same field but are kept distinct
        until :meth:`minimal` is asked for.
    coords : sequence of rationals
        Power-basis coordinates, length ``phi(order)``.
    """

    __slots__ = ("order", "coords", "_min")

    def __init__(self, order: int, coords: Iterable):
        if order < 1:
            raise ValueError("order must be positive")
        coords = tuple(_frac(c) for c in coords)
        if len(coords) != totient(order):
            raise ValueError(f"expected {totient(order)} coordinates for order {order}, got {len(coords)}")
        self.order = order
        self.coords = coords
        self._min = None

    # ------------------------------------------------------------------ constructors
    @classmethod
    def _raw(cls, order: int, coords: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.order = order
        obj.coords = coords
        obj._min = None
        return obj

    @classmethod
    def rational(cls, q, order: int = 1) -> "Cyclotomic":
        q = _frac(q)
        return cls._raw(order, (q,) + (_ZERO,) * (totient(order) - 1))

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> "Cyclotomic":
        """The root of unity ``zeta_n^k``."""
        return cls._raw(n, tuple(Fraction(v) for v in _power_table(n)[k % n]))

    @classmethod
    def from_exponents(cls, n: int, terms) -> "Cyclotomic":
        """Build ``sum c * zeta_n^k`` from ``(k, c)`` pairs or a length-n sequence of c."""
        table = _nonzero_table(n)
        acc = [0] * totient(n)
        items = terms.items() if isinstance(terms, dict) else (
            enumerate(terms) if not _is_pair_iter(terms) else terms)
        for k, c in items:
            if not c:
                continue
            for i, v in table[k % n]:
                acc[i] += c * v
        return cls._raw(n, tuple(_frac(a) for a in acc))

    # ------------------------------------------------------------------ basic queries
    @property
    def phi(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def denominator(self) -> int:
        d = 1
        for c in self.coords:
            d = lcm(d, c.denominator)
        return d

    # ------------------------------------------------------------------ embeddings
    def embed(self, order: int) -> "Cyclotomic":
        """Re-express in ``Q(zeta_order)``; ``order`` must be a multiple of ``self.order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed order {self.order} into order {order}")
        step = order // self.order
        if self.is_rational():
            return Cyclotomic.rational(self.coords[0], order)
        return Cyclotomic.from_exponents(order, [(i * step, c) for i, c in enumerate(self.coords) if c])

    def lies_in(self, m: int) -> bool:
        """True iff this value lies in ``Q(zeta_m)``."""
        if self.is_rational() or self.order % m == 0 and m == self.order:
            return True
        big = lcm(self.order, m)
        x = self.embed(big)
        for a in units_mod(big):
            if a % m == 1 % m and a != 1 and x.galois(a) != x:
                return False
        return True

    def to_order(self, m: int) -> "Cyclotomic":
        """Express this value with cyclotomic order ``m``; it must lie in ``Q(zeta_m)``."""
        if m == self.order:
            return self
        if self.is_rational():
            return Cyclotomic.rational(self.coords[0], m)
        if m % self.order == 0:
            return self.embed(m)
        big = lcm(self.order, m)
        rows, inv = _restriction_data(m, big)
        x = self.embed(big).coords
        y = tuple(sum((inv[i][k] * x[r] for k, r in enumerate(rows)), _ZERO) for i in range(len(inv)))
        out = Cyclotomic._raw(m, y)
        if out.embed(big) != self.embed(big):
            raise ValueError(f"{self} does not lie in Q(zeta_{m})")
        return out

    def minimal_order(self) -> int:
        return self.minimal().order

    def minimal(self) -> "Cyclotomic":
        """The same value in the smallest ``Q(zeta_d)``, ``d | order``, containing it."""
        if self._min is None:
            if self.is_rational():
                self._min = Cyclotomic._raw(1, (self.coords[0],))
            else:
                for d in divisors(self.order):
                    if self.lies_in(d):
                        self._min = self.to_order(d) if d != self.order else self
                        break
        return self._min

    # ------------------------------------------------------------------ Galois action
    def galois(self, a: int) -> "Cyclotomic":
        n = self.order
        if gcd(a, n) != 1:
            raise ValueError(f"exponent {a} is not a unit modulo {n}")
        if a % n == 1 % n or self.is_rational():
            return self
        return Cyclotomic.from_exponents(n, [(a * i, c) for i, c in enumerate(self.coords) if c])

    def conjugate(self) -> "Cyclotomic":
        return self.galois(self.order - 1) if self.order > 2 else self

    def trace(self) -> Fraction:
        """Absolute trace ``Tr_{Q(zeta_n)/Q}``."""
        total = Cyclotomic.rational(0, self.order)
        for a in units_mod(self.order):
            total = total + self.galois(a)
        return total.rational_value()

    def norm(self) -> Fraction:
        prod = Cyclotomic.rational(1, self.order)
        for a in units_mod(self.order):
            prod = prod * self.galois(a)
        return prod.rational_value()

    # ------------------------------------------------------------------ arithmetic
    def _common(self, other):
        if not isinstance(other, Cyclotomic):
            other = Cyclotomic.rational(other, 1)
        if self.order == other.order:
            return self, other
        if other.is_rational():
            return self, Cyclotomic.rational(other.coords[0], self.order)
        if self.is_rational():
            return Cyclotomic.rational(self.coords[0], other.order), other
        n = lcm(self.order, other.order)
        return self.embed(n), other.embed(n)

    def __add__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic._raw(a.order, tuple(x + y for x, y in zip(a.coords, b.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-x for x in self.coords))

    def __sub__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic._raw(a.order, tuple(x - y for x, y in zip(a.coords, b.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.order, tuple(x * other for x in self.coords))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.is_rational():
            q = other.coords[0]
            return Cyclotomic._raw(self.order, tuple(x * q for x in self.coords))
        if self.is_rational():
            q = self.coords[0]
            return Cyclotomic._raw(other.order, tuple(q * y for y in other.coords))
        a, b = self._common(other)
        n = a.order
        conv: dict[int, Fraction] = {}
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for k, y in enumerate(b.coords):
                if y:
                    conv[i + k] = conv.get(i + k, 0) + x * y
        return Cyclotomic.from_exponents(n, conv)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic division by zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coords[0], self.order)
        n, phi = self.order, self.phi
        cols = [(self * Cyclotomic.zeta(n, i)).coords for i in range(phi)]
        matrix = [[cols[j][i] for j in range(phi)] for i in range(phi)]
        rhs = [_ONE] + [_ZERO] * (phi - 1)
        return Cyclotomic._raw(n, tuple(solve_rational(matrix, rhs)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("cyclotomic division by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Cyclotomic.rational(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # ------------------------------------------------------------------ comparison
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.order == other.order:
            return self.coords == other.coords
        a, b = self._common(other)
        return a.coords == b.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        m = self.minimal()
        return hash((m.order, m.coords))

    def __bool__(self):
        return not self.is_zero()

    # ------------------------------------------------------------------ printing
    def root_of_unity_form(self):
        """Return ``(sign, m, k)`` if the value is ``sign * zeta_m^k`` in lowest terms, else None."""
        m = self.minimal()
        if m.is_rational():
            q = m.coords[0]
            return (1 if q > 0 else -1, 1, 0) if abs(q) == 1 else None
        n = m.order
        for k in range(1, n):
            if gcd(k, n) != 1 and n % 2 == 1:
                continue
            z = Cyclotomic.zeta(n, k)
            for sign in (1, -1):
                if (z if sign == 1 else -z) == m:
                    return sign, n, k
        return None

    def __str__(self):
        m = self.minimal()
        if m.is_rational():
            return str(m.coords[0])
        form = m.root_of_unity_form()
        if form is not None:
            sign, n, k = form
            g = gcd(k, n)
            n, k = n // g, k // g
            body = f"ζ{n}" + (f"^{k}" if k != 1 else "")
            return ("-" if sign < 0 else "") + body
        parts = []
        for i, c in enumerate(m.coords):
            if not c:
                continue
            mono = "" if i == 0 else (f"ζ{m.order}" + (f"^{i}" if i > 1 else ""))
            if i == 0:
                term = str(c)
            elif c == 1:
                term = mono
            elif c == -1:
                term = "-" + mono
            else:
                term = f"{c}*{mono}"
            parts.append(term)
        out = parts[0]
        for t in parts[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return f"Cyclotomic({self.order}, [{', '.join(str(c) for c in self.coords)}])"

    def to_json(self) -> dict:
        return {"order": self.order, "coords": [str(c) for c in self.coords]}

    @classmethod
    def from_json(cls, data) -> "Cyclotomic":
        if isinstance(data, Cyclotomic):
            return data
        if isinstance(data, (int, str, Fraction)):
            return cls.rational(_frac(data))
        if isinstance(data, dict):
            if "root" in data:
                k, n = data["root"]
                return cls.zeta(int(n), int(k))
            return cls(int(data["order"]), [_frac(c) for c in data["coords"]])
        raise TypeError(f"cannot read cyclotomic literal {data!r}")


def _is_pair_iter(terms) -> bool:
    if isinstance(terms, (list, tuple)) and terms and isinstance(terms[0], tuple):
        return True
    return False


@lru_cache(maxsize=None)
def _restriction_data(m: int, big: int):
    # pivot rows and inverse for solving  B y = x  where B embeds Q(zeta_m) into Q(zeta_big)
    pm = totient(m)
    basis = [Cyclotomic.zeta(m, i).embed(big).coords for i in range(pm)]
    B = [[basis[j][i] for j in range(pm)] for i in range(totient(big))]
    rows: list[int] = []
    work: list[list[Fraction]] = []
    for r, row in enumerate(B):
        cand = list(row)
        for piv_row, (col, vec) in zip(rows, work):
            if cand[col]:
                f = cand[col] / vec[col]
                cand = [a - f * b for a, b in zip(cand, vec)]
        nz = [i for i, v in enumerate(cand) if v]
        if nz:
            rows.append(r)
            work.append((nz[0], cand))
        if len(rows) == pm:
            break
    sub = [B[r] for r in rows]
    inv = _invert(sub)
    return tuple(rows), inv


def _invert(matrix):
    n = len(matrix)
    cols = []
    for i in range(n):
        e = [_ZERO] * n
        e[i] = _ONE
        cols.append(solve_rational(matrix, e))
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def solve_rational(matrix, rhs):
    """Solve a square nonsingular rational system exactly by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [[_frac(v) for v in row] + [_frac(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        prow = [v / pv for v in aug[col]]
        aug[col] = prow
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], prow)]
    return [aug[r][n] for r in range(n)]


def determinant(matrix):
    """Fraction-free (Bareiss) determinant over Fractions or Cyclotomics.

    Works for any entries supporting ``+ - * /`` exactly; the divisions are
    exact by Sylvester's identity.
    """
    n = len(matrix)
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0 * a[0][0]
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num / prev if not (isinstance(prev, int) and prev == 1) else num
            a[i][k] = 0 * a[k][k]
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


# ---------------------------------------------------------------------- module-level operations
@dataclass(frozen=True)
class GaloisAutomorphism:
    """``sigma_a : zeta_n -> zeta_n^a`` on ``Q(zeta_n)``."""

    order: int
    exponent: int

    def __post_init__(self):
        if self.order < 1 or gcd(self.exponent, self.order) != 1:
            raise ValueError(f"{self.exponent} is not a unit modulo {self.order}")
        object.__setattr__(self, "exponent", self.exponent % self.order if self.order > 1 else 1)

    def __call__(self, x: Cyclotomic) -> Cyclotomic:
        return galois_apply(self, x)

    def compose(self, other: "GaloisAutomorphism") -> "GaloisAutomorphism":
        if other.order != self.order:
            raise ValueError("order mismatch")
        return GaloisAutomorphism(self.order, self.exponent * other.exponent % self.order or 1)


def as_cyclotomic(x) -> Cyclotomic:
    return x if isinstance(x, Cyclotomic) else Cyclotomic.rational(x)


def galois_apply(sigma: GaloisAutomorphism, x) -> Cyclotomic:
    x = as_cyclotomic(x)
    if x.is_rational():
        return x
    if sigma.order != x.order:
        raise ValueError(f"automorphism of order {sigma.order} applied to element of order {x.order}")
    return x.galois(sigma.exponent)


def complex_conjugate(x) -> Cyclotomic:
    return as_cyclotomic(x).conjugate()


def is_integral(x) -> bool:
    return as_cyclotomic(x).is_integral()


def arith(x, y, op: str) -> Cyclotomic:
    x, y = as_cyclotomic(x), as_cyclotomic(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def different_generator(m: int) -> Cyclotomic:
    """``Phi_m'(zeta_m)``, a generator of the different of ``Q(zeta_m)/Q``."""
    poly = cyclotomic_polynomial(m)
    return Cyclotomic.from_exponents(m, [(i - 1, i * c) for i, c in enumerate(poly) if i and c])


def in_inverse_different(x, m: int) -> bool:
    """Membership of ``x`` in the inverse different of ``Q(zeta_m)/Q``."""
    x = as_cyclotomic(x)
    if not x.lies_in(m):
        raise ValueError(f"{x} does not lie in Q(zeta_{m})")
    return (x.to_order(m) * different_generator(m)).is_integral()


# ---------------------------------------------------------------------- integer lattices
def _integer_basis(vectors: list[list[int]]) -> list[list[int]]:
    """Echelon Z-basis of the lattice spanned by integer row vectors."""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    basis = []
    for col in range(ncols):
        active = [r for r in rows if r[col]]
        rest = [r for r in rows if not r[col]]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            new_active = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r2 = [a - q * b for a, b in zip(r, piv)]
                (new_active if r2[col] else rest).append(r2)
            active = new_active
            if len(active) == 1:
                break
        if active:
            piv = active[0]
            if piv[col] < 0:
                piv = [-a for a in piv]
            basis.append(piv)
        rows = [r for r in rest if any(r)]
        if not rows:
            break
    return basis


class CyclotomicSubfield:
    """The fixed field ``F`` of a subgroup ``H <= (Z/m)^*`` acting on ``Q(zeta_m)``.

    Provides the ring of integers (as the ``H``-fixed part of ``Z[zeta_m]``),
    the trace to ``Q`` and exact membership in the inverse different
    ``D^{-1}(F/Q)``, tested through the trace pairing.  The trace-dual test is
    exact even when ``Q(zeta_m)/F`` is wildly ramified, where intersecting
    ``D^{-1}(Q(zeta_m)/Q)`` with ``F`` would overshoot.
    """

    def __init__(self, order: int, stabilizer: Iterable[int]):
        self.order = order
        stab = frozenset(a % order if order > 1 else 1 for a in stabilizer) or frozenset({1 % order if order > 1 else 1})
        units = set(units_mod(order))
        if not stab <= units:
            raise ValueError("stabilizer must consist of units")
        for a in stab:
            for b in stab:
                if (a * b) % order not in stab and order > 1:
                    raise ValueError("stabilizer is not a subgroup")
        self.stabilizer = stab
        reps, seen = [], set()
        for a in units_mod(order):
            if a not in seen:
                reps.append(a)
                seen.update((a * h) % order if order > 1 else 1 for h in stab)
        self.coset_reps = tuple(reps)
        self._basis = None
        self._dual = None
        self._gen = None

    @property
    def degree(self) -> int:
        return len(self.coset_reps)

    def _lift(self, x) -> Cyclotomic:
        x = as_cyclotomic(x)
        return x.to_order(self.order)

    def contains(self, x) -> bool:
        x = as_cyclotomic(x)
        if not x.lies_in(self.order):
            return False
        y = self._lift(x)
        return all(y.galois(a) == y for a in self.stabilizer)

    def trace(self, x) -> Fraction:
        y = self._lift(x)
        total = Cyclotomic.rational(0, self.order)
        for a in self.coset_reps:
            total = total + y.galois(a)
        return total.rational_value()

    def norm(self, x) -> Fraction:
        y = self._lift(x)
        prod = Cyclotomic.rational(1, self.order)
        for a in self.coset_reps:
            prod = prod * y.galois(a)
        return prod.rational_value()

    def integral_basis(self) -> tuple[Cyclotomic, ...]:
        if self._basis is None:
            m = self.order
            phi = totient(m)
            s = len(self.stabilizer)
            images = []
            for i in range(phi):
                z = Cyclotomic.zeta(m, i)
                acc = Cyclotomic.rational(0, m)
                for a in self.stabilizer:
                    acc = acc + z.galois(a)
                images.append([int(c) for c in acc.coords])
            base = _integer_basis(images)
            r = len(base)
            if s ** r > 2_000_000:
                raise ValueError("subfield too large for lattice saturation")
            extra = []
            for coeffs in itertools.product(range(s), repeat=r):
                if not any(coeffs):
                    continue
                v = [sum(c * b[k] for c, b in zip(coeffs, base)) for k in range(phi)]
                if all(t % s == 0 for t in v):
                    extra.append([t // s for t in v])
            basis = _integer_basis(base + extra)
            self._basis = tuple(Cyclotomic(m, row) for row in basis)
        return self._basis

    def discriminant(self) -> Fraction:
        b = self.integral_basis()
        gram = [[Fraction(self.trace(x * y)) for y in b] for x in b]
        return determinant(gram)

    def dual_basis(self) -> tuple[Cyclotomic, ...]:
        """Z-basis of ``D^{-1}(F/Q)``: the trace-dual of the integral basis."""
        if self._dual is None:
            b = self.integral_basis()
            gram = [[self.trace(x * y) for y in b] for x in b]
            inv = _invert(gram)
            dual = []
            for i in range(len(b)):
                acc = Cyclotomic.rational(0, self.order)
                for j, bj in enumerate(b):
                    if inv[i][j]:
                        acc = acc + bj * inv[i][j]
                dual.append(acc)
            self._dual = tuple(dual)
        return self._dual

    def in_inverse_different(self, x) -> bool:
        x = as_cyclotomic(x)
        if not self.contains(x):
            raise ValueError(f"{x} does not lie in the subfield")
        return all(self.trace(x * b).denominator == 1 for b in self.integral_basis())

    def inverse_different_generator(self, bound: int = 4) -> Cyclotomic:
        """A generator of the (principal) ideal ``D^{-1}(F/Q)``.

        Searches small combinations of the dual basis for an element whose
        absolute norm equals ``1/|disc F|``.
        """
        if self._gen is None:
            dual = self.dual_basis()
            target = abs(1 / self.discriminant())
            r = len(dual)
            for B in range(1, bound + 1):
                for coeffs in sorted(itertools.product(range(-B, B + 1), repeat=r),
                                     key=lambda c: (sum(map(abs, c)), [-v for v in c])):
                    if max(map(abs, coeffs)) != B and B > 1:
                        continue
                    if not any(coeffs):
                        continue
                    d = Cyclotomic.rational(0, self.order)
                    for c, v in zip(coeffs, dual):
                        if c:
                            d = d + v * c
                    if abs(self.norm(d)) == target:
                        self._gen = d
                        return d
            raise ValueError("no generator of the inverse different found within bound")
        return self._gen
