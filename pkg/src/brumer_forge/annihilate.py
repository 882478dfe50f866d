"""Mock class-group modules and exact checks of the reduction identities.

A :class:`MockClassModule` is a finite abelian group ``Z/n_1 + ... + Z/n_r``
with an explicit left action of ``G`` by integer matrices.  Group-ring
elements with rational coefficients act once their denominators are inverted
modulo the exponent of the module.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from pathlib import Path
from typing import Sequence

from .character import Character, galois_orbit_exponents, induce, one_dim_characters
from .exactnum import Cyclotomic
from .group import FiniteGroup, Subgroup
from .groupring import (
    CentralElement,
    GroupAlgebra,
    GroupRingElement,
    _at,
    algebra,
    include,
    lift_from_quotient,
    norm_element,
    orbit_element,
    pr_chi,
)
from .stickelberger import AbelianInput, PlaceData, delta_T, euler_factor_eps

__all__ = [
    "MockClassModule",
    "AnnihilationReport",
    "ReductionReport",
    "BrumerStarkExponents",
    "act",
    "annihilates",
    "verify_reduction_identity",
    "reduction_identity_report",
    "brumer_stark_exponents",
    "load_module",
]

Matrix = tuple[tuple[int, ...], ...]


def _mat_mul(A: Matrix, B: Matrix, orders) -> Matrix:
    d = len(orders)
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(d)) % orders[i] for j in range(d)) for i in range(d))


def _mat_vec(A: Matrix, v, orders) -> tuple[int, ...]:
    d = len(orders)
    return tuple(sum(A[i][k] * v[k] for k in range(d)) % orders[i] for i in range(d))


class MockClassModule:
    """``+_i Z/n_i`` with a ``G``-action given on generators and extended multiplicatively."""

    def __init__(self, group: FiniteGroup, orders: Sequence[int], generator_action: dict):
        self.group = G = group
        self.orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in self.orders):
            raise ValueError("cyclic orders must be positive")
        d = len(self.orders)
        gens = {}
        for w, M in generator_action.items():
            g = G.element(w) if isinstance(w, str) else int(w)
            M = tuple(tuple(int(a) % self.orders[i] for a in row) for i, row in enumerate(M))
            if len(M) != d or any(len(r) != d for r in M):
                raise ValueError(f"action matrix for {w!r} has the wrong shape")
            for i in range(d):
                for k in range(d):
                    # image of n_k e_k must vanish in Z/n_i
                    if (M[i][k] * self.orders[k]) % self.orders[i]:
                        raise ValueError(f"action matrix for {w!r} is not well defined on Z/n_i")
            gens[g] = M
        ident = tuple(tuple(1 % self.orders[i] if i == k else 0 for k in range(d)) for i in range(d))
        action = {G.identity: ident}
        queue = deque([G.identity])
        while queue:
            g = queue.popleft()
            for s, M in gens.items():
                h = G.mul(g, s)
                if h not in action:
                    action[h] = _mat_mul(action[g], M, self.orders)
                    queue.append(h)
        if len(action) != G.size:
            raise ValueError("generator action does not reach every group element")
        self.action = [action[g] for g in range(G.size)]
        for a in range(G.size):
            for b in range(G.size):
                if _mat_mul(self.action[a], self.action[b], self.orders) != self.action[G.mul(a, b)]:
                    raise ValueError("generator action violates a group relation")

    @property
    def exponent(self) -> int:
        return lcm(*self.orders) if self.orders else 1

    @property
    def rank(self) -> int:
        return len(self.orders)

    def basis(self) -> list[tuple[int, ...]]:
        d = self.rank
        return [tuple(1 % self.orders[i] if i == k else 0 for i in range(d)) for k in range(d)]

    def apply(self, g: int, v) -> tuple[int, ...]:
        return _mat_vec(self.action[g], v, self.orders)

    def reduce(self, v) -> tuple[int, ...]:
        return tuple(int(a) % n for a, n in zip(v, self.orders))

    def direct_sum(self, other: "MockClassModule") -> "MockClassModule":
        if other.group is not self.group:
            raise ValueError("modules over different groups")
        d1, d2 = self.rank, other.rank
        gens = {}
        for g in self.group.generators.values():
            A, B = self.action[g], other.action[g]
            M = [list(A[i]) + [0] * d2 for i in range(d1)] + [[0] * d1 + list(B[i]) for i in range(d2)]
            gens[g] = M
        return MockClassModule(self.group, self.orders + other.orders, gens)

    @classmethod
    def trivial_action(cls, G: FiniteGroup, orders: Sequence[int]) -> "MockClassModule":
        d = len(orders)
        ident = [[1 if i == k else 0 for k in range(d)] for i in range(d)]
        return cls(G, orders, {g: ident for g in G.generators.values()})

    def to_json(self) -> dict:
        G = self.group
        return {"orders": list(self.orders),
                "action": {lab: [list(r) for r in self.action[g]] for lab, g in G.generators.items()}}

    def __repr__(self):
        return f"MockClassModule({self.group.name}, orders={self.orders})"


def load_module(G: FiniteGroup, source) -> MockClassModule:
    """Module from ``{"orders": [...], "action": {generator word: matrix}}`` (dict, JSON text or path)."""
    if isinstance(source, dict):
        data = source
    else:
        s = str(source)
        data = json.loads(s if s.lstrip().startswith("{") else Path(s).read_text())
    return MockClassModule(G, data["orders"], data["action"])


def _scalar_mod(c: Cyclotomic, e: int) -> int:
    if not c.is_rational():
        raise ValueError("only rational group-ring coefficients can act on a mock module")
    q = Fraction(c.rational_value())
    if gcd(q.denominator, e) != 1:
        raise ArithmeticError(f"denominator {q.denominator} is not invertible modulo {e}")
    return (q.numerator * pow(q.denominator, -1, e)) % e if e > 1 else 0


def act(alpha: GroupRingElement, v, M: MockClassModule) -> tuple[int, ...]:
    """``alpha . v`` with denominators resolved by modular inverses."""
    if isinstance(alpha, CentralElement):
        alpha = alpha.element
    if alpha.group is not M.group:
        raise ValueError("element and module live over different groups")
    e = M.exponent
    out = [0] * M.rank
    for g in alpha.support():
        a = _scalar_mod(alpha.coeffs[g], e)
        if a:
            w = M.apply(g, v)
            out = [x + a * y for x, y in zip(out, w)]
    return M.reduce(out)


@dataclass
class AnnihilationReport:
    element: GroupRingElement
    annihilates: bool
    witness: tuple[int, ...] | None = None
    image: tuple[int, ...] | None = None

    def __bool__(self):
        return self.annihilates

    def __str__(self):
        if self.annihilates:
            return "annihilates"
        return f"does not annihilate: {self.witness} -> {self.image}"


def annihilates(alpha, M: MockClassModule) -> AnnihilationReport:
    """Test ``alpha . v = 0`` on the standard generators of ``M``."""
    if isinstance(alpha, CentralElement):
        alpha = alpha.element
    for v in M.basis():
        w = act(alpha, v, M)
        if any(w):
            return AnnihilationReport(alpha, False, v, w)
    return AnnihilationReport(alpha, True)


# ---------------------------------------------------------------------- reduction chain
@dataclass
class ReductionReport:
    character: str
    steps: list[tuple[str, bool]] = field(default_factory=list)
    lhs: GroupRingElement | None = None
    rhs: GroupRingElement | None = None

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.steps)

    def __str__(self):
        return "\n".join(f"  {'✓' if ok else '✗'} {name}" for name, ok in self.steps)


def reduction_identity_report(alg: GroupAlgebra, i: int, ab: AbelianInput, x=1,
                              T: Sequence[PlaceData] = (), eps_places: Sequence[PlaceData] = (),
                              theta: CentralElement | None = None) -> ReductionReport:
    """Check, as exact group-ring identities over ``Q(zeta)[G]``::

        sum_{phi'} c(phi') pr_{phi'}  =  sum_sigma (x delta eps phi'(theta))^sigma pr_{chi^sigma}
                                      =  (sum_sigma x^sigma pr_{chi^sigma}) theta^T

    where ``phi'`` runs over linear characters of ``H`` inducing a conjugate of
    ``chi``, together with ``pr_{phi^g} = lift(pr_{phi_bar^g}) Norm_{ker phi}``
    on the Galois orbit of ``phi``.  When ``theta`` is omitted it is assembled
    from ``ab`` alone, i.e. supported on the orbit of ``chi``.
    """
    G = alg.group
    chi = alg.characters[i]
    H, phi = ab.subgroup, ab.phi
    if induce(G, H, phi) != chi:
        raise ValueError(f"witness does not induce {alg.names[i]}")
    rep = alg.reps[i]
    n = alg.order
    factor = delta_T(chi, T, rep)
    for P in eps_places:
        factor = factor * euler_factor_eps(chi, P, rep)
    scal = _at(x, n) * factor
    v = ab.value()
    if not chi.field.subfield().contains(v):
        raise ValueError("phi'(theta) does not lie in Q(chi)")
    coeff = scal * v
    report = ReductionReport(alg.names[i])

    # orbit of chi: index -> exponent a with chi^{sigma_a} = chi_k
    orbit = {}
    for a in galois_orbit_exponents(chi):
        orbit.setdefault(alg.galois_permutation(a)[i], a)

    Hg = H.group
    ker = phi.kernel()
    norm_ker = norm_element(ker)
    N = lcm(n, v.order, phi.order)
    lhs = GroupRingElement.zero(Hg, N)
    lifts_ok = True
    phi_orbit = {}
    for g in galois_orbit_exponents(phi):
        phi_orbit.setdefault(phi.galois(g), g)
    for psi in one_dim_characters(H):
        ind = induce(G, H, psi)
        k = next((k for k in orbit if alg.characters[k] == ind), None)
        if k is None:
            continue
        a = orbit[k]
        g = phi_orbit.get(psi)
        if g is not None:
            # conjugate of the witness: evaluate the conjugated character on theta directly
            val = ab.theta.evaluate(ab.phi_bar.galois(g))
            c = _at(scal, N).galois(g) * val
            lifted = lift_from_quotient(pr_chi(ab.phi_bar.galois(g)), Hg, ab.projection) * norm_ker
            lifts_ok = lifts_ok and lifted == pr_chi(psi)
        else:
            c = _at(coeff, N).galois(a)
        lhs = lhs + pr_chi(psi) * c
    report.steps.append(("pr_{phi^g} = lift(pr_{phi_bar^g}) * Norm_{ker phi}", lifts_ok))

    lhs_G = include(lhs, H)
    middle = orbit_element(alg, i, coeff).element
    report.steps.append(("sum over phi' of c(phi') pr_{phi'} = sum_sigma c^sigma pr_{chi^sigma}", lhs_G == middle))

    if theta is None:
        comps = [Cyclotomic.rational(0, n)] * len(alg.characters)
        own = (factor * v).to_order(n)
        for k, a in orbit.items():
            comps[k] = own.galois(a)
        theta = alg.central(comps)
    rhs = orbit_element(alg, i, x).element * theta.element
    report.steps.append(("sum_sigma c^sigma pr_{chi^sigma} = (sum_sigma x^sigma pr_{chi^sigma}) theta^T", middle == rhs))
    report.lhs, report.rhs = lhs_G, rhs
    return report


def verify_reduction_identity(alg: GroupAlgebra, i: int, ab: AbelianInput, x=1,
                              T: Sequence[PlaceData] = (), eps_places: Sequence[PlaceData] = (),
                              theta: CentralElement | None = None) -> bool:
    return reduction_identity_report(alg, i, ab, x, T, eps_places, theta).ok


# ---------------------------------------------------------------------- exponents
@dataclass
class BrumerStarkExponents:
    x_w_theta: CentralElement
    z_delta: CentralElement
    z_w: CentralElement

    def verdicts(self) -> dict[str, tuple[bool, bool]]:
        """Name -> (components integral, group-ring coefficients integral)."""
        return {name: (ce.components_integral(), ce.element.is_integral())
                for name, ce in (("x*w*theta", self.x_w_theta), ("z*delta_T", self.z_delta), ("z*w", self.z_w))}


def brumer_stark_exponents(x: CentralElement, z: CentralElement, theta: CentralElement,
                           w: CentralElement, delta: CentralElement) -> BrumerStarkExponents:
    return BrumerStarkExponents(x * w * theta, z * delta, z * w)
