"""
Reduced norms and the central conductor
=======================================

Reduced norms of random integral elements, checked against the
determinant of right multiplication, then conductor elements built from
inverse differents.
"""

from fractions import Fraction

import numpy as np

from brumer_forge.character import builtin_table
from brumer_forge.groupring import (
    algebra,
    conductor_member,
    orbit_element,
    random_element,
    reduced_norm,
)

t = builtin_table("quaternion", n=1)
G = t.group
alg = algebra(t)
rng = np.random.default_rng(3)

x = random_element(G, rng, 2)
y = random_element(G, rng, 2)
print("x =", x)
print("nr(x) =", reduced_norm(x).text_components())
print("nr(xy) == nr(x) nr(y):", reduced_norm(x * y) == reduced_norm(x) * reduced_norm(y))

# the norm of every component, raised to the degree, multiplies out to the regular determinant
M = np.zeros((G.size, G.size))
for h in range(G.size):
    for g in x.support():
        M[G.mul(h, g), h] += float(x.coeffs[g].rational_value())
nr = reduced_norm(x)
prod = Fraction(1)
for i in alg.orbit_representatives():
    chi = alg.characters[i]
    prod *= chi.field.subfield().norm(nr.components[i]) ** chi.degree
print(f"product of norms {prod}, float determinant {np.linalg.det(M):.1f}")

print("\nconductor generators")
for i in alg.orbit_representatives():
    alpha = alg.characters[i].field.subfield().inverse_different_generator()
    z = orbit_element(alg, i, alpha)
    print(f"  {alg.names[i]}: alpha = {alpha}, member {conductor_member(z)}, element {z.element}")
print("1 in the conductor:", conductor_member(alg.one()))
