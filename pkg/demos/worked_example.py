"""
Stickelberger elements for a Z/2 x D12 extension
=================================================

Builds theta from the bundled L-values, compares it against the
reduction-to-abelian route, then shows what the T-modification does to
denominators.
"""

from brumer_forge.annihilate import annihilates, load_module
from brumer_forge.stickelberger import (
    assemble_theta_from_L,
    assemble_theta_reduction,
    bundled_input,
    epsilon_S,
    integrality_check,
)

inp = bundled_input()
alg = inp.algebra
print(f"group {inp.group.name}, order {inp.group.size}, characters {', '.join(alg.names)}")

# no finite places in S: components are the L-values at the odd characters
theta = assemble_theta_from_L(inp)
print("\nS empty")
print("  components", theta.central.text_components())
print("  element   ", theta.element)
print(integrality_check(theta))

# adding the ramified places multiplies each component by its Euler factor
ram = [inp.places[s] for s in inp.ramified]
print("\nEuler factors over the ramified places:", epsilon_S(alg, ram))
theta_ram = assemble_theta_from_L(inp.with_sets(S=list(inp.ramified)))
print("  components", theta_ram.central.text_components())
print("  element   ", theta_ram.element)

# same element from abelian data on subquotients
for S in ([], list(inp.ramified)):
    x = inp.with_sets(S=S)
    same = assemble_theta_from_L(x) == assemble_theta_reduction(x)
    print(f"reduction route agrees for S = {S}: {same}")

# T = {P5} clears the denominators
theta_T = assemble_theta_from_L(inp.with_sets(T=["P5"]))
print("\nT = {P5}")
print("  components", theta_T.central.text_components())
print(integrality_check(theta_T))

# a cyclic mock class group where j acts by -1
M = load_module(inp.group, {"orders": [48], "action": {"σ": [[1]], "τ": [[1]], "j": [[-1]]}})
for m in (12, 48):
    try:
        print(f"{m} theta on Z/48:", annihilates(m * theta.element, M))
    except ArithmeticError as exc:
        print(f"{m} theta on Z/48: cannot act ({exc})")
