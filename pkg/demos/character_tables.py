"""
Character tables of small monomial groups
=========================================

Prints builtin tables next to the ones found by inducing linear
characters, and counts odd characters.
"""

from brumer_forge.character import (
    CharacterTable,
    builtin_table,
    irreducible_characters_monomial,
)

for family, kw in [("d4p", {"p": 3}), ("d4p", {"p": 5}), ("quaternion", {"n": 1}), ("z2a4", {})]:
    t = builtin_table(family, **kw)
    G = t.group
    print(f"== {G.name} (order {G.size})")
    print(t.to_text())
    mono = CharacterTable(G, irreducible_characters_monomial(G))
    perm = t.row_permutation_to(mono)
    print("induced search agrees up to row order:", perm is not None)
    print("odd:", ", ".join(c.name for c in t.odd_characters()))
    print()
