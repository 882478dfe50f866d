"""Command-line front end.

Exit codes: 0 when every check passes, 1 on a failed verification, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .annihilate import annihilates, load_module
from .character import CharacterTable, builtin_table, monomial_table
from .group import FiniteGroup, cyclic, dihedral, direct_product
from .groupring import (
    algebra,
    conductor_member,
    conductor_pushdown,
    e_chi,
    orbit_element,
    parse_element,
    random_element,
    reduced_norm,
    to_components,
)
from .stickelberger import (
    EPS_VARIANTS,
    assemble_theta_from_L,
    assemble_theta_reduction,
    bundled_input,
    bundled_json,
    integrality_check,
    load_input,
)

FAMILIES = ("d4p", "q", "z2a4", "product", "table", "d12")


class UsageError(Exception):
    pass


def _threads() -> int:
    """Parallelism cap from ``BRUMER_FORGE_THREADS``; all work here is sequential, so it only bounds."""
    raw = os.environ.get("BRUMER_FORGE_THREADS")
    if raw is None:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"BRUMER_FORGE_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise UsageError("BRUMER_FORGE_THREADS must be a positive integer")
    return n


def _table(args) -> CharacterTable:
    fam = args.family
    if fam is None:
        raise UsageError("--family is required")
    if fam == "d4p":
        if args.p is None:
            raise UsageError("--family d4p needs --p")
        return builtin_table("d4p", p=args.p)
    if fam == "q":
        if args.n is None:
            raise UsageError("--family q needs --n")
        return builtin_table("quaternion", n=args.n)
    if fam == "z2a4":
        return builtin_table("z2a4")
    if fam == "d12":
        return builtin_table("d12_paper")
    if fam == "product":
        if args.p is None:
            raise UsageError("--family product needs --p")
        G = direct_product(dihedral(2 * args.p), cyclic(2, "j"), name=f"C2xD{2 * args.p}")
        t = monomial_table(G)
        G.__dict__["preferred_table"] = t
        return t
    if fam == "table":
        if not args.input:
            raise UsageError("--family table needs --input <group table file>")
        G = FiniteGroup.from_text(Path(args.input).read_text())
        t = monomial_table(G)
        G.__dict__["preferred_table"] = t
        return t
    raise UsageError(f"unknown family {fam!r}")


def _emit(args, text: str, machine) -> None:
    if args.format == "machine":
        print(json.dumps(machine, ensure_ascii=False, sort_keys=False, indent=1))
    else:
        print(text)


# ---------------------------------------------------------------------- verbs
def cmd_group(args) -> int:
    G = _table(args).group
    cls = G.classes
    if args.format == "machine":
        print(G.to_text(), end="")
        return 0
    lines = [f"{G.name}: order {G.size}, exponent {G.exponent}",
             "generators: " + ", ".join(G.generators),
             "elements: " + " ".join(G.labels),
             "conjugacy classes:"]
    for rep, members in zip(cls.representatives, cls.classes):
        lines.append(f"  [{G.labels[rep]}] size {len(members)}: " + " ".join(G.labels[g] for g in members))
    print("\n".join(lines))
    return 0


def cmd_chartable(args) -> int:
    t = _table(args)
    odd = [c.name for c in t.odd_characters()]
    text = t.to_text() + "\nodd: " + ", ".join(odd)
    _emit(args, text, t.to_machine())
    return 0


def cmd_idempotents(args) -> int:
    t = _table(args)
    alg = algebra(t)
    lines, machine = [], {}
    for name, chi in zip(alg.names, alg.characters):
        e = e_chi(chi)
        lines.append(f"e_{name} = {e}")
        machine[name] = e.to_json()
    _emit(args, "\n".join(lines), machine)
    return 0


def cmd_conductor(args) -> int:
    t = _table(args)
    alg = algebra(t)
    G = alg.group
    if args.element:
        x = parse_element(G, args.element)
        ok = conductor_member(x) if x.is_central() else False
        _emit(args, f"{x}: {'in' if ok else 'not in'} the central conductor",
              {"element": x.to_json(), "member": ok})
        return 0
    lines, machine, all_ok = [], [], True
    for i in alg.orbit_representatives():
        chi = alg.characters[i]
        alpha = chi.field.subfield().inverse_different_generator()
        x = orbit_element(alg, i, alpha)
        member = conductor_member(x)
        H = alg.witnesses[i][0]
        try:
            conductor_pushdown(x, i, H)
            pushed = True
        except (ArithmeticError, ValueError):
            pushed = False
        integral = x.element.is_integral()
        ok = member and pushed and integral
        all_ok &= ok
        lines.append(f"{alg.names[i]}: alpha = {alpha}; member {'✓' if member else '✗'}; "
                     f"Z[G] {'✓' if integral else '✗'}; pushdown to {H.describe()} {'✓' if pushed else '✗'}")
        machine.append({"character": alg.names[i], "alpha": alpha.to_json(), "member": member,
                        "integral": integral, "pushdown": pushed, "element": x.element.to_json()})
    one = conductor_member(to_components(parse_element(G, "1")))
    lines.append(f"1: {'in' if one else 'not in'} the central conductor")
    all_ok &= (not one) or G.size == 1
    _emit(args, "\n".join(lines), {"orbits": machine, "one_member": one})
    return 0 if all_ok else 1


def cmd_nr(args) -> int:
    t = _table(args)
    alg = algebra(t)
    G = alg.group
    if args.element:
        x = parse_element(G, args.element)
    else:
        x = random_element(G, np.random.default_rng(args.seed), 2)
    nr = reduced_norm(x, alg)
    comps = nr.components
    if all(c == comps[0] for c in comps) and comps[0].is_rational():
        text = str(comps[0])
    else:
        text = nr.text_components()
    if not args.element:
        text = f"{x}\n{text}"
    _emit(args, text, {"element": x.to_json(), "nr": nr.to_json()})
    return 0


def _input_for(args):
    inp = load_input(args.input) if args.input else bundled_input()
    S = inp.S if args.S is None else tuple(s for s in args.S.split(",") if s)
    T = inp.T if args.T is None else tuple(s for s in args.T.split(",") if s)
    inp = inp.with_sets(S=S, T=T)
    if args.omit_trivial:
        inp.omit_trivial = True
    return inp


def cmd_theta(args) -> int:
    inp = _input_for(args)
    out, machine = [], {}
    modes = {"L": [assemble_theta_from_L], "reduction": [assemble_theta_reduction],
             "both": [assemble_theta_from_L, assemble_theta_reduction]}[args.mode]
    results = []
    for f in modes:
        th = f(inp, eps_variant=args.eps_variant)
        results.append(th)
        rep = integrality_check(th)
        out.append(f"[{th.mode}] S = {{{', '.join(th.S)}}} T = {{{', '.join(th.T)}}}")
        out.append(f"  components {th.central.text_components()}")
        out.append(f"  element    {th.element}")
        out.append(str(rep))
        machine[th.mode] = {"S": list(th.S), "T": list(th.T), **th.central.to_json(),
                            "integral_components": rep.in_maximal_order, "integral_coefficients": rep.in_group_ring}
    code = 0
    if len(results) == 2:
        agree = results[0] == results[1]
        out.append(f"modes agree: {'✓' if agree else '✗'}")
        machine["agree"] = agree
        code = 0 if agree else 1
    _emit(args, "\n".join(out), machine)
    return code


def cmd_verify_example(args) -> int:
    data = bundled_json("d12_paper") if not args.input else json.loads(Path(args.input).read_text())
    inp = load_input(data)
    exp = data["expected"]
    G = inp.group
    rows = []

    def check(label, computed, display=None, comps=None):
        ok = True
        if display is not None:
            ok = computed.element == parse_element(G, display)
        if comps is not None:
            ok = ok and all(computed.central[k] == v for k, v in comps.items())
        shown = display if display is not None else computed.central.text_components()
        rows.append((f"{label} = {shown}", ok, computed))

    s_inf = inp.with_sets(S=[], T=[])
    s_ram = inp.with_sets(S=list(inp.ramified), T=[])
    a = assemble_theta_from_L(s_inf, eps_variant=args.eps_variant)
    b = assemble_theta_from_L(s_ram, eps_variant=args.eps_variant)
    check("θ_{S∞}", a, display=exp["theta_S_inf"])
    check("θ_{S∞∪Sram}", b, display=exp["theta_S_ram"])
    check("θ_{S∞} components", a, comps=exp["components_S_inf"])
    check("θ_{S∞∪Sram} components", b, comps=exp["components_S_ram"])
    for th_l, inp_x in ((a, s_inf), (b, s_ram)):
        red = assemble_theta_reduction(inp_x, eps_variant=args.eps_variant)
        rows.append((f"reduction mode agrees for S = {{{', '.join(th_l.S)}}}", red == th_l, red))
    lines = []
    for label, ok, th in rows:
        lines.append(f"{label} {'✓' if ok else '✗'}")
        if not ok:
            lines.append(f"    computed: {th.element}")
            lines.append(f"    components: {th.central.text_components()}")
    machine = [{"check": label, "ok": ok} for label, ok, _ in rows]
    _emit(args, "\n".join(lines), machine)
    return 0 if all(ok for _, ok, _ in rows) else 1


def cmd_annihilate(args) -> int:
    if not args.input:
        raise UsageError("annihilate needs --input <module file>")
    data = json.loads(Path(args.input).read_text())
    if "group" in data:
        from .stickelberger import group_from_description
        G, t = group_from_description(data["group"])
    else:
        G = _table(args).group
    if not args.element and "element" not in data:
        raise UsageError("annihilate needs --element")
    M = load_module(G, data)
    x = parse_element(G, args.element or data["element"])
    try:
        rep = annihilates(x, M)
    except ArithmeticError as exc:
        _emit(args, f"cannot act: {exc}", {"error": str(exc)})
        return 1
    _emit(args, f"{x}: {rep}", {"annihilates": rep.annihilates,
                                "witness": list(rep.witness) if rep.witness else None})
    return 0 if rep.annihilates else 1


VERBS = {
    "group": cmd_group,
    "chartable": cmd_chartable,
    "idempotents": cmd_idempotents,
    "conductor": cmd_conductor,
    "nr": cmd_nr,
    "theta": cmd_theta,
    "verify-example": cmd_verify_example,
    "annihilate": cmd_annihilate,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="brumer-forge", description="Exact group-ring computations for Stickelberger elements.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("verb", choices=sorted(VERBS))
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--omit-trivial", action="store_true")
    p.add_argument("--eps-variant", choices=EPS_VARIANTS, default="limit")
    p.add_argument("--element")
    p.add_argument("--S", help="comma-separated place labels for S (finite part)")
    p.add_argument("--T", help="comma-separated place labels for T")
    p.add_argument("--mode", choices=("L", "reduction", "both"), default="both")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0 or args.seed >= 2 ** 64:
        parser.error("--seed must be an unsigned 64-bit integer")
    try:
        _threads()
        return VERBS[args.verb](args)
    except (UsageError, ValueError, KeyError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
