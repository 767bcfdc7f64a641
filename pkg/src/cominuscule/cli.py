"""Command line interface: ``cominuscule <command> ...``.

Exit status is 0 on success, 1 on usage or parse errors and 2 when two
decision routes disagree (which signals a bug).
"""
from __future__ import annotations

import argparse
import logging
import sys

from . import chow, decide, layout, minimal, poset, words
from .errors import CominusculeError, InternalInconsistency, RouteDisagreement
from .labeled import abstract_poset, find_isomorphism
from .roots import Length, format_root


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _space_and_ideal(space_id, ideal_text):
    p = poset.space(space_id)
    return p, poset.parse_ideal(p, ideal_text)


def cmd_show(args):
    p, lam = _space_and_ideal(args.space, args.ideal or "full")
    d = poset.delta_map(p)
    print(f"{p.name}: {len(p)} elements, {len(poset.enumerate_ideals(p))} ideals")
    print(layout.render(p, None if args.ideal is None else lam))
    if args.verbose:
        core = poset.dynkin_core(p)
        for e, r in enumerate(p.elements):
            tag = " core" if e in core else ""
            print(f"  {e:>2} {format_root(r)} {p.labels[e]} delta={d[e]}{tag}")


def cmd_word(args):
    p, lam = _space_and_ideal(args.space, args.ideal)
    print(" ".join(str(i) for i in words.reduced_word(p, lam).letters))


def cmd_invs(args):
    p = poset.space(args.space)
    w = words.parse_word(args.word, p.rank)
    for r in sorted(words.inversion_set(w, p.rs), key=lambda r: (sum(r), r)):
        print(format_root(r))


def cmd_decide(args):
    a = decide.SchubertSpec.parse(args.spec_a)
    b = decide.SchubertSpec.parse(args.spec_b)
    v = decide.decide_isomorphic(a, b, args.mode, args.seed)
    print("isomorphic" if v.isomorphic else "not isomorphic")
    if len(v.routes) > 1:
        print("routes: " + ", ".join(f"{r}={'yes' if x else 'no'}" for r, x in v.routes.items()))
    if v.isomorphic and v.witness is not None:
        print(f"witness: {v.witness}")


def cmd_census(args):
    report = decide.census(args.spaces, args.mode, args.seed)
    for c in report.classes:
        members = ", ".join(str(m) for m in c.members)
        print(f"dim {c.dim:>2}  {c.canonical_model}  <- {members}")
    print(
        f"{sum(len(c.members) for c in report.classes)} Schubert varieties, "
        f"{len(report.classes)} classes, {report.pairs_checked} pairs checked, "
        f"{report.route_decisions} route decisions, {report.disagreements} disagreements"
    )
    if args.json:
        report.dump(args.json)


def cmd_dot(args):
    p, lam = _space_and_ideal(args.space, args.ideal or "full")
    text = decide.render_dot(p, lam)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_chevalley(args):
    p, lam = _space_and_ideal(args.space, args.lam)
    mu = poset.parse_ideal(p, args.mu)
    s = chow.chevalley_lower(p, lam, mu)
    print(chow.format_sum(p, s))


def cmd_reconstruct(args):
    p, lam = _space_and_ideal(args.space, args.lam)
    t = chow.build_mult_table(p, lam, args.seed)
    rec = chow.reconstruct_labeled_poset(t)
    labs = "".join("L" if x is Length.LONG else "S" for x in rec.label)
    print(f"classes: {len(t)}, join-irreducibles: {rec.n}")
    print(f"labels: {labs or '-'}")
    print(f"covers: {rec.cover_pairs()}")
    f = find_isomorphism(rec, abstract_poset(p, lam))
    print("matches direct poset" if f is not None else "DOES NOT match direct poset")
    if f is None:
        return 2
    return 0


def cmd_minimal(args):
    p, lam = _space_and_ideal(args.space, args.ideal)
    m = minimal.minimal_embedding(p, lam)
    if m.ideal is None:
        print("point")
        return
    print(m.space_id)
    print("relabel: " + ", ".join(f"{v}->{w}" for v, w in m.relabel))
    print(f"ideal: {poset.format_ideal(m.ideal)}")
    print(layout.render(m.ideal.poset, m.ideal))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true")
    ap = _Parser(prog="cominuscule", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help):
        s = sub.add_parser(name, parents=[common], help=help)
        s.set_defaults(func=func)
        return s

    s = command("show", cmd_show, "print the box layout of a space")
    s.add_argument("space")
    s.add_argument("ideal", nargs="?")

    s = command("word", cmd_word, "reduced word of an ideal")
    s.add_argument("space")
    s.add_argument("ideal")

    s = command("invs", cmd_invs, "inversion set of a word")
    s.add_argument("space")
    s.add_argument("word")

    s = command("decide-iso", cmd_decide, "decide whether two Schubert varieties are isomorphic")
    s.add_argument("spec_a", metavar="specA", help="<space>[:<ideal>]")
    s.add_argument("spec_b", metavar="specB")
    s.add_argument("--mode", choices=decide.MODES, default="poset")
    s.add_argument("--seed", type=int, default=0)

    s = command("census", cmd_census, "classify all Schubert varieties of some spaces")
    s.add_argument("spaces", nargs="+")
    s.add_argument("--mode", choices=decide.MODES, default="poset")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", metavar="OUT")

    s = command("render-dot", cmd_dot, "Hasse diagram as Graphviz DOT")
    s.add_argument("space")
    s.add_argument("ideal", nargs="?")
    s.add_argument("--out")

    s = command("chevalley", cmd_chevalley, "Z . [X_mu] inside X_lambda")
    s.add_argument("space")
    s.add_argument("lam")
    s.add_argument("mu")

    s = command("reconstruct", cmd_reconstruct, "rebuild the labeled poset from Chevalley data")
    s.add_argument("space")
    s.add_argument("lam")
    s.add_argument("--seed", type=int, default=0)

    s = command("minimal-model", cmd_minimal, "minimal cominuscule space containing X_lambda")
    s.add_argument("space")
    s.add_argument("ideal")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args) or 0
    except (RouteDisagreement, InternalInconsistency) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CominusculeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
