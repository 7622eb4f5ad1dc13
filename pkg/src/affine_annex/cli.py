"""``affine-annex`` command line.

Exit status: 0 on success, 1 on a usage or input error, 2 when a ``verify``
sweep records a conclusion failure.
"""
import argparse
import json
import os
import random
import sys

from . import boundary_theory as bt
from . import render, sweeps
from .annex import AnnexCapError, annex
from .bruhat import CapExceededError, interval, leq, shadow
from .coxeter_core import (
    UnsupportedTypeError, WordError, from_word, get_context, left_descents, parse_word,
    right_descents, word_of)
from .galleries import end_alcove, parse_decorated, shadow_via_foldings
from .root_data import TYPE_TAGS

TYPE_ENV = "AFFINE_ANNEX_TYPE"
DEFAULT_TYPE = "A2~"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _word_out(ctx, w):
    return word_of(ctx, w) or "e"


def _set_out(items):
    return "{" + ", ".join(str(i) for i in sorted(items)) + "}"


def _element(ctx, text):
    return from_word(ctx, parse_word(ctx, text))


def _write_svg(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _sorted_words(ctx, elements):
    words = [word_of(ctx, y) for y in elements]
    return sorted(words, key=lambda s: (len(s), s))


# -- commands -----------------------------------------------------------------

def cmd_reduce(ctx, args, out):
    print(_word_out(ctx, _element(ctx, args.word)), file=out)


def cmd_length(ctx, args, out):
    print(ctx.length(_element(ctx, args.word)), file=out)


def cmd_descents(ctx, args, out):
    w = _element(ctx, args.word)
    found = left_descents(ctx, w) if args.side == "left" else right_descents(ctx, w)
    print(_set_out(found), file=out)


def cmd_leq(ctx, args, out):
    print("true" if leq(ctx, _element(ctx, args.x), _element(ctx, args.y)) else "false", file=out)


def _emit_set(ctx, args, out, owner, members, extra=None):
    if args.json:
        doc = {"type": ctx.tag, "owner": word_of(ctx, owner),
               "members": _sorted_words(ctx, members)}
        if extra:
            doc.update(extra)
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        for word in _sorted_words(ctx, members):
            print(word or "e", file=out)


def cmd_shadow(ctx, args, out):
    w = _element(ctx, args.word)
    members = shadow_via_foldings(ctx, w, cap=args.cap) if args.via == "galleries" else shadow(ctx, w)
    _emit_set(ctx, args, out, w, members)
    if args.svg:
        _write_svg(args.svg, render.render_svg(ctx, render.shadow_scene(ctx, w, members, labels=args.labels)))


def cmd_interval(ctx, args, out):
    iv = interval(ctx, _element(ctx, args.x), _element(ctx, args.y))
    if args.json:
        print(json.dumps({"type": ctx.tag, "low": word_of(ctx, iv.low), "high": word_of(ctx, iv.high),
                          "members": _sorted_words(ctx, iv.members)}, sort_keys=True), file=out)
    else:
        for word in _sorted_words(ctx, iv.members):
            print(word or "e", file=out)


def _annex_doc(ctx, A):
    boundary = sorted(([word_of(ctx, y), i] for y, i in A.boundary),
                      key=lambda p: (len(p[0]), p[0], p[1]))
    return {"type": ctx.tag, "owner": word_of(ctx, A.owner),
            "members": _sorted_words(ctx, A.members), "boundary": boundary}


def cmd_annex(ctx, args, out):
    A = annex(ctx, _element(ctx, args.word), max_len=args.max_len)
    if args.json:
        print(json.dumps(_annex_doc(ctx, A), sort_keys=True), file=out)
    else:
        for word in _sorted_words(ctx, A.members):
            print(word or "e", file=out)
    if args.svg:
        _write_svg(args.svg, render.render_svg(ctx, render.annex_scene(ctx, A, labels=args.labels)))


def cmd_boundary(ctx, args, out):
    A = annex(ctx, _element(ctx, args.word))
    doc = _annex_doc(ctx, A)
    if args.json:
        print(json.dumps({"owner": doc["owner"], "boundary": doc["boundary"]}, sort_keys=True), file=out)
    else:
        for word, i in doc["boundary"]:
            print("%s %d" % (word or "e", i), file=out)


def cmd_predict(ctx, args, out):
    w = _element(ctx, args.word)
    if args.i not in ctx.generators:
        raise UsageError("generator %d is not valid for %s" % (args.i, ctx.tag))
    try:
        found = bt.predicted_boundary(ctx, w, args.i, args.max_n)
    except bt.HypothesisError as exc:
        raise UsageError(str(exc))
    if args.json:
        print(json.dumps({"owner": word_of(ctx, w), "descent": args.i,
                          "predicted": _sorted_words(ctx, found)}, sort_keys=True), file=out)
    else:
        for word in _sorted_words(ctx, found):
            print(word or "e", file=out)


def cmd_gallery(ctx, args, out):
    g = parse_decorated(ctx, args.decorated)
    print(_word_out(ctx, end_alcove(ctx, g)), file=out)
    if args.svg:
        scene = render.Scene(ctx.tag, radius=args.radius or len(g) + 2)
        scene.add(render.GalleryPath(g))
        _write_svg(args.svg, render.render_svg(ctx, scene))


def cmd_render(ctx, args, out):
    if args.kind == "annex":
        A = annex(ctx, _element(ctx, args.word))
        scene = render.annex_scene(ctx, A, radius=args.radius, labels=args.labels)
    elif args.kind == "shadow":
        w = _element(ctx, args.word)
        scene = render.shadow_scene(ctx, w, shadow(ctx, w), radius=args.radius, labels=args.labels)
    else:
        g = parse_decorated(ctx, args.word)
        scene = render.Scene(ctx.tag, radius=args.radius or len(g) + 2, labels=args.labels)
        scene.add(render.GalleryPath(g))
    text = render.render_svg(ctx, scene)
    if args.out:
        _write_svg(args.out, text)
    else:
        out.write(text)


VERIFY_STATEMENTS = {
    "pm1": lambda ctx, a, rng: bt.pm1_sweep(ctx, a.max_len),
    "dagger": lambda ctx, a, rng: bt.dagger_sweep(ctx, a.max_len, a.max_n),
    "main": lambda ctx, a, rng: bt.main_theorem_sweep(ctx, a.max_len, a.max_n),
    "descent": lambda ctx, a, rng: bt.descent_sweep(ctx, a.max_len, a.max_n),
    "structural": lambda ctx, a, rng: bt.structural_checks(ctx, a.max_len),
    "bruhat": lambda ctx, a, rng: sweeps.bruhat_oracle_sweep(ctx, a.max_len),
    "shadow": lambda ctx, a, rng: sweeps.shadow_sweep(ctx, a.max_len, rng=rng),
    "finiteness": lambda ctx, a, rng: sweeps.annex_finiteness_sweep(ctx, a.max_len),
    "boundary-types": lambda ctx, a, rng: sweeps.boundary_types_sweep(ctx, a.max_len),
    "product-law": lambda ctx, a, rng: sweeps.product_law_sweep(ctx, a.max_len),
    "w0-stability": lambda ctx, a, rng: sweeps.w0_stability_sweep(ctx, a.max_len),
    "reflection-closure": lambda ctx, a, rng: sweeps.reflection_closure_sweep(ctx, a.max_len),
    "three-parallel": lambda ctx, a, rng: sweeps.three_parallel_sweep(ctx, rng=rng),
    "transport": lambda ctx, a, rng: sweeps.transport_sweep(ctx),
    "halfspace": lambda ctx, a, rng: sweeps.halfspace_sweep(ctx, a.max_len),
}


def cmd_verify(ctx, args, out):
    rng = random.Random(args.seed)
    report = VERIFY_STATEMENTS[args.statement](ctx, args, rng)
    doc = report.as_dict()
    if args.json:
        print(json.dumps({"type": ctx.tag, "statement": args.statement, "report": doc},
                         sort_keys=True), file=out)
    else:
        for name, s in doc.items():
            print("%s: instances=%d passed=%d skipped=%d failures=%d"
                  % (name, s["instances"], s["passed"], s["skipped"], len(s["failures"])), file=out)
            for key in s["failures"]:
                print("  FAIL %s" % json.dumps(key), file=out)
    return 0 if report.ok else 2


# -- parser -------------------------------------------------------------------

def build_parser():
    p = _Parser(prog="affine-annex", description="Annexes and Bruhat order in rank-2 affine Weyl groups.")
    common = _Parser(add_help=False)
    type_help = ("type tag: %s (default from $%s, else %s)"
                 % (", ".join(TYPE_TAGS), TYPE_ENV, DEFAULT_TYPE))
    p.add_argument("--type", dest="top_type", default=None, help=type_help)
    common.add_argument("--type", dest="type", default=None,
                        help=type_help)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("reduce", cmd_reduce, "canonical reduced word").add_argument("word")
    add("length", cmd_length, "Coxeter length").add_argument("word")
    sp = add("descents", cmd_descents, "descent set")
    sp.add_argument("word")
    sp.add_argument("--side", choices=("right", "left"), default="right")
    sp = add("leq", cmd_leq, "Bruhat comparison x <= y")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = add("shadow", cmd_shadow, "lower interval [1, w]")
    sp.add_argument("word")
    sp.add_argument("--via", choices=("bruhat", "galleries"), default="bruhat")
    sp.add_argument("--cap", type=int, default=12, help="longest word folded with --via galleries")
    sp = add("interval", cmd_interval, "Bruhat interval [x, y]")
    sp.add_argument("x")
    sp.add_argument("y")
    sp = add("annex", cmd_annex, "annex of w")
    sp.add_argument("word")
    sp.add_argument("--max-len", type=int, default=None)
    sp = add("boundary", cmd_boundary, "boundary panels (y, i) of the annex")
    sp.add_argument("word")
    sp = add("predict", cmd_predict, "boundary alcoves predicted by parallel reflection sequences")
    sp.add_argument("word")
    sp.add_argument("i", type=int)
    sp.add_argument("--max-n", type=int, default=6)
    sp = add("gallery", cmd_gallery, "end alcove of a decorated gallery, e.g. 01~20")
    sp.add_argument("decorated")
    sp.add_argument("--radius", type=int, default=None)
    sp = add("verify", cmd_verify, "run a verification sweep")
    sp.add_argument("statement", choices=sorted(VERIFY_STATEMENTS))
    sp.add_argument("--max-len", type=int, default=6)
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0, help="only affects sampled checks")
    sp = add("render", cmd_render, "SVG picture of an annex, shadow or gallery")
    sp.add_argument("kind", choices=("annex", "shadow", "gallery"))
    sp.add_argument("word", help="element word, or decorated gallery for kind=gallery")
    sp.add_argument("--out", default=None, help="output path (default: stdout)")
    sp.add_argument("--radius", type=int, default=None)

    for name in ("shadow", "interval", "annex", "boundary", "predict", "verify"):
        sub.choices[name].add_argument("--json", action="store_true")
    for name in ("shadow", "annex", "gallery"):
        sub.choices[name].add_argument("--svg", default=None, help="also write an SVG picture")
    for name in ("shadow", "annex", "render"):
        sub.choices[name].add_argument("--labels", action="store_true")
    return p


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        ctx = get_context(args.type or args.top_type or os.environ.get(TYPE_ENV) or DEFAULT_TYPE)
        status = args.func(ctx, args, out)
    except UsageError as exc:
        print("usage error: %s" % exc, file=err)
        return 1
    except WordError as exc:
        print("malformed word: %s" % exc, file=err)
        return 1
    except UnsupportedTypeError as exc:
        print("unsupported type: %s" % exc, file=err)
        return 1
    except (CapExceededError, AnnexCapError) as exc:
        print("cap exceeded: %s" % exc, file=err)
        return 1
    except ValueError as exc:
        print("invalid input: %s" % exc, file=err)
        return 1
    return status or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
