"""
Command-line entry point.

Exit status is 0 on success, 1 for bad parameters or input, and 2 when a
subcommand that needs a valid Heegaard diagram does not get one.
"""
import argparse
import json
import sys

from . import covering, diagram as dg, homology as hom, scan as scanning, words
from .errors import DomainError, DunwoodyError, NotHeegaardError
from .svg import render_svg

EXIT_OK, EXIT_DOMAIN, EXIT_INVALID = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def _int_range(text: str) -> list:
    """Parse ``"3"``, ``"0..2"`` or ``"1,3,5"``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cyclic_from_args(args) -> words.CyclicPresentation:
    if args.family:
        params = {"n": args.n}
        if args.family == "fractional":
            params.update(l=args.l, k=args.k)
        return words.family(args.family, **params)
    if args.word is None or args.n is None:
        raise DomainError("give --family, or --word together with --n")
    return words.CyclicPresentation(args.n, words.parse_word(args.word, args.n))


def _diagram_from_args(args) -> dg.Diagram:
    if args.diagram:
        with open(args.diagram, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DomainError(f"{args.diagram}: {exc}")
        return dg.Diagram.from_json(data)
    if args.params:
        return dg.build(dg.DunwoodyParams.parse(args.params))
    raise DomainError("give --params a,b,c,n,r,s or --diagram FILE")


def _presentation_from_args(args) -> words.Presentation:
    if getattr(args, "relator", None):
        if args.n is None:
            raise DomainError("--relator needs --n")
        return words.Presentation(args.n, tuple(words.parse_word(r, args.n) for r in args.relator))
    if getattr(args, "params", None) or getattr(args, "diagram", None):
        return dg.induced_presentation(_diagram_from_args(args))
    return words.relators(_cyclic_from_args(args))


def cmd_families(args):
    cp = _cyclic_from_args(args)
    _emit(args, f"{cp}\n{words.format_word(cp.w)}\n")


def cmd_relators(args):
    p = words.relators(_cyclic_from_args(args))
    _emit(args, "".join(words.format_word(r) + "\n" for r in p.relators))


def cmd_detect(args):
    p = _presentation_from_args(args)
    wit = words.detect_cyclic(p)
    if wit is None:
        _emit(args, "absent\n")
    else:
        _emit(args, json.dumps({"w": words.format_word(wit.w), "offset": wit.offset,
                                "inverted": wit.inverted, "relator": wit.index}) + "\n")


def cmd_homology(args):
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as fh:
            try:
                m = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DomainError(f"{args.matrix}: {exc}")
        _emit(args, f"{hom.cokernel(m)}\n")
        return
    p = _presentation_from_args(args)
    _emit(args, f"{hom.homology(p)}\n")


def cmd_build(args):
    d = dg.build(dg.DunwoodyParams.parse(args.params))
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(d))
    _emit(args, json.dumps(d.to_json(), indent=1) + "\n")


def cmd_validate(args):
    rep = dg.validate(_diagram_from_args(args))
    _emit(args, json.dumps({
        "curve_count": rep.curve_count, "is_heegaard": rep.is_heegaard,
        "cut_surface_connected": rep.cut_surface_connected,
        "cut_surface_euler": rep.cut_surface_euler, "reason": rep.reason}, sort_keys=True) + "\n")


def cmd_present(args):
    p = dg.induced_presentation(_diagram_from_args(args))
    _emit(args, "".join(words.format_word(r) + "\n" for r in p.relators))


def cmd_symmetry(args):
    rep = dg.check_symmetry(_diagram_from_args(args))
    _emit(args, json.dumps({"equivariant": rep.equivariant,
                            "curve_cycles": None if rep.curve_cycles is None else list(rep.curve_cycles),
                            "single_cycle": rep.single_cycle}) + "\n")


def cmd_scan(args):
    r = _int_range(args.r) if args.r else None
    s = _int_range(args.s) if args.s else None
    records = scanning.scan(_int_range(args.a), _int_range(args.b), _int_range(args.c),
                            _int_range(args.n), r, s, workers=args.workers)
    _emit(args, "".join(scanning.format_record(rec) + "\n" for rec in records))


def cmd_quotient(args):
    _emit(args, f"{covering.quotient(dg.DunwoodyParams.parse(args.params))}\n")


def cmd_lift(args):
    q = covering.QuotientData.parse(args.quotient)
    _emit(args, f"{covering.lift(q, args.n, args.s)}\n")


def cmd_strongly_cyclic(args):
    spec = covering.CoveringSpec(covering.QuotientData.parse(args.quotient), args.n, args.s)
    rep = covering.strongly_cyclic_check(spec)
    line = "true" if rep else f"false: {rep.reason}"
    _emit(args, line + "\n")


def cmd_lens_order(args):
    _emit(args, f"{covering.lens_order(covering.QuotientData.parse(args.quotient))}\n")


def cmd_svg(args):
    if not args.output:
        raise DomainError("svg needs --output FILE")
    _emit(args, render_svg(_diagram_from_args(args)))


def _parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dunwoody", description=__doc__.strip().splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("-o", "--output", help="write to FILE instead of standard output")
        return p

    def cyclic_opts(p):
        p.add_argument("--family", choices=["fibonacci", "sieradsky", "fractional"])
        p.add_argument("--word", help='defining word, e.g. "1 3 -2" or "x1 x3 x2^-1"')
        p.add_argument("--n", type=int)
        p.add_argument("--l", type=int, default=1)
        p.add_argument("--k", type=int, default=1)

    def diagram_opts(p):
        p.add_argument("--params", help="a,b,c,n,r,s")
        p.add_argument("--diagram", help="diagram JSON file")

    cyclic_opts(add("families", cmd_families, "print a named cyclic presentation"))
    cyclic_opts(add("relators", cmd_relators, "expand a cyclic presentation, one relator per line"))
    p = add("detect", cmd_detect, "look for a cyclic structure on a presentation")
    cyclic_opts(p)
    diagram_opts(p)
    p.add_argument("--relator", action="append", help="relator word (repeatable)")
    p = add("homology", cmd_homology, "first homology")
    cyclic_opts(p)
    diagram_opts(p)
    p.add_argument("--relator", action="append", help="relator word (repeatable)")
    p.add_argument("--matrix", help="JSON file holding an integer relation matrix")
    p = add("build", cmd_build, "build a Dunwoody diagram; JSON on stdout")
    p.add_argument("--params", required=True, help="a,b,c,n,r,s")
    p.add_argument("--svg", help="also draw the diagram to this SVG file")
    diagram_opts(add("validate", cmd_validate, "validity report"))
    diagram_opts(add("present", cmd_present, "induced presentation, one relator per line"))
    diagram_opts(add("symmetry", cmd_symmetry, "check the order-n rotation symmetry"))
    p = add("scan", cmd_scan, "scan a parameter range; one JSON line per tuple")
    for name in "abcn":
        p.add_argument(f"--{name}", required=True, help="value, range lo..hi, or list")
    p.add_argument("--r", help="default: all residues mod d")
    p.add_argument("--s", help="default: all residues mod n")
    p.add_argument("--workers", type=int, default=1)
    p = add("quotient", cmd_quotient, "quotient data a,b,c,r of a diagram")
    p.add_argument("--params", required=True)
    p = add("lift", cmd_lift, "lift quotient data to degree n")
    p.add_argument("--quotient", required=True, help="a,b,c,r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p = add("strongly-cyclic", cmd_strongly_cyclic, "strongly-cyclic covering check")
    p.add_argument("--quotient", required=True, help="a,b,c,r")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=0)
    p = add("lens-order", cmd_lens_order, "order p of H_1 of the quotient lens space")
    p.add_argument("--quotient", required=True, help="a,b,c,r")
    diagram_opts(add("svg", cmd_svg, "draw a diagram as SVG"))
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        args.func(args)
    except NotHeegaardError as exc:
        print(f"dunwoody: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (DunwoodyError, OSError) as exc:
        print(f"dunwoody: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
