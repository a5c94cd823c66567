"""Batch command-line front end: every operation, JSON in and out.

Polynomials are accepted either as JSON coefficient arrays (ascending) or in
a restricted human syntax like "x^5+(x+1)^2"; fields as "Q", "GF:p" or
"GF:p,m".  Every command prints a CommandResult object
{"status": ..., "payload": ..., "provenance": ...} and exits 0 on success.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import acceptance
from .families import (char_templates, find_good_mu, nice_pairs_coprime,
                       rational_four_torsion, symmetry_classes)
from .fields import (FieldError, InsufficientFieldError, Rationals, field_make)
from .jacobian import AffinePoint, Curve, CurveError, embed, exact_order, points_with_x
from .numth import hyperelliptic_cert, hyperelliptic_scan, overq_filter
from .pairing import weil_closed, weil_explicit, weil_result_json
from .polyring import Poly
from .torsion import CertError, PairCert, make_pair, make_single, verify_single


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


# -- input parsing ---------------------------------------------------------

def parse_field(spec: str, seed=0):
    if spec == "Q":
        return Rationals()
    m = re.fullmatch(r"GF:(\d+)(?:,(\d+))?", spec)
    if not m:
        raise CliError("bad-field", f"cannot parse field {spec!r}; use Q or GF:p[,m]")
    p, ext = int(m.group(1)), int(m.group(2) or 1)
    return field_make({"kind": "GF", "p": p, "m": ext}, seed=seed)


_TOKEN = re.compile(r"\s*(\d+|[x^+\-*()]|.)")


def _tokenize(s):
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        tok = m.group(1)
        if tok not in "x^+-*()" and not tok.isdigit():
            raise CliError("bad-poly", f"unexpected token {tok!r} at position {m.start(1)}")
        tokens.append(tok)
        pos = m.end()
    return tokens


def parse_poly(ctx, text: str) -> Poly:
    """Coefficient-array JSON, or the restricted syntax over +, -, *, ^, x,
    integers and parentheses."""
    text = text.strip()
    if text.startswith("["):
        return Poly.from_json(ctx, json.loads(text))
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        tok = peek()
        if tok is None or (expected and tok != expected):
            raise CliError("bad-poly",
                           f"expected {expected or 'a token'}, got {tok!r}")
        pos += 1
        return tok

    def atom():
        tok = peek()
        if tok == "(":
            take("(")
            e = expr()
            take(")")
            return e
        if tok == "x":
            take()
            return Poly.x(ctx)
        if tok is not None and tok.isdigit():
            take()
            return Poly.const(ctx, ctx.coerce(int(tok)))
        raise CliError("bad-poly", f"unexpected token {tok!r}")

    def factor():
        base = atom()
        if peek() == "^":
            take("^")
            tok = take()
            if not tok.isdigit():
                raise CliError("bad-poly", f"exponent must be an integer, got {tok!r}")
            base = base ** int(tok)
        return base

    def term():
        acc = factor()
        while peek() == "*":
            take("*")
            acc = acc * factor()
        return acc

    def expr():
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        acc = term() if sign == 1 else -term()
        while peek() in ("+", "-"):
            op = take()
            nxt = term()
            acc = acc + nxt if op == "+" else acc - nxt
        return acc

    result = expr()
    if pos != len(tokens):
        raise CliError("bad-poly", f"trailing token {tokens[pos]!r}")
    return result


def parse_elem(ctx, text: str):
    text = text.strip()
    if text.startswith("["):
        return ctx.elem_from_json(json.loads(text))
    if isinstance(ctx, Rationals):
        return Fraction(text)
    return ctx.elem_from_json(int(text))


def parse_point(ctx, text: str):
    m = re.fullmatch(r"\s*\(\s*(.+?)\s*,\s*(.+?)\s*\)\s*", text)
    if not m:
        raise CliError("bad-point", f"cannot parse point {text!r}; use (x,y)")
    return AffinePoint(parse_elem(ctx, m.group(1)), parse_elem(ctx, m.group(2)))


def load_curve(args, F):
    text = args.curve
    if text.endswith(".json"):
        with open(text) as fh:
            obj = json.load(fh)
        F = field_make(obj["field"], seed=args.seed)
        return F, Curve(F, obj["g"], Poly.from_json(F, obj["f"]))
    if args.g is None:
        raise CliError("bad-args", "--g is required with an inline curve polynomial")
    return F, Curve(F, args.g, parse_poly(F, text))


def point_json(F, P):
    return {"x": F.elem_to_json(P.x), "y": F.elem_to_json(P.y)}


# -- subcommands -----------------------------------------------------------

def cmd_construct_single(args):
    F = parse_field(args.field, args.seed)
    v = parse_poly(F, args.v)
    a = parse_elem(F, args.a)
    C, P, cert = make_single(F, args.g, a, v)
    return {"curve": C.to_json(), "point": point_json(F, P),
            "cert": cert.to_json(F)}, "single-point-certificate"


def cmd_verify(args):
    F = parse_field(args.field, args.seed)
    F, C = load_curve(args, F)
    P = parse_point(F, args.point)
    if not C.contains(P.x, P.y):
        raise CliError("bad-point", "point is not on the curve")
    cert = verify_single(C, P)
    payload = {"order_2g_plus_1": cert is not None}
    if cert is not None:
        payload["cert"] = cert.to_json(F)
    if args.oracle:
        n = 2 * C.g + 1
        payload["oracle_order"] = exact_order(C, embed(C, P), n)
    return payload, "certificate-verification"


def cmd_construct_pair(args):
    F = parse_field(args.field, args.seed)
    cert = PairCert(args.g, parse_elem(F, args.a1), parse_elem(F, args.a2),
                    parse_poly(F, args.u1), parse_poly(F, args.u2))
    enh = make_pair(F, args.g, cert)
    return {"curve": enh.C.to_json(), "P": point_json(F, enh.P),
            "Q": point_json(F, enh.Q)}, "pair-certificate-construction"


def _templates(F, args):
    if args.regime == "coprime":
        return list(nice_pairs_coprime(F, args.g))
    if args.p is None or args.k is None or args.l is None:
        raise CliError("bad-args", "--p, --k, --l are required for the char regime")
    return list(char_templates(F, args.p, args.k, args.l, ij_only=not args.all_admissible))


def cmd_enumerate_families(args):
    F = parse_field(args.field, args.seed)
    templates = _templates(F, args)
    payload = {"count": len(templates),
               "families": [t.to_json() for t in templates]}
    if args.regime == "coprime":
        payload["symmetry_classes"] = len(symmetry_classes(templates))
    return payload, "family-enumeration"


def cmd_find_mu(args):
    F = parse_field(args.field, args.seed)
    templates = _templates(F, args)
    if args.index >= len(templates):
        raise CliError("bad-args", f"--index out of range (have {len(templates)})")
    t = templates[args.index]
    g = t.g if hasattr(t, "g") else args.g
    mu, cert, enh = find_good_mu(F, g, t)
    return {"family": t.to_json(mu=mu, F=F), "curve": enh.C.to_json(),
            "P": point_json(F, enh.P), "Q": point_json(F, enh.Q)}, "good-mu-scan"


def cmd_rational_g52(args):
    C, pts, cert, mu = rational_four_torsion(args.g)
    F = C.ctx
    return {"curve": C.to_json(), "mu": F.elem_to_json(mu),
            "order": 2 * args.g + 1,
            "points": [point_json(F, P) for P in pts]}, "rational-four-torsion"


def cmd_hyperelliptic(args):
    if args.max is not None:
        return ({"hyperelliptic": hyperelliptic_scan(args.max)},
                "totient-partition-scan")
    if args.n is None:
        raise CliError("bad-args", "one of --n or --max is required")
    cert = hyperelliptic_cert(args.n)
    return {"n": args.n, "filter": overq_filter(args.n).to_json(),
            "cert": cert.to_json() if cert else None}, "totient-partition-search"


def cmd_census(args):
    F = parse_field(f"GF:{args.p},{args.m}" if args.m > 1 else f"GF:{args.p}",
                    args.seed)
    F, C = load_curve(args, F)
    xs = list(F.elements())
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            hits = list(pool.map(lambda x0: points_with_x(C, x0), xs))
    else:
        hits = [points_with_x(C, x0) for x0 in xs]
    found = []
    for pts in hits:
        for pt in pts:
            if exact_order(C, embed(C, pt), args.n) == args.n:
                found.append(pt)
    found.sort(key=lambda P: (F.to_index(P.x), F.to_index(P.y)))
    return {"n": args.n, "count": len(found),
            "points": [point_json(F, P) for P in found]}, "torsion-census"


def cmd_weil(args):
    F = parse_field(args.field, args.seed)
    I = tuple(int(i) for i in args.I.split(",")) if args.I else ()
    templates = [t for t in nice_pairs_coprime(F, args.g) if t.I == I]
    if not templates:
        raise CliError("bad-args", f"no coprime template with I = {I}")
    t = templates[0]
    if args.mu is not None:
        mu = parse_elem(F, args.mu)
        u1, u2 = t.u_pair(F, mu)
        cert = PairCert(args.g, F.zero, F.neg(F.one), u1, u2)
    else:
        mu, cert, _ = find_good_mu(F, args.g, t)
    explicit = weil_explicit(F, args.g, cert)
    closed = weil_closed(F, args.g, I)
    payload = weil_result_json(F, args.g, I, explicit, closed)
    payload["mu"] = F.elem_to_json(mu)
    return payload, "weil-pairing-two-routes"


def cmd_selftest(args):
    results = acceptance.run_all(verbose=True)
    payload = {"criteria": [
        {"name": name, "status": "pass" if ok else "fail", "detail": detail,
         "seconds": round(secs, 2)}
        for name, ok, detail, secs in results]}
    ok = all(r[1] or r[0] in acceptance.EXPECTED_FAIL for r in results)
    return payload, "acceptance-selftest", 0 if ok else 1


# -- dispatch --------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="hyptorsion", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, field=True, g=False):
        if field:
            p.add_argument("--field", default="Q", help="Q, GF:p or GF:p,m")
        if g:
            p.add_argument("--g", type=int, required=True)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--json-out", dest="json_out", default=None)

    p = sub.add_parser("construct-single", help="curve from a single-point certificate")
    common(p, g=True)
    p.add_argument("--a", required=True)
    p.add_argument("--v", required=True)
    p.set_defaults(func=cmd_construct_single)

    p = sub.add_parser("verify", help="certify a point has order 2g+1")
    common(p)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--curve", required=True, help="poly text or curve .json file")
    p.add_argument("--point", required=True, help="(x,y)")
    p.add_argument("--oracle", action="store_true", help="also run the Cantor oracle")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct-pair", help="curve from a pair certificate")
    common(p, g=True)
    for flag in ("--a1", "--a2", "--u1", "--u2"):
        p.add_argument(flag, required=True)
    p.set_defaults(func=cmd_construct_pair)

    p = sub.add_parser("enumerate-families", help="all family templates")
    common(p, g=True)
    p.add_argument("--regime", choices=("coprime", "char"), default="coprime")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--all-admissible", action="store_true")
    p.set_defaults(func=cmd_enumerate_families)

    p = sub.add_parser("find-mu", help="first good scalar for a template")
    common(p, g=True)
    p.add_argument("--regime", choices=("coprime", "char"), default="coprime")
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--all-admissible", action="store_true")
    p.add_argument("--index", type=int, default=0)
    p.set_defaults(func=cmd_find_mu)

    p = sub.add_parser("rational-g52", help="rational curve with four torsion points")
    common(p, field=False)
    p.add_argument("--g", type=int, default=52)
    p.set_defaults(func=cmd_rational_g52)

    p = sub.add_parser("hyperelliptic", help="totient certificates and scans")
    common(p, field=False)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--max", type=int, default=None)
    p.set_defaults(func=cmd_hyperelliptic)

    p = sub.add_parser("census", help="all points of exact order n")
    common(p, field=False)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--curve", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("weil", help="Weil pairing, explicit and closed form")
    common(p, g=True)
    p.add_argument("--I", required=True, help="comma-separated indices into M(2g+1)")
    p.add_argument("--mu", default=None)
    p.set_defaults(func=cmd_weil)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    common(p, field=False)
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        out = args.func(args)
        code = 0
        if len(out) == 3:
            payload, provenance, code = out
        else:
            payload, provenance = out
        result = {"status": "ok", "payload": payload, "provenance": provenance}
    except CliError as exc:
        result = {"status": "error", "code": exc.code, "message": str(exc)}
        code = 1
    except (FieldError, CurveError, CertError, InsufficientFieldError,
            ValueError) as exc:
        extra = {}
        if isinstance(exc, InsufficientFieldError):
            extra = {"extension_degree": exc.extension_degree}
        result = {"status": "error", "code": type(exc).__name__,
                  "message": str(exc), **extra}
        code = 1
    text = json.dumps(result, indent=2)
    if getattr(args, "json_out", None):
        with open(args.json_out, "w") as fh:
            fh.write(text + "\n")
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
