"""Command-line front end.

    eulermahonian stats perm 452361
    eulermahonian map std 1223132 --rho 2,3,2
    eulermahonian dist multiset 2,3,2 --pair des,maj
    eulermahonian verify all
    eulermahonian factor multiset 3,3
    eulermahonian table sn 5 --stat des

Payload goes to stdout, logs to stderr.  Exit status is 0 on success, 1 when
a verification fails and 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import re
import sys
from dataclasses import replace

from . import bijections as bj
from . import statistics as st
from . import verify as vf
from .errors import DomainError, EulerMahonianError, NonDivisibleError, ResourceLimitError
from .perms import (
    DEFAULT_CAP,
    DEFAULT_SIGNED_CAP,
    Composition,
    DescentSubset,
    MultisetWord,
    Permutation,
    SignedPermutation,
    composition_to_R,
    enumerate_bn,
    enumerate_descent_class_exact,
    enumerate_dn,
    enumerate_inverse_descent_class,
    enumerate_multiset,
    enumerate_quotient,
    enumerate_sn,
    enumerate_tn,
    parse_window,
)
from .polyalg import BivariatePoly, ScanBounds, distribution_poly, multiset_des_maj_poly, unitary_factor_scan

log = logging.getLogger("eulermahonian")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(EulerMahonianError):
    pass


# -- parsing helpers


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() in ("", "{}", "[]"):
        return ()
    return tuple(int(t) for t in text.strip("{}[]()").replace(",", " ").split())


def _composition(text: str) -> Composition:
    return Composition(_ints(text))


def _size(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"expected an integer size, got {text!r}") from None
    if n < 0:
        raise UsageError("size must be nonnegative")
    return n


def _word(text: str, rho_text: str | None) -> MultisetWord:
    letters = parse_window(text)
    if rho_text:
        return MultisetWord(letters, _composition(rho_text))
    return MultisetWord.from_letters(letters)


def _read_config(path: str | None) -> dict:
    if not path:
        return {}
    out = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"config line without '=': {raw.rstrip()}")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key] = value
    return out


# -- output


def _emit(args, payload, text: str | None = None, rows: list[list] | None = None):
    fmt = args.format
    if fmt == "json":
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    elif fmt == "csv" and rows is not None:
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        sys.stdout.write(buf.getvalue())
    else:
        sys.stdout.write((text if text is not None else json.dumps(payload)) + "\n")


def _poly_matrix(f: BivariatePoly, row_name: str, col_name: str) -> list[list]:
    """Rectangular coefficient matrix: rows by x-exponent, columns by q-exponent."""
    nr, nc = f.x_degree() + 1, f.q_degree() + 1
    header = [f"{row_name}\\{col_name}", *range(nc)]
    return [header] + [[i, *(f.coeff(i, j) for j in range(nc))] for i in range(nr)]


def _seq_text(seq) -> str:
    seq = list(seq)
    if seq and all(0 <= v <= 9 for v in seq) and len(seq) <= 9:
        return "".join(map(str, seq))
    return ",".join(map(str, seq))


# -- caps


def _caps(args) -> vf.VerifyCaps:
    caps = vf.DEFAULT_CAPS
    if args.cap is not None:
        for name in ("sn", "multiset", "signed"):
            if args.cap > getattr(vf.DEFAULT_CAPS, name):
                log.warning("cap %d exceeds the default %s cap %d; runs may be slow",
                            args.cap, name, getattr(vf.DEFAULT_CAPS, name))
        caps = replace(caps, sn=args.cap, multiset=args.cap, signed=args.cap)
    if getattr(args, "K", None) is not None and args.K > caps.series:
        log.warning("K=%d exceeds the default series cap %d", args.K, caps.series)
        caps = replace(caps, series=args.K)
    return caps


def _enum_cap(args, default: int) -> int:
    return default if args.cap is None else args.cap


# -- families


FAMILIES = ("sn", "multiset", "quotient", "idc", "dclass", "bn", "dn", "tn")


def _family_stream(args, family: str, params: str):
    """Return (stream factory, description) for a named family."""
    if family == "sn":
        n = _size(params)
        return (lambda: enumerate_sn(n, _enum_cap(args, DEFAULT_CAP))), f"S_{n}"
    if family in ("bn", "dn", "tn"):
        n = _size(params)
        fn = {"bn": enumerate_bn, "dn": enumerate_dn, "tn": enumerate_tn}[family]
        return (lambda: fn(n, _enum_cap(args, DEFAULT_SIGNED_CAP))), f"{family[0].upper()}_{n}"
    if family == "multiset":
        rho = _composition(params)
        return (lambda: enumerate_multiset(rho, _enum_cap(args, DEFAULT_CAP))), f"S_({rho})"
    if family in ("quotient", "idc"):
        if args.R is not None:
            n = _size(params)
            R = DescentSubset(n, frozenset(_ints(args.R)))
        else:
            rho = _composition(params)
            n, R = rho.N, composition_to_R(rho)
        fn = enumerate_quotient if family == "quotient" else enumerate_inverse_descent_class
        return (lambda: fn(n, R, _enum_cap(args, DEFAULT_CAP))), f"{family} N={n} R={R.sorted()}"
    if family == "dclass":
        n = _size(params)
        J = DescentSubset(n, frozenset(_ints(args.J)))
        return (lambda: enumerate_descent_class_exact(n, J, _enum_cap(args, DEFAULT_CAP))), f"Des=J={J.sorted()}"
    raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def _stat_pair(text: str) -> tuple[str, str]:
    names = [t.strip() for t in text.split(",") if t.strip()]
    if len(names) != 2:
        raise UsageError(f"--pair needs two statistic names, got {text!r}")
    for name in names:
        st.stat_function(name)
    return names[0], names[1]


# -- subcommands


def cmd_stats(args) -> int:
    carrier = args.carrier
    if carrier in ("perm", "sn"):
        x = Permutation(parse_window(args.input))
    elif carrier in ("signed", "bn", "dn"):
        x = SignedPermutation(parse_window(args.input))
        if carrier == "dn" and not x.is_even():
            raise DomainError(f"{x} is not in D_n")
    elif carrier in ("word", "multiset"):
        x = _word(args.input, args.rho)
    else:
        raise UsageError(f"unknown carrier {carrier!r}; choose perm, signed, dn or multiset")
    rec = st.all_stats(x)

    def show(key, value):
        if key.endswith("_set"):
            return "{" + ",".join(map(str, value)) + "}"
        return _seq_text(value) if isinstance(value, list) else value

    flat = {k: show(k, v) for k, v in rec.items()}
    text = "\n".join(f"{k}: {v}" for k, v in flat.items())
    _emit(args, rec, text, [list(flat), list(flat.values())])
    return EXIT_OK


def _need(value, flag):
    if value is None:
        raise UsageError(f"this bijection needs {flag}")
    return value


def cmd_map(args) -> int:
    name = args.bijection
    if name in ("std", "istd"):
        w = _word(args.input, args.rho)
        out = bj.standardize(w) if name == "std" else bj.istd(w)
        payload, text = list(out.window), str(out)
    elif name == "mincoset":
        p = Permutation(parse_window(args.input))
        out = bj.min_coset_rep(p, DescentSubset(p.n, frozenset(_ints(_need(args.R, "--R")))))
        payload, text = list(out.window), str(out)
    elif name in ("phi", "mset"):
        p = Permutation(parse_window(args.input))
        r = int(_need(args.r, "--r"))
        if name == "phi":
            out = bj.phi(p, r)
            payload, text = list(out.window), str(out)
        else:
            payload = sorted(bj.m_set(p, r))
            text = "{" + ",".join(map(str, payload)) + "}"
    elif name in ("sy", "signs", "d_decompose"):
        s = SignedPermutation(parse_window(args.input))
        if name == "sy":
            out = bj.sy(s)
            payload, text = list(out.window), str(out)
        elif name == "signs":
            payload = sorted(bj.signs(s))
            text = "{" + ",".join(map(str, payload)) + "}"
        else:
            alpha, tau = bj.d_decompose(s)
            payload = {"alpha": list(alpha.window), "tau": list(tau.window)}
            text = f"alpha={alpha} tau={tau}"
    elif name == "assemble_b":
        tau = Permutation(parse_window(args.input))
        out = bj.assemble_b(tau, _ints(args.J))
        payload, text = list(out.window), str(out)
    elif name in ("code", "decode", "inverse"):
        if name == "code":
            x = parse_window(args.input)
            w = SignedPermutation(x) if any(v < 0 for v in x) else Permutation(x)
            out = st.lehmer_code(w)
            payload, text = list(out.digits), str(out)
        elif name == "decode":
            out = st.decode_lehmer(parse_window(args.input))
            payload, text = list(out.window), str(out)
        else:
            x = parse_window(args.input)
            out = (SignedPermutation(x) if any(v < 0 for v in x) else Permutation(x)).inverse()
            payload, text = list(out.window), str(out)
    else:
        raise UsageError(f"unknown bijection {name!r}")
    _emit(args, payload, text, [payload] if isinstance(payload, list) else None)
    return EXIT_OK


def cmd_dist(args) -> int:
    stream, desc = _family_stream(args, args.family, args.params)
    pair = _stat_pair(args.pair)
    f = distribution_poly(stream(), pair)
    log.info("%s: %d elements", desc, f.total())
    _emit(args, f.to_json(), str(f), _poly_matrix(f, *pair))
    return EXIT_OK


def _parse_bounds(text: str | None, default_b: int | None) -> ScanBounds:
    if not text:
        return ScanBounds(b_max=default_b)
    d, a, b = _ints(text)
    return ScanBounds(d, a, b)


def cmd_factor(args) -> int:
    if args.family == "multiset" and args.pair in (None, "des,maj"):
        rho = _composition(args.params)
        f = multiset_des_maj_poly(rho)
        default_b = 2 * rho.N
    else:
        stream, _ = _family_stream(args, args.family, args.params)
        f = distribution_poly(stream(), _stat_pair(args.pair or "des,maj"))
        default_b = None
    bounds = _parse_bounds(args.bounds, default_b)
    found = unitary_factor_scan(f, bounds)
    bounds = bounds.resolve(f)
    payload = {
        "polynomial": f.to_json(),
        "bounds": bounds.to_json(),
        "found": [u.to_json() for u in found],
    }
    lines = [f"polynomial: {f}", f"bounds: d<={bounds.d_max} a<={bounds.a_max} b<={bounds.b_max}"]
    lines += [f"factor: {u} (multiplicity {u.multiplicity})" for u in found] or [
        "no unitary factor within bounds"
    ]
    rows = [["d", "a", "b", "multiplicity", "factor"]] + [
        [u.d, u.a, u.b, u.multiplicity, str(u.poly)] for u in found
    ]
    _emit(args, payload, "\n".join(lines), rows)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.pair:
        stream, _ = _family_stream(args, args.family, args.params)
        pair = _stat_pair(args.pair)
        f = distribution_poly(stream(), pair)
        rows = _poly_matrix(f, *pair)
    else:
        stat = _need(args.stat, "--stat or --pair")
        st.stat_function(stat)
        if args.family in ("sn", "bn", "dn", "tn"):
            sizes = [str(k) for k in range(1, _size(args.params) + 1)]
        else:
            sizes = [args.params]
        dists = []
        for size in sizes:
            stream, _ = _family_stream(args, args.family, size)
            dists.append(distribution_poly(stream(), (stat, lambda _: 0)))
        width = max(f.x_degree() for f in dists) + 1
        rows = [["size\\" + stat, *range(width)]]
        rows += [[size, *(f.coeff(k, 0) for k in range(width))] for size, f in zip(sizes, dists)]
    payload = {"header": rows[0], "rows": rows[1:]}
    text = "\n".join(",".join(map(str, r)) for r in rows)
    _emit(args, payload, text, rows)
    return EXIT_OK


def _verify_reports(args) -> list:
    caps = _caps(args)
    K = args.K if args.K is not None else 6
    check = args.check
    if check == "all":
        return vf.run_all(caps, K)
    if check not in vf.CHECKS:
        raise UsageError(f"unknown check {check!r}; choose all or {', '.join(vf.CHECKS)}")
    p = args.params
    if p is None:
        raise UsageError(f"check {check!r} needs a parameter")
    if check in ("ska", "b", "d", "tn", "lengths"):
        return [vf.CHECKS[check](_size(p), caps)]
    if check == "fh":
        n = _size(p)
        if args.J is None:
            return [vf.verify_fh_all(n, caps)]
        return [vf.verify_fh(n, _ints(args.J), caps)]
    if check == "fh_all":
        return [vf.verify_fh_all(_size(p), caps)]
    if check in ("equi", "real_rooted"):
        return [vf.CHECKS[check](_composition(p), caps)]
    if check in ("mmpart", "mstc"):
        return [vf.CHECKS[check](_composition(p), K, caps)]
    if check in ("b_carlitz", "d_carlitz"):
        return [vf.CHECKS[check](_size(p), K, caps)]
    if check == "factorization":
        return [vf.verify_factorization(_size(p), caps)]
    if check == "conjecture":
        return [vf.conjecture_scan(_composition(p), _parse_bounds(args.bounds, 2 * _composition(p).N))]
    raise UsageError(f"unhandled check {check!r}")


def cmd_verify(args) -> int:
    reports = _verify_reports(args)
    for r in reports:
        log.info("%s (%.3fs)", r.summary(), r.elapsed)
    data = [r.to_json(timing=args.timings) for r in reports]
    payload = data if args.check == "all" else data[0]
    text = "\n".join(r.summary() for r in reports)
    rows = [["check", "params", "verdict"]] + [
        [r.check, json.dumps(r.params, sort_keys=True), r.verdict] for r in reports
    ]
    _emit(args, payload, text, rows)
    return EXIT_OK if vf.suite_ok(reports) else EXIT_FAIL


# -- parser


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the subcommand copy uses SUPPRESS so it never overwrites a flag given earlier
    def default(value):
        return argparse.SUPPRESS if suppress else value

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text", "csv"), default=default(None))
    common.add_argument("--cap", type=int, default=default(None), help="override enumeration size caps")
    common.add_argument("--seed-order", choices=("lex",), default=default("lex"),
                        help="enumeration order (lexicographic only)")
    common.add_argument("--config", default=default(None), help="key=value file with defaults")
    common.add_argument("-v", "--verbose", action="count", default=default(0))
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulermahonian",
        description="Euler-Mahonian statistics, bijections and identity checks.",
        parents=[_global_flags(False)],
    )
    common = _global_flags(True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="all statistics of one element")
    p.add_argument("carrier", help="perm | signed | dn | multiset")
    p.add_argument("input")
    p.add_argument("--rho", default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("map", parents=[common], help="apply a bijection")
    p.add_argument("bijection",
                   help="std | istd | mincoset | phi | mset | sy | signs | assemble_b | "
                        "d_decompose | code | decode | inverse")
    p.add_argument("input")
    p.add_argument("--rho", default=None)
    p.add_argument("--R", default=None)
    p.add_argument("--r", default=None)
    p.add_argument("--J", default=None)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("dist", parents=[common], help="joint distribution polynomial")
    p.add_argument("family", help=" | ".join(FAMILIES))
    p.add_argument("params")
    p.add_argument("--pair", required=True)
    p.add_argument("--R", default=None)
    p.add_argument("--J", default=None)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("verify", parents=[common], help="check an identity exhaustively")
    p.add_argument("check")
    p.add_argument("params", nargs="?")
    p.add_argument("-K", type=int, default=None, help="series truncation degree")
    p.add_argument("--J", default=None)
    p.add_argument("--bounds", default=None)
    p.add_argument("--timings", action="store_true", help="include elapsed times in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("factor", parents=[common], help="bounded unitary factor scan")
    p.add_argument("family")
    p.add_argument("params")
    p.add_argument("--bounds", default=None, help="d_max,a_max,b_max")
    p.add_argument("--pair", default=None)
    p.add_argument("--R", default=None)
    p.add_argument("--J", default=None)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("table", parents=[common], help="coefficient table as CSV")
    p.add_argument("family")
    p.add_argument("params")
    p.add_argument("--stat", default=None)
    p.add_argument("--pair", default=None)
    p.add_argument("--R", default=None)
    p.add_argument("--J", default=None)
    p.set_defaults(func=cmd_table, default_format="csv")
    return parser


_SIGNED_WINDOW = re.compile(r"^-\d+(,-?\d+)+$")


def _protect_signed_windows(argv):
    # argparse would read "-2,1" as an option; a leading space keeps it positional
    return [" " + a if _SIGNED_WINDOW.match(a) else a for a in argv]


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_protect_signed_windows(argv))
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        config = _read_config(args.config)
        if args.format is None:
            args.format = config.get("format", getattr(args, "default_format", "json"))
        if args.cap is None and "cap" in config:
            args.cap = int(config["cap"])
        if getattr(args, "K", "absent") is None and "K" in config:
            args.K = int(config["K"])
        return args.func(args)
    except (UsageError, DomainError, ResourceLimitError, NonDivisibleError, ValueError, OSError) as exc:
        print(f"eulermahonian {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
