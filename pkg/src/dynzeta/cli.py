"""Command-line surface: exact counts, zeta data, verdicts and automata.

Every invocation compiles to a JobSpec (a command name plus a parameter
dictionary) that round-trips losslessly through JSON, so a job file and
the equivalent flag spelling produce byte-identical output.  Results are
line-delimited JSON records with a schema version; every numeric field is
an exact decimal string, never a float.  --table renders the same data as
aligned columns for humans.

Exit codes: 0 success, 2 invalid specification, 3 scale budget exceeded,
4 internal consistency failure (formula disagreeing with oracle).
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .dynmap import cycle_census, per_n_oracle, rat_map
from .errors import (DynzetaError, InfinitePeriodicPoints, Mismatch,
                     ScaleExceeded, SpecError)
from .families import (AdditiveMap, ChebyshevMap, LattesGenericJ,
                       LattesOrdinary, LattesSupersingular, PowerMap,
                       SubadditiveMap, classify_separability, per_n_closed,
                       realize)
from .field import field_make, ratfunc_field
from .automata import (christol_series, eventual_period_detect,
                       kernel_explore, vp_geometric_sequence,
                       vp_tower_sequence)
from .orders import B3_ORDER, HURWITZ, QuadRing, QuatElem, prime_context
from .twisted import TwistedPoly
from .zeta import rationality_guess, verdict, zeta_from_counts

SCHEMA = "dynzeta/1"


@dataclass(frozen=True)
class JobSpec:
    command: str
    params: dict

    def to_dict(self):
        return {"schema": SCHEMA, "command": self.command, "params": self.params}

    @classmethod
    def from_dict(cls, data):
        if data.get("schema") not in (None, SCHEMA):
            raise SpecError(f"unsupported job schema {data.get('schema')!r}")
        if "command" not in data:
            raise SpecError("job file lacks a command")
        return cls(data["command"], dict(data.get("params", {})))


# -- tiny polynomial string parser -------------------------------------------------

_TERM_RE = re.compile(
    r"^\s*(?P<coeff>\d+)?\s*\*?\s*"
    r"(?:(?P<v1>[a-z])(?:\^(?P<e1>\d+))?)?\s*\*?\s*"
    r"(?:(?P<v2>[a-z])(?:\^(?P<e2>\d+))?)?\s*$")


def parse_poly_string(text, variables):
    """Parse a +/- separated sum of monomials like '3*t^2*y + y + 1'.

    Returns {exponent tuple: coefficient} keyed by the given variable
    order.  Parentheses are not supported; expand products beforehand.
    """
    out = {}
    chunks = re.split(r"(?=[+-])", text.replace("-", "+-"))
    for chunk in chunks:
        chunk = chunk.strip()
        if not chunk or chunk == "+":
            continue
        sign = 1
        body = chunk.lstrip("+").strip()
        if body.startswith("-"):
            sign = -1
            body = body[1:].strip()
        if not body:
            raise SpecError(f"empty term in polynomial {text!r}")
        match = _TERM_RE.match(body)
        if not match:
            raise SpecError(f"cannot parse term {body!r}")
        coeff = int(match.group("coeff") or 1) * sign
        exps = [0] * len(variables)
        for vkey, ekey in (("v1", "e1"), ("v2", "e2")):
            var = match.group(vkey)
            if var is None:
                continue
            if var not in variables:
                raise SpecError(f"unknown variable {var!r} in {text!r}")
            exps[variables.index(var)] += int(match.group(ekey) or 1)
        key = tuple(exps)
        out[key] = out.get(key, 0) + coeff
    return out


def _poly_to_y_coeffs(table, p):
    """{(t_exp, y_exp): coeff} -> list of t-coefficient lists per y power."""
    if not table:
        raise SpecError("empty equation")
    ydeg = max(k[1] for k in table)
    tdeg = max(k[0] for k in table)
    out = [[0] * (tdeg + 1) for _ in range(ydeg + 1)]
    for (i, j), c in table.items():
        out[j][i] = c % p
    return out


def _parse_u_coeff(spec, ctx):
    """Coefficient entry for a twisted polynomial: int, or a string
    polynomial in u when the context is the rational-function field."""
    if isinstance(spec, int):
        return ctx.from_int(spec)
    if isinstance(spec, str):
        if ctx.flavor != "ratfunc":
            raise SpecError("string coefficients need the rational-function flavor")
        table = parse_poly_string(spec, ["u"])
        elem = ctx.zero()
        for (e,), c in table.items():
            elem = elem + ctx.from_int(c) * ctx.u() ** e
        return elem
    raise SpecError(f"bad coefficient entry {spec!r}")


# -- map construction from parameters ------------------------------------------------


def build_family(params):
    family = params.get("family")
    p = params.get("p")
    if family == "power":
        return PowerMap(p, params["d"])
    if family == "chebyshev":
        return ChebyshevMap(p, params["d"])
    if family in ("additive", "subadditive"):
        if params.get("ratfunc"):
            ctx = ratfunc_field(p)
        else:
            ctx = field_make(p, params.get("k", 1), seed=params.get("seed"))
        coeffs = [_parse_u_coeff(c, ctx) for c in params["sigma"]]
        sigma = TwistedPoly.from_elems(ctx, coeffs)
        if family == "additive":
            translation = params.get("translation")
            trans = ctx.elem(translation) if translation is not None else None
            return AdditiveMap(sigma, trans)
        return SubadditiveMap(sigma, params["d"])
    if family == "lattes-generic":
        return LattesGenericJ(p, params["s"], params.get("variant", "norm"))
    if family == "lattes-ordinary":
        T, N = params["tau"]
        ring = QuadRing(T, N)
        ctx = prime_context(ring, p, unit_root=params.get("unit_root"))
        a, b = params["sigma"]
        return LattesOrdinary(ctx, ring.elem(a, b), params.get("gamma_order", 2))
    if family == "lattes-supersingular":
        if "sigma_quat" in params:
            order = HURWITZ if p == 2 else B3_ORDER
            a, b, c, d = params["sigma_quat"]
            quat = QuatElem(order, a, b, c, d)
            return LattesSupersingular(p, sigma_quat=quat,
                                       gamma=params.get("gamma", "units"))
        T, N = params["sigma_tn"]
        return LattesSupersingular(p, sigma_trace=T, sigma_norm=N)
    raise SpecError(f"unknown family {family!r}")


def build_raw_map(params):
    ctx = field_make(params["p"], params.get("k", 1), seed=params.get("seed"))
    return rat_map(ctx, params["num"], params.get("den", [1]))


def _resolve_map(params):
    """(family map or None, realized rational map or None)."""
    if "family" in params:
        fam = build_family(params)
        realized = None
        try:
            realized = realize(fam)
        except DynzetaError:
            pass
        return fam, realized
    if "num" in params:
        return None, build_raw_map(params)
    raise SpecError("map description needs a family tag or raw coefficients")


# -- commands -----------------------------------------------------------------------


def run_job(spec: JobSpec):
    """Yield output records (dicts) for a job; deterministic."""
    handler = _COMMANDS.get(spec.command)
    if handler is None:
        raise SpecError(f"unknown command {spec.command!r}")
    yield {"record": "header", "schema": SCHEMA, "command": spec.command,
           "params": spec.params}
    yield from handler(spec.params)


def _cmd_count(params):
    fam, realized = _resolve_map(params)
    if fam is None:
        raise SpecError("count needs a family map; use oracle for raw maps")
    n_max = params.get("n_max", 8)
    n_min = params.get("n_min", 1)
    mismatches = 0
    for n in range(n_min, n_max + 1):
        closed = per_n_closed(fam, n)
        oracle_value = None
        match = None
        if realized is not None:
            try:
                oracle_value = per_n_oracle(realized, n)
                match = oracle_value == closed
                if not match:
                    mismatches += 1
            except ScaleExceeded:
                oracle_value = None
        yield {"record": "row", "n": n, "closed": closed,
               "oracle": oracle_value, "match": match}
    yield {"record": "summary", "rows": n_max - n_min + 1,
           "mismatches": mismatches, "separability": classify_separability(fam)}
    if mismatches:
        raise Mismatch(f"{mismatches} closed-form/oracle disagreements")


def _cmd_oracle(params):
    _, realized = _resolve_map(params)
    if realized is None:
        raise SpecError("this map has no concrete realization to iterate")
    for n in range(params.get("n_min", 1), params.get("n_max", 4) + 1):
        try:
            yield {"record": "row", "n": n, "count": per_n_oracle(realized, n)}
        except ScaleExceeded:
            yield {"record": "row", "n": n, "count": None}


def _cmd_zeta(params):
    fam, _ = _resolve_map(params)
    if fam is None:
        raise SpecError("zeta needs a family map")
    terms = params.get("terms", 30)
    counts = [per_n_closed(fam, n) for n in range(1, terms + 1)]
    series = zeta_from_counts(counts)
    yield {"record": "zeta", "provenance": series.provenance,
           "coefficients": list(series.coeffs)}
    guess = rationality_guess(counts, params.get("max_order", 8))
    if guess is None or guess.numerator is None:
        yield {"record": "rationality",
               "found": bool(guess),
               "order": guess.order if guess else None,
               "numerator": None, "denominator": None}
    else:
        yield {"record": "rationality", "found": True, "order": guess.order,
               "numerator": list(guess.numerator),
               "denominator": list(guess.denominator)}


def _cmd_verdict(params):
    fam, _ = _resolve_map(params)
    if fam is None:
        raise SpecError("verdict needs a family map")
    result = verdict(fam)
    record = {"record": "verdict", "outcome": result.outcome,
              "reason": result.reason}
    if result.closed_form is not None:
        record["numerator"] = list(result.closed_form[0])
        record["denominator"] = list(result.closed_form[1])
        record["series_terms_checked"] = result.series_terms_checked
    yield record
    cert = result.certificate
    if cert is not None:
        yield {"record": "certificate", "family": cert.family,
               "shape": cert.shape, "m": cert.m, "ell": cert.ell,
               "ratio": cert.ratio, "alpha": cert.alpha, "beta": cert.beta,
               "tower_multiplier": cert.tower_multiplier, "v0": cert.v0,
               "control": cert.control,
               "heuristic_bound": cert.heuristic_bound,
               "crosscheck_terms": cert.crosscheck_terms,
               "consistent": cert.consistent(),
               "values_prefix": list(cert.values[:32])}
        yield {"record": "kernel", "base": cert.ell_kernel.base,
               "class_counts": list(cert.ell_kernel.class_counts),
               "classification": cert.ell_kernel.classification}
        yield {"record": "kernel", "base": cert.p_kernel.base,
               "class_counts": list(cert.p_kernel.class_counts),
               "classification": cert.p_kernel.classification}
        found = cert.period_scan is not None
        yield {"record": "period", "found": found,
               "preperiod": cert.period_scan[0] if found else None,
               "period": cert.period_scan[1] if found else None}


def _cmd_census(params):
    _, realized = _resolve_map(params)
    if realized is None:
        raise SpecError("census needs a realizable map")
    table = cycle_census(realized, params.get("ext_degree", 1),
                         params.get("max_period", 6))
    for length, count in table:
        yield {"record": "cycle", "length": length, "count": count}
    yield {"record": "summary", "cycles": sum(c for _, c in table)}


def _cmd_automata(params):
    kind = params.get("kind")
    if kind == "christol":
        p = params["p"]
        table = parse_poly_string(params["poly"], ["t", "y"])
        poly_y = _poly_to_y_coeffs(table, p)
        prefix = params.get("prefix", [0, 1])
        coeffs = christol_series(poly_y, p, prefix, params.get("terms", 64))
        yield {"record": "coefficients", "values": coeffs}
        return
    if kind in ("vp-geometric", "vp-tower"):
        if kind == "vp-geometric":
            seq = vp_geometric_sequence(params["a"], params["p"], params["ell"],
                                        params.get("alpha", 1),
                                        params.get("beta", 0),
                                        params.get("terms", 2000))
        else:
            seq = vp_tower_sequence(params["a"], params["p"], params["ell"],
                                    params.get("terms", 2000))
        yield {"record": "sequence", "order": seq.order,
               "index_base": seq.index_base,
               "values": list(seq.values[:params.get("show", 64)])}
        base = params.get("base", params["ell"])
        depth = params.get("depth", 3)
        report = kernel_explore(seq.oracle(), base, depth,
                                params.get("prefix_len", 64))
        yield {"record": "kernel", "base": base,
               "class_counts": list(report.class_counts),
               "classification": report.classification}
        scan = eventual_period_detect(seq.values)
        yield {"record": "period", "found": scan is not None,
               "preperiod": scan[0] if scan else None,
               "period": scan[1] if scan else None}
        return
    raise SpecError(f"unknown automata kind {kind!r}")


_COMMANDS = {
    "count": _cmd_count,
    "oracle": _cmd_oracle,
    "zeta": _cmd_zeta,
    "verdict": _cmd_verdict,
    "census": _cmd_census,
    "automata": _cmd_automata,
}


# -- output encoding ------------------------------------------------------------------


def _stringify(value):
    """Numbers become exact decimal strings; containers recurse."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if isinstance(value, dict):
        return {k: _stringify(v) for k, v in value.items()}
    return value


def emit_records(records, out, table=False):
    if not table:
        for rec in records:
            out.write(json.dumps(_stringify(rec), separators=(",", ":")) + "\n")
        return
    for rec in records:
        kind = rec.get("record")
        fields = [f"{k}={_fmt(v)}" for k, v in rec.items() if k != "record"]
        out.write(f"{kind:12s} " + "  ".join(fields) + "\n")


def _fmt(value):
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(str(v) for v in value) + "]"
    return str(value)


# -- argument handling ---------------------------------------------------------------


def _add_map_flags(sub):
    sub.add_argument("--family", choices=["power", "chebyshev", "additive",
                                          "subadditive", "lattes-generic",
                                          "lattes-ordinary",
                                          "lattes-supersingular"])
    sub.add_argument("--p", type=int)
    sub.add_argument("--k", type=int)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--d", type=int)
    sub.add_argument("--s", type=int)
    sub.add_argument("--variant", choices=["norm", "absolute"])
    sub.add_argument("--sigma", help="comma-separated twisted coefficients, "
                                     "low degree first (u-polynomials allowed "
                                     "with --ratfunc)")
    sub.add_argument("--ratfunc", action="store_true")
    sub.add_argument("--translation", type=int)
    sub.add_argument("--tau", help="T,N of the quadratic generator")
    sub.add_argument("--sigma-quad", help="a,b coordinates of the multiplier")
    sub.add_argument("--gamma-order", type=int)
    sub.add_argument("--unit-root", type=int)
    sub.add_argument("--sigma-tn", help="trace,norm of the multiplier")
    sub.add_argument("--sigma-quat", help="doubled quaternion coordinates a,b,c,d")
    sub.add_argument("--gamma", choices=["mu2", "units"])
    sub.add_argument("--num", help="comma-separated numerator coefficients")
    sub.add_argument("--den", help="comma-separated denominator coefficients")


def _collect_map_params(args):
    params = {}
    if args.family:
        params["family"] = args.family
    for key in ("p", "k", "seed", "d", "s", "variant", "translation",
                "gamma_order", "unit_root", "gamma"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    if args.ratfunc:
        params["ratfunc"] = True
    if args.sigma:
        entries = []
        for chunk in args.sigma.split(","):
            chunk = chunk.strip()
            try:
                entries.append(int(chunk))
            except ValueError:
                entries.append(chunk)
        params["sigma"] = entries
    for key, attr in (("tau", "tau"), ("sigma", "sigma_quad"),
                      ("sigma_tn", "sigma_tn"), ("sigma_quat", "sigma_quat")):
        val = getattr(args, attr, None)
        if val is not None:
            params[key] = [int(x) for x in val.split(",")]
    if args.num:
        params["num"] = [int(x) for x in args.num.split(",")]
    if args.den:
        params["den"] = [int(x) for x in args.den.split(",")]
    return params


def make_parser():
    parser = argparse.ArgumentParser(prog="dynzeta",
                                     description=__doc__.splitlines()[0])
    parser.add_argument("--job", help="JSON job file; flags are ignored")
    parser.add_argument("--table", action="store_true",
                        help="human-readable columns instead of JSON lines")
    subs = parser.add_subparsers(dest="command")
    for name in ("count", "oracle", "zeta", "verdict", "census"):
        sub = subs.add_parser(name)
        sub.add_argument("--job", help="JSON job file; flags are ignored")
        sub.add_argument("--table", action="store_true")
        _add_map_flags(sub)
        sub.add_argument("--n-min", type=int, dest="n_min")
        sub.add_argument("--n-max", type=int, dest="n_max")
        sub.add_argument("--terms", type=int)
        sub.add_argument("--max-order", type=int, dest="max_order")
        sub.add_argument("--ext-degree", type=int, dest="ext_degree")
        sub.add_argument("--max-period", type=int, dest="max_period")
    auto = subs.add_parser("automata")
    auto.add_argument("--job", help="JSON job file; flags are ignored")
    auto.add_argument("--table", action="store_true")
    auto.add_argument("--kind", choices=["christol", "vp-geometric", "vp-tower"],
                      required=True)
    auto.add_argument("--poly")
    auto.add_argument("--prefix", help="comma-separated initial coefficients")
    auto.add_argument("--p", type=int)
    auto.add_argument("--a", type=int)
    auto.add_argument("--ell", type=int)
    auto.add_argument("--alpha", type=int)
    auto.add_argument("--beta", type=int)
    auto.add_argument("--base", type=int)
    auto.add_argument("--depth", type=int)
    auto.add_argument("--terms", type=int)
    auto.add_argument("--prefix-len", type=int, dest="prefix_len")
    return parser


def compile_spec(args) -> JobSpec:
    if args.job:
        with open(args.job, "r", encoding="utf-8") as handle:
            return JobSpec.from_dict(json.load(handle))
    if not args.command:
        raise SpecError("no command given (and no --job file)")
    if args.command == "automata":
        params = {"kind": args.kind}
        for key in ("poly", "p", "a", "ell", "alpha", "beta", "base",
                    "depth", "terms", "prefix_len"):
            val = getattr(args, key, None)
            if val is not None:
                params[key] = val
        if args.prefix:
            params["prefix"] = [int(x) for x in args.prefix.split(",")]
        return JobSpec("automata", params)
    params = _collect_map_params(args)
    for key in ("n_min", "n_max", "terms", "max_order", "ext_degree",
                "max_period"):
        val = getattr(args, key, None)
        if val is not None:
            params[key] = val
    return JobSpec(args.command, params)


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        spec = compile_spec(args)
        emit_records(run_job(spec), out, table=args.table)
    except (InfinitePeriodicPoints, SpecError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ScaleExceeded as exc:
        print(f"scale exceeded: {exc}", file=sys.stderr)
        return 3
    except Mismatch as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 4
    except DynzetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
