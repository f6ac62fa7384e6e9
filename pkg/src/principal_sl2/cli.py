"""Command-line interface.

Output is JSON with every integer rendered as a decimal string.  Exit codes:
0 success, 1 domain error (JSON error object on stdout), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import Any, Dict, List, Optional, Sequence

from . import diffset, kacsearch, sl2restrict, torsionchar
from .errors import DomainError, NoStructuralValue
from .rootdata import CartanType, DynkinType, RootDatum, Weight, build

GOLDEN_FILES = {
    "g2-c2": "g2_c2.json",
    "adjoint": "adjoint.json",
    "exceptional-kac": "exceptional_kac.json",
    "classical-centralizers": "classical_centralizers.json",
    "sl6-pair": "sl6_pair.json",
}


class UsageError(Exception):
    pass


def _stringify(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _emit(obj: Any) -> None:
    print(json.dumps(_stringify(obj), indent=2))


def _csv_ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")


def _datum(text: str) -> RootDatum:
    return build(CartanType.parse(text))


def _weight(datum: RootDatum, text: str, basis: str) -> Weight:
    coords = _csv_ints(text)
    if len(coords) != datum.rank:
        raise UsageError(f"{datum.cartan_type} needs {datum.rank} coordinates, got {len(coords)}")
    if basis == "root":
        omega = datum.root_to_weight(coords)
        back = datum.weight_to_root(omega)
        if any(b != c for b, c in zip(back, coords)):  # pragma: no cover - basis change is exact
            raise UsageError("basis conversion is not exact")
        coords = list(omega)
    return Weight(tuple(coords))


def _golden(table: str) -> Dict[str, Any]:
    text = resources.files("principal_sl2").joinpath("golden", GOLDEN_FILES[table]).read_text()
    return json.loads(text)


# -- subcommands --------------------------------------------------------------

def cmd_char_sl2(args: argparse.Namespace) -> int:
    datum = _datum(args.type)
    lam = _weight(datum, args.weight, args.basis)
    theta = sl2restrict.principal_character(datum, lam)
    terms = dict(sorted(theta.terms().items()))
    dec = sl2restrict.decompose_sl2(theta)
    if args.format == "json":
        out: Dict[str, Any] = {"type": str(datum.cartan_type), "weight": list(lam.coords),
                               "coefficients": terms, "decomposition": dec.multiplicities}
        if args.dimension:
            out["dimension"] = sl2restrict.dimension(datum, lam)
        _emit(out)
        return 0
    if args.format == "tsv":
        print("exponent\tcoefficient")
        for e, c in terms.items():
            print(f"{e}\t{c}")
    else:
        print(theta.render())
    if args.decompose:
        for d, k in dec.multiplicities.items():
            print(f"V{d}\t{k}" if args.format == "tsv" else f"{k} x V({d})")
    if args.dimension:
        print(f"dimension\t{sl2restrict.dimension(datum, lam)}")
    return 0


def _structural_json(v: torsionchar.TorsionCharacterValue) -> Dict[str, Any]:
    out: Dict[str, Any] = {"value": v.value}
    if v.detail is not None:
        out.update(reason=v.detail.reason, sign=v.detail.sign, central_sign=v.detail.central_sign,
                   d_lambda=v.detail.d_lambda, d_m=v.detail.d_m)
    return out


def cmd_char_at(args: argparse.Namespace) -> int:
    datum = _datum(args.type)
    lam = _weight(datum, args.weight, args.basis)
    out: Dict[str, Any] = {"type": str(datum.cartan_type), "weight": list(lam.coords), "m": args.m}
    values = []
    if args.route in ("direct", "both"):
        direct = torsionchar.character_at_Cm_direct(datum, lam, args.m)
        out["direct"] = {"value": direct.value}
        values.append(direct.value)
    if args.route in ("structural", "both"):
        try:
            s = torsionchar.character_at_Cm_structural(datum, lam, args.m)
        except NoStructuralValue as exc:
            if args.route == "structural":
                raise
            out["structural"] = exc.to_dict()
        else:
            out["structural"] = _structural_json(s)
            values.append(s.value)
    out["value"] = values[0]
    if args.route == "both":
        # null when only the direct route produced a value
        out["agree"] = values[0] == values[1] if len(values) == 2 else None
    _emit(out)
    return 0


def _adjoint_types(text: str) -> List[str]:
    if text != "all":
        return [text]
    return [row["type"] for row in _golden("adjoint")["rows"]]


def cmd_adjoint_check(args: argparse.Namespace) -> int:
    rows = []
    for t in _adjoint_types(args.type):
        datum = _datum(t)
        theta = sl2restrict.principal_character(datum, sl2restrict.highest_root_weight(datum))
        closed = sl2restrict.adjoint_factorized(datum)
        rows.append({"type": str(datum.cartan_type), "pass": theta == closed,
                     "strings": sl2restrict.decompose_sl2(theta).multiplicities})
    _emit({"results": rows, "all_pass": all(r["pass"] for r in rows)})
    return 0


def cmd_kostant(args: argparse.Namespace) -> int:
    datum = _datum(args.type)
    lam = _weight(datum, args.weight, args.basis)
    value = torsionchar.kostant_coxeter_value(datum, lam)
    out: Dict[str, Any] = {"type": str(datum.cartan_type), "weight": list(lam.coords),
                           "h": datum.coxeter_number, "value": value}
    if value:
        w = torsionchar.coxeter_witness(datum, lam)[0]
        out["w_lambda"] = {"word": list(w.word), "length": w.length,
                           "parity": "even" if w.length % 2 == 0 else "odd"}
    _emit(out)
    return 0


def _kac_row(ct: CartanType, v: kacsearch.KacVector) -> Dict[str, Any]:
    c = kacsearch.centralizer_of(ct, v)
    return {"kac": list(v.s), "centralizer": str(c.dynkin_type), "roots": c.root_count,
            "dimension": c.dimension}


def cmd_kac(args: argparse.Namespace) -> int:
    ct = CartanType.parse(args.type)
    if args.m < 1:
        raise UsageError("--m must be positive")
    out: Dict[str, Any] = {"type": str(ct), "m": args.m}
    if args.action == "enumerate":
        out["vectors"] = [_kac_row(ct, v) for v in kacsearch.enumerate_kac(ct, args.m)]
    elif args.action == "minimal":
        out["classes"] = [_kac_row(ct, v) for v, _ in kacsearch.minimal_centralizers(ct, args.m)]
        out["principal"] = list(kacsearch.principal_kac_vector(ct, args.m).s)
    else:
        vecs = kacsearch.enumerate_kac(ct, args.m)
        out["orbits"] = [[list(v.s) for v in orb] for orb in kacsearch.omega_orbits(ct, vecs)]
    _emit(out)
    return 0


def _classical_json(c: kacsearch.ClassicalClass) -> Dict[str, Any]:
    return {"modulus": c.modulus, "multiplicities": list(c.multiplicities),
            "centralizer": kacsearch.render_factors(c.centralizer),
            "factors": [{"group": kd, "size": k} for kd, k in c.centralizer],
            "dimension": c.dimension}


def cmd_classical(args: argparse.Namespace) -> int:
    out: Dict[str, Any] = {"family": args.family, "n": args.n, "d": args.d}
    if args.action == "minimal":
        classes = kacsearch.classical_minimal_centralizers(args.family, args.n, args.d)
        principal = kacsearch.principal_class(args.family, args.n, args.d)
        out["classes"] = [_classical_json(c) for c in classes]
        out["principal_is_minimal"] = principal.multiplicities in [c.multiplicities for c in classes]
    else:
        out["group_d"] = _classical_json(kacsearch.centralizer_of_principal(args.family, args.n, args.d))
    _emit(out)
    return 0


def cmd_diffset(args: argparse.Namespace) -> int:
    if args.action == "search":
        pairs = diffset.search_collisions(args.n, args.bound)
        _emit({"n": args.n, "bound": args.bound,
               "pairs": [{"x": list(x.elements), "y": list(y.elements)} for x, y in pairs]})
        return 0
    if args.x is None or args.y is None:
        raise UsageError("diffset check needs --x and --y")
    X = diffset.IntegerSet.of(_csv_ints(args.x))
    Y = diffset.IntegerSet.of(_csv_ints(args.y))
    if len(X) != len(Y):
        raise UsageError("--x and --y must have the same size")
    same = diffset.difference_multiset(X) == diffset.difference_multiset(Y)
    _emit({"x": list(X.elements), "y": list(Y.elements), "equal_differences": same,
           "equivalent": diffset.equivalent(X, Y),
           "lambda": list(diffset.weight_from_set(X).coords),
           "mu": list(diffset.weight_from_set(Y).coords)})
    return 0


# -- reproduce ----------------------------------------------------------------

def reproduce_g2_c2() -> Dict[str, Any]:
    datum = build("G2")
    rows = []
    for row in _golden("g2-c2")["rows"]:
        k, l, want = int(row["k"]), int(row["l"]), int(row["value"])
        lam = Weight((k, l))
        d = torsionchar.character_at_Cm_direct(datum, lam, 2).value
        s = torsionchar.character_at_Cm_structural(datum, lam, 2).value
        rows.append({"k": k, "l": l, "direct": d, "structural": s, "golden": want,
                     "match": d == s == want})
    return {"rows": rows}


def reproduce_adjoint() -> Dict[str, Any]:
    rows = []
    for row in _golden("adjoint")["rows"]:
        datum = _datum(row["type"])
        theta = sl2restrict.principal_character(datum, sl2restrict.highest_root_weight(datum))
        mult = sl2restrict.decompose_sl2(theta).multiplicities
        dims = sorted(d for d, k in mult.items() for _ in range(k))
        want = [int(x) for x in row["string_dimensions"]]
        closed = theta == sl2restrict.adjoint_factorized(datum)
        rows.append({"type": row["type"], "closed_form": closed, "string_dimensions": dims,
                     "match": closed and dims == want})
    return {"rows": rows}


def exceptional_row_check(type_text: str, m: int, golden_classes: Sequence[Dict[str, Any]]) -> Dict[str, Any]:
    """Compare computed minimal classes with a golden row, Kac vectors taken up to Omega."""
    ct = CartanType.parse(type_text)
    found = kacsearch.minimal_centralizers(ct, m)
    orbit_of = {}
    for v, c in found:
        for u in kacsearch.omega_orbit(ct, v):
            orbit_of[u.s] = (v.s, c.dynkin_type)
    unmatched = []
    hit = set()
    for g in golden_classes:
        s = tuple(int(x) for x in g["kac"])
        entry = orbit_of.get(s)
        if entry is None or entry[1] != DynkinType.parse(g["centralizer"]):
            unmatched.append(list(s))
        else:
            hit.add(entry[0])
    counts_agree = len(found) == len(golden_classes)
    return {"type": str(ct), "m": m,
            "computed": [{"kac": list(v.s), "centralizer": str(c.dynkin_type)} for v, c in found],
            "golden_class_count": len(golden_classes), "computed_class_count": len(found),
            "unmatched_golden": unmatched,
            "match": counts_agree and not unmatched and len(hit) == len(found)}


def reproduce_exceptional_kac() -> Dict[str, Any]:
    rows = [exceptional_row_check(r["type"], int(r["m"]), r["classes"])
            for r in _golden("exceptional-kac")["rows"]]
    return {"rows": rows}


def golden_factors(row: Dict[str, Any]) -> tuple:
    return tuple(sorted(((f["group"], int(f["size"])) for f in row["factors"]),
                        key=lambda f: (f[0], -f[1])))


def reproduce_classical() -> Dict[str, Any]:
    rows = []
    for row in _golden("classical-centralizers")["rows"]:
        fam, n, d = row["family"], int(row["n"]), int(row["d"])
        got = kacsearch.centralizer_of_principal(fam, n, d)
        rows.append({"family": fam, "n": n, "d": d,
                     "computed": kacsearch.render_factors(got.centralizer),
                     "golden": kacsearch.render_factors(golden_factors(row)),
                     "match": got.centralizer == golden_factors(row)})
    return {"rows": rows}


def reproduce_sl6() -> Dict[str, Any]:
    g = _golden("sl6-pair")
    X = diffset.IntegerSet.of(int(x) for x in g["x"])
    Y = diffset.IntegerSet.of(int(x) for x in g["y"])
    datum = _datum(g["type"])
    lam, mu = diffset.weight_from_set(X), diffset.weight_from_set(Y)
    fp_equal = (sl2restrict.restriction_fingerprint(datum, lam)
                == sl2restrict.restriction_fingerprint(datum, mu))
    flipped = Weight(tuple(reversed(lam.coords)))
    related = mu == lam or mu == flipped
    found = {(x.canonical(), y.canonical()) for x, y in diffset.search_collisions(len(X), max(X.elements))}
    in_search = (X.canonical(), Y.canonical()) in found or (Y.canonical(), X.canonical()) in found
    ok = (list(lam.coords) == [int(x) for x in g["lambda"]]
          and list(mu.coords) == [int(x) for x in g["mu"]]
          and fp_equal and not related and in_search)
    return {"rows": [{"x": list(X.elements), "y": list(Y.elements), "lambda": list(lam.coords),
                      "mu": list(mu.coords), "fingerprints_equal": fp_equal,
                      "related_by_diagram_automorphism": related, "found_by_search": in_search,
                      "match": ok}]}


REPRODUCERS = {
    "g2-c2": reproduce_g2_c2,
    "adjoint": reproduce_adjoint,
    "exceptional-kac": reproduce_exceptional_kac,
    "classical-centralizers": reproduce_classical,
    "sl6-pair": reproduce_sl6,
}


def cmd_reproduce(args: argparse.Namespace) -> int:
    result = REPRODUCERS[args.table]()
    rows = result["rows"]
    mismatched = sum(1 for r in rows if not r["match"])
    _emit({"table": args.table, "rows": rows, "row_count": len(rows),
           "mismatches": mismatched, "all_match": mismatched == 0})
    return 0


# -- parser -------------------------------------------------------------------

def _add_weight_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", required=True, help="Cartan type, e.g. G2 or E6")
    p.add_argument("--weight", required=True, help="comma-separated coordinates")
    p.add_argument("--basis", choices=("omega", "root"), default="omega",
                   help="coordinates of --weight: fundamental weights (default) or simple roots")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="principal-sl2",
                                     description="Principal SL2 restrictions and torsion character values.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char-sl2", help="restriction of an irreducible to the principal SL2")
    _add_weight_args(p)
    p.add_argument("--decompose", action="store_true")
    p.add_argument("--dimension", action="store_true")
    p.add_argument("--format", choices=("json", "tsv", "text"), default="json")
    p.set_defaults(func=cmd_char_sl2)

    p = sub.add_parser("char-at", help="character value at the principal element C_m")
    _add_weight_args(p)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--route", choices=("direct", "structural", "both"), default="both")
    p.set_defaults(func=cmd_char_at)

    p = sub.add_parser("adjoint-check", help="adjoint restriction against its closed form")
    p.add_argument("--type", required=True, help="Cartan type or 'all'")
    p.set_defaults(func=cmd_adjoint_check)

    p = sub.add_parser("kostant", help="value at the Coxeter element")
    _add_weight_args(p)
    p.set_defaults(func=cmd_kostant)

    p = sub.add_parser("kac", help="Kac coordinates of finite-order classes")
    p.add_argument("action", choices=("enumerate", "minimal", "orbits"))
    p.add_argument("--type", required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_kac)

    p = sub.add_parser("classical", help="finite-order classes in classical groups")
    p.add_argument("action", choices=("minimal", "principal"))
    p.add_argument("--family", choices=kacsearch.FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("diffset", help="integer sets with equal difference multisets")
    p.add_argument("action", choices=("search", "check"))
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--bound", type=int, default=11)
    p.add_argument("--x")
    p.add_argument("--y")
    p.set_defaults(func=cmd_diffset)

    p = sub.add_parser("reproduce", help="recompute a table and diff it against golden data")
    p.add_argument("--table", choices=tuple(REPRODUCERS), required=True)
    p.set_defaults(func=cmd_reproduce)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        print(json.dumps(exc.to_dict(), indent=2))
        return 1
    except (UsageError, ValueError) as exc:
        print(f"principal-sl2: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
