"""Command-line front end.

Subcommands: coeffs, relations, roots, structconst, verify, chars, eval.
Matrix source is either --preset NAME (affine presets end in "~") or
--matrix-file PATH (one row per line, whitespace-separated integers).
Exit status: 0 all checks pass, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cartan import (
    FINITE,
    UNTWISTED_AFFINE,
    NotGCM,
    NotSymmetrizable,
    UnknownPreset,
    parse_matrix_text,
    preset,
    validate,
)
from .characters import (
    WindowTooSmall,
    character_from_values,
    character_space,
    chi_affine,
    chi_finite,
    even_column_set,
)
from .exact_math import GaussianRational
from .freelie import ParseError, parse_bracket
from .loop import YIndex, k_bracket_expand, onsager_basis, bracket_loop
from .onsager import psi_eval, realization_for
from .roots import AffineData, RootSystem, height
from .serre_coeffs import coeff_table
from .verify import verification_suite

SCHEMA = 1


class UsageFault(Exception):
    pass


# ---------------------------------------------------------------------------
# formatting helpers
# ---------------------------------------------------------------------------

def frac_str(x):
    if isinstance(x, GaussianRational):
        return str(x)
    return str(Fraction(x))


def root_str(root):
    bits = []
    for i, c in enumerate(root):
        if not c:
            continue
        label = "a%d" % (i + 1)
        if c == 1:
            bits.append("+%s" % label)
        elif c == -1:
            bits.append("-%s" % label)
        else:
            bits.append("%+d%s" % (c, label))
    s = "".join(bits) or "0"
    return s[1:] if s.startswith("+") else s


def affine_root_str(gamma):
    if gamma.is_imaginary:
        return "%dd" % gamma.level if gamma.level != 1 else "d"
    fin = root_str(gamma.finite)
    if gamma.level == 0:
        return fin
    lv = "%+dd" % gamma.level if abs(gamma.level) != 1 else ("+d" if gamma.level > 0 else "-d")
    return fin + lv


def yindex_str(idx):
    if idx.gamma.is_imaginary:
        return "y(%s)^(%d)" % (affine_root_str(idx.gamma), idx.i)
    return "y(%s)" % affine_root_str(idx.gamma)


def yindex_json(idx):
    return {"finite": list(idx.gamma.finite), "level": idx.gamma.level, "i": idx.i}


def ad_text(i, j, s):
    out = "B%s" % j
    for _ in range(s):
        out = "[B%s,%s]" % (i, out)
    return out


def _combo_str(parts):
    """parts: list of (coefficient, text); renders a signed sum."""
    if not parts:
        return "0"
    bits = []
    for coeff, text in parts:
        coeff = Fraction(coeff)
        if coeff == 1:
            bits.append("+%s" % text)
        elif coeff == -1:
            bits.append("-%s" % text)
        else:
            sign = "+" if coeff > 0 else "-"
            bits.append("%s%s*%s" % (sign, abs(coeff), text))
    s = "".join(bits)
    return s[1:] if s.startswith("+") else s


# ---------------------------------------------------------------------------
# report builders (plain JSON-native dicts; emit = json.dumps)
# ---------------------------------------------------------------------------

def coeffs_report(a, rmax):
    rows = coeff_table(a, rmax)
    return {
        "schema": SCHEMA,
        "kind": "coeffs",
        "rows": [{"a": row.a, "r": row.r, "c": list(row.c)} for row in rows],
    }


def print_coeffs(report):
    for row in report["rows"]:
        print("r=%d: (%s)" % (row["r"], ", ".join(str(x) for x in row["c"])))


def relations_report(c):
    out = []
    for i in c.labels:
        for j in c.labels:
            if i == j:
                continue
            a = c.entry(i, j)
            row = coeff_table(a, 1 - a)[1 - a]
            out.append({"i": i, "j": j, "a": a, "coeffs": list(row.c)})
    return {"schema": SCHEMA, "kind": "relations", "relations": out}


def print_relations(report):
    for rel in report["relations"]:
        i, j, coeffs = rel["i"], rel["j"], rel["coeffs"]
        top = len(coeffs) - 1
        lhs = ad_text(i, j, top)
        rhs = [(-coeffs[s], ad_text(i, j, s)) for s in range(top) if coeffs[s]]
        print("%s = %s   (a_ij = %d)" % (lhs, _combo_str(rhs), rel["a"]))


def roots_report(c, H):
    if c.kind == FINITE:
        rs = RootSystem(c)
        return {
            "schema": SCHEMA,
            "kind": "roots",
            "type": "finite",
            "roots": [
                {"coords": list(a), "height": height(a), "mult": 1}
                for a in rs.positive_roots
            ],
        }
    ad = AffineData(c)
    H = H or 2 * ad.delta_height
    return {
        "schema": SCHEMA,
        "kind": "roots",
        "type": "affine",
        "delta_height": ad.delta_height,
        "roots": [
            {
                "finite": list(g.finite),
                "level": g.level,
                "height": ad.height(g),
                "mult": m,
            }
            for g, m in ad.positive_up_to(H)
        ],
    }


def print_roots(report):
    if report["type"] == "finite":
        for row in report["roots"]:
            print("ht %2d  %s" % (row["height"], root_str(row["coords"])))
    else:
        from .roots import AffineRoot

        for row in report["roots"]:
            gamma = AffineRoot(tuple(row["finite"]), row["level"])
            print("ht %2d  %-18s mult %d" % (row["height"], affine_root_str(gamma), row["mult"]))


def structconst_report(c, H):
    rz = realization_for(c)
    if c.kind == FINITE:
        rs = rz.table.rs
        entries = []
        for a in sorted(rz.table.N):
            alpha, beta = a
            entries.append({"alpha": list(alpha), "beta": list(beta), "N": rz.table.N[a]})
        pairs = []
        for i, alpha in enumerate(rs.positive_roots):
            for beta in rs.positive_roots[i + 1 :]:
                x = rz.table.bracket(rz.table.y_basis(alpha), rz.table.y_basis(beta))
                coords = rz.y_coordinates(x)
                pairs.append(
                    {
                        "lhs": [list(alpha), list(beta)],
                        "rhs": [
                            {"coords": list(k), "coeff": str(Fraction(v))}
                            for k, v in sorted(coords.items())
                        ],
                    }
                )
        return {
            "schema": SCHEMA,
            "kind": "structconst",
            "type": "finite",
            "ntable": entries,
            "ybrackets": pairs,
        }
    ad = rz.affine
    H = H or ad.delta_height + 1
    if c.typename == "A1~":
        table = []
        for k in range(-2, 3):
            for l in range(-2, 3):
                val = bracket_loop(rz.table, onsager_basis(k)[0], onsager_basis(l)[0])
                assert val == onsager_basis(l - k)[1]
                table.append({"lhs": ["A%d" % k, "A%d" % l], "rhs": "G%d" % (l - k)})
        return {"schema": SCHEMA, "kind": "structconst", "type": "onsager", "brackets": table}
    indices = [YIndex(g, i) for g, m in ad.positive_up_to(H) for i in range(1, m + 1)]
    pairs = []
    for a1 in indices:
        for a2 in indices:
            if a2 <= a1:
                continue
            coords = k_bracket_expand(rz.table, a1, a2)
            pairs.append(
                {
                    "lhs": [yindex_json(a1), yindex_json(a2)],
                    "rhs": [
                        {"idx": yindex_json(k), "coeff": int(v)}
                        for k, v in sorted(coords.items())
                    ],
                }
            )
    return {"schema": SCHEMA, "kind": "structconst", "type": "affine", "brackets": pairs}


def print_structconst(report):
    if report["type"] == "finite":
        print("# nonzero [e_a, e_b] = N e_{a+b}")
        for row in report["ntable"]:
            print(
                "N(%s, %s) = %d" % (root_str(row["alpha"]), root_str(row["beta"]), row["N"])
            )
        print("# fixed-basis brackets")
        for row in report["ybrackets"]:
            lhs = "[y(%s), y(%s)]" % tuple(root_str(x) for x in row["lhs"])
            rhs = _combo_str(
                [(Fraction(t["coeff"]), "y(%s)" % root_str(t["coords"])) for t in row["rhs"]]
            )
            print("%s = %s" % (lhs, rhs))
    elif report["type"] == "onsager":
        for row in report["brackets"]:
            print("[%s, %s] = %s" % (row["lhs"][0], row["lhs"][1], row["rhs"]))
    else:
        from .roots import AffineRoot

        def from_json(d):
            return YIndex(AffineRoot(tuple(d["finite"]), d["level"]), d["i"])

        for row in report["brackets"]:
            lhs = "[%s, %s]" % tuple(yindex_str(from_json(d)) for d in row["lhs"])
            rhs = _combo_str([(t["coeff"], yindex_str(from_json(t["idx"]))) for t in row["rhs"]])
            print("%s = %s" % (lhs, rhs))


def verify_report(c, jmax=None, H=None):
    rows = verification_suite(c, jmax=jmax, height=H)
    return {
        "schema": SCHEMA,
        "kind": "verify",
        "matrix": [list(r) for r in c.a],
        "type": c.typename or c.kind,
        "checks": [
            {"name": name, "pass": bool(passed), "detail": detail}
            for name, passed, detail in rows
        ],
    }


def print_verify(report):
    for row in report["checks"]:
        print("%s  %s (%s)" % ("PASS" if row["pass"] else "FAIL", row["name"], row["detail"]))


def chars_report(c, H=None):
    # exact preset C types get the closed-form columns, computed on the
    # displayed symplectic basis the closed form refers to
    c_finite = c.kind == FINITE and c.n >= 2 and c.a == preset("C%d" % c.n).a
    c_affine = c.kind == UNTWISTED_AFFINE and c.n >= 2 and c.a == preset("C%d~" % (c.n - 1)).a
    if c_finite:
        from .characters import finite_character_realization

        rz = finite_character_realization(c.n)
    elif c_affine:
        from .characters import affine_character_realization

        rz = affine_character_realization(c.n - 1)
    else:
        rz = realization_for(c)
    ev = sorted(even_column_set(c))
    if c.kind == FINITE:
        H = H or rz.table.rs.max_height
    else:
        H = H or 2 * rz.affine.delta_height + 2
    space = character_space(rz, H)
    values = []
    if c_finite:
        r = c.n
        func = character_from_values(space, {lab: (Fraction(1) if lab == r else 0) for lab in c.labels})
        for alpha in space.keys:
            values.append(
                {
                    "basis": root_str(alpha),
                    "value": frac_str(func.get(alpha, 0)),
                    "closed_form": frac_str(chi_finite(r, Fraction(1), alpha)),
                }
            )
    elif c_affine:
        r = c.n - 1
        s, t = Fraction(1), Fraction(1, 2)
        func = character_from_values(
            space, {lab: (s if lab == 0 else t if lab == r else 0) for lab in c.labels}
        )
        for idx in space.keys:
            values.append(
                {
                    "basis": yindex_str(idx),
                    "value": frac_str(func.get(idx, 0)),
                    "closed_form": frac_str(chi_affine(r, s, t, idx.gamma, idx.i)),
                }
            )
    else:
        for b, func in enumerate(space.basis):
            for key in space.keys:
                v = func.get(key, 0)
                if v:
                    values.append(
                        {
                            "basis": root_str(key) if c.kind == FINITE else yindex_str(key),
                            "functional": b,
                            "value": frac_str(v),
                        }
                    )
    return {
        "schema": SCHEMA,
        "kind": "chars",
        "even_columns": ev,
        "window": H,
        "dimension": space.dimension,
        "values": values,
    }


def print_chars(report):
    print("even-column generator set: %s" % (report["even_columns"],))
    print("character space dimension: %d (window height %d)" % (report["dimension"], report["window"]))
    for row in report["values"]:
        if "closed_form" in row:
            mark = "ok" if row["value"] == row["closed_form"] else "DIFFERS"
            print("chi(%s) = %s  closed form %s [%s]" % (row["basis"], row["value"], row["closed_form"], mark))
        else:
            print("functional %d: chi(%s) = %s" % (row.get("functional", 0), row["basis"], row["value"]))


def eval_report(c, text):
    rz = realization_for(c)
    expr = parse_bracket(text)
    val = psi_eval(rz, expr)
    coords = rz.y_coordinates(val)
    if c.kind == FINITE:
        rhs = [
            {"basis": "y(%s)" % root_str(k), "coords": list(k), "coeff": str(Fraction(v))}
            for k, v in sorted(coords.items())
        ]
    else:
        rhs = [
            {"basis": yindex_str(k), "idx": yindex_json(k), "coeff": str(Fraction(v))}
            for k, v in sorted(coords.items())
        ]
    return {"schema": SCHEMA, "kind": "eval", "expr": text, "terms": rhs}


def print_eval(report):
    parts = [(Fraction(t["coeff"]), t["basis"]) for t in report["terms"]]
    print("%s -> %s" % (report["expr"], _combo_str(parts)))


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_matrix_source(p):
    grp = p.add_mutually_exclusive_group(required=True)
    grp.add_argument("--preset", help="named Cartan matrix, e.g. A2, C3, G2, A1~, C2~")
    grp.add_argument("--matrix-file", help="path to a whitespace-separated integer matrix")


def _load_matrix(args):
    if args.preset:
        return preset(args.preset)
    with open(args.matrix_file) as fh:
        return validate(parse_matrix_text(fh.read()))


def build_parser():
    p = argparse.ArgumentParser(
        prog="onsager-kit",
        description="exact construction and verification of generalized Onsager algebras",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("coeffs", help="relation coefficient table for one Cartan entry")
    pc.add_argument("--a", type=int, required=True, help="Cartan entry a_ij")
    pc.add_argument("--rmax", type=int, default=5)
    pc.add_argument("--json", action="store_true")

    pr = sub.add_parser("relations", help="defining relations of the algebra")
    _add_matrix_source(pr)
    pr.add_argument("--json", action="store_true")

    po = sub.add_parser("roots", help="positive roots with heights and multiplicities")
    _add_matrix_source(po)
    po.add_argument("--height", type=int, default=None)
    po.add_argument("--json", action="store_true")

    ps = sub.add_parser("structconst", help="structure constants over the fixed basis")
    _add_matrix_source(ps)
    ps.add_argument("--height", type=int, default=None)
    ps.add_argument("--json", action="store_true")

    pv = sub.add_parser("verify", help="run all applicable identity checks")
    _add_matrix_source(pv)
    pv.add_argument("--jmax", type=int, default=None)
    pv.add_argument("--height", type=int, default=None)
    pv.add_argument("--json", action="store_true")

    pch = sub.add_parser("chars", help="one-dimensional representation report")
    _add_matrix_source(pch)
    pch.add_argument("--height", type=int, default=None)
    pch.add_argument("--json", action="store_true")

    pe = sub.add_parser("eval", help="evaluate a bracket expression in the fixed subalgebra")
    _add_matrix_source(pe)
    pe.add_argument("expr", help="e.g. \"[B1,[B1,B2]]\"")
    pe.add_argument("--json", action="store_true")
    return p


def run(args) -> int:
    for bound in ("rmax", "jmax", "height"):
        val = getattr(args, bound, None)
        if val is not None and val < (0 if bound == "rmax" else 1):
            raise UsageFault("--%s must be positive" % bound)
    if args.command == "coeffs":
        report = coeffs_report(args.a, args.rmax)
        _emit(report, args.json, print_coeffs)
        return 0

    c = _load_matrix(args)
    if args.command == "relations":
        report = relations_report(c)
        _emit(report, args.json, print_relations)
        return 0
    if args.command == "roots":
        if c.kind not in (FINITE, UNTWISTED_AFFINE):
            raise UsageFault("roots need a finite or untwisted affine matrix")
        report = roots_report(c, args.height)
        _emit(report, args.json, print_roots)
        return 0
    if args.command == "structconst":
        if c.kind not in (FINITE, UNTWISTED_AFFINE):
            raise UsageFault("structure constants need a finite or untwisted affine matrix")
        report = structconst_report(c, args.height)
        _emit(report, args.json, print_structconst)
        return 0
    if args.command == "verify":
        report = verify_report(c, jmax=args.jmax, H=args.height)
        _emit(report, args.json, print_verify)
        return 0 if all(row["pass"] for row in report["checks"]) else 1
    if args.command == "chars":
        if c.kind not in (FINITE, UNTWISTED_AFFINE):
            raise UsageFault("characters need a finite or untwisted affine matrix")
        report = chars_report(c, args.height)
        _emit(report, args.json, print_chars)
        ok = all(
            row.get("closed_form", row["value"]) == row["value"] for row in report["values"]
        )
        return 0 if ok else 1
    if args.command == "eval":
        report = eval_report(c, args.expr)
        _emit(report, args.json, print_eval)
        return 0
    raise UsageFault("unknown command %r" % args.command)


def _emit(report, as_json, printer):
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        printer(report)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (
        UsageFault,
        UnknownPreset,
        NotGCM,
        NotSymmetrizable,
        ParseError,
        WindowTooSmall,
        ValueError,
        OSError,
    ) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
