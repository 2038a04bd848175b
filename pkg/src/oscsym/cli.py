"""Command-line entry point: ``oscsym <verb> [options]``.

Exit codes: 0 on success, 1 when a requested verification fails, 2 on usage
or input errors. JSON output has sorted keys and fixed-width floats so
identical inputs give byte-identical output.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import sys
import time
from fractions import Fraction

import numpy as np

from . import algebra, catalog, oscillator, phasespace, realizations, relations
from .catalog import GENERATOR_NAMES, SP4_MEMBERS, Ordering
from .errors import CatalogMiss, InadmissibleParameters, OrderingMismatch
from .exactnum import ExactMatrix

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_PRECISION = 15


class UsageError(Exception):
    """Bad input that should end the run with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------


def _precision() -> int:
    raw = os.environ.get("OSCSYM_PRECISION")
    if not raw:
        return DEFAULT_PRECISION
    try:
        p = int(raw)
    except ValueError:
        raise UsageError(f"OSCSYM_PRECISION must be an integer, got {raw!r}") from None
    if not 1 <= p <= 17:
        raise UsageError("OSCSYM_PRECISION must lie in 1..17")
    return p


def _fmt_float(x: float, digits: int) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(str(x))
    if x == 0:
        return "0.0"  # folds -0.0 as well
    text = f"{x:.{digits}g}"
    if "e" not in text and "." not in text:
        text += ".0"
    return text


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, floats at a fixed number of significant digits."""
    digits = _precision()
    floats = []

    def walk(o):
        if isinstance(o, bool) or o is None or isinstance(o, (int, str)):
            return o
        if isinstance(o, (float, np.floating)):
            floats.append(_fmt_float(float(o), digits))
            return f"\x00{len(floats) - 1}\x00"
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, Fraction):
            return str(o)
        if isinstance(o, dict):
            return {str(k): walk(v) for k, v in o.items()}
        if isinstance(o, (list, tuple, np.ndarray)):
            return [walk(v) for v in o]
        raise TypeError(f"cannot serialize {type(o).__name__}")

    text = json.dumps(walk(obj), sort_keys=True, indent=2)
    for k, f in enumerate(floats):
        text = text.replace(f'"\\u0000{k}\\u0000"', f, 1)
    return text


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


# --------------------------------------------------------------------------
# input helpers
# --------------------------------------------------------------------------


def _number(text: str) -> Fraction | float:
    """Exact rational if the text parses as one, otherwise a float."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _load_matrix(path: str) -> np.ndarray:
    """A real 4x4 matrix from exactnum JSON or a plain nested float array."""
    obj = _read_json(path)
    if isinstance(obj, dict):
        try:
            m = ExactMatrix.from_json(obj)
            arr = m.to_numpy(float)
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from None
    elif isinstance(obj, list):
        for r, row in enumerate(obj):
            if not isinstance(row, list):
                raise UsageError(f"{path}: row {r} is not a list")
            for c, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    raise UsageError(f"{path}: entry [{r}][{c}] is not a number")
        try:
            arr = np.array(obj, dtype=float)
        except ValueError:
            raise UsageError(f"{path}: rows have unequal lengths") from None
    else:
        raise UsageError(f"{path}: expected a JSON object or array")
    if arr.shape != (4, 4):
        raise UsageError(f"{path}: expected a 4x4 matrix, got shape {arr.shape}")
    return arr


def _load_state(path: str, ordering: Ordering) -> phasespace.GaussianState:
    obj = _read_json(path)
    if not isinstance(obj, dict):
        raise UsageError(f"{path}: state must be a JSON object")
    try:
        s = phasespace.GaussianState.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    if s.ordering is not ordering:
        raise UsageError(f"{path}: state ordering {s.ordering.value} differs from --ordering {ordering.value}")
    return s


def _matrix_rows(name, m: ExactMatrix):
    for r, c in itertools.product(range(m.n), repeat=2):
        v = m[r, c]
        if v:
            yield [name, r, c, str(v.re), str(v.im)]


# --------------------------------------------------------------------------
# verbs; each returns (exit code, payload dict, csv text, pretty text)
# --------------------------------------------------------------------------


def cmd_dump_generators(args):
    ordering = Ordering.parse(args.ordering)
    mats, notes, forms = {}, {}, {}
    if args.set == "sl4":
        for n in GENERATOR_NAMES:
            if args.printed:
                m = catalog.sp4_generator(n, Ordering.INTERLEAVED, printed=True)
                mats[n] = m if ordering is Ordering.INTERLEAVED else catalog.reorder(m, Ordering.INTERLEAVED, ordering)
            else:
                mats[n] = catalog.generator(n, ordering)
        if not args.printed:
            for (n, o), e in catalog.ERRATA.items():
                notes[n] = e.reason
    elif args.set == "sp4":
        for n in GENERATOR_NAMES:
            if n in SP4_MEMBERS:
                mats[n] = catalog.sp4_generator(n, ordering, printed=args.printed)
    elif args.set == "o33":
        mats = {n: catalog.o33_generator(n) for n in GENERATOR_NAMES}
    elif args.set == "secII":
        mats = {n: catalog.secII_generator(n) for n in catalog.SECII_NAMES}
    else:  # diffop
        for n in GENERATOR_NAMES:
            d = realizations.diffop(n, printed=args.printed)
            mats[n] = d.C
            forms[n] = realizations.op_form(d)
            if d.note:
                notes[n] = d.note
    gens = {}
    for n, m in mats.items():
        entry = m.to_json()
        if n in forms:
            entry["op_form"] = forms[n]
        if n in notes:
            entry["note"] = notes[n]
        gens[n] = entry
    payload = {"generators": gens, "count": len(gens)}
    rows = [row for n, m in mats.items() for row in _matrix_rows(n, m)]
    pretty = "\n\n".join(
        f"{n}" + (f"  {forms[n]}" if n in forms else "") + (f"  [{notes[n]}]" if n in notes else "") + "\n" + m.pretty()
        for n, m in mats.items()
    )
    return EXIT_OK, payload, _csv(rows, ["name", "row", "col", "re", "im"]), pretty


def _deviation_json(d):
    return {"key": d.key, "printed": d.printed, "computed": d.computed, "pairs": [list(p) for p in d.pairs]}


def cmd_verify_algebra(args):
    ordering = Ordering.parse(args.ordering)
    reports = {}
    extra = {}
    if args.set == "so21":
        for triple in relations.SO21_TRIPLES:
            reports[",".join(triple)] = algebra.verify_table(algebra.BasisSet.secII(triple), relations.so21(*triple))
        # reported for information only; these never affect the exit status
        info = {}
        for triple in relations.UNREPRODUCED_SO21_TRIPLES:
            r = algebra.verify_table(algebra.BasisSet.secII(triple), relations.so21(*triple))
            info[",".join(triple)] = r.summary()
        extra["not_reproduced"] = info
    elif args.set == "coupling":
        table = relations.coupling_relations()
        basis = algebra.BasisSet.secII(relations.COMBINED_NAMES)
        reports["coupling"] = algebra.verify_table(basis, table, pairs=list(table.brackets))
    elif args.set == "sp4":
        reports["sp4"] = algebra.verify_table(algebra.BasisSet.sp4(ordering), relations.lie_sp4())
    elif args.set == "sl4":
        basis = algebra.BasisSet.sl4(ordering, printed=args.printed)
        reports["sl4"] = algebra.verify_table(basis, relations.grand_table(corrected=not args.printed))
        if not args.printed:
            extra["against_printed_table"] = algebra.verify_table(basis, relations.grand_table(corrected=False)).summary()
            extra["deviations"] = [_deviation_json(d) for d in relations.KNOWN_DEVIATIONS if d.key != "G3-derivation-signs"]
    else:  # g3
        basis = algebra.BasisSet.sl4(ordering)
        table = relations.g3_derivation()
        reports["g3"] = algebra.verify_table(basis, table, pairs=list(table.brackets))
        extra["deviations"] = [_deviation_json(d) for d in relations.KNOWN_DEVIATIONS if d.key == "G3-derivation-signs"]
    passed = all(r.passed for r in reports.values())
    payload = {
        "tables": {
            k: {**r.summary(), "results": [p.to_json() for p in r.results]}
            for k, r in reports.items()
        },
        "pairs": sum(r.pairs_checked for r in reports.values()),
        "mismatch": sum(len(r.mismatches) for r in reports.values()),
        "pass": passed,
        **extra,
    }
    rows = []
    for k, r in reports.items():
        for p in r.results:
            rows.append([k, p.a, p.b, p.status,
                         "" if p.computed is None else algebra.format_terms(p.computed),
                         "" if p.expected is None else algebra.format_terms(p.expected)])
    pretty = "\n\n".join(f"== {k}\n{r.to_text()}" for k, r in reports.items())
    return (EXIT_OK if passed else EXIT_FAIL), payload, _csv(rows, ["table", "i", "j", "status", "computed", "expected"]), pretty


def cmd_verify_isomorphism(args):
    first = algebra.BasisSet.sl4(Ordering.INTERLEAVED, printed=args.printed)
    rep = algebra.check_isomorphism(first, algebra.BasisSet.o33())
    payload = {**rep.to_json(), "pass": rep.isomorphic}
    rows = [[m["i"], m["j"], m["first"], m["second"]] for m in payload["mismatches"]]
    pretty = f"{rep.pairs_checked} pairs, {len(rep.mismatches)} mismatch -> {'PASS' if rep else 'FAIL'}"
    for m in payload["mismatches"]:
        pretty += f"\n[{m['i']},{m['j']}]: 4x4 {m['first']} vs 6x6 {m['second']}"
    return (EXIT_OK if rep else EXIT_FAIL), payload, _csv(rows, ["i", "j", "4x4", "6x6"]), pretty


def cmd_subgroups(args):
    ordering = Ordering.parse(args.ordering)
    form = phasespace.j_matrix(ordering)
    found = algebra.enumerate_sp4_subgroups(algebra.BasisSet.sl4(ordering))
    out = []
    for g in found:
        nonc = [n for n in g.ordered() if not phasespace.generator_is_canonical(n, form)]
        own = phasespace.form_from_rotation(g.pivot, ordering)
        own_ok = all(phasespace.generator_is_canonical(n, own) for n in g.members)
        out.append({
            "pivot": g.pivot,
            "kind": g.kind,
            "members": g.ordered(),
            "noncanonical": nonc,
            "canonical": not nonc,
            "canonical_under_own_form": own_ok,
        })
    n_canon = sum(o["canonical"] for o in out)
    passed = len(out) == 6 and n_canon == 1
    payload = {"subgroups": out, "count": len(out), "canonical_count": n_canon, "pass": passed}
    rows = [[o["pivot"], o["kind"], " ".join(o["members"]), " ".join(o["noncanonical"]), o["canonical"]] for o in out]
    pretty = "\n".join(
        f"{o['pivot']:3s} {o['kind']:12s} {' '.join(o['members'])}"
        + ("  canonical" if o["canonical"] else f"  noncanonical: {' '.join(o['noncanonical'])}")
        for o in out
    )
    return (EXIT_OK if passed else EXIT_FAIL), payload, _csv(rows, ["pivot", "kind", "members", "noncanonical", "canonical"]), pretty


def _rational_sqrt(x) -> Fraction | None:
    if not isinstance(x, Fraction) or x < 0:
        return None
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return None


def cmd_solve(args):
    if args.nmax < 0:
        raise UsageError("--nmax must be non-negative")
    raw = oscillator.RawParams(float(args.m1), float(args.m2), float(args.A), float(args.B), float(args.C))
    reduced = oscillator.reduce(raw)
    exact = None
    if all(isinstance(v, Fraction) for v in (args.m1, args.m2, args.A, args.B, args.C)):
        root = _rational_sqrt(args.m2 / args.m1)
        if root is not None:
            exact = (args.A * root, args.B / root, args.C)
            reduced = oscillator.ReducedParams(reduced.m, *(float(v) for v in exact))
    nf = oscillator.normal_form(reduced)
    K_exact = oscillator.coupling_strength(*exact) if exact else None
    spectrum = []
    for n1 in range(args.nmax + 1):
        for n2 in range(args.nmax + 1):
            spectrum.append({
                "n1": n1,
                "n2": n2,
                "E": oscillator.spectrum(nf, n1, n2, "coupled"),
                "E_uncoupled": oscillator.spectrum(nf, n1, n2, "uncoupled"),
            })
    payload = {
        "m": reduced.m,
        "A": reduced.A,
        "B": reduced.B,
        "C": reduced.C,
        "K": nf.K,
        "eta": nf.eta,
        "alpha": nf.alpha,
        "omega": nf.omega,
        "spectrum": spectrum,
    }
    if exact:
        payload["exact"] = {"A": str(exact[0]), "B": str(exact[1]), "C": str(exact[2])}
        if isinstance(K_exact, Fraction):
            payload["exact"]["K"] = str(K_exact)
    rows = [[e["n1"], e["n2"], repr(e["E"]), repr(e["E_uncoupled"])] for e in spectrum]
    pretty = (
        f"m = {reduced.m:.15g}  A = {reduced.A:.15g}  B = {reduced.B:.15g}  C = {reduced.C:.15g}\n"
        f"K = {nf.K:.15g}  eta = {nf.eta:.15g}  alpha = {nf.alpha:.15g}  omega = {nf.omega:.15g}\n"
        + "\n".join(f"E({e['n1']},{e['n2']}) = {e['E']:.12g}  (uncoupled {e['E_uncoupled']:g})" for e in spectrum)
    )
    return EXIT_OK, payload, _csv(rows, ["n1", "n2", "E", "E_uncoupled"]), pretty


def _form(args, ordering):
    if args.form == "J":
        return phasespace.j_matrix(ordering)
    return phasespace.form_from_rotation(args.form, ordering)


def _random_word(rng, length, ordering):
    names = sorted(SP4_MEMBERS)
    el = phasespace.GroupElement(np.eye(4), (), ordering)
    for _ in range(length):
        el = phasespace.exp_generator(str(rng.choice(names)), float(rng.uniform(-2, 2)), ordering) @ el
    return el


def cmd_check_transform(args):
    ordering = Ordering.parse(args.ordering)
    form = _form(args, ordering)
    sources = [s for s in (args.matrix, args.generator, args.random_word) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --matrix, --generator or --random-word")
    if args.matrix is not None:
        M = _load_matrix(args.matrix)
        provenance = "matrix"
    elif args.generator is not None:
        M = phasespace.exp_generator(args.generator, args.theta, ordering).M
        provenance = {"generator": args.generator, "theta": args.theta}
    else:
        el = _random_word(np.random.default_rng(args.seed), args.random_word, ordering)
        M = el.M
        provenance = [{"generator": n, "theta": t} for n, t in el.provenance]
    dev = phasespace.canonical_deviation(M, form)
    ok = dev <= args.tol
    payload = {
        "provenance": provenance,
        "matrix": M.tolist(),
        "det": float(np.linalg.det(M)),
        "deviation": dev,
        "tol": args.tol,
        "canonical": ok,
        "pass": ok,
    }
    rows = [[r, c, repr(float(M[r, c]))] for r, c in itertools.product(range(4), repeat=2)]
    rows.append(["deviation", "", repr(dev)])
    pretty = (
        np.array2string(M, precision=6, suppress_small=True)
        + f"\nmax|M J M^T - J| = {dev:.3e} -> {'canonical' if ok else 'NOT canonical'}"
    )
    return (EXIT_OK if ok else EXIT_FAIL), payload, _csv(rows, ["row", "col", "value"]), pretty


def cmd_evolve(args):
    ordering = Ordering.parse(args.ordering)
    if args.state == "vacuum":
        s0 = phasespace.vacuum_state(ordering)
    elif args.state == "coupled":
        s0 = phasespace.coupled_ground_state(args.eta, args.alpha, ordering)
    else:
        s0 = _load_state(args.state, ordering)
    el = phasespace.exp_generator(args.generator, args.theta, ordering)
    s1 = phasespace.transform_state(s0, el)
    nu = phasespace.symplectic_eigenvalues(s1)
    admissible = phasespace.uncertainty_ok(s1)
    canonical = phasespace.is_canonical(el, phasespace.j_matrix(ordering))
    payload = {
        "generator": args.generator,
        "theta": args.theta,
        "initial": s0.to_json(),
        "final": s1.to_json(),
        "symplectic_eigenvalues": list(nu),
        "admissible": admissible,
        "canonical": canonical,
    }
    passed = admissible or not args.gate
    if args.gate:
        payload["pass"] = admissible
    rows = [["nu1", repr(nu[0])], ["nu2", repr(nu[1])], ["admissible", admissible], ["canonical", canonical]]
    pretty = (
        "final covariance:\n" + np.array2string(s1.cov, precision=6, suppress_small=True)
        + f"\nsymplectic eigenvalues: {nu[0]:.12g}, {nu[1]:.12g}"
        + f"\nadmissible: {admissible}  canonical: {canonical}"
    )
    return (EXIT_OK if passed else EXIT_FAIL), payload, _csv(rows, ["quantity", "value"]), pretty


def cmd_fock_check(args):
    if args.N < realizations.MIN_CUTOFF:
        raise UsageError(f"--N must be at least {realizations.MIN_CUTOFF}")
    table = realizations.fock_residual_table(args.N, literal=args.literal)
    worst = max(table.values())
    passed = worst <= args.tol
    payload = {
        "N": args.N,
        "literal": args.literal,
        "correspondence_sign": {} if args.literal else realizations.CORRESPONDENCE_SIGN,
        "residuals": [{"i": x, "j": y, "residual": r, "ok": r <= args.tol} for (x, y), r in table.items()],
        "max_residual": worst,
        "failing": sum(r > args.tol for r in table.values()),
        "tol": args.tol,
        "pass": passed,
    }
    rows = [[x, y, f"{r:.3e}"] for (x, y), r in table.items()]
    pretty = "\n".join(f"[{x},{y}]  {r:.3e}{'' if r <= args.tol else '  FAIL'}" for (x, y), r in table.items())
    pretty += f"\nmax residual {worst:.3e} -> {'PASS' if passed else 'FAIL'}"
    return (EXIT_OK if passed else EXIT_FAIL), payload, _csv(rows, ["i", "j", "residual"]), pretty


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to JSON output")

    orderings = [o.value for o in Ordering]
    p = _Parser(prog="oscsym", description="Symmetry checks for two coupled oscillators.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("dump-generators", parents=[common], help="print generator matrices")
    s.add_argument("--set", choices=("sl4", "sp4", "o33", "secII", "diffop"), default="sl4")
    s.add_argument("--ordering", choices=orderings, default="interleaved")
    s.add_argument("--printed", action="store_true", help="show forms as printed, without corrections")
    s.set_defaults(func=cmd_dump_generators)

    s = sub.add_parser("verify-algebra", parents=[common], help="check a bracket table against the matrices")
    s.add_argument("--set", choices=("so21", "coupling", "sp4", "sl4", "g3"), default="sl4")
    s.add_argument("--ordering", choices=orderings, default="interleaved")
    s.add_argument("--printed", action="store_true", help="use the printed S2 and the printed table")
    s.set_defaults(func=cmd_verify_algebra)

    s = sub.add_parser("verify-isomorphism", parents=[common], help="compare 4x4 and 6x6 structure constants")
    s.add_argument("--printed", action="store_true")
    s.set_defaults(func=cmd_verify_isomorphism)

    s = sub.add_parser("subgroups", parents=[common], help="enumerate the six ten-generator subalgebras")
    s.add_argument("--ordering", choices=orderings, default="interleaved")
    s.set_defaults(func=cmd_subgroups)

    s = sub.add_parser("solve", parents=[common], help="normal form and spectrum of the coupled pair")
    s.add_argument("--A", type=_number, required=True)
    s.add_argument("--B", type=_number, required=True)
    s.add_argument("--C", type=_number, required=True)
    s.add_argument("--m1", type=_number, default=Fraction(1))
    s.add_argument("--m2", type=_number, default=Fraction(1))
    s.add_argument("--nmax", type=int, default=2)
    s.set_defaults(func=cmd_solve)

    forms = ["J", *catalog.ROTATION_NAMES]
    s = sub.add_parser("check-transform", parents=[common], help="test M J M^T = J")
    s.add_argument("--matrix", metavar="FILE", help="JSON matrix file, '-' for stdin")
    s.add_argument("--generator", choices=GENERATOR_NAMES)
    s.add_argument("--theta", type=float, default=0.5)
    s.add_argument("--random-word", type=int, metavar="LEN", help="random product of LEN Sp(4) exponentials")
    s.add_argument("--form", choices=forms, default="J", help="J or a rotation generator giving 2iX")
    s.add_argument("--ordering", choices=orderings, default="interleaved")
    s.add_argument("--tol", type=float, default=phasespace.CANONICAL_TOL)
    s.set_defaults(func=cmd_check_transform)

    s = sub.add_parser("evolve", parents=[common], help="apply exp(i theta X) to a Gaussian state")
    s.add_argument("--generator", choices=GENERATOR_NAMES, required=True)
    s.add_argument("--theta", type=float, required=True)
    s.add_argument("--state", default="vacuum", help="vacuum, coupled or a JSON state file")
    s.add_argument("--eta", type=float, default=0.0)
    s.add_argument("--alpha", type=float, default=0.0)
    s.add_argument("--ordering", choices=orderings, default="interleaved")
    s.add_argument("--gate", action="store_true", help="exit 1 if the result violates the uncertainty bound")
    s.set_defaults(func=cmd_evolve)

    s = sub.add_parser("fock-check", parents=[common], help="Sp(4) brackets of the ladder-operator realization")
    s.add_argument("--N", type=int, default=12)
    s.add_argument("--literal", action="store_true", help="match hatted and matrix generators without sign changes")
    s.add_argument("--tol", type=float, default=1e-10)
    s.set_defaults(func=cmd_fock_check)
    return p


def _inputs(args) -> dict:
    skip = {"func", "verb", "format", "timing"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip or v is None:
            continue
        out[k] = str(v) if isinstance(v, Fraction) else v
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        start = time.perf_counter()
        code, payload, csv_text, pretty = args.func(args)
        elapsed = time.perf_counter() - start
        if args.format == "json":
            report = {"verb": args.verb, "inputs": _inputs(args), "results": payload}
            if "pass" in payload:
                report["pass"] = payload["pass"]
            if args.timing:
                report["timing"] = {"seconds": elapsed}
            text = dumps(report)
        elif args.format == "csv":
            text = csv_text
        else:
            text = pretty
    except UsageError as exc:
        print(f"oscsym: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (InadmissibleParameters, CatalogMiss, OrderingMismatch, ValueError) as exc:
        print(f"oscsym: error: {exc}", file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
