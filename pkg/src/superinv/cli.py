"""Batch command line interface.

Every command reads its sizes from --family/--m/--n/--k, writes one JSON
document to stdout (or --out), and streams progress for long sweeps to
stderr.  Output is byte-deterministic for a fixed configuration: keys are
sorted and all scalars are canonical exact rationals.

Exit codes: 0 success; 1 a verified property failed (a theorem check came
back false); 2 usage error.

Permutations are accepted in cycle notation "(2 3)(4 5)" (cycles applied
rightmost first) or one-line form "[1,3,2,5,4,6]" (1-based images).
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import brauer as br
from .algebras import build_algebra
from .enveloping import (
    eta_prime,
    harish_chandra_image,
    is_central,
    is_J_poly,
    is_supersymmetric,
    zeta_project,
)
from .scalars import Scalar
from .signs import Permutation, symmetric_group
from .schurweyl import (
    check_duality_relations,
    invariant_tensor,
    molev_element,
    sergeev_Z,
    str_gelfand,
    tensor_is_invariant,
    z_sigma,
)
from .tensoralg import eta, project_tensor

FAMILY_CHOICES = ("gl", "osp", "q", "p")


class UsageError(Exception):
    pass


def parse_permutation(text: str, size: int) -> Permutation:
    text = text.strip()
    if not text or text == "()":
        return Permutation.identity(size)
    if text.startswith("["):
        try:
            images = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError("bad one-line permutation: %s" % exc) from None
        if len(images) != size:
            raise UsageError(
                "one-line permutation has %d entries, expected %d"
                % (len(images), size)
            )
        return Permutation(images)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles and text:
        raise UsageError("cannot parse permutation %r" % text)
    parsed = []
    for cyc in cycles:
        points = [int(p) for p in re.split(r"[,\s]+", cyc.strip()) if p]
        if not points:
            continue
        if any(p < 1 or p > size for p in points):
            raise UsageError("cycle point out of range 1..%d in %r" % (size, text))
        if len(set(points)) != len(points):
            raise UsageError("repeated point in cycle %r" % cyc)
        parsed.append(points)
    return Permutation.from_cycles(parsed, size)


def parse_shifts(text: str, k: int):
    if not text:
        return [Scalar(0)] * k
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != k:
        raise UsageError("expected %d shift values, got %d" % (k, len(parts)))
    return [Scalar(Fraction(p)) for p in parts]


def type_label(type_vector) -> str:
    counts = {}
    for length in type_vector:
        counts[length] = counts.get(length, 0) + 1
    return " ".join("%d^%d" % (l, counts[l]) for l in sorted(counts))


def _build(args):
    family = args.family
    if family is None:
        raise UsageError("--family is required")
    if family not in FAMILY_CHOICES:
        raise UsageError("unknown family %r" % family)
    try:
        return build_algebra(family, args.m, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _perm_degree(alg, k):
    return 2 * k if alg.family in ("osp", "p") else k


def cmd_invariant(args) -> tuple[dict, int]:
    alg = _build(args)
    k = args.k
    if k < 1:
        raise UsageError("--k must be >= 1")
    sigma = parse_permutation(args.perm or "()", _perm_degree(alg, k))
    theta = invariant_tensor(alg, sigma)
    z = z_sigma(alg, sigma)
    central = is_central(z)
    doc = {
        "family": alg.family,
        "m": alg.m,
        "n": alg.n,
        "k": k,
        "perm": sigma.to_json(),
        "theta": theta.to_json(),
        "z": z.to_json(),
        "central": central,
        "z_is_scalar": z.is_scalar(),
    }
    return doc, 0 if central else 1


def cmd_hc(args) -> tuple[dict, int]:
    alg = _build(args)
    if alg.family not in ("gl", "osp"):
        raise UsageError("HC unsupported for %s" % alg.family)
    k = args.k
    if k < 1:
        raise UsageError("--k must be >= 1")
    u = str_gelfand(alg, k)
    central = is_central(u)
    image = harish_chandra_image(u)
    doc = {
        "family": alg.family,
        "m": alg.m,
        "n": alg.n,
        "k": k,
        "element": "str_gelfand",
        "central": central,
        "poly": image.render(),
        "image": image.to_json(),
        "unshifted": zeta_project(u).to_json(),
    }
    ok = central
    if alg.family == "gl":
        verdict = is_supersymmetric(image, alg.m, alg.n)
        doc["supersymmetric"] = verdict
        ok = ok and verdict
    else:
        verdict = is_J_poly(image, alg.m // 2, alg.n)
        doc["J"] = verdict
        ok = ok and verdict
    return doc, 0 if ok else 1


def cmd_keylemma(args) -> tuple[dict, int]:
    k = args.k
    if k < 1:
        raise UsageError("--k must be >= 1")
    if args.per_type:
        if k > 4:
            raise UsageError("--per-type bound is k <= 4")
        sigmas = []
        seen = set()
        for sig in br.coset_reps(k):
            t = br.perm_type(sig)
            if t not in seen:
                seen.add(t)
                sigmas.append(sig)
    else:
        if k > 3:
            raise UsageError("exhaustive bound is k <= 3; use --per-type for k = 4")
        sigmas = list(symmetric_group(2 * k))

    def work(sig):
        w = br.key_lemma_witness(sig)
        return sig, w, br.witness_holds(sig, w)

    rows = _parallel_map(work, sigmas, args.jobs, "keylemma")
    witnesses = []
    all_ok = True
    for sig, w, ok in rows:
        all_ok = all_ok and ok
        witnesses.append({"sigma": sig.to_json(), **w.to_json(), "verified": ok})
    doc = {
        "k": k,
        "count": len(witnesses),
        "all_sign_products_minus_one": all_ok,
        "witnesses": witnesses,
    }
    return doc, 0 if all_ok else 1


def cmd_brauer(args) -> tuple[dict, int]:
    k = args.k
    if not 1 <= k <= 8:
        raise UsageError("--k must be in 1..8")
    res = br.count_by_type(k)
    doc = {}
    ok = True
    for t in sorted(res["counts"]):
        label = type_label(t)
        doc[label] = res["counts"][t]
        ok = ok and res["counts"][t] == br.type_count_formula(k, t)
    doc["total"] = res["total"]
    ok = ok and res["total"] == br.double_factorial(2 * k - 1)
    doc["matches_formula"] = ok
    if k <= 4:
        sizes = br.double_coset_sizes(k)
        dc_ok = all(
            sizes[t] == br.double_coset_size_formula(k, t) for t in sizes
        )
        doc["double_coset_sizes"] = {type_label(t): sizes[t] for t in sorted(sizes)}
        doc["double_cosets_match_formula"] = dc_ok
        ok = ok and dc_ok
    return doc, 0 if ok else 1


def cmd_pn_trivial(args) -> tuple[dict, int]:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    k = args.k
    if not 1 <= k <= 4:
        raise UsageError("--k must be in 1..4")
    alg = build_algebra("p", 0, args.n)
    reps = br.coset_reps(k)

    def work(sig):
        pt = project_tensor(alg, invariant_tensor(alg, sig))
        return eta(pt).is_zero(), eta_prime(pt).is_scalar()

    rows = _parallel_map(work, reps, args.jobs, "pn-trivial")
    all_zero = all(z for z, _ in rows)
    all_scalar = all(s for _, s in rows)
    doc = {
        "family": "p",
        "n": args.n,
        "k": k,
        "reps": len(reps),
        "all_zero": all_zero,
        "all_scalar": all_scalar,
    }
    return doc, 0 if (all_zero and all_scalar) else 1


def cmd_relations(args) -> tuple[dict, int]:
    alg = _build(args)
    if args.k < 2:
        raise UsageError("--k must be >= 2")
    report = check_duality_relations(alg, args.k)
    ok = report["all_relations_hold"] and report["supercommutes_with_action"]
    return report, 0 if ok else 1


def cmd_sweep(args) -> tuple[dict, int]:
    alg = _build(args)
    kmax = args.k
    if kmax < 1:
        raise UsageError("--k must be >= 1")
    rows = []
    ok = True
    for k in range(1, kmax + 1):
        print("sweep: degree %d/%d" % (k, kmax), file=sys.stderr)
        row = {"k": k}
        if alg.family in ("gl", "osp"):
            deg = k if alg.family == "gl" else 2 * k
            u = str_gelfand(alg, deg)
            row["element"] = "str_gelfand(%d)" % deg
            row["central"] = is_central(u)
            image = harish_chandra_image(u)
            row["poly"] = image.render()
            if alg.family == "gl":
                row["supersymmetric"] = is_supersymmetric(image, alg.m, alg.n)
                ok = ok and row["central"] and row["supersymmetric"]
            else:
                row["J"] = is_J_poly(image, alg.m // 2, alg.n)
                ok = ok and row["central"] and row["J"]
        elif alg.family == "q":
            deg = 2 * k - 1
            u = sergeev_Z(alg, deg)
            row["element"] = "sergeev_Z(%d)" % deg
            row["central"] = is_central(u)
            cyc = Permutation(tuple(range(2, deg + 1)) + (1,)) if deg > 1 else Permutation((1,))
            row["matches_2^(k-1)_z_cycle"] = u == z_sigma(alg, cyc).scale(
                Scalar(2 ** (deg - 1))
            )
            ok = ok and row["central"] and row["matches_2^(k-1)_z_cycle"]
        else:
            reps = br.coset_reps(k)
            zero = all(
                eta(project_tensor(alg, invariant_tensor(alg, s))).is_zero()
                for s in reps
            )
            row["element"] = "eta_pi_theta over %d reps" % len(reps)
            row["all_zero"] = zero
            ok = ok and zero
        rows.append(row)
    doc = {
        "family": alg.family,
        "m": alg.m,
        "n": alg.n,
        "max_k": kmax,
        "rows": rows,
        "all_pass": ok,
    }
    return doc, 0 if ok else 1


def cmd_sergeev(args) -> tuple[dict, int]:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    k = args.k
    if k < 1:
        raise UsageError("--k must be >= 1")
    alg = build_algebra("q", 0, args.n)
    z = sergeev_Z(alg, k)
    doc = {"family": "q", "n": args.n, "k": k, "Z": z.to_json()}
    ok = True
    if k % 2 == 1:
        doc["central"] = is_central(z)
        cyc = Permutation(tuple(range(2, k + 1)) + (1,)) if k > 1 else Permutation((1,))
        doc["matches_2^(k-1)_z_cycle"] = z == z_sigma(alg, cyc).scale(
            Scalar(2 ** (k - 1))
        )
        ok = doc["central"] and doc["matches_2^(k-1)_z_cycle"]
    return doc, 0 if ok else 1


def cmd_molev(args) -> tuple[dict, int]:
    alg = _build(args)
    if alg.family not in ("gl", "osp"):
        raise UsageError("molev elements are built for gl and osp")
    k = args.k
    if k < 1:
        raise UsageError("--k must be >= 1")
    sigma = parse_permutation(args.perm or "()", _perm_degree(alg, k))
    s = invariant_tensor(alg, sigma)
    shifts = parse_shifts(args.u, s.k)
    if not tensor_is_invariant(alg, s):
        raise UsageError("input tensor is not invariant")
    elem = molev_element(alg, s, shifts)
    central = is_central(elem)
    doc = {
        "family": alg.family,
        "m": alg.m,
        "n": alg.n,
        "k": k,
        "perm": sigma.to_json(),
        "shifts": [str(x.re) for x in shifts],
        "element": elem.to_json(),
        "central": central,
    }
    return doc, 0 if central else 1


def _parallel_map(fn, items, jobs, label):
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            out = list(pool.map(fn, items))
    else:
        out = []
        for i, item in enumerate(items):
            if len(items) > 100 and i % 100 == 0:
                print("%s: %d/%d" % (label, i, len(items)), file=sys.stderr)
            out.append(fn(item))
    return out


COMMANDS = {
    "invariant": cmd_invariant,
    "hc": cmd_hc,
    "keylemma": cmd_keylemma,
    "brauer": cmd_brauer,
    "pn-trivial": cmd_pn_trivial,
    "relations": cmd_relations,
    "sweep": cmd_sweep,
    "sergeev": cmd_sergeev,
    "molev": cmd_molev,
}

HELP = {
    "invariant": "the invariant tensor theta and central element z of a permutation",
    "hc": "Harish-Chandra image of Str X^k with predicate verdicts (gl, osp)",
    "keylemma": "sign witnesses for every permutation of S_2k",
    "brauer": "diagram type counts, totals and double-coset sizes",
    "pn-trivial": "verify every degree-k invariant of S(p_n) vanishes",
    "relations": "centralizer algebra relations as operator identities",
    "sergeev": "the recursive q(n) trace element Z_k and its identities",
    "molev": "shifted-trace central element built from an invariant tensor",
    "sweep": "centrality + Harish-Chandra grid over degrees 1..k",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superinv",
        description="Exact invariants of the classical Lie superalgebras "
        "gl(m|n), osp(m|2n), q(n), p(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=HELP[name], description=HELP[name])
        p.add_argument("--family", choices=FAMILY_CHOICES)
        p.add_argument("--m", type=int, default=0)
        p.add_argument("--n", type=int, default=0)
        p.add_argument("--k", type=int, default=1)
        p.add_argument(
            "--perm",
            default="()",
            help='cycle notation "(2 3)(4 5)", rightmost cycle applied first, '
            'or one-line "[1,3,2]"',
        )
        p.add_argument("--u", default="", help="comma-separated rational shifts")
        p.add_argument("--out", default=None, help="write the JSON document here")
        p.add_argument(
            "--max-degree",
            type=int,
            default=None,
            help="override the symmetrization degree cap",
        )
        p.add_argument("--jobs", type=int, default=1)
        if name == "keylemma":
            p.add_argument(
                "--per-type",
                action="store_true",
                help="one witness per diagram type instead of all of S_2k",
            )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.max_degree is not None:
        os.environ["SUPERINV_MAX_DEGREE"] = str(args.max_degree)
    try:
        doc, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except Exception as exc:  # internal failure
        print("internal error: %s" % exc, file=sys.stderr)
        return 1
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
