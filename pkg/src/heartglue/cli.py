"""Command-line front end.

Exit codes: 0 when the checked predicate holds, 1 when it fails (a witness
is printed), 2 for malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import serialize as ser
from .model import BigradedObject
from .perversity import MINUS_INF, PLUS_INF, Perversity, enumerate_perversities
from .slicing import (
    DEFAULT_SHIFTS,
    BaricOracle,
    BeilinsonSoule,
    CoherentSupportHeart,
    HeartOracle,
    IncompatibleError,
    KoszulHeart,
    PreconditionError,
    SemisimpleHeart,
    SupportObject,
    exchanged,
    gp_compatible,
    implication_check,
    is_baric_gluable,
    is_f_compatible,
    is_gluable,
    is_grading,
    is_perverse,
    perverse_heart_membership,
    psi,
    pushforward_support,
    tilt_heart_membership,
    torsion_pair_table,
)
from .upperset import (
    UpperSet2D,
    perversity_to_upperset,
    perversity_to_upperset_op,
    render_ascii,
    render_svg,
    upperset_to_perversity,
    upperset_to_perversity_phi,
)
from .zposet import (
    Z,
    ZHAT,
    DomainError,
    LexProduct,
    alpha,
    beta,
    exchange,
    g_p,
    gamma_p,
    identity,
    projection_first,
)

DEFAULT_WINDOW = (-4, 4)
MAX_PLOT = 200


class InputError(Exception):
    pass


class CheckFailed(Exception):
    """Carries the report to print before exiting with status 1."""

    def __init__(self, report):
        super().__init__("check failed")
        self.report = report


def emit(obj) -> None:
    sys.stdout.write(ser.dumps(ser._plain(obj)))


# --------------------------------------------------------------------------
# argument parsing helpers


def default_window() -> tuple[int, int]:
    raw = os.environ.get("HEARTGLUE_WINDOW")
    if not raw:
        return DEFAULT_WINDOW
    try:
        lo, hi = (int(v) for v in raw.split(","))
    except ValueError:
        raise InputError(f"HEARTGLUE_WINDOW: expected 'lo,hi', got {raw!r}") from None
    if lo > hi:
        raise InputError(f"HEARTGLUE_WINDOW: empty window {raw!r}")
    return lo, hi


def _window(args, name="window") -> tuple[int, int]:
    w = getattr(args, name, None)
    if w is None:
        return default_window()
    if w[0] > w[1]:
        raise InputError(f"--{name}: empty window {w[0]}..{w[1]}")
    return tuple(w)


def parse_perversity(token: str) -> Perversity:
    named = {"zero": Perversity.zero, "identity": Perversity.identity, "middle": Perversity.middle}
    if token in named:
        return named[token]()
    if token == "+inf":
        return PLUS_INF
    if token == "-inf":
        return MINUS_INF
    for prefix, make in (("chi:", Perversity.chi), ("const:", Perversity.constant)):
        if token.startswith(prefix):
            try:
                return make(int(token[len(prefix):]))
            except ValueError:
                raise InputError(f"perversity {token!r}: expected an integer after {prefix!r}") from None
    if Path(token).is_file():
        return ser.perversity_from_payload(ser.load(token, "perversity"))
    raise InputError(
        f"perversity {token!r}: expected zero, identity, middle, chi:K, const:C, +inf, -inf or a file"
    )


def parse_upperset(token: str) -> UpperSet2D:
    if token == "empty":
        return UpperSet2D.empty()
    if token == "full":
        return UpperSet2D.full()
    for prefix, make in (("row:", UpperSet2D.row), ("col:", UpperSet2D.column)):
        if token.startswith(prefix):
            try:
                return make(int(token[len(prefix):]))
            except ValueError:
                raise InputError(f"upper set {token!r}: expected an integer after {prefix!r}") from None
    if Path(token).is_file():
        return ser.upperset_from_payload(ser.load(token, "upperset"))
    raise InputError(f"upper set {token!r}: expected empty, full, row:K, col:K or a file")


def parse_json_arg(text: str, what: str):
    if Path(text).is_file():
        doc = ser.load(text, "objects")
        return doc.get("objects")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: invalid JSON literal ({exc.msg})") from None


def build_oracle(args):
    """Oracle from --manifest, --table or --oracle."""
    name = getattr(args, "oracle", None)
    manifest = getattr(args, "manifest", None)
    if manifest:
        doc = ser.load(manifest, "manifest")
        args.manifest_objects = doc.get("objects")
        token = doc.get("oracle")
        if token is None:
            raise InputError("manifest.oracle: missing")
        if "window" in doc:
            w = doc["window"]
            if not (isinstance(w, list) and len(w) == 2 and all(isinstance(v, int) for v in w) and w[0] <= w[1]):
                raise InputError("manifest.window: expected [lo, hi] with lo <= hi")
            if getattr(args, "window", None) is None:
                args.window = tuple(w)
        if isinstance(token, dict) and "table" in token:
            return ser.table_from_payload(token["table"], "manifest.oracle.table")
        if isinstance(token, dict) and "path" in token:
            base = Path(manifest).parent
            return ser.table_from_payload(ser.load(base / token["path"], "ext-table"))
        if isinstance(token, dict) and "name" in token:
            name = token["name"]
            for key in ("dim", "preset"):
                if key in token:
                    setattr(args, key, token[key])
        else:
            raise InputError("manifest.oracle: expected {name}, {table} or {path}")
    if getattr(args, "table", None):
        return ser.table_from_payload(ser.load(args.table, "ext-table"))
    name = name or "koszul"
    if name == "koszul":
        return KoszulHeart()
    if name == "semisimple":
        return SemisimpleHeart()
    if name == "coherent-support":
        dim = getattr(args, "dim", None)
        return CoherentSupportHeart(2 if dim is None else int(dim))
    if name == "torsion-pair":
        return torsion_pair_table()
    if name == "beilinson-soule":
        preset = getattr(args, "preset", None)
        if preset not in (None, "number-field"):
            raise InputError(f"--preset: unknown preset {preset!r}")
        return BeilinsonSoule(vanishing=preset == "number-field")
    if name == "table":
        raise InputError("--oracle table needs --table FILE")
    raise InputError(f"--oracle: unknown oracle {name!r}")


def parse_map(token: str, oracle):
    t = oracle.index
    if token in ("e", "exchange"):
        if not isinstance(t, LexProduct):
            raise InputError("--map e: needs a product label space")
        return exchange(t.left, t.right)
    if token == "identity":
        return identity(t)
    if token == "pi1":
        return projection_first(LexProduct(t.left, t.right))
    if token == "alpha":
        return alpha()
    if token == "beta":
        return beta()
    for prefix, make in (("gamma:", gamma_p), ("g:", g_p)):
        if token.startswith(prefix):
            p = parse_perversity(token[len(prefix):])
            if p.infinite:
                raise InputError(f"--map {token}: needs a finite perversity")
            return make(p)
    raise InputError(f"--map: unknown map {token!r}; expected e, identity, pi1, alpha, beta, gamma:P or g:P")


def _verdict(v) -> dict:
    return {"holds": v.holds, "witness": v.witness, "checked": v.checked}


# --------------------------------------------------------------------------
# perv


def cmd_perv(args) -> int:
    sub = args.perv_cmd
    if sub == "enumerate":
        w = _window(args)
        vr = tuple(args.values) if args.values else w
        ps = enumerate_perversities(w, vr)
        emit(
            {
                "window": list(w),
                "values": list(vr),
                "count": len(ps),
                "perversities": [[p(n) for n in range(w[0], w[1] + 1)] for p in ps],
            }
        )
        return 0
    if sub == "to-upperset":
        p = parse_perversity(args.p)
        u = perversity_to_upperset(p) if args.route == "phi" else perversity_to_upperset_op(p)
        emit(ser.document("upperset", ser.upperset_payload(u)))
        return 0
    if sub == "from-upperset":
        u = parse_upperset(args.u)
        p = upperset_to_perversity(u) if args.route == "op" else upperset_to_perversity_phi(u)
        emit(ser.document("perversity", ser.perversity_payload(p)))
        return 0
    if sub == "act":
        p = parse_perversity(args.p)
        p = p.act_dot(args.dot).act_plus(args.plus)
        emit(ser.document("perversity", ser.perversity_payload(p)))
        return 0
    if sub == "compare":
        c = parse_perversity(args.p).compare(parse_perversity(args.q))
        emit({"comparison": c.value})
        return 0
    if sub == "is-strict":
        p = parse_perversity(args.p)
        if p.infinite:
            raise InputError("strictness is only defined for finite perversities")
        bad = p.strict_violation()
        emit({"strict": bad is None, "witness": None if bad is None else {"n": bad, "p(n)": p(bad), "p(n+2)": p(bad + 2)}})
        return 0 if bad is None else 1
    raise InputError(f"unknown perv subcommand {sub!r}")


# --------------------------------------------------------------------------
# check


def cmd_check(args) -> int:
    oracle = build_oracle(args)
    window = _window(args)
    shifts = tuple(args.shifts) if args.shifts else DEFAULT_SHIFTS
    sub = args.check_cmd
    report: dict = {"oracle": oracle.name, "check": sub, "window": list(window), "shifts": list(shifts)}
    if sub == "compatible":
        if not args.map:
            raise InputError("check compatible needs --map")
        f = parse_map(args.map, oracle)
        labels = [x for x in oracle.index.window(*window) if f.defined_at(x)]
        v = is_f_compatible(oracle, f, labels)
        report.update(map=f.name, result=_verdict(v))
        emit(report)
        return 0 if v else 1
    if isinstance(oracle, BaricOracle):
        if sub != "gluable":
            raise InputError(f"check {sub}: not defined for a baric oracle; use gluable or compatible")
        v = is_baric_gluable(oracle, window, shifts)
        report["result"] = _verdict(v)
        emit(report)
        return 0 if v else 1
    if sub == "implications":
        rep = implication_check(oracle, window, shifts)
        report.update(rep.as_dict())
        emit(report)
        return 0 if rep.consistent else 1
    pred = {"gluable": is_gluable, "grading": is_grading, "perverse": is_perverse}[sub]
    v = pred(oracle, window, shifts)
    report["result"] = _verdict(v)
    emit(report)
    return 0 if v else 1


# --------------------------------------------------------------------------
# heart, push, plot


def _objects(args) -> list:
    if args.objects is not None:
        raw = parse_json_arg(args.objects, "--objects")
    elif getattr(args, "manifest_objects", None) is not None:
        raw = args.manifest_objects
    else:
        raise InputError("no objects: give --objects or a manifest with an objects field")
    if not isinstance(raw, list):
        raise InputError("--objects: expected a list of objects")
    if raw and all(isinstance(e, list) and e and isinstance(e[0], int) for e in raw):
        raw = [raw]  # a single object literal
    return [ser.bigraded_from_json(o, f"objects[{i}]") for i, o in enumerate(raw)]


def _support(x: BigradedObject) -> SupportObject:
    return SupportObject(tuple(((n, w), m) for n, w, m in x.entries))


def cmd_heart(args) -> int:
    oracle = build_oracle(args)
    if not isinstance(oracle, HeartOracle):
        raise InputError("heart: needs an abelian slicing oracle (not a baric one)")
    window = _window(args)
    if args.p is not None:
        p = parse_perversity(args.p)
    elif args.u is not None:
        p = upperset_to_perversity(parse_upperset(args.u))
    else:
        raise InputError("heart: give --p or --u")
    try:
        desc = psi(oracle, p, window)
    except PreconditionError as exc:
        emit({"precondition": str(exc)})
        return 1
    results = []
    all_in = True
    for x in _objects(args):
        v = perverse_heart_membership(p, _support(x))
        if not v:
            all_in = False
        results.append({"object": ser.bigraded_to_json(x), "in_heart": v.holds, "witness": v.witness})
    emit({"oracle": oracle.name, "perversity": ser.perversity_payload(desc.perversity), "objects": results})
    return 0 if all_in else 1


def cmd_push(args) -> int:
    oracle = build_oracle(args)
    f = parse_map(args.map, oracle)
    objs = _objects(args)
    out = []
    for x in objs:
        try:
            y = pushforward_support(oracle, f, _support(x))
        except IncompatibleError as exc:
            emit({"map": f.name, "incompatible": exc.witness})
            return 1
        out.append([[lbl, m] for lbl, m in y.entries])
    emit({"map": f.name, "supports": out})
    return 0


def cmd_plot(args) -> int:
    w = _window(args)
    n0, n1 = w
    m0, m1 = tuple(args.rows) if args.rows else w
    if (n1 - n0 + 1) > MAX_PLOT or (m1 - m0 + 1) > MAX_PLOT:
        raise InputError(f"--window: plots are limited to {MAX_PLOT}x{MAX_PLOT}")
    if args.p is not None:
        p = parse_perversity(args.p)
        u = perversity_to_upperset(p) if args.route == "phi" else perversity_to_upperset_op(p)
    elif args.u is not None:
        u = parse_upperset(args.u)
    else:
        raise InputError("plot: give --p or --u")
    member = u.__contains__
    text = render_ascii(member, n0, n1, m0, m1) if args.format == "ascii" else render_svg(member, n0, n1, m0, m1)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


# --------------------------------------------------------------------------
# demos


class Narrator:
    def __init__(self):
        self.failures = 0

    def say(self, text: str):
        print(text)

    def check(self, ok: bool, text: str):
        print(f"[{'ok' if ok else 'FAIL'}] {text}")
        if not ok:
            self.failures += 1


def _labels_window(lo, hi):
    return [(n, w) for n in range(lo, hi + 1) for w in range(lo, hi + 1)]


def demo_koszul(out: Narrator, args):
    k = KoszulHeart()
    out.say("Graded modules over a Koszul algebra: Ext^n(M_phi, M_psi) = 0 for n > psi - phi.")
    rep = implication_check(k, (-4, 4), DEFAULT_SHIFTS)
    out.check(bool(rep.gluable), "the weight slicing of the heart is gluable")
    out.check(bool(rep.grading) and bool(rep.perverse), "hence grading and perverse")
    d = psi(k, Perversity.identity())
    got = d.heart_labels((-4, 4), (-4, 4))
    want = {(-w, w) for w in range(-4, 4 + 1)}
    out.check(got == want, "psi(identity) has heart generated by the diagonal slices (-n, n)")
    diag = SupportObject.of([(0, 0), (-1, 1), (-2, 2)])
    out.check(bool(perverse_heart_membership(Perversity.identity(), diag)), "a diagonal object lies in the heart")
    off = SupportObject.of([(0, 1)])
    v = perverse_heart_membership(Perversity.identity(), off)
    out.check(not v and v.witness == (0, 1), "heart_1 in degree 0 does not (witness label (0, 1))")
    pushed = pushforward_support(k, gamma_p(Perversity.identity()), diag)
    out.check(pushed.entries == ((0, 3),), "gamma_identity sends the diagonal support to degree 0 with multiplicity 3")
    out.say(f"heart descriptor: n + phi = 0 on labels (n, phi); sample {sorted(got)[:3]} ...")


def demo_motives(out: Narrator, args):
    out.say("Mixed Tate motives: Hom(Q(i), Q(j)[n]) = K_{2(j-i)-n}^{(j-i)}, as a baric structure.")
    for flag in (True, False):
        g = is_baric_gluable(BeilinsonSoule(vanishing=flag))
        out.check(bool(g) == flag, f"vanishing flag {flag}: gluable = {bool(g)}")
    planted = BeilinsonSoule(vanishing=True, planted=frozenset({(1, 0)}))
    v = is_baric_gluable(planted)
    out.check(not v, f"a planted nonzero K-group at weight 1, n = 0 breaks gluability (witness {v.witness})")
    bs = BeilinsonSoule(vanishing=True)
    glued = exchanged(bs)
    labels = glued.index.window(-3, 3)
    out.check(bool(glued.baseline_violation(labels, range(-3, 4))), "e_* of the glued slicing satisfies the slicing axiom")
    out.check(
        bool(is_f_compatible(glued, exchange(Z, ZHAT), labels)),
        "and is itself gluable as a Z x_lex Zhat slicing",
    )
    out.say("heart of the glued t-structure: the slices (0, i), i.e. Q(i) in degree 0 for every weight i")


def demo_coherent(out: Narrator, args):
    dim = 2
    c = CoherentSupportHeart(dim)
    out.say(f"Coherent sheaves on a smooth projective variety of dimension {dim}, sliced by codimension of support.")
    rep = implication_check(c, (0, dim), DEFAULT_SHIFTS)
    out.check(bool(rep.perverse), "the slicing is perverse")
    out.check(not rep.grading, f"but not grading (witness {rep.grading.witness})")
    strict = [p for p in enumerate_perversities((0, dim), (0, dim)) if p.is_strict()]
    ok = all(gp_compatible(c, p, (-2, 2), (0, dim)) for p in strict)
    out.check(ok, f"g_p-compatible for all {len(strict)} strict perversities on the window")
    v = gp_compatible(c, Perversity.identity(), (-2, 2), (0, dim))
    out.check(not v, f"not g_p-compatible for the non-strict identity (witness {v.witness})")
    try:
        psi(c, Perversity.identity(), (0, dim))
        out.check(False, "psi refuses a non-strict perversity")
    except PreconditionError:
        out.check(True, "psi refuses a non-strict perversity")
    d = psi(c, Perversity.middle(), (0, dim))
    out.say(f"middle perversity heart labels: {sorted(d.heart_labels((-2, 2), (0, dim)))}")


def demo_torsion_tilt(out: Narrator, args):
    k = args.k
    out.say(f"Two-valued perversity chi_[{k},inf) against the tilt by T = weights >= {k}, F = weights < {k}.")
    out.check(bool(is_grading(torsion_pair_table())), "a torsion pair, as a two-slice slicing, is grading")
    p = Perversity.chi(k)
    d = psi(SemisimpleHeart(), p)
    labels = _labels_window(k - 4, k + 4)
    agree = all(d.heart(x) == bool(tilt_heart_membership(k, SupportObject.of([x]))) for x in labels)
    out.check(agree, "label by label, the chi heart equals the tilted heart")
    rng = random.Random(k)
    trials = 0
    for _ in range(500):
        xs = rng.sample(labels, rng.randint(0, 4))
        sup = SupportObject.of(xs)
        trials += 1
        if bool(perverse_heart_membership(p, sup)) != bool(tilt_heart_membership(k, sup)):
            out.check(False, f"object {xs} judged differently")
            break
    else:
        out.check(True, f"{trials} random objects judged identically")


def demo_bbd(out: Narrator, args):
    from itertools import product

    from .slicing import BaricTable

    out.say("A semiorthogonal decomposition (D_0, D_1) with t-structures on both pieces.")
    ns = [-2, -1, 0, 1]
    agree = True
    count = 0
    for pattern in product([True, False], repeat=len(ns)):
        t = BaricTable([0, 1], True, {(0, 1, n): v for n, v in zip(ns, pattern)})
        pts = [(i, k) for i in (0, 1) for k in range(-2, 3)]
        e_compat = bool(is_f_compatible(t, exchange(t.baric, Z), pts))
        criterion = all(t.orthogonal((0, 0), (1, 0), n) for n in range(-4, 1))
        count += 1
        if e_compat != criterion:
            agree = False
            out.check(False, f"pattern {pattern}: e-compatible {e_compat} but criterion {criterion}")
            break
        if e_compat:
            glued = exchanged(t)
            lbls = glued.index.window(-2, 2)
            if not glued.baseline_violation(lbls, range(-2, 3)):
                agree = False
                out.check(False, f"pattern {pattern}: glued slicing violates the slicing axiom")
                break
            if not glued.orthogonal((0, 1), (0, 0), 0):
                agree = False
    out.check(agree, f"gluable iff heart_0 is orthogonal to heart_1[n] for all n <= 0 ({count} tables)")
    out.say("when gluable, e_! gives a t-structure with torsion pair (heart_0, heart_1) on its heart")


DEMOS = {
    "koszul": demo_koszul,
    "motives": demo_motives,
    "coherent": demo_coherent,
    "torsion-tilt": demo_torsion_tilt,
    "bbd-gluing": demo_bbd,
}


def cmd_demo(args) -> int:
    out = Narrator()
    DEMOS[args.name](out, args)
    print("result:", "PASS" if out.failures == 0 else f"FAIL ({out.failures})")
    return 0 if out.failures == 0 else 1


# --------------------------------------------------------------------------


def _oracle_options(p: argparse.ArgumentParser):
    p.add_argument(
        "--oracle",
        choices=["koszul", "semisimple", "beilinson-soule", "coherent-support", "torsion-pair", "table"],
        help="built-in orthogonality oracle (default koszul)",
    )
    p.add_argument("--preset", choices=["number-field"], help="preset for the beilinson-soule oracle")
    p.add_argument("--dim", type=int, help="dimension for coherent-support")
    p.add_argument("--table", help="ext-table JSON file")
    p.add_argument("--manifest", help="manifest JSON file")
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="heartglue", description="perversities, upper sets and glued slicings")
    sub = ap.add_subparsers(dest="cmd", required=True)

    perv = sub.add_parser("perv", help="perversity functions and upper sets")
    ps = perv.add_subparsers(dest="perv_cmd", required=True)
    e = ps.add_parser("enumerate")
    e.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"))
    e.add_argument("--values", type=int, nargs=2, metavar=("LO", "HI"))
    t = ps.add_parser("to-upperset")
    t.add_argument("--p", required=True)
    t.add_argument("--route", choices=["phi", "op"], default="phi")
    f = ps.add_parser("from-upperset")
    f.add_argument("--u", required=True)
    f.add_argument("--route", choices=["phi", "op"], default="op")
    a = ps.add_parser("act")
    a.add_argument("--p", required=True)
    a.add_argument("--dot", type=int, default=0, help="n -> p(n + k)")
    a.add_argument("--plus", type=int, default=0, help="n -> p(n) + k")
    c = ps.add_parser("compare")
    c.add_argument("--p", required=True)
    c.add_argument("--q", required=True)
    s = ps.add_parser("is-strict")
    s.add_argument("--p", required=True)

    check = sub.add_parser("check", help="compatibility and gluability checks")
    cs = check.add_subparsers(dest="check_cmd", required=True)
    for name in ("compatible", "gluable", "grading", "perverse", "implications"):
        cp = cs.add_parser(name)
        _oracle_options(cp)
        cp.add_argument("--shifts", type=int, nargs=2, metavar=("LO", "HI"))
        if name == "compatible":
            cp.add_argument("--map", help="e, identity, pi1, alpha, beta, gamma:P or g:P")

    h = sub.add_parser("heart", help="membership in a perverse heart")
    _oracle_options(h)
    h.add_argument("--p")
    h.add_argument("--u")
    h.add_argument("--objects", help="JSON literal or objects file (default: manifest objects)")

    pu = sub.add_parser("push", help="support-level pushforward")
    _oracle_options(pu)
    pu.add_argument("--map", required=True)
    pu.add_argument("--objects", help="JSON literal or objects file (default: manifest objects)")

    pl = sub.add_parser("plot", help="draw an upper set of Z x Z")
    pl.add_argument("--p")
    pl.add_argument("--u")
    pl.add_argument("--route", choices=["phi", "op"], default="phi")
    pl.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), help="range of n (and n' unless --rows)")
    pl.add_argument("--rows", type=int, nargs=2, metavar=("LO", "HI"), help="range of n'")
    pl.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    pl.add_argument("--out")

    d = sub.add_parser("demo", help="worked scenarios")
    d.add_argument("name", choices=sorted(DEMOS))
    d.add_argument("--k", type=int, default=0, help="threshold for torsion-tilt")
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    handlers = {
        "perv": cmd_perv,
        "check": cmd_check,
        "heart": cmd_heart,
        "push": cmd_push,
        "plot": cmd_plot,
        "demo": cmd_demo,
    }
    try:
        return handlers[args.cmd](args)
    except (InputError, ser.FormatError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_exit() -> None:
    sys.exit(main())
