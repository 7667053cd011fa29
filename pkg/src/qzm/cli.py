"""Batch command-line surface.

Subcommands run verification suites and enumerations, emit text, json or
csv reports, and manage the on-disk quotient-basis cache.  Exit status is
nonzero exactly when a documented-claim check fails; exploratory results are
findings and never fail the run.
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import dataclass

from . import __version__, bilinears as bl, diagrams as dg, qalgebra as qa
from .basis import BudgetExceeded, DEFAULT_BUDGET, FockContext
from .cache import DiskCache
from .fock import ChiralState, class_words, word_is_dead
from .qalgebra import eps_tag, make_context, resolve_eps_sign
from .reports import (BUDGET, CheckRecord, DERIVED, EXPLORATORY, FAIL, DOCUMENTED,
                      PASS, Report, SKIPPED)
from .scalars import GENERIC, ROOT, make_field

SWEEP_LETTERS = 4          # class-family sweep depth for verify-algebra
RANDOM_WORD_LETTERS = 3    # length of seeded random words in identity checks


@dataclass
class RunConfig:
    command: str
    n: int = None
    k: int = None
    generic_q: bool = False
    budget: int = DEFAULT_BUDGET
    samples: int = 25
    seed: int = 1
    cache_dir: str = None
    format: str = "text"
    out: str = None
    i: int = 2
    cache_action: str = None

    @property
    def h(self):
        return None if self.n is None or self.k is None else self.n + self.k

    def echo(self):
        d = {"command": self.command, "budget": self.budget,
             "samples": self.samples, "seed": self.seed,
             "generic_q": self.generic_q}
        if self.n is not None:
            d.update(n=self.n, k=self.k, h=self.h)
        if self.i is not None and self.command == "check-w":
            d["i"] = self.i
        return d


def _context(cfg, generic=None):
    disk = DiskCache(cfg.cache_dir) if cfg.cache_dir else None
    generic = cfg.generic_q if generic is None else generic
    if generic:
        return make_context(cfg.n, cfg.k, generic=True, budget=cfg.budget,
                            disk_cache=disk)
    return make_context(cfg.n, cfg.k, budget=cfg.budget, disk_cache=disk)


class Checker:
    """Collects check records, timing each one and trapping budget errors."""

    def __init__(self):
        self.records = []

    def run(self, name, params, provenance, fn, sizes=None, detail=None):
        t0 = time.perf_counter()
        try:
            ok = fn()
            result = PASS if ok else FAIL
        except BudgetExceeded as e:
            result = BUDGET
            detail = str(e)
        rec = CheckRecord(name, params, result, provenance,
                          sizes=sizes or {}, seconds=time.perf_counter() - t0,
                          detail=detail)
        self.records.append(rec)
        return rec

    def add(self, rec):
        self.records.append(rec)
        return rec


def _report(cfg, checks):
    return Report(__version__, eps_tag(resolve_eps_sign()), cfg.echo(), checks)


# ---------------------------------------------------------------------------
# enumerate
# ---------------------------------------------------------------------------

def cmd_enumerate(cfg):
    ck = Checker()
    n, h, k = cfg.n, cfg.h, cfg.k
    listed = dg.enumerate_diagrams(n, h)
    for y in listed:
        rec = y.to_record(k)
        ck.add(CheckRecord("diagram", rec, PASS, DERIVED,
                           detail=dg.render(y).replace("\n", " / ")))
    closed = dg.count_diagrams(n, h)
    ck.run("count_matches_closed_form",
           {"n": n, "h": h, "enumerated": len(listed), "closed_form": closed},
           DOCUMENTED if n == 2 else DERIVED,
           lambda: len(listed) == closed)
    ck.run("spread_hook_equivalence", {"n": n, "h": h}, DERIVED,
           lambda: all((dg.spread(y) <= h) == (dg.max_hook(y) <= h - 1)
                       for y in listed))
    ck.run("rectangle_containment", {"n": n, "h": h}, DOCUMENTED,
           lambda: all(y.rows <= n - 1 and (not y.parts or y.parts[0] <= h - 1)
                       for y in listed))
    return _report(cfg, ck.records)


# ---------------------------------------------------------------------------
# verify-field
# ---------------------------------------------------------------------------

def cmd_verify_field(cfg):
    ck = Checker()
    h = cfg.h
    f = make_field(ROOT, h)
    ck.run("q_int_h_vanishes", {"h": h}, DOCUMENTED,
           lambda: f.q_int(h).is_zero())
    ck.run("q_int_reflection", {"h": h, "range": f"1..{h - 1}"}, DOCUMENTED,
           lambda: all(f.q_int(h - m) == f.q_int(m) for m in range(1, h)))
    ck.run("q_int_odd", {"h": h, "range": f"1..{3 * h}"}, DERIVED,
           lambda: all(f.q_int(-m) == -f.q_int(m) for m in range(1, 3 * h + 1)))
    ck.run("q_int_periodicity", {"h": h, "range": f"-{3 * h}..{3 * h}"}, DERIVED,
           lambda: all(f.q_int(m + 2 * h) == f.q_int(m)
                       for m in range(-3 * h, 3 * h + 1)))
    ck.run("q_int_zero_locus", {"h": h, "range": f"|m|<={3 * h}"}, DOCUMENTED,
           lambda: all(f.q_int(m).is_zero() == (m % h == 0)
                       for m in range(-3 * h, 3 * h + 1)))
    ck.run("q_int_recurrence", {"h": h, "range": f"|m|<={3 * h}"}, DERIVED,
           lambda: all(f.q_int(2) * f.q_int(m) == f.q_int(m + 1) + f.q_int(m - 1)
                       for m in range(-3 * h, 3 * h + 1)))
    ck.run("modulus_root", {"h": h}, DERIVED,
           lambda: _eval_modulus(f).is_zero())
    rng = random.Random(cfg.seed)
    ck.run("field_axioms_randomized", {"h": h, "samples": cfg.samples}, DERIVED,
           lambda: _field_axioms(f, rng, cfg.samples))
    ck.run("encode_roundtrip", {"h": h, "samples": cfg.samples}, DERIVED,
           lambda: _encode_roundtrip(f, random.Random(cfg.seed), cfg.samples))
    return _report(cfg, ck.records)


def _eval_modulus(f):
    acc = f.zero
    for j, c in enumerate(f.modulus):
        if c:
            acc = acc + f.q_power(j) * f.from_int(c)
    return acc


def _random_scalar(f, rng):
    s = f.zero
    for j in range(f.degree):
        c = rng.randint(-4, 4)
        if c:
            s = s + f.q_power(j) * f.from_int(c)
    return s


def _field_axioms(f, rng, samples):
    for _ in range(samples):
        a, b, c = (_random_scalar(f, rng) for _ in range(3))
        if (a + b) + c != a + (b + c):
            return False
        if a * (b + c) != a * b + a * c:
            return False
        if (a * b) * c != a * (b * c):
            return False
        if not a.is_zero() and (a * a.invert()) != f.one:
            return False
    return True


def _encode_roundtrip(f, rng, samples):
    for _ in range(samples):
        a = _random_scalar(f, rng)
        if f.decode(a.encode()) != a:
            return False
    return True


# ---------------------------------------------------------------------------
# verify-algebra
# ---------------------------------------------------------------------------

def _sweep_contents(n, max_letters):
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for c in range(remaining + 1):
            rec(prefix + [c], remaining - c, slots - 1)

    for total in range(1, max_letters + 1):
        rec([], total, n)
    return [c for c in out if sum(c) >= 1]


def _random_word(ctx, rng, letters=RANDOM_WORD_LETTERS):
    n = ctx.n
    while True:
        w = bytes(rng.randrange(n * n) for _ in range(letters))
        if not word_is_dead(n, ctx.h, w):
            return w


def _word_state(ctx, w):
    return ChiralState(ctx.field, ctx.n, terms={w: ctx.field.one})


def _instances_all_zero(ctx, rc, fc):
    for inst in ctx.relation_instances(rc, fc):
        st = ChiralState(ctx.field, ctx.n, terms=inst.terms)
        if not ctx.is_zero_state(st):
            return False
    return True


def _verify_algebra_mode(cfg, ck, generic):
    ctx = _context(cfg, generic=generic)
    mode = GENERIC if generic else ROOT
    rng = random.Random(cfg.seed)
    n = ctx.n

    contents = [c for c in _sweep_contents(n, SWEEP_LETTERS)
                if sum(c) <= SWEEP_LETTERS]
    bad = []
    t0 = time.perf_counter()
    for rc in contents:
        total = sum(rc)
        for fc in _sweep_contents(n, total):
            if sum(fc) != total:
                continue
            if not _instances_all_zero(ctx, rc, fc):
                bad.append((rc, fc))
    ck.add(CheckRecord(
        "relation_instances_all_zero",
        {"mode": mode, "n": n, "max_letters": SWEEP_LETTERS},
        PASS if not bad else FAIL, DERIVED,
        sizes={"families": len(contents)},
        seconds=time.perf_counter() - t0,
        detail=None if not bad else f"nonzero instances in {bad[:3]}"))

    ck.run("vacuum_family_dimension_one", {"mode": mode, "n": n}, DOCUMENTED,
           lambda: ctx.block_basis((1,) * n, (1,) * n).dim
           >= 1 and b"" in ctx.block_basis((1,) * n, (1,) * n).basis_words)

    # determinant consistency: chain instances with the empty prefix
    t0 = time.perf_counter()
    ok = _determinant_consistency(ctx, rng, cfg.samples)
    ck.add(CheckRecord("determinant_consistency",
                       {"mode": mode, "n": n, "samples": cfg.samples},
                       PASS if ok else FAIL, DERIVED,
                       seconds=time.perf_counter() - t0))

    # bilinear identities on seeded states
    words = [_random_word(ctx, rng) for _ in range(cfg.samples)]
    states = [_word_state(ctx, w) for w in words]
    tensor_states = [qa.tensor_vacuum(ctx)]
    ts = qa.tensor_vacuum(ctx)
    for _ in range(2):
        ts = qa.apply_Q(1, 1, ts)
        tensor_states.append(ts)

    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    flavs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    ck.run("bilinear_split_completeness", {"mode": mode}, DOCUMENTED,
           lambda: all(bl.check_split_completeness(s, i, j, a, b)
                       for s in states[:5] for i, j in pairs[:2] for a, b in flavs))
    ck.run("bilinear_symmetry_relabeling", {"mode": mode}, DOCUMENTED,
           lambda: all(bl.check_symmetry_relabeling(s, i, j, a, b)
                       for s in states[:5] for i, j in pairs[:2] for a, b in flavs))
    ck.run("bilinear_dynamical_exchange", {"mode": mode, "samples": len(states)}, DOCUMENTED,
           lambda: all(bl.check_dynamical_AS(ctx, s, i, j, a, b)
                       for s in states for i, j in pairs[:2]
                       for a, b in flavs if a != b))
    ck.run("bilinear_diagonal_simple", {"mode": mode}, DOCUMENTED,
           lambda: all(bl.check_diagonal_simple(ctx, s, i, j, a, b)
                       for s in states[:8] for i, j in pairs[:1] for a, b in flavs))
    ck.run("contraction_vanishing", {"mode": mode}, DOCUMENTED,
           lambda: all(bl.check_contraction_vanishing(t, i, j, l, m)
                       for t in tensor_states
                       for i, j in pairs[:2] for l, m in pairs[:2]))
    ck.run("QQ_split", {"mode": mode}, DOCUMENTED,
           lambda: all(bl.check_QQ_split(t, i, l, j, m)
                       for t in tensor_states
                       for i, l in [(1, 1), (1, 2)] for j, m in [(1, 1), (2, 1)]))

    if generic:
        ck.run("h_power_survives_generic",
               {"mode": mode, "n": n, "h": cfg.h}, DERIVED,
               lambda: not ctx.is_zero_state(_word_state(
                   ctx, bytes([0]) * cfg.h)))
    else:
        ck.run("h_power_vanishes", {"mode": mode, "n": n, "h": ctx.h}, DOCUMENTED,
               lambda: ctx.is_zero_state(_word_state(ctx, bytes([0]) * ctx.h)))


def _determinant_consistency(ctx, rng, samples):
    n = ctx.n
    from .fock import determinant_rows
    for rc in [(0,) * n, (1,) + (0,) * (n - 1), (2,) + (0,) * (n - 1)]:
        for fc in {(0,) * n, (sum(rc),) + (0,) * (n - 1),
                   tuple(sorted(rc, reverse=True))}:
            if sum(fc) != sum(rc):
                continue
            zs = class_words(n, rc, fc)
            rng.shuffle(zs)
            for z in zs[:max(1, samples // 5)]:
                for inst in determinant_rows(ctx.field, n, ctx.h,
                                             ctx.eps_sign, [z]):
                    st = ChiralState(ctx.field, n, terms=inst.terms)
                    if not ctx.is_zero_state(st):
                        return False
    return True


def cmd_verify_algebra(cfg):
    ck = Checker()
    _verify_algebra_mode(cfg, ck, generic=False)
    _verify_algebra_mode(cfg, ck, generic=True)
    return _report(cfg, ck.records)


# ---------------------------------------------------------------------------
# fprime
# ---------------------------------------------------------------------------

def cmd_fprime(cfg):
    ck = Checker()
    if cfg.generic_q:
        ck.add(CheckRecord("fprime", {"n": cfg.n, "k": cfg.k}, SKIPPED,
                           DERIVED, detail="root-of-unity statement; "
                           "generic mode has no finite diagram space"))
        return _report(cfg, ck.records)
    ctx = _context(cfg, generic=False)
    n, k, h = cfg.n, cfg.k, cfg.h

    t0 = time.perf_counter()
    try:
        res = qa.fprime_dimension(ctx)
    except BudgetExceeded as e:
        ck.add(CheckRecord("fprime_dimension", {"n": n, "k": k}, BUDGET, DOCUMENTED,
                           detail=str(e)))
        return _report(cfg, ck.records)
    expected = dg.count_diagrams(n, h)
    ck.add(CheckRecord(
        "fprime_dimension", {"n": n, "k": k, "h": h, "expected": expected},
        PASS if res.dimension == expected else FAIL,
        DOCUMENTED if n == 2 else DERIVED,
        sizes={"dimension": res.dimension},
        seconds=time.perf_counter() - t0))
    for r in res.records:
        ck.add(CheckRecord(
            "diagram_vector_nonzero",
            {"parts": list(r.diagram.parts), "unitary": r.unitary},
            PASS if r.nonzero else FAIL, DOCUMENTED))

    for y in dg.enumerate_diagrams(n, h):
        for j in range(1, n + 1):
            t0 = time.perf_counter()
            try:
                out = qa.check_growth(ctx, y, j)
            except BudgetExceeded as e:
                ck.add(CheckRecord("growth", {"parts": list(y.parts), "j": j},
                                   BUDGET, DOCUMENTED, detail=str(e)))
                continue
            # the source asserts violations land on zero or another basis
            # vector; legal growth is proportional with nonzero coefficient
            if out.prediction == "diagram":
                ok = out.kind == qa.GROWTH_PROPORTIONAL
            else:
                ok = out.kind in (qa.GROWTH_ZERO, qa.GROWTH_IN_SPAN)
            params = {"parts": list(y.parts), "j": j,
                      "prediction": out.prediction, "outcome": out.kind}
            if out.target is not None:
                params["target"] = list(out.target.parts)
            if out.coefficient is not None:
                params["coefficient"] = out.coefficient.encode()
            cert = None
            if out.kind == qa.GROWTH_OUTSIDE:
                cert = qa.residual_certificate(
                    ctx, qa.apply_Q(j, j, qa.vector_of_diagram(ctx, y)))
            ck.add(CheckRecord("growth", params, PASS if ok else FAIL, DOCUMENTED,
                               seconds=time.perf_counter() - t0,
                               sizes={"max_block_words":
                                      ctx.stats["max_block_words"]},
                               certificate=cert))

    for y in dg.enumerate_diagrams(n, h):
        t0 = time.perf_counter()
        try:
            ok = qa.check_offdiagonal_annihilation(ctx, y)
        except BudgetExceeded as e:
            ck.add(CheckRecord("offdiagonal_annihilation",
                               {"parts": list(y.parts)}, BUDGET, DOCUMENTED,
                               detail=str(e)))
            continue
        ck.add(CheckRecord("offdiagonal_annihilation", {"parts": list(y.parts)},
                           PASS if ok else FAIL, DOCUMENTED,
                           seconds=time.perf_counter() - t0))

    # dynamical commutation on small diagram vectors
    smalls = [y for y in dg.enumerate_diagrams(n, h) if y.boxes <= 2]
    for y in smalls:
        v = qa.vector_of_diagram(ctx, y)
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                t0 = time.perf_counter()
                verdict = qa.check_dynamical_commutation(ctx, v, i, j)
                ck.add(CheckRecord(
                    "dynamical_commutation",
                    {"parts": list(y.parts), "i": i, "j": j},
                    {"pass": PASS, "fail": FAIL, "vacuous": SKIPPED}[verdict],
                    DOCUMENTED, seconds=time.perf_counter() - t0,
                    detail="premise vacuous" if verdict == "vacuous" else None))

    t0 = time.perf_counter()
    ok = qa.check_rowcol_commutativity(
        ctx, [qa.tensor_vacuum(ctx), qa.apply_Q(1, 1, qa.tensor_vacuum(ctx))])
    ck.add(CheckRecord("rowcol_commutativity", {"n": n, "k": k},
                       PASS if ok else FAIL, DOCUMENTED,
                       seconds=time.perf_counter() - t0))

    nil = [(1, 1)] + ([(1, 2)] if n >= 2 else [])
    for i, j in nil:
        t0 = time.perf_counter()
        ok = qa.nilpotency(ctx, i, j)
        ck.add(CheckRecord("nilpotency", {"i": i, "j": j, "h": h},
                           PASS if ok else FAIL, DOCUMENTED,
                           seconds=time.perf_counter() - t0))
    return _report(cfg, ck.records)


# ---------------------------------------------------------------------------
# check-w
# ---------------------------------------------------------------------------

def cmd_check_w(cfg):
    ck = Checker()
    if cfg.generic_q:
        ck.add(CheckRecord("check_w", {"n": cfg.n, "k": cfg.k}, SKIPPED,
                           DERIVED, detail="root-of-unity statement"))
        return _report(cfg, ck.records)
    ctx = _context(cfg, generic=False)
    n, k, i = cfg.n, cfg.k, cfg.i
    # the source verifies (3, k<=2, i=2); anything else is exploratory
    documented = n == 3 and k <= 2 and i == 2
    prov = DOCUMENTED if documented else EXPLORATORY

    t0 = time.perf_counter()
    try:
        v_zero, w_zero = qa.check_hook_vanishing(ctx, i)
    except BudgetExceeded as e:
        ck.add(CheckRecord("hook_vanishing", {"n": n, "k": k, "i": i},
                           BUDGET, prov, detail=str(e)))
        return _report(cfg, ck.records)
    dt = time.perf_counter() - t0
    v = qa.hook_backbone(ctx, i)
    v_h = qa.apply_Q(i, i, qa.apply_Q(1, 1, v))
    w_h = qa.apply_Q(1, 1, qa.apply_Q(i, i, v))
    ck.add(CheckRecord("hook_v_vanishes", {"n": n, "k": k, "i": i},
                       PASS if v_zero else FAIL, prov, seconds=dt,
                       certificate=qa.residual_certificate(ctx, v_h)))
    ck.add(CheckRecord("hook_w_vanishes", {"n": n, "k": k, "i": i},
                       PASS if w_zero else FAIL, prov, seconds=dt,
                       certificate=qa.residual_certificate(ctx, w_h),
                       detail=None if w_zero else
                       "nonzero in the constructive quotient"))

    # S/A decomposition audit
    ss_v, aa_v = bl.decompose_QQ(i, i, 1, 1, v)
    ss_w, aa_w = bl.decompose_QQ(1, 1, i, i, v)
    ck.run("hook_v_equals_SS_part", {"n": n, "k": k, "i": i}, DOCUMENTED,
           lambda: qa.is_zero_tensor(ctx, v_h - ss_v))
    ck.run("hook_w_equals_AA_part", {"n": n, "k": k, "i": i}, DOCUMENTED,
           lambda: qa.is_zero_tensor(ctx, w_h - aa_w))
    ck.run("hook_split_sums", {"n": n, "k": k, "i": i}, DOCUMENTED,
           lambda: (v_h - ss_v - aa_v).is_empty()
           and (w_h - ss_w - aa_w).is_empty())
    ck.run("hook_A_annihilates_backbone", {"n": n, "k": k, "i": i}, DOCUMENTED,
           lambda: all(
               ctx.is_zero_state(bl.apply_bilinear("A", i, 1, a, b,
                                                   _word_state(ctx, w)))
               for w, _ in list(v.terms)[:6]
               for a in range(1, n + 1) for b in range(1, n + 1) if a != b))
    return _report(cfg, ck.records)


# ---------------------------------------------------------------------------
# cache
# ---------------------------------------------------------------------------

def cmd_cache(cfg):
    ck = Checker()
    if not cfg.cache_dir:
        ck.add(CheckRecord("cache", {}, FAIL, DERIVED,
                           detail="--cache-dir is required"))
        return _report(cfg, ck.records)
    cache = DiskCache(cfg.cache_dir)
    if cfg.cache_action == "purge":
        removed = cache.purge()
        ck.add(CheckRecord("cache_purge", {"removed": removed}, PASS, DERIVED))
        return _report(cfg, ck.records)

    for name, data in cache.records():
        if data is None:
            if cfg.cache_action == "validate":
                cache.quarantine(name)
            ck.add(CheckRecord("cache_record", {"file": name},
                               FAIL, DERIVED, detail="unreadable; quarantined"
                               if cfg.cache_action == "validate" else "unreadable"))
            continue
        params = {"file": name, "n": data.get("n"), "field": data.get("field"),
                  "row_content": data.get("row_content"),
                  "eps": data.get("eps"), "blocks": len(data.get("blocks", {}))}
        if cfg.cache_action == "list":
            ck.add(CheckRecord("cache_record", params, PASS, DERIVED))
            continue
        ok = _validate_record(data)
        if not ok:
            cache.quarantine(name)
        ck.add(CheckRecord("cache_record", params, PASS if ok else FAIL,
                           DERIVED, detail=None if ok else "quarantined"))
    return _report(cfg, ck.records)


def _validate_record(data):
    try:
        if data.get("schema") != "qzm-basis/1":
            return False
        if data.get("eps") != eps_tag(resolve_eps_sign()):
            return False
        field_tag = data["field"]
        n = data["n"]
        if field_tag == "generic":
            ctx = make_context(n, generic=True)
        else:
            h = int(field_tag.split(":")[1])
            ctx = make_context(n, h - n)
        ctx.disk_cache = None
        rc = tuple(data["row_content"])
        for fc_key in sorted(data["blocks"])[:1]:
            fc = tuple(int(x) for x in fc_key.split(","))
            from .cache import _decode_block
            bb = _decode_block(ctx, (rc, fc), data["blocks"][fc_key])
            ctx._blocks[(rc, fc)] = bb
            # re-reduce a sampled instance through the cached data
            count = 0
            for inst in ctx.relation_instances(rc, fc):
                st = ChiralState(ctx.field, n, terms=inst.terms)
                words_ok = all(word_is_dead(n, ctx.h, w) or w in bb.index
                               for w in inst.terms)
                if not words_ok:
                    continue
                if not ctx.is_zero_state(st):
                    return False
                count += 1
                if count >= 5:
                    break
        return True
    except Exception:
        return False


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify-field": cmd_verify_field,
    "verify-algebra": cmd_verify_algebra,
    "fprime": cmd_fprime,
    "check-w": cmd_check_w,
    "cache": cmd_cache,
}


def _add_common(p, need_nk=True):
    if need_nk:
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--generic-q", action="store_true", dest="generic_q")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cache-dir", dest="cache_dir")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="qzm",
        description="Exact verification engine for WZNW zero-mode algebras")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)
    for name in ("enumerate", "verify-field", "verify-algebra", "fprime"):
        _add_common(sub.add_parser(name))
    p = sub.add_parser("check-w")
    _add_common(p)
    p.add_argument("--i", type=int, default=2, help="hook row index")
    p = sub.add_parser("cache")
    p.add_argument("cache_action", choices=["list", "validate", "purge"])
    _add_common(p, need_nk=False)
    return ap


def run(argv=None):
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        command=args.command,
        n=getattr(args, "n", None),
        k=getattr(args, "k", None),
        generic_q=getattr(args, "generic_q", False),
        budget=args.budget,
        samples=args.samples,
        seed=args.seed,
        cache_dir=args.cache_dir,
        format=args.format,
        out=args.out,
        i=getattr(args, "i", None),
        cache_action=getattr(args, "cache_action", None),
    )
    report = COMMANDS[args.command](cfg)
    if cfg.format == "json":
        payload = report.to_json()
    elif cfg.format == "csv":
        payload = report.to_csv()
    else:
        payload = report.to_text()
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 1 if report.documented_claim_failures() else 0


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()
