"""Bracket-homomorphism verification on finite state grids.

For sampled algebra elements x, y and every basis state v in the window,
the residual

    assign([x, y]) v  -  assign(x) assign(y) v  +  assign(y) assign(x) v

is computed exactly; the dictionaries are certified when every residual
vanishes identically.  The suite batches this over all field-type pairs
of the target with deterministic windows, tags each pair class, and
reports per-class counts.  Deliberately broken parameter sets are
expected to produce nonzero residuals; ``negative_controls`` asserts
that the detector actually fires on them.
"""

from ..scalars import Q
from ..lincomb import lc_iadd, lc_sub
from ..voa.hvir import HVirSpace
from ..voa.kernel import ModeOp
from .config import RepConfig
from .dictionary import assign_element, dhat_op

# class tags for the five derivation-row relation families
CLASS_ALIASES = {
    "d0.k0": "4.1", "d0.ka": "4.2", "d0.g": "4.3", "d0.da": "4.4",
    "d0.d0": "4.5",
}

FAMILY_ORDER = ["k0", "ka", "g", "da", "da0", "d0", "d0z", "dhat"]


def target_families(target):
    if target == "full":
        return ["k0", "ka", "g", "da", "d0"]
    if target == "gstar":
        return ["k0", "ka", "g", "da"]
    if target == "gdiv":
        return ["k0", "ka", "g", "da0", "d0z", "dhat"]
    return ["k0", "ka", "da0", "d0z", "dhat"]


def class_tag(fx, fy):
    base = {"da0": "da", "d0z": "d0", "dhat": "dhat"}
    ax = base.get(fx, fx)
    ay = base.get(fy, fy)
    order = ["d0", "dhat", "da", "g", "ka", "k0"]
    ax, ay = sorted((ax, ay), key=order.index)
    return "%s.%s" % (ax, ay)


def family_elements(ctx, family, mode_window=None, charge_window=None):
    """Deterministic (label, element) list for one symbol family."""
    cfg = ctx.cfg
    J = cfg.mode_window if mode_window is None else mode_window
    charges = ctx.charges(charge_window)
    N = cfg.N
    lie = ctx.lie
    out = []
    js = range(-J, J + 1)
    arange = ctx.active_range()
    if family == "k0":
        for j in js:
            for r in charges:
                out.append(("k0[%d,%s]" % (j, list(r)), lie.kform((j,) + r, 0)))
    elif family == "ka":
        for a in arange:
            for j in js:
                for r in charges:
                    out.append(("k%d[%d,%s]" % (a, j, list(r)),
                                lie.kform((j,) + r, a)))
    elif family == "g":
        for i in range(lie.alg.dim):
            for j in js:
                for r in charges:
                    out.append(("g:%s[%d,%s]" % (lie.alg.names[i], j, list(r)),
                                lie.current((j,) + r, i)))
    elif family == "da":
        for a in arange:
            for j in js:
                for r in charges:
                    out.append(("d%d[%d,%s]" % (a, j, list(r)),
                                lie.dfield((j,) + r, a)))
    elif family == "da0":
        for a in arange:
            for j in js:
                for r in charges:
                    if r[a - 1] == 0:
                        out.append(("d%d[%d,%s]" % (a, j, list(r)),
                                    lie.dfield((j,) + r, a)))
    elif family == "d0":
        for j in js:
            for r in charges:
                out.append(("d0[%d,%s]" % (j, list(r)),
                            lie.dfield((j,) + r, 0)))
    elif family == "d0z":
        for r in charges:
            out.append(("d0[0,%s]" % (list(r),), lie.dfield((0,) + r, 0)))
    elif family == "dhat":
        c = ctx.cfg.c if ctx.cfg.target != "exceptional" else 1
        for a in arange:
            for j in js:
                for r in charges:
                    el = lie.dhat_element(j, r, a, c)
                    if el:
                        out.append(("dhat%d[%d,%s]" % (a, j, list(r)), el))
    else:
        raise ValueError("unknown family %r" % (family,))
    return out


def verify_bracket(ctx, x, y, state_mids, collect=10):
    """Residual report for one pair: (evaluations, failures)."""
    opx = assign_element(ctx, x)
    opy = assign_element(ctx, y)
    z = ctx.lie.bracket(x, y)
    opz = assign_element(ctx, z)
    failures = []
    for v in state_mids:
        st = {v: Q(1)}
        res = opz.apply(st)
        lc_iadd(res, opx.apply(opy.apply(st)), -1)
        lc_iadd(res, opy.apply(opx.apply(st)))
        if res:
            if len(failures) < collect:
                failures.append({
                    "state": ctx.space.mon_str(ctx.space.mon(v)),
                    "residual_terms": len(res),
                    "residual": ctx.space.state_str(res)[:200],
                })
            else:
                failures.append({"state": "...", "residual_terms": len(res)})
    return len(state_mids), failures


PRIMARY_FAMILIES = {"d0", "d0z", "dhat"}


def _pair_indices(nx, ny, same, budget):
    """Deterministic strided subsample of the pair grid (0 = everything)."""
    all_pairs = []
    for i in range(nx):
        start = i + 1 if same else 0
        for j in range(start, ny):
            all_pairs.append((i, j))
    if not budget or budget >= len(all_pairs):
        return all_pairs
    total = len(all_pairs)
    picked = sorted({(k * (total - 1)) // (budget - 1) if budget > 1 else 0
                     for k in range(budget)})
    return [all_pairs[i] for i in picked]


def class_jobs(ctx, class_pairs=None):
    """Expand the target's class grid into (tag, windows, x, y) jobs.

    Classes touching the derivation-row families run at the configured
    primary windows; the remaining base classes may run at the reduced
    `base_mode_window` / `base_max_degree` (same windows when unset).
    The pair budget thins each class deterministically.
    """
    cfg = ctx.cfg
    families = target_families(cfg.target)
    if class_pairs is None:
        class_pairs = [(fx, fy) for i, fx in enumerate(families)
                       for fy in families[i:]]
    jobs = []
    for fx, fy in class_pairs:
        primary = (cfg.target == "gstar" or fx in PRIMARY_FAMILIES
                   or fy in PRIMARY_FAMILIES)
        if primary:
            jwin, sdeg = cfg.mode_window, cfg.max_degree
        else:
            jwin = cfg.base_mode_window or cfg.mode_window
            sdeg = cfg.base_max_degree or cfg.max_degree
        ex_list = family_elements(ctx, fx, mode_window=jwin)
        ey_list = family_elements(ctx, fy, mode_window=jwin)
        pairs = _pair_indices(len(ex_list), len(ey_list), fx == fy,
                              cfg.pairs_per_class)
        tag = class_tag(fx, fy)
        for i, j in pairs:
            jobs.append((tag, sdeg, ex_list[i], ey_list[j]))
    return jobs


def run_jobs(ctx, jobs, collect=10, progress=None):
    """Evaluate verification jobs serially; returns class entries."""
    classes = {}
    state_cache = {}
    for idx, (tag, sdeg, (lx, ex), (ly, ey)) in enumerate(jobs):
        states = state_cache.get(sdeg)
        if states is None:
            states = state_cache[sdeg] = ctx.states(max_degree=sdeg)
        entry = classes.setdefault(tag, {
            "alias": CLASS_ALIASES.get(tag), "pairs": 0, "state_evals": 0,
            "failures": [], "failed_pairs": 0,
        })
        evals, fails = verify_bracket(ctx, ex, ey, states, collect)
        entry["pairs"] += 1
        entry["state_evals"] += evals
        if fails:
            entry["failed_pairs"] += 1
            for f in fails:
                if len(entry["failures"]) < collect:
                    f = dict(f)
                    f["pair"] = "[%s, %s]" % (lx, ly)
                    entry["failures"].append(f)
                else:
                    entry["failure_overflow"] = True
        if progress:
            progress(idx + 1, len(jobs))
    return classes


def verify_suite(ctx, class_pairs=None, states=None, collect=10,
                 progress=None, workers=1):
    """Run the pair grid; returns a report dict."""
    if states is not None:
        # explicit state list: run everything against it directly
        classes = {}
        families = target_families(ctx.cfg.target)
        if class_pairs is None:
            class_pairs = [(fx, fy) for i, fx in enumerate(families)
                           for fy in families[i:]]
        jobs = []
        for fx, fy in class_pairs:
            ex_list = family_elements(ctx, fx)
            ey_list = family_elements(ctx, fy)
            pairs = _pair_indices(len(ex_list), len(ey_list), fx == fy,
                                  ctx.cfg.pairs_per_class)
            tag = class_tag(fx, fy)
            for i, j in pairs:
                jobs.append((tag, None, ex_list[i], ey_list[j]))
        for tag, _, (lx, ex), (ly, ey) in jobs:
            entry = classes.setdefault(tag, {
                "alias": CLASS_ALIASES.get(tag), "pairs": 0,
                "state_evals": 0, "failures": [], "failed_pairs": 0,
            })
            evals, fails = verify_bracket(ctx, ex, ey, states, collect)
            entry["pairs"] += 1
            entry["state_evals"] += evals
            if fails:
                entry["failed_pairs"] += 1
                for f in fails:
                    if len(entry["failures"]) < collect:
                        f = dict(f)
                        f["pair"] = "[%s, %s]" % (lx, ly)
                        entry["failures"].append(f)
        ok = all(not e["failures"] for e in classes.values())
        return {"classes": classes, "pass": ok, "states": len(states),
                "families": target_families(ctx.cfg.target)}
    jobs = class_jobs(ctx, class_pairs)
    if workers > 1:
        classes = _run_jobs_parallel(ctx, jobs, collect, workers, progress)
    else:
        classes = run_jobs(ctx, jobs, collect, progress)
    ok = all(not e["failures"] for e in classes.values())
    return {"classes": classes, "pass": ok,
            "states": {d: len(ctx.states(max_degree=d))
                       for d in sorted({j[1] for j in jobs})},
            "families": target_families(ctx.cfg.target)}


def _run_jobs_parallel(ctx, jobs, collect, workers, progress=None):
    """Fork a worker pool over job chunks and merge deterministically."""
    import multiprocessing as mp
    chunks = [jobs[i::workers] for i in range(workers)]
    with mp.get_context("fork").Pool(workers) as pool:
        results = pool.starmap(_worker_entry,
                               [(ctx, chunk, collect) for chunk in chunks])
    merged = {}
    for classes in results:
        for tag, entry in classes.items():
            dst = merged.setdefault(tag, {
                "alias": entry["alias"], "pairs": 0, "state_evals": 0,
                "failures": [], "failed_pairs": 0,
            })
            dst["pairs"] += entry["pairs"]
            dst["state_evals"] += entry["state_evals"]
            dst["failed_pairs"] += entry["failed_pairs"]
            dst["failures"].extend(entry["failures"])
    for entry in merged.values():
        entry["failures"] = sorted(entry["failures"],
                                   key=lambda f: repr(f))[:collect]
    return merged


def _worker_entry(ctx, jobs, collect):
    return run_jobs(ctx, jobs, collect)


# -- grading / covariance properties ----------------------------------------------


def charge_covariance_report(ctx, samples=None):
    """Every symbol's operator shifts the lattice charge by its exponent."""
    fails = []
    cases = 0
    for fam in target_families(ctx.cfg.target):
        for label, el in family_elements(ctx, fam, mode_window=1):
            op = assign_element(ctx, el)
            exps = {e[1:] for (kind, e, p) in el}
            if len(exps) != 1:
                continue
            (r,) = exps
            for v in ctx.states(max_degree=1)[:8]:
                out = op.apply({v: Q(1)})
                want = tuple(x + y for x, y in zip(ctx.space.charge(v), r))
                cases += 1
                if any(ctx.space.charge(m) != want for m in out):
                    fails.append(label)
    return cases, fails


# -- embedded Virasoro check --------------------------------------------------------


def rho_embedding_check(gamma, c_L, c_LI, h=0, h_I=0, mode_window=3,
                        max_degree=4):
    """Virasoro-in-HVir embedding: brackets and shifted central charge.

    rho(Lbar(n)) = L(n) + gamma n I(n) + d(n,0) gamma c_LI, acting on the
    Verma module M(h, h_I, c_L, c_LI, 0); the bracket must close with
    central charge c_L + 24 gamma c_LI.
    """
    gamma, c_L, c_LI = Q(gamma), Q(c_L), Q(c_LI)
    sp = HVirSpace(c_L, c_LI, 0, mode="verma", h=h, h_I=h_I)
    basis = [sp.mid(m) for m in sp.basis_monomials(max_degree)]
    cbar = c_L + 24 * gamma * c_LI

    def rho(n):
        op = ModeOp.gen(sp, "L", n)
        if gamma and n:
            op = op + ModeOp.gen(sp, "I", n, gamma * n)
        if n == 0 and gamma * c_LI:
            op = op + ModeOp.ident(sp, gamma * c_LI)
        return op

    cases = 0
    failures = []
    for n in range(-mode_window, mode_window + 1):
        rn = rho(n)
        for m in range(-mode_window, mode_window + 1):
            rm = rho(m)
            rnm = rho(n + m)
            central = Q(0)
            if n == -m:
                central = Q(n ** 3 - n, 12) * cbar
            for v in basis:
                st = {v: Q(1)}
                lhs = lc_sub(rn.apply(rm.apply(st)), rm.apply(rn.apply(st)))
                want = {}
                lc_iadd(want, rnm.apply(st), Q(n - m))
                lc_iadd(want, st, central)
                cases += 1
                if lhs != want:
                    failures.append("n=%d m=%d %s" % (n, m,
                                                      sp.mon_str(sp.mon(v))))
    return {"cases": cases, "failures": failures[:20],
            "failure_count": len(failures),
            "central_charge": str(cbar), "pass": not failures}


# -- negative controls ----------------------------------------------------------------


def negative_controls(base_cfg, states_degree=2):
    """Break one constraint at a time; the detector must fire on each."""
    import dataclasses
    variants = []
    if base_cfg.target == "full":
        variants.append(("c_LI != N/2",
                         dataclasses.replace(base_cfg,
                                             c_LI=Q(base_cfg.N, 2) + 1)))
        variants.append(("rank sum != 12",
                         dataclasses.replace(base_cfg,
                                             c_L=Q(base_cfg.c_L) - 1)))
    elif base_cfg.target == "gdiv":
        variants.append(("rank sum != 24",
                         dataclasses.replace(base_cfg,
                                             cbar_L=Q(base_cfg.cbar_L) - 1)))
    out = {}
    for name, cfg in variants:
        ctx = cfg.build(enforce=False)
        assert cfg.validate(), "negative control %r is not actually broken" % name
        states = ctx.states(max_degree=states_degree)
        if cfg.target == "full":
            pairs = [("d0", "da"), ("d0", "d0")]
        else:
            pairs = [("dhat", "dhat"), ("dhat", "da0")]
        report = verify_suite(ctx, class_pairs=pairs, states=states)
        fired = not report["pass"]
        out[name] = {"fired": fired, "violations": cfg.validate()}
    out["pass"] = all(v["fired"] for k, v in out.items() if k != "pass")
    return out
