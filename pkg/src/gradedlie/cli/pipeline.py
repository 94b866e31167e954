"""Run a job: a dependency-ordered list of analysis sections.

Each section returns a plain dict of strings, ints, bools and lists so that
the report can be rendered as text or JSON without further conversion. A
failing section is recorded and its dependents are skipped; independent
sections still run.
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor

from ..exactnum import format_scalar
from .jobs import ANALYSES, DEPENDS, JobSpec

SCHEMA = "gradedlie-report/1"


def fmt_scalar(c) -> str:
    s = format_scalar(c)
    return f"({s})" if " " in s else s


def fmt_element(labels, x) -> str:
    terms = []
    for lab, c in zip(labels, x):
        if not c:
            continue
        if c == 1:
            terms.append(lab)
        elif c == -1:
            terms.append("-" + lab)
        else:
            terms.append(f"{fmt_scalar(c)}*{lab}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def fmt_coords(c) -> list:
    return [fmt_scalar(a) for a in c]


def fmt_matrix(M) -> list:
    return [fmt_coords(r) for r in M.data]


# ----------------------------------------------------------------------------
# sections
# ----------------------------------------------------------------------------
def _grade(ctx, job):
    from ..grading import grade_from_kac

    G = grade_from_kac(job.kac_spec)
    ctx["G"] = G
    g = G.algebra
    return {"algebra": g.name, "dim": g.dim, "m": G.m, "dims": G.dims(),
            "closure_ok": G.check_closure() is not False,
            "components": [[fmt_element(g.labels, v) for v in G.component(i).basis]
                           for i in range(G.m)]}


def _cartan(ctx, job):
    from ..cartan import (algebraic_closure, cartan_subspace, closure_support_ok,
                          graded_support, maximal_rank_report)

    G = ctx["G"]
    H = cartan_subspace(G, seed=job.seed)
    hs = list(H.basis)
    ctx["hs"] = hs
    cl = algebraic_closure(G, hs)
    mr = maximal_rank_report(G, hs)
    return {"rank": H.rank, "basis": [fmt_element(G.algebra.labels, v) for v in hs],
            "certificate": H.certificate.get("reason"),
            "nilpotency": H.certificate.get("nilpotency"),
            "closure_dim": cl.dim, "closure_support": sorted(graded_support(G, cl)),
            "closure_support_coprime": closure_support_ok(G, cl),
            "maximal_rank": mr["centralizer"], "maximal_rank_closure": mr["closure"]}


def _weights(ctx, job):
    from ..weights import hyperplane_arrangement, weight_system

    S = weight_system(ctx["G"], ctx["hs"])
    ctx["weights"] = S
    return {"count": len(S.nonzero()), "zero_dim": S.zero_space().dim,
            "weights": [{"functional": fmt_coords(w.functional), "multiplicity": w.multiplicity}
                        for w in S.weights],
            "hyperplanes": len(hyperplane_arrangement(S))}


def _weyl(ctx, job):
    from ..weyl import little_weyl_maximal_rank

    W = little_weyl_maximal_rank(ctx["G"], ctx["hs"], cap=job.cap, weights=ctx["weights"])
    ctx["W"] = W
    return {"order": W.order, "ambient_order": getattr(W, "big_order", None),
            "reflections": len(W.reflections()), "reflection_group": W.is_reflection_group(),
            "generated_by_reflections_validated": True}


def _strata(ctx, job):
    from ..weyl import check_conjugation_equivalence, circ_equals_reg, strata

    G, hs, W = ctx["G"], ctx["hs"], ctx["W"]
    sts = strata(W, hs, G, weights=ctx["weights"])
    ctx["strata"] = sts
    rows = []
    for st in sts:
        ok, _ = circ_equals_reg(G, hs, W, st, weights=ctx["weights"])
        rows.append({"index": st.index, "dim": st.dim, "stabilizer_order": st.stabilizer.order,
                     "orbit_size": len(st.orbit), "representative": fmt_coords(st.representative),
                     "point": fmt_element(G.algebra.labels, st.point),
                     "circ_equals_reg": ok})
    return {"count": len(sts), "conjugation_equivalence": check_conjugation_equivalence(W, sts),
            "strata": rows}


def _families(ctx, job):
    from ..weyl import same_W_family, same_gC_family

    G, hs, W, sts = ctx["G"], ctx["hs"], ctx["W"], ctx["strata"]
    reps = [st.representative for st in sts]
    wfam, gfam = [], []
    for p in reps:
        wfam.append([same_W_family(W, p, q) for q in reps])
        gfam.append([_tri(same_gC_family(G, hs, W, p, q)) for q in reps])
    return {"same_W_family": wfam, "same_gC_family": gfam}


def _tri(v):
    return v if isinstance(v, bool) else str(v)


def _central(ctx, job):
    from ..weyl import HypothesisError, hypothesis_tag, verify_central, weyl_of_centralizer
    from ..weyl.strata import stabilizer

    G, hs, W, sts = ctx["G"], ctx["hs"], ctx["W"], ctx["strata"]
    tag = hypothesis_tag(G, hs)
    out = {"hypothesis": tag}
    try:
        rep = verify_central(G, hs, W, sts, pairs=10, seed=job.seed)
        out["pass"] = rep["pass"]
        out["pairs"] = [s["pairs"] for s in rep["strata"]]
    except HypothesisError:
        out["pass"] = "unknown"
    points = [tuple(0 for _ in hs)]
    for st in sts:
        if st.representative not in points:
            points.append(st.representative)
    checks = []
    for p in points:
        _, equal = weyl_of_centralizer(G, hs, W, p)
        checks.append({"point": fmt_coords(p), "stabilizer_order": stabilizer(W, p).order,
                       "equal": equal})
    out["weyl_of_centralizer"] = checks
    return out


def _h1(ctx, job):
    from ..galois import gamma_action_on_weyl, h1, split_real_structure

    G, hs, W = ctx["G"], ctx["hs"], ctx["W"]
    R = split_real_structure(G)
    A = gamma_action_on_weyl(W, R, hs)
    ctx["gamma_W"] = A
    H = h1(A, cap=job.cap)
    twisted = sum(1 for a in range(A.n) if A.twist[a] != a)
    return {"real_structure": "split", "order": A.n, "twist_nontrivial": twisted > 0,
            "cocycles": len(H.class_map), "classes": len(H),
            "class_sizes": [len(c) for c in H.classes]}


def _real_orbits(ctx, job):
    from ..galois import CONJUGACY_ASSUMPTION, real_orbit_count

    A, W, sts = ctx["gamma_W"], ctx["W"], ctx["strata"]
    rows = []
    for st in sts:
        members = [W.index[w] for w in st.stabilizer.elements]
        Aq = A.subgroup(members)
        rows.append({"stratum": st.index, "stabilizer_order": Aq.n,
                     "count": real_orbit_count(A, Aq, cap=job.cap)})
    return {"assumption": CONJUGACY_ASSUMPTION, "orbits": rows}


SECTIONS = {"grade": _grade, "cartan": _cartan, "weights": _weights, "weyl": _weyl,
            "strata": _strata, "families": _families, "central": _central, "h1": _h1,
            "real-orbits": _real_orbits}


def _levels(analyses):
    level = {}
    for a in ANALYSES:
        if a in analyses:
            level[a] = 1 + max((level[d] for d in DEPENDS[a] if d in level), default=-1)
    out = {}
    for a, k in level.items():
        out.setdefault(k, []).append(a)
    return [out[k] for k in sorted(out)]


def _run_section(name, ctx, job, results, timing):
    failed = [d for d in DEPENDS[name] if results.get(d, {}).get("status") != "ok"]
    if failed:
        return name, {"status": "skipped", "reason": f"dependency failed: {failed[0]}"}
    t0 = time.perf_counter()
    try:
        body = SECTIONS[name](ctx, job)
        body = {"status": "ok", **body}
    except Exception as exc:  # recorded per section; the job continues
        body = {"status": "error", "error": f"{type(exc).__name__}: {exc}"}
    timing[name] = round(time.perf_counter() - t0, 4)
    return name, body


def run(job: JobSpec, parallel: int = 1) -> dict:
    """Execute the pipeline; returns {'schema', 'job', 'sections', 'ok', 'timing'}."""
    ctx, results, timing = {}, {}, {}
    for wave in _levels(job.analyses):
        if parallel > 1 and len(wave) > 1:
            with ThreadPoolExecutor(max_workers=parallel) as ex:
                futs = [ex.submit(_run_section, a, ctx, job, results, timing) for a in wave]
                done = [f.result() for f in futs]
        else:
            done = [_run_section(a, ctx, job, results, timing) for a in wave]
        for name, body in done:
            results[name] = body
    sections = {a: results[a] for a in ANALYSES if a in results}
    ok = all(sections[a]["status"] == "ok" for a in job.analyses)
    timing = {a: timing[a] for a in ANALYSES if a in timing}
    return {"schema": SCHEMA, "job": job.as_dict(), "ok": ok, "sections": sections,
            "timing": timing}


def report_body(report: dict) -> dict:
    return {k: v for k, v in report.items() if k != "timing"}
