"""H^1 of the little Weyl group of the Z/3-grading of e8 with g_1 = wedge^3 C^9.

    python scripts/e8_stretch.py                       # default cap 200000
    python scripts/e8_stretch.py --cap 1000            # stops at the cap
    python scripts/e8_stretch.py --basis-cache h.json  # reuse a Cartan subspace

Steps: grading from Kac coordinates (0,0,1,0,0,0,0,0,0); a Cartan subspace
spanned by four sums of root vectors (each a cyclic element of an sl3: three
degree-1 roots adding up to zero), certified by the exact criterion; weights;
the little Weyl group generated by the hyperplane stabilizers; H^1 with the
split real structure, where W acts by permutations of its weights. Every
group is enumerated under the cap. ``--search`` uses the generic Cartan
search instead of the root-vector construction (much slower on e8).
"""
import argparse
import json
import os
import sys
import time

from gmpy2 import mpq

from gradedlie.cartan import cartan_subspace, is_cartan_subspace
from gradedlie.exactnum import Cyclo, ExactMatrix
from gradedlie.galois import gamma_action_by_permutations, h1, split_real_structure
from gradedlie.grading import KacSpec, grade_from_kac
from gradedlie.weights import hyperplane_arrangement, weight_system
from gradedlie.weyl import DEFAULT_CAP, GroupOrderExceeded, hyperplane_reflections
from gradedlie.weyl.little import reflection_hyperplane

KAC = (0, 0, 1, 0, 0, 0, 0, 0, 0)


def _dump(x):
    return [str(c) for c in x.c] if isinstance(x, Cyclo) else [str(x)]


def _load(cs, order):
    return mpq(cs[0]) if len(cs) == 1 else Cyclo(order, [mpq(c) for c in cs])


def save_basis(path, hs, order):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"order": order, "basis": [[_dump(x) for x in v] for v in hs]}, fh)


def load_basis(path):
    with open(path, encoding="utf-8") as fh:
        d = json.load(fh)
    return [tuple(_load(cs, d["order"]) for cs in v) for v in d["basis"]]


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def root_vector_cartan_basis(G, rank):
    """Sums e_a + e_b + e_c over degree-1 roots with a + b + c = 0.

    Each sum is a cyclic element of the sl3 spanned by the three root spaces,
    hence semisimple. Sums from different triples commute when no root of one
    triple plus a root of the other is a root. Returns ``rank`` such sums or
    None.
    """
    g = G.algebra
    index = g.root_index
    deg1 = sorted((r for r, i in index.items() if G.is_homogeneous(g.basis_vector(i), 1)),
                  key=index.get)
    d1 = set(deg1)
    order = {r: k for k, r in enumerate(deg1)}
    triples = []
    for i, a in enumerate(deg1):
        for b in deg1[i + 1:]:
            c = tuple(-x for x in _add(a, b))
            if c in d1 and order[c] > order[b]:
                triples.append((a, b, c))

    def compatible(T, U):
        return all(_add(a, b) not in index for a in T for b in U)

    def extend(chosen, start):
        if len(chosen) == rank:
            return chosen
        for k in range(start, len(triples)):
            T = triples[k]
            if all(compatible(T, U) for U in chosen):
                out = extend(chosen + [T], k + 1)
                if out:
                    return out
        return None

    found = extend([], 0)
    if found is None:
        return None
    n = g.dim
    return [tuple(mpq(1) if i in {index[r] for r in T} else mpq(0) for i in range(n))
            for T in found]


def run_e8_stretch(cap=DEFAULT_CAP, basis_cache=None, log=print, seed=0, search=False):
    """Returns a dict with dims, rank, |W|, number of cocycles and |H^1|."""
    out = {"kac": KAC}
    t0 = time.perf_counter()

    def step(msg):
        log(f"[{time.perf_counter() - t0:8.1f}s] {msg}")

    G = grade_from_kac(KacSpec("E8", KAC))
    out["dims"] = G.dims()
    step(f"grading m={G.m} dims={out['dims']}")
    if basis_cache and os.path.exists(basis_cache):
        hs = load_basis(basis_cache)
        ok, cert = is_cartan_subspace(G, hs, seed=seed)
        if not ok:
            raise ValueError(f"cached basis is not a Cartan subspace ({cert['reason']})")
        step("Cartan subspace loaded and re-certified")
    elif search:
        hs = list(cartan_subspace(G, seed=seed).basis)
        step("Cartan subspace found by search")
    else:
        hs = root_vector_cartan_basis(G, 4)
        ok, cert = is_cartan_subspace(G, hs, seed=seed)
        if not ok:
            raise ValueError(f"root-vector basis is not a Cartan subspace ({cert['reason']})")
        step("Cartan subspace from root vectors, certified")
    if basis_cache and not os.path.exists(basis_cache):
        save_basis(basis_cache, hs, G.m)
    out["rank"] = len(hs)
    S = weight_system(G, hs)
    points = [w.functional for w in S.nonzero()]
    step(f"rank {len(hs)}, {len(points)} nonzero weights")
    refl = hyperplane_reflections(G, hs)
    hyper = set(hyperplane_arrangement(S))
    ident = ExactMatrix.identity(len(hs))
    if not all((w - ident).rank() == 1 and reflection_hyperplane(w) in hyper for w in refl):
        raise ValueError("a stabilizer element is not a reflection in a weight hyperplane")
    step(f"{len(refl)} reflections from {len(hyper)} weight hyperplanes")
    A = gamma_action_by_permutations(refl, points, split_real_structure(G), hs, cap=cap,
                                     reduce_generators=True)
    out["order"] = A.n
    step(f"|W| = {A.n} from {len(A.generators)} generators")
    H = h1(A, cap=cap)
    out["cocycles"] = len(H.class_map)
    out["h1"] = len(H)
    step(f"{out['cocycles']} cocycles, |H^1| = {out['h1']}")
    out["seconds"] = round(time.perf_counter() - t0, 1)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP, help="group-order cap")
    ap.add_argument("--basis-cache", default=None, help="JSON file for the Cartan subspace")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--search", action="store_true", help="generic Cartan-subspace search")
    args = ap.parse_args()
    try:
        res = run_e8_stretch(args.cap, args.basis_cache, seed=args.seed, search=args.search)
    except GroupOrderExceeded as exc:
        print(f"stopped: {exc} (raise --cap to continue)", file=sys.stderr)
        return 1
    print(json.dumps(res))
    return 0


if __name__ == "__main__":
    sys.exit(main())
