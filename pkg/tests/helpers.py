"""Independent oracles for the test suite.

Everything here is deliberately written from the definitions, without the
bitmask tables or shortcuts of the package under test: ranks by scanning
the basis list, connectivity by trying every partition, locked sets by the
bare definition, spanning trees by brute-force edge subsets.
"""

from __future__ import annotations

import itertools
from random import Random


def naive_rank(bases, subset) -> int:
    s = set(subset)
    return max(len(s & set(b)) for b in bases)


def naive_connected(n, bases) -> bool:
    if n == 1:
        return True
    r_full = naive_rank(bases, range(n))
    elems = list(range(n))
    for k in range(1, n):
        for part in itertools.combinations(elems, k):
            rest = [e for e in elems if e not in part]
            if naive_rank(bases, part) + naive_rank(bases, rest) == r_full:
                return False
    return True


def naive_dual_bases(n, bases):
    full = set(range(n))
    return [tuple(sorted(full - set(b))) for b in bases]


def naive_restriction_bases(n, bases, keep):
    """Bases of M|keep, as subsets of `keep` (original labels).  A set of size
    equal to its rank is independent."""
    keep = sorted(set(keep))
    best = naive_rank(bases, keep)
    return [c for c in itertools.combinations(keep, best)
            if naive_rank(bases, c) == best]


def naive_is_locked(n, bases, subset) -> bool:
    """Direct definition: M|L and M*|(E\\L) connected, both ranks >= 2."""
    l = set(subset)
    if not l or l == set(range(n)):
        raise ValueError("not a proper nonempty subset")
    comp = sorted(set(range(n)) - l)
    dual = naive_dual_bases(n, bases)
    if naive_rank(bases, l) < 2 or naive_rank(dual, comp) < 2:
        return False
    return (_naive_sub_connected(bases, sorted(l))
            and _naive_sub_connected(dual, comp))


def _naive_sub_connected(bases, ground) -> bool:
    if len(ground) <= 1:
        return True
    r_full = naive_rank(bases, ground)
    for k in range(1, len(ground)):
        for part in itertools.combinations(ground, k):
            rest = [e for e in ground if e not in part]
            if naive_rank(bases, part) + naive_rank(bases, rest) == r_full:
                return False
    return True


def naive_locked_sets(n, bases):
    """All locked subsets of a connected matroid, by the bare definition."""
    out = []
    for k in range(1, n):
        for comb in itertools.combinations(range(n), k):
            if naive_is_locked(n, bases, comb):
                out.append(comb)
    return out


def spanning_trees(n_vertices, edges):
    """Edge-index subsets forming spanning trees, by checking every subset."""
    out = []
    for comb in itertools.combinations(range(len(edges)), n_vertices - 1):
        seen = {}

        def find(x):
            while seen.get(x, x) != x:
                x = seen[x]
            return x

        acyclic = True
        for ei in comb:
            u, v = edges[ei]
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            seen[ru] = rv
        if acyclic and len({find(v) for v in range(n_vertices)}) == 1:
            out.append(comb)
    return out


def exhaustive_max_basis(m, weights) -> int:
    return max(sum(weights[e] for e in b) for b in m.bases)


def random_colored_dag(rng: Random, n: int, colors: int = 3):
    """Random DAG on vertices 0..n-1 with arcs respecting a random topological
    order, plus random colors."""
    order = list(range(n))
    rng.shuffle(order)
    arcs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                arcs.add((order[i], order[j]))
    cols = tuple(rng.randrange(colors) for _ in range(n))
    return sorted(arcs), cols


def permute_digraph(rng: Random, n, arcs, cols):
    perm = list(range(n))
    rng.shuffle(perm)
    new_arcs = sorted((perm[u], perm[v]) for (u, v) in arcs)
    new_cols = [0] * n
    for v in range(n):
        new_cols[perm[v]] = cols[v]
    return new_arcs, tuple(new_cols)
