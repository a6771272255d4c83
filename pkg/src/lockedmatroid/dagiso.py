"""Exact isomorphism testing and canonical forms for vertex-colored digraphs.

The canonical form is computed by iterated color refinement (in/out
neighbor color multisets) plus individualization-refinement backtracking;
the canonical labeling is the one minimizing the (color sequence, arc list)
encoding over the search tree.  Automorphisms discovered at leaves prune
branches within the same orbit, which keeps highly symmetric inputs (many
interchangeable strands) polynomial in practice.

Digests are the hex encoding of the canonical byte string itself, not a
hash: equal digests are equivalent to isomorphism by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import errors


@dataclass(frozen=True)
class ColoredDigraph:
    vertex_count: int
    arcs: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]

    def __post_init__(self):
        n = self.vertex_count
        if n < 0:
            raise errors.InvalidParams("negative vertex count")
        if len(self.colors) != n:
            raise errors.InvalidParams("need one color per vertex")
        if any(c < 0 for c in self.colors):
            raise errors.InvalidParams("colors must be nonnegative")
        for (u, v) in self.arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise errors.OutOfRange("arc endpoint out of range: %r" % ((u, v),))


@dataclass(frozen=True)
class CanonicalForm:
    """perm maps each original vertex to its canonical position."""

    perm: tuple[int, ...]
    colors: tuple[int, ...]
    arcs: tuple[tuple[int, int], ...]
    digest: str


def _dense(values) -> list[int]:
    ranking = {v: i for i, v in enumerate(sorted(set(values)))}
    return [ranking[v] for v in values]


def canonical_form(g: ColoredDigraph) -> CanonicalForm:
    n = g.vertex_count
    if n == 0:
        return CanonicalForm((), (), (), _digest(0, (), ()))
    in_adj = [[] for _ in range(n)]
    out_adj = [[] for _ in range(n)]
    for (u, v) in g.arcs:
        out_adj[u].append(v)
        in_adj[v].append(u)

    def refine(col: list[int]) -> list[int]:
        while True:
            sigs = [
                (col[v],
                 tuple(sorted(col[u] for u in in_adj[v])),
                 tuple(sorted(col[u] for u in out_adj[v])))
                for v in range(n)
            ]
            ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
            new = [ranking[s] for s in sigs]
            if new == col:
                return col
            col = new

    best_key: Optional[tuple] = None
    best_perm: Optional[list[int]] = None
    best_inv: Optional[list[int]] = None
    autos: list[list[int]] = []

    def leaf(col: list[int]) -> None:
        nonlocal best_key, best_perm, best_inv
        inv = [0] * n
        for v in range(n):
            inv[col[v]] = v
        colors_canon = tuple(g.colors[inv[p]] for p in range(n))
        arcs_canon = tuple(sorted((col[u], col[v]) for (u, v) in g.arcs))
        key = (colors_canon, arcs_canon)
        if best_key is None or key < best_key:
            best_key, best_perm, best_inv = key, list(col), inv
        elif key == best_key:
            autos.append([best_inv[col[v]] for v in range(n)])

    def target_cell(col: list[int]) -> Optional[list[int]]:
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(col[v], []).append(v)
        cand = [vs for vs in cells.values() if len(vs) > 1]
        if not cand:
            return None
        cand.sort(key=lambda vs: (len(vs), col[vs[0]]))
        return cand[0]

    def dfs(col: list[int], fixed: list[int]) -> None:
        cell = target_cell(col)
        if cell is None:
            leaf(col)
            return
        done: list[int] = []
        for v in cell:
            if done:
                gens = [a for a in autos if all(a[f] == f for f in fixed)]
                if gens:
                    parent = list(range(n))

                    def find(x):
                        while parent[x] != x:
                            parent[x] = parent[parent[x]]
                            x = parent[x]
                        return x

                    for a in gens:
                        for w in range(n):
                            rw, ra = find(w), find(a[w])
                            if rw != ra:
                                parent[rw] = ra
                    if any(find(v) == find(d) for d in done):
                        continue
            split = [c * 2 + (0 if u == v else 1) for c, u in zip(col, range(n))]
            dfs(refine(_dense(split)), fixed + [v])
            done.append(v)

    dfs(refine(_dense(list(g.colors))), [])
    assert best_perm is not None
    colors_canon, arcs_canon = best_key
    return CanonicalForm(tuple(best_perm), colors_canon, arcs_canon,
                         _digest(n, colors_canon, arcs_canon))


def _digest(n: int, colors, arcs) -> str:
    payload = "%d|%s|%s" % (
        n,
        ",".join(map(str, colors)),
        ";".join("%d-%d" % a for a in arcs),
    )
    return payload.encode("utf-8").hex()


def are_isomorphic(g1: ColoredDigraph, g2: ColoredDigraph):
    """(answer, witness): witness maps vertices of g1 to vertices of g2 and is
    verified arc-by-arc and color-by-color before being returned."""
    cf1 = canonical_form(g1)
    cf2 = canonical_form(g2)
    if cf1.digest != cf2.digest:
        return False, None
    inv2 = [0] * g2.vertex_count
    for v, p in enumerate(cf2.perm):
        inv2[p] = v
    mapping = tuple(inv2[cf1.perm[v]] for v in range(g1.vertex_count))
    assert all(g1.colors[v] == g2.colors[mapping[v]] for v in range(g1.vertex_count))
    assert sorted((mapping[u], mapping[v]) for (u, v) in g1.arcs) == sorted(g2.arcs)
    return True, mapping


def brute_force_iso(g1: ColoredDigraph, g2: ColoredDigraph, max_n: int = 12) -> bool:
    """Exhaustive backtracking over color-respecting bijections.  Cheap
    invariant mismatches (sizes, color multisets, degree profiles) answer
    False before the size cap applies; larger equal-profile inputs raise
    TooLarge."""
    n = g1.vertex_count
    if n != g2.vertex_count or len(g1.arcs) != len(g2.arcs):
        return False
    if sorted(g1.colors) != sorted(g2.colors):
        return False

    def profile(g):
        ind = [0] * g.vertex_count
        outd = [0] * g.vertex_count
        for (u, v) in g.arcs:
            outd[u] += 1
            ind[v] += 1
        return sorted(zip(g.colors, ind, outd)), ind, outd

    p1, in1, out1 = profile(g1)
    p2, in2, out2 = profile(g2)
    if p1 != p2:
        return False
    if n > max_n:
        raise errors.TooLarge("brute force capped at %d vertices" % max_n)
    if n == 0:
        return True

    adj1 = set(g1.arcs)
    adj2 = set(g2.arcs)
    if len(adj1) != len(g1.arcs) or len(adj2) != len(g2.arcs):
        raise errors.InvalidParams("brute force expects simple digraphs")
    used = [False] * n
    mapping = [-1] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or g1.colors[v] != g2.colors[w]:
                continue
            if in1[v] != in2[w] or out1[v] != out2[w]:
                continue
            ok = True
            for u in range(v):
                mu = mapping[u]
                if ((u, v) in adj1) != ((mu, w) in adj2):
                    ok = False
                    break
                if ((v, u) in adj1) != ((w, mu) in adj2):
                    ok = False
                    break
            if ok and ((v, v) in adj1) != ((w, w) in adj2):
                ok = False
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return extend(0)
