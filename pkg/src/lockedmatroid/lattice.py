"""Locked lattices as vertex-labeled DAGs.

The augmented lattice has one vertex per coparallel closure, parallel
closure and locked subset between a root (the empty set) and a sink (the
whole ground set); every vertex is labeled with (cardinality, rank).  The
reduced lattice has the same shape with single-number labels: closures keep
their cardinality, locked vertices keep their rank, the root is 0 and the
sink is the matroid rank.  Locked-set cardinalities dropped by the reduced
labeling are recoverable as a maximum flow from the root, with capacity 1
on the coparallel-to-parallel arcs and no bound elsewhere.

The series encoding replaces each vertex of a reduced lattice with a chain
of as many arcs as its label, giving an unlabeled digraph that can be fed
to a plain graph-isomorphism routine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from . import errors
from ._bits import mask_of
from .locked import LockedStructure
from .dagiso import ColoredDigraph

LEVELS = ("root", "coparallel", "parallel", "locked", "sink")

_INF = 1 << 30
_COLOR_BASE = 1 << 20  # labels are bounded by |E| << 2**20


@dataclass(frozen=True)
class LabeledDag:
    vertex_count: int
    arcs: tuple[tuple[int, int], ...]
    labels: tuple[tuple[int, ...], ...]
    levels: tuple[str, ...]
    provenance: tuple[Optional[tuple[int, ...]], ...]


@dataclass(frozen=True)
class CapacitatedDag:
    dag: LabeledDag
    capacities: tuple[Optional[int], ...]  # aligned with dag.arcs; None = unbounded


def _shape(s: LockedStructure):
    """Vertices and arcs shared by the augmented and reduced lattices."""
    full = tuple(range(s.ground_size))
    provenance: list[tuple[int, ...]] = [()]
    levels: list[str] = ["root"]
    for x in s.coparallel:
        provenance.append(x)
        levels.append("coparallel")
    for x in s.parallel:
        provenance.append(x)
        levels.append("parallel")
    for x in s.locked:
        provenance.append(x)
        levels.append("locked")
    provenance.append(full)
    levels.append("sink")

    root = 0
    co0 = 1
    pa0 = co0 + len(s.coparallel)
    lo0 = pa0 + len(s.parallel)
    sink = lo0 + len(s.locked)

    co_masks = [mask_of(x) for x in s.coparallel]
    pa_masks = [mask_of(x) for x in s.parallel]
    lo_masks = [mask_of(x) for x in s.locked]

    arcs: list[tuple[int, int]] = []
    for i in range(len(co_masks)):
        arcs.append((root, co0 + i))
    for i, cm in enumerate(co_masks):
        for j, pm in enumerate(pa_masks):
            if cm & pm:
                arcs.append((co0 + i, pa0 + j))
    for j, pm in enumerate(pa_masks):
        inside_some = False
        for k, lm in enumerate(lo_masks):
            if pm & ~lm == 0:
                arcs.append((pa0 + j, lo0 + k))
                inside_some = True
        if not inside_some:
            arcs.append((pa0 + j, sink))
    for a, la in enumerate(lo_masks):
        for b, lb in enumerate(lo_masks):
            if a == b or la & ~lb:
                continue
            # la strictly inside lb: keep only cover pairs
            if any(c not in (a, b) and la & ~lo_masks[c] == 0 and lo_masks[c] & ~lb == 0
                   for c in range(len(lo_masks))):
                continue
            arcs.append((lo0 + a, lo0 + b))
    for a, la in enumerate(lo_masks):
        if not any(a != b and la & ~lb == 0 for b, lb in enumerate(lo_masks)):
            arcs.append((lo0 + a, sink))
    arcs.sort()
    return tuple(provenance), tuple(levels), tuple(arcs)


def augmented_lattice(s: LockedStructure) -> LabeledDag:
    """Every vertex labeled (cardinality, rank); root (0,0), sink (|E|, r(E))."""
    provenance, levels, arcs = _shape(s)
    labels = tuple((len(x), s.rho[x]) for x in provenance)
    return LabeledDag(len(provenance), arcs, labels, levels, provenance)


def reduced_lattice(s: LockedStructure) -> LabeledDag:
    """Single-number labels: closures keep their cardinality, locked vertices
    their rank; root 0, sink r(E)."""
    provenance, levels, arcs = _shape(s)
    labels = []
    for x, lv in zip(provenance, levels):
        if lv in ("coparallel", "parallel"):
            labels.append((len(x),))
        else:  # root 0, locked rho, sink r(E)
            labels.append((s.rho[x],))
    return LabeledDag(len(provenance), arcs, tuple(labels), levels, provenance)


def to_capacitated(d: LabeledDag) -> CapacitatedDag:
    caps = tuple(
        1 if d.levels[u] == "coparallel" and d.levels[v] == "parallel" else None
        for (u, v) in d.arcs
    )
    return CapacitatedDag(d, caps)


def recover_cardinality(d: LabeledDag, locked_vertex: int) -> int:
    """Maximum root-to-vertex flow in the unit/unbounded capacitated lattice;
    equals the cardinality of the represented locked subset."""
    if not (0 <= locked_vertex < d.vertex_count) or d.levels[locked_vertex] != "locked":
        raise errors.NotLockedVertex("vertex %r is not a locked-level vertex" % locked_vertex)
    if any(len(lab) != 1 for lab in d.labels):
        raise errors.LabelArityMismatch("cardinality recovery expects a reduced lattice")
    cap = to_capacitated(d)
    residual: dict[int, dict[int, int]] = {v: {} for v in range(d.vertex_count)}
    for (u, v), c in zip(d.arcs, cap.capacities):
        residual[u][v] = residual[u].get(v, 0) + (_INF if c is None else c)
        residual[v].setdefault(u, 0)
    source, target = 0, locked_vertex
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and target not in parent:
            x = queue.popleft()
            for y, c in residual[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if target not in parent:
            return flow
        path_flow = _INF
        y = target
        while y != source:
            x = parent[y]
            path_flow = min(path_flow, residual[x][y])
            y = x
        y = target
        while y != source:
            x = parent[y]
            residual[x][y] -= path_flow
            residual[y][x] += path_flow
            y = x
        flow += path_flow


def series_encode(d: LabeledDag) -> ColoredDigraph:
    """Replace each vertex of label m by a chain of m arcs (m+1 vertices);
    incoming arcs attach to the chain head, outgoing arcs leave its tail.
    The result carries no labels (all colors zero)."""
    heads = []
    tails = []
    total = 0
    chain_arcs: list[tuple[int, int]] = []
    for lab in d.labels:
        if len(lab) != 1:
            raise errors.LabelArityMismatch("series encoding expects single-number labels")
        m = lab[0]
        heads.append(total)
        for i in range(m):
            chain_arcs.append((total + i, total + i + 1))
        total += m + 1
        tails.append(total - 1)
    arcs = chain_arcs + [(tails[u], heads[v]) for (u, v) in d.arcs]
    arcs.sort()
    return ColoredDigraph(total, tuple(arcs), (0,) * total)


def to_colored(d: LabeledDag) -> ColoredDigraph:
    """Encode (level, label tuple) injectively into one integer color per
    vertex, so isomorphism testing respects levels even when labels agree."""
    colors = []
    for lab, lv in zip(d.labels, d.levels):
        c = LEVELS.index(lv)
        for part in lab:
            c = c * _COLOR_BASE + part
        if len(lab) == 2:
            c += _COLOR_BASE ** 3  # keep arity-2 colors disjoint from arity-1
        colors.append(c)
    return ColoredDigraph(d.vertex_count, d.arcs, tuple(colors))


def dot_text(d: LabeledDag) -> str:
    """Deterministic DOT export; labels are "(c,r)" or "m"."""
    lines = ["digraph locked_lattice {"]
    for v in range(d.vertex_count):
        lab = d.labels[v]
        text = "(%d,%d)" % lab if len(lab) == 2 else "%d" % lab
        lines.append('  v%d [label="%s"];' % (v, text))
    for (u, v) in d.arcs:
        lines.append("  v%d -> v%d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"
