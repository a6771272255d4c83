"""Locked subsets and the locked structure of a matroid.

A proper nonempty subset L of a connected matroid M is locked when the
restriction M|L and the dual restriction M*|(E\\L) are both connected and
both have rank at least 2.  For a disconnected matroid the locked subsets
are those of its connected components.  The locked structure bundles the
parallel closures P, the coparallel closures S, the locked family L and
the rank values of all of them (plus the empty set and E).

Enumeration is exhaustive over each component's subsets, in canonical
order (cardinality, then lexicographic), with the cheap rank/corank tests
applied before the connectivity scans.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import errors
from ._bits import bits_of, mask_of, subset_key
from .matroid import Matroid, closures


@dataclass(frozen=True)
class LockedStructure:
    """The quadruple (parallel, coparallel, locked, rho) plus ground data."""

    ground_size: int
    rank: int
    names: tuple[str, ...]
    parallel: tuple[tuple[int, ...], ...]
    coparallel: tuple[tuple[int, ...], ...]
    locked: tuple[tuple[int, ...], ...]
    rho: dict

    @property
    def locked_count(self) -> int:
        return len(self.locked)


@dataclass(frozen=True)
class KLockedVerdict:
    """Outcome of the k-locked decision: count if within threshold, else a No."""

    k: int
    threshold: int
    locked_count: Optional[int]  # None when enumeration aborted past threshold
    structure: Optional[LockedStructure]

    @property
    def yes(self) -> bool:
        return self.locked_count is not None


def _restriction_separator(ranks, sub: int) -> Optional[int]:
    """A submask A of ``sub`` with rank(A)+rank(sub\\A) = rank(sub), if any."""
    if sub.bit_count() <= 1:
        return None
    low = sub & -sub
    rest = sub ^ low
    r_sub = ranks[sub]
    b = (rest - 1) & rest
    while True:
        a = low | b
        if ranks[a] + ranks[sub ^ a] == r_sub:
            return a
        if b == 0:
            return None
        b = (b - 1) & rest


def _corestriction_separator(ranks, comp: int, sub: int) -> Optional[int]:
    """Separator of (M|comp)* restricted to ``sub`` (sub within comp)."""
    if sub.bit_count() <= 1:
        return None
    r_comp = ranks[comp]

    def rstar(x: int) -> int:
        return x.bit_count() + ranks[comp ^ x] - r_comp

    low = sub & -sub
    rest = sub ^ low
    r_sub = rstar(sub)
    b = (rest - 1) & rest
    while True:
        a = low | b
        if rstar(a) + rstar(sub ^ a) == r_sub:
            return a
        if b == 0:
            return None
        b = (b - 1) & rest


def _component_masks(ranks, mask: int) -> list[int]:
    sep = _restriction_separator(ranks, mask)
    if sep is None:
        return [mask]
    return _component_masks(ranks, sep) + _component_masks(ranks, mask ^ sep)


def _reject_loops_coloops(m: Matroid) -> None:
    lo = m.loops()
    if lo:
        raise errors.LoopPresent(lo[0])
    co = m.coloops()
    if co:
        raise errors.ColoopPresent(co[0])


def is_locked(m: Matroid, subset) -> bool:
    """Direct definition of lockedness of one subset (M itself connected or not,
    the test is for M|L, M*|(E\\L) connected with both ranks >= 2)."""
    _reject_loops_coloops(m)
    lm = mask_of(subset)
    if lm & ~m.full_mask:
        raise errors.OutOfRange("subset not within the ground set")
    if lm == 0 or lm == m.full_mask:
        raise errors.NotProperSubset("locked subsets are proper and nonempty")
    ranks = m._rank_table()
    return _is_locked_in_component(ranks, m.full_mask, lm)


def _is_locked_in_component(ranks, comp: int, lm: int) -> bool:
    r_l = ranks[lm]
    if r_l < 2:
        return False
    co_rank = (comp ^ lm).bit_count() + r_l - ranks[comp]
    if co_rank < 2:
        return False
    if _restriction_separator(ranks, lm) is not None:
        return False
    return _corestriction_separator(ranks, comp, comp ^ lm) is None


def _locked_iter(m: Matroid) -> Iterator[tuple[int, ...]]:
    """Locked subsets, per connected component, each component in
    (cardinality, lex) order.  Not globally sorted across components."""
    ranks = m._rank_table()
    for comp in sorted(_component_masks(ranks, m.full_mask)):
        cbits = bits_of(comp)
        for k in range(1, len(cbits)):
            for sub in itertools.combinations(cbits, k):
                if _is_locked_in_component(ranks, comp, mask_of(sub)):
                    yield sub


def locked_structure(m: Matroid) -> LockedStructure:
    """Enumerate the locked subsets and assemble the full quadruple."""
    _reject_loops_coloops(m)
    parallel, coparallel = closures(m)
    locked = tuple(sorted(_locked_iter(m), key=subset_key))
    ranks = m._rank_table()
    r_e = ranks[m.full_mask]
    rho: dict = {(): 0, tuple(range(m.n)): r_e}
    for fam in (parallel, coparallel, locked):
        for x in fam:
            rho[x] = ranks[mask_of(x)]
    return LockedStructure(m.n, r_e, m.names, parallel, coparallel, locked, rho)


def k_locked_decision(m: Matroid, k: int, c=1) -> KLockedVerdict:
    """Count locked subsets against the threshold ceil(c * n**k); abort the
    enumeration as soon as the threshold is exceeded."""
    if k < 0 or Fraction(c) <= 0:
        raise errors.InvalidParams("k must be a natural number and c positive")
    _reject_loops_coloops(m)
    threshold = math.ceil(Fraction(c) * Fraction(m.n) ** k)
    count = 0
    for _ in _locked_iter(m):
        count += 1
        if count > threshold:
            return KLockedVerdict(k, threshold, None, None)
    return KLockedVerdict(k, threshold, count, locked_structure(m))


def dual_structure(s: LockedStructure) -> LockedStructure:
    """Locked structure of the dual matroid, computed without re-enumeration:
    swap the two closure families, complement every locked set, and map every
    rank through rho*(X) = rho(E\\X) + |X| - rank."""
    n, r = s.ground_size, s.rank
    full = tuple(range(n))
    fullmask = (1 << n) - 1
    locked = tuple(sorted((bits_of(fullmask ^ mask_of(x)) for x in s.locked),
                          key=subset_key))
    rho: dict = {(): 0, full: n - r}
    for p in s.coparallel:  # parallel classes of the dual
        rho[p] = min(1, n - r)
    for c in s.parallel:  # coparallel classes of the dual; a class equal to E
        # has rank r*(E), not its cardinality
        rho[c] = min(len(c), n - r)
    for x in s.locked:
        comp = bits_of(fullmask ^ mask_of(x))
        rho[comp] = s.rho[x] + len(comp) - r
    return LockedStructure(n, n - r, s.names, s.coparallel, s.parallel, locked, rho)


def structure_text(s: LockedStructure) -> str:
    """Deterministic text dump: P/S/L sections with rank annotations."""

    def fmt(x: tuple[int, ...]) -> str:
        return "{%s}" % ",".join(s.names[i] for i in x)

    lines = [
        "# format: 1",
        "ground %d" % s.ground_size,
        "elements %s" % ",".join(s.names),
        "rank %d" % s.rank,
    ]
    for tag, fam in (("P", s.parallel), ("S", s.coparallel), ("L", s.locked)):
        for x in fam:
            lines.append("%s: %s rank=%d" % (tag, fmt(x), s.rho[x]))
    return "\n".join(lines) + "\n"
