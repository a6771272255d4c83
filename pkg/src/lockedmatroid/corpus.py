"""The standard desk-scale corpus used by the test and bench surfaces.

Uniform matroids up to eight elements, the named six- and eight-element
matroids and some duals, one K4 variant with a doubled edge (so that
non-singleton closures are exercised), and three seeded 2-sums of uniform
matroids.  Deterministic for a fixed seed.
"""

from __future__ import annotations

from random import Random

from .catalog import graphic, mk4, p6, q6, uniform, vamos, whirl3
from .matroid import Matroid, two_sum

_K4_DOUBLED_EDGES = ((0, 2), (0, 1), (0, 3), (1, 2), (1, 3), (2, 3), (0, 2))
_K4_DOUBLED_NAMES = ("a", "b", "c", "d", "e", "f", "g")


def mk4_doubled() -> Matroid:
    """K4 with a parallel copy of the edge a; has a 2-element parallel class."""
    return graphic(4, _K4_DOUBLED_EDGES, names=_K4_DOUBLED_NAMES, name="mk4_doubled")


def seeded_two_sums(seed: int = 1) -> list[Matroid]:
    rng = Random(seed)
    pairs = [
        (uniform(2, 4), uniform(2, 4, prefix="f", name="uniform(2,4)f")),
        (uniform(2, 5), uniform(2, 4, prefix="f", name="uniform(2,4)f")),
        (uniform(3, 5), uniform(2, 5, prefix="f", name="uniform(2,5)f")),
    ]
    out = []
    for i, (a, b) in enumerate(pairs):
        e1 = rng.randrange(a.n)
        e2 = rng.randrange(b.n)
        m = two_sum(a, b, e1, e2)
        m.name = "twosum%d" % (i + 1)
        out.append(m)
    return out


def standard_corpus(seed: int = 1) -> list[Matroid]:
    ms = [
        uniform(1, 3),
        uniform(2, 3),
        uniform(2, 4),
        uniform(2, 5),
        uniform(3, 5),
        uniform(2, 6),
        uniform(3, 6),
        uniform(3, 7),
        uniform(4, 8),
        mk4(),
        whirl3(),
        q6(),
        p6(),
        vamos(),
        mk4().dual(),
        vamos().dual(),
        mk4_doubled(),
        mk4_doubled().dual(),
    ]
    ms.extend(seeded_two_sums(seed))
    return ms
