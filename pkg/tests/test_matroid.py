import itertools

import pytest

import lockedmatroid as lm
from lockedmatroid import errors
from helpers import naive_rank, naive_connected, naive_dual_bases, spanning_trees

K4_EDGES = ((0, 2), (0, 1), (0, 3), (1, 2), (1, 3), (2, 3))


# -- from_bases ------------------------------------------------------------

def test_from_bases_u24():
    m = lm.from_bases(4, itertools.combinations(range(4), 2))
    assert m.rank == 2
    assert len(m.bases) == 6
    assert m == lm.uniform(2, 4)


def test_from_bases_rank_one():
    m = lm.from_bases(2, [(0,), (1,)])
    assert m.rank == 1 and len(m.bases) == 2


def test_from_bases_unequal_cardinality():
    with pytest.raises(errors.UnequalCardinality):
        lm.from_bases(3, [(0, 1), (2,)])


def test_from_bases_empty():
    with pytest.raises(errors.EmptyBases):
        lm.from_bases(3, [])


def test_from_bases_exchange_violation():
    # {{0,1},{2,3}} is not a matroid: no exchange between disjoint pairs
    with pytest.raises(errors.ExchangeViolation) as exc:
        lm.from_bases(4, [(0, 1), (2, 3)])
    assert exc.value.element in (0, 1, 2, 3)


def test_from_bases_out_of_range():
    with pytest.raises(errors.OutOfRange):
        lm.from_bases(3, [(0, 3)])


def test_rank_zero_matroid():
    m = lm.uniform(0, 3)
    assert m.rank == 0
    assert m.bases == ((),)


# -- catalog ------------------------------------------------------------------

def test_mk4_matches_spanning_tree_enumeration():
    trees = spanning_trees(4, K4_EDGES)
    assert len(trees) == 16
    m = lm.mk4()
    assert m.bases == tuple(sorted(trees))
    assert m.rank == 3 and m.n == 6
    assert m.names == ("a", "b", "c", "d", "e", "f")


def test_vamos_counts():
    m = lm.vamos()
    assert m.n == 8 and m.rank == 4
    assert len(m.bases) == 65
    m.validate()


def test_whirl3_is_mk4_plus_rim():
    w = lm.whirl3()
    assert len(w.bases) == 17
    assert (3, 4, 5) in w.bases
    assert set(lm.mk4().bases) < set(w.bases)


def test_q6_p6_nonbasis_counts():
    # regression: number of non-basis 3-sets, from the construction
    assert 20 - len(lm.q6().bases) == 2
    assert 20 - len(lm.p6().bases) == 1
    for m in (lm.q6(), lm.p6()):
        assert m.rank == 3 and lm.is_connected(m)
        m.validate()


def test_q6_p6_relaxation_chain():
    # whirl3 -> q6 -> p6 -> U(3,6) by successive circuit-hyperplane relaxations
    w = lm.whirl3()
    nb = [b for b in itertools.combinations(range(6), 3) if b not in set(w.bases)]
    q = lm.relax(w, nb[0])
    assert lm.mip_bruteforce(q, lm.q6()).answer
    nb = [b for b in itertools.combinations(range(6), 3) if b not in set(q.bases)]
    p = lm.relax(q, nb[0])
    assert lm.mip_bruteforce(p, lm.p6()).answer
    nb = [b for b in itertools.combinations(range(6), 3) if b not in set(p.bases)]
    u = lm.relax(p, nb[0])
    assert u == lm.uniform(3, 6, name=u.name) or len(u.bases) == 20


def test_catalog_dispatch():
    assert lm.catalog("uniform", 0, 3).rank == 0
    assert lm.catalog("mk4") == lm.mk4()
    with pytest.raises(errors.UnknownName):
        lm.catalog("nope")
    with pytest.raises(errors.InvalidParams):
        lm.catalog("uniform", 4, 3)
    with pytest.raises(errors.DisconnectedGraph):
        lm.catalog("graphic", 4, ((0, 1), (2, 3)))


# -- rank ------------------------------------------------------------------------

def test_rank_examples():
    u = lm.uniform(2, 4)
    assert u.rank_of((0, 1, 2)) == 2
    assert u.rank_of(()) == 0
    mk4 = lm.mk4()
    assert mk4.rank_of((0, 1, 3)) == 2  # a triangle
    with pytest.raises(errors.OutOfRange):
        u.rank_of((7,))


def test_rank_table_matches_naive(corpus):
    for m in corpus:
        if m.n > 7:
            continue
        ranks = m._rank_table()
        for k in range(m.n + 1):
            for comb in itertools.combinations(range(m.n), k):
                assert ranks[sum(1 << e for e in comb)] == naive_rank(m.bases, comb)


def test_rank_monotone_submodular(corpus):
    for m in corpus:
        if m.n > 6:
            continue
        ranks = m._rank_table()
        size = 1 << m.n
        for x in range(size):
            for y in range(size):
                assert ranks[x | y] + ranks[x & y] <= ranks[x] + ranks[y]
                if x & ~y == 0:
                    assert ranks[x] <= ranks[y]


# -- dual ----------------------------------------------------------------------

def test_dual_examples():
    u = lm.uniform(2, 4)
    assert u.dual() == u  # complements of 2-subsets of a 4-set
    assert lm.mk4().dual().rank == 3
    v = lm.vamos()
    assert v.dual().dual() == v


def test_dual_rank_formula(corpus):
    for m in corpus:
        if m.n > 7:
            continue
        d = m.dual()
        for k in range(m.n + 1):
            for comb in itertools.combinations(range(m.n), k):
                rest = tuple(e for e in range(m.n) if e not in comb)
                assert d.rank_of(comb) == m.rank_of(rest) + len(comb) - m.rank


def test_dual_bases_naive(corpus):
    for m in corpus:
        assert set(m.dual().bases) == set(naive_dual_bases(m.n, m.bases))


# -- minors -----------------------------------------------------------------------

def test_minor_examples():
    u = lm.uniform(2, 4)
    assert lm.minor(u, delete=(3,)) == lm.uniform(2, 3)
    # restriction of mk4 to a triangle: rank 2, all 2-subsets are bases
    r = lm.restriction(lm.mk4(), (0, 1, 3))
    assert r.n == 3 and r.rank == 2
    assert r.bases == ((0, 1), (0, 2), (1, 2))
    assert r.index_map == {0: 0, 1: 1, 3: 2}
    assert lm.minor(u) == u


def test_minor_errors():
    u = lm.uniform(2, 4)
    with pytest.raises(errors.OverlappingSets):
        lm.minor(u, delete=(0,), contract=(0,))
    with pytest.raises(errors.EmptyResult):
        lm.minor(u, delete=(0, 1), contract=(2, 3))


def test_minor_contraction_against_naive():
    m = lm.mk4()
    c = lm.minor(m, contract=(0,))
    assert c.n == 5 and c.rank == 2
    c.validate()
    # contracting an edge of K4 merges two vertices: a multigraph on 3 vertices
    assert lm.is_connected(c)


# -- connectivity ---------------------------------------------------------------

def test_is_connected_examples(corpus):
    assert lm.is_connected(lm.uniform(2, 4))
    assert lm.is_connected(lm.mk4())
    for m in corpus:
        assert lm.is_connected(m) == naive_connected(m.n, m.bases)


def test_disconnected_witness():
    # direct sum of two rank-1 two-element matroids
    m = lm.from_bases(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    sep = lm.find_separator(m)
    assert sep == (0, 1)
    assert not lm.is_connected(m)


# -- closures ----------------------------------------------------------------------

def test_closures_examples():
    p, s = lm.closures(lm.mk4())
    assert len(p) == 6 and len(s) == 6
    assert all(len(x) == 1 for x in p + s)
    p, s = lm.closures(lm.uniform(1, 3))
    assert p == ((0, 1, 2),)
    assert s == ((0,), (1,), (2,))
    p, s = lm.closures(lm.uniform(2, 3))
    assert p == ((0,), (1,), (2,))
    assert s == ((0, 1, 2),)


def test_closures_reject_loops_coloops():
    with pytest.raises(errors.LoopPresent):
        lm.closures(lm.uniform(0, 3))
    with pytest.raises(errors.ColoopPresent):
        lm.closures(lm.uniform(3, 3))


def test_closures_partition_and_l3(corpus):
    for m in corpus:
        p, s = lm.closures(m)
        for fam in (p, s):
            elems = sorted(e for x in fam for e in x)
            assert elems == list(range(m.n))
        for x in p:
            for y in s:
                if set(x) & set(y):
                    assert len(x) == 1 or len(y) == 1


# -- 2-sums ---------------------------------------------------------------------------

def test_two_sum_sizes():
    a = lm.uniform(2, 4)
    b = lm.uniform(2, 4, prefix="f")
    t = lm.two_sum(a, b, 0, 0)
    assert t.n == 6 and t.rank == 3
    assert lm.is_connected(t)
    t.validate()


def test_two_sum_side_rank():
    a = lm.uniform(2, 4)
    b = lm.uniform(2, 4, prefix="f")
    t = lm.two_sum(a, b, 3, 0)
    left = lm.restriction(t, (0, 1, 2))
    assert left.rank == a.rank


def test_two_sum_errors():
    with pytest.raises(errors.TooSmall):
        lm.two_sum(lm.uniform(1, 2), lm.uniform(2, 4), 0, 0)
    disc = lm.from_bases(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    with pytest.raises(errors.Disconnected):
        lm.two_sum(disc, lm.uniform(2, 4), 0, 0)
    loopy = lm.from_bases(3, [(0, 1)])  # 2 is a loop
    with pytest.raises(errors.BasepointIsLoopOrColoop):
        lm.two_sum(loopy, lm.uniform(2, 4), 2, 0)


def test_two_sum_name_collision_resolved():
    a = lm.uniform(2, 4)
    t = lm.two_sum(a, a, 0, 0)
    assert len(set(t.names)) == t.n


# -- relabel / validate ---------------------------------------------------------------

def test_relabel_roundtrip():
    m = lm.mk4()
    perm = [3, 0, 5, 1, 4, 2]
    r = lm.relabel(m, perm)
    inv = [0] * 6
    for i, p in enumerate(perm):
        inv[p] = i
    assert lm.relabel(r, inv) == lm.with_names(m, m.names)


def test_corpus_validates(corpus):
    for m in corpus:
        m.validate()


# -- text format ------------------------------------------------------------------------

def test_text_roundtrip(corpus):
    for m in corpus:
        again = lm.from_text(lm.to_text(m))
        assert again == m and again.name == m.name


def test_text_reader_canonicalizes():
    text = "matroid x\nelements a,b,c\nbasis c b\nbasis b a\nbasis c a\n"
    m = lm.from_text(text)
    assert m.bases == ((0, 1), (0, 2), (1, 2))
    assert lm.to_text(m) == "matroid x\nelements a,b,c\nbasis a b\nbasis a c\nbasis b c\n"


def test_text_reader_errors():
    with pytest.raises(errors.FormatError):
        lm.from_text("nope\n")
    with pytest.raises(errors.FormatError):
        lm.from_text("matroid x\nelements a,b\nbasis q\n")


def test_save_load_bit_exact(tmp_path, corpus):
    for m in corpus[:4]:
        path = tmp_path / (m.name.replace("(", "_").replace(")", "_") + ".matroid")
        lm.save(m, path)
        raw = path.read_bytes()
        assert b"\r" not in raw
        assert lm.load(path) == m
