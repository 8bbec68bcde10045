"""Equioriented type A: rank sequences, decompositions, degeneration orders,
coefficient quivers, fixed points, cells, strata, catenoids, flat loci."""

import random

import pytest

from quivergrass import QQ, DomainError, PrimeField, Representation, ext1_dim, \
    hom_dim, kronecker_quiver, linear_quiver
from quivergrass.rep import reduce_mod
from quivergrass.counting import count_points
from quivergrass.typea import (
    CoefficientQuiver, IntervalDecomposition, RankSequence, TorusFixedPoint,
    cell_dimension, coefficient_quiver, decompose, deg_leq_hom, deg_leq_ranks,
    degenerate_flag_dec, euler_char_cells, ext_interval, fixed_points,
    flag_dec, flat_locus_class, hom_interval, interval_rep, is_catenoid,
    min_projective_resolution, most_flat_dec, multiplicities_from_ranks,
    poincare_polynomial, random_decomposition, rank_sequence,
    ranks_from_multiplicities, semisimple_dec, strata, tau_interval)

A2 = linear_quiver(2)
A3 = linear_quiver(3)


def test_rank_sequence_named_modules():
    for n in (2, 3, 4):
        r0 = rank_sequence(flag_dec(n).to_representation(QQ))
        r1 = rank_sequence(degenerate_flag_dec(n).to_representation(QQ))
        r2 = rank_sequence(most_flat_dec(n).to_representation(QQ))
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                assert r0.r[(i, j)] == n + 1
                assert r1.r[(i, j)] == n + 1 - (j - i)
                if i < j:
                    assert r2.r[(i, j)] == n - (j - i)
                else:
                    assert r2.r[(i, i)] == n + 1


def test_rank_sequence_rejects_wrong_quiver():
    m = Representation(kronecker_quiver(2), QQ, (1, 1), [[[1]], [[1]]])
    with pytest.raises(DomainError):
        rank_sequence(m)


def test_rank_sequence_inequalities_checked():
    with pytest.raises(DomainError):
        RankSequence(2, {(1, 1): 1, (2, 2): 1, (1, 2): 2})  # m would go negative


def test_multiplicities_from_ranks_example():
    r = RankSequence(2, {(1, 1): 3, (2, 2): 3, (1, 2): 2})
    dec = multiplicities_from_ranks(r)
    assert dec == IntervalDecomposition(2, {(1, 1): 1, (2, 2): 1, (1, 2): 2})
    assert dec == degenerate_flag_dec(2)


def test_single_interval_rank_support():
    dec = IntervalDecomposition(4, {(2, 3): 1})
    r = ranks_from_multiplicities(dec)
    for i in range(1, 5):
        for j in range(i, 5):
            assert r.r[(i, j)] == (1 if 2 <= i and j <= 3 else 0)


def test_round_trip_random():
    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(1, 5)
        dec = random_decomposition(n, rng)
        assert multiplicities_from_ranks(ranks_from_multiplicities(dec)) == dec
    # through actual matrices too
    for seed in range(10):
        dec = random_decomposition(3, seed)
        assert decompose(dec.to_representation(QQ)) == dec


def test_interval_hom_ext_closed_forms():
    assert hom_interval((1, 2), (1, 1)) == 1
    assert ext_interval((1, 1), (2, 2)) == 1
    assert ext_interval((2, 3), (3, 3)) == 0


def test_closed_forms_match_defect_map_small():
    for n in (1, 2, 3, 4):
        q = linear_quiver(n)
        ivs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
        reps = {ij: interval_rep(q, QQ, *ij) for ij in ivs}
        for a in ivs:
            for b in ivs:
                assert hom_interval(a, b) == hom_dim(reps[a], reps[b])
                assert ext_interval(a, b) == ext1_dim(reps[a], reps[b])


def test_deg_leq_ranks_chain():
    for n in (2, 3):
        m0, m1, m2 = flag_dec(n), degenerate_flag_dec(n), most_flat_dec(n)
        assert deg_leq_ranks(m0, m1) and deg_leq_ranks(m1, m2)
        assert deg_leq_ranks(m0, m2)
        assert not deg_leq_ranks(m1, m0)
        assert deg_leq_ranks(m1, m1)
    u12 = IntervalDecomposition(2, {(1, 2): 1})
    split = IntervalDecomposition(2, {(1, 1): 1, (2, 2): 1})
    assert deg_leq_ranks(u12, split) and not deg_leq_ranks(split, u12)


def test_deg_leq_hom_requires_same_dims():
    with pytest.raises(DomainError):
        deg_leq_hom(IntervalDecomposition(2, {(1, 1): 1}),
                    IntervalDecomposition(2, {(2, 2): 1}))


def _all_isoclasses(n, d):
    """Every interval multiplicity assignment with dimension vector d."""
    ivs = [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    out = []

    def rec(idx, m):
        if idx == len(ivs):
            dec = IntervalDecomposition(n, dict(m))
            if dec.dim_vector() == d:
                out.append(dec)
            return
        i, j = ivs[idx]
        for mult in range(0, max(d) + 1):
            m[(i, j)] = mult
            rec(idx + 1, m)
        del m[(i, j)]

    rec(0, {})
    return out


def test_deg_orders_agree_exhaustively_d22():
    classes = _all_isoclasses(2, (2, 2))
    assert len(classes) == 3
    for a in classes:
        for b in classes:
            assert deg_leq_ranks(a, b) == deg_leq_hom(a, b)


def test_flag_module_minimal_in_order():
    for n in (2, 3):
        classes = _all_isoclasses(n, (n + 1,) * n)
        m0 = flag_dec(n)
        for c in classes:
            assert deg_leq_ranks(m0, c)


def test_coefficient_quiver_rows():
    cq = coefficient_quiver(degenerate_flag_dec(3))
    assert cq.rows == ((3, 3), (2, 3), (1, 3), (1, 3), (1, 2), (1, 1))
    assert coefficient_quiver(IntervalDecomposition(4, {(2, 3): 1})).rows == ((2, 3),)
    # the example-4 module sorts with S2 above P1 above S1
    cq2 = coefficient_quiver(IntervalDecomposition(
        2, {(1, 1): 1, (1, 2): 1, (2, 2): 1}))
    assert cq2.rows == ((2, 2), (1, 2), (1, 1))


def test_coefficient_quiver_order_kills_forward_ext():
    rng = random.Random(17)
    for _ in range(20):
        dec = random_decomposition(rng.randint(1, 5), rng)
        rows = coefficient_quiver(dec).rows
        for r in range(len(rows)):
            for r2 in range(r + 1, len(rows)):
                assert ext_interval(rows[r], rows[r2]) == 0


def test_fixed_points_binomial():
    dec = IntervalDecomposition(1, {(1, 1): 4})
    assert len(fixed_points(dec, (2,))) == 6


def test_fixed_points_wrong_quiver_rejected():
    m = Representation(kronecker_quiver(2), QQ, (1, 1), [[[1]], [[1]]])
    with pytest.raises(DomainError):
        fixed_points(m, (1, 1))


def test_fixed_points_contains_worked_point():
    dec = degenerate_flag_dec(3)
    pts = fixed_points(dec, (1, 2, 3))
    cq = coefficient_quiver(dec)
    target = TorusFixedPoint(cq, (3, 3, 2, None, 1, None))
    assert target in pts


def test_cell_dimension_worked_example():
    dec = degenerate_flag_dec(3)
    cq = coefficient_quiver(dec)
    pt = TorusFixedPoint(cq, (3, 3, 2, None, 1, None))
    assert cell_dimension(cq, pt) == 4


def test_cell_dimension_grassmannian_cells():
    dec = IntervalDecomposition(1, {(1, 1): 4})
    cq = coefficient_quiver(dec)
    top = TorusFixedPoint(cq, (1, 1, None, None))
    bottom = TorusFixedPoint(cq, (None, None, 1, 1))
    assert cell_dimension(cq, top) == 4
    assert cell_dimension(cq, bottom) == 0
    empty = TorusFixedPoint(cq, (None,) * 4)
    assert cell_dimension(cq, empty) == 0


def test_poincare_polynomials():
    assert poincare_polynomial(IntervalDecomposition(1, {(1, 1): 4}), (2,)
                               ).coefficients == (1, 1, 2, 1, 1)
    fl3 = poincare_polynomial(flag_dec(2), (1, 2))
    assert euler_char_cells(flag_dec(2), (1, 2)) == 6
    assert fl3.evaluate(2) == 21
    empty = poincare_polynomial(IntervalDecomposition(1, {(1, 1): 1}), (0,))
    assert empty.coefficients == (1,)


def test_poincare_matches_oracle():
    fixtures = [
        (degenerate_flag_dec(2), (1, 2), (2, 3)),
        (flag_dec(2), (1, 2), (2, 3)),
        (most_flat_dec(2), (1, 2), (2, 3)),
        (IntervalDecomposition(3, {(1, 3): 1, (2, 2): 1, (1, 1): 1}), (1, 1, 1), (2,)),
    ]
    for dec, e, primes in fixtures:
        pp = poincare_polynomial(dec, e)
        m = dec.to_representation(QQ)
        for p in primes:
            assert pp.evaluate(p) == count_points(reduce_mod(m, p), e)
        assert pp.evaluate(1) == euler_char_cells(dec, e)


def test_poincare_equals_counting_polynomial():
    """Oracle equivalence as polynomials, not just at sampled primes."""
    from quivergrass.counting import counting_polynomial
    fixtures = [
        (degenerate_flag_dec(2), (1, 2)),
        (flag_dec(2), (1, 2)),
        (IntervalDecomposition(2, {(1, 1): 1, (1, 2): 1, (2, 2): 1}), (1, 1)),
        (IntervalDecomposition(3, {(1, 3): 1, (2, 2): 2}), (1, 2, 1)),
    ]
    for dec, e in fixtures:
        cp = counting_polynomial(dec.to_representation(QQ), e)
        assert cp.consistency == "verified"
        assert cp.coefficients == poincare_polynomial(dec, e).coefficients


def test_fixed_point_count_dual_symmetry():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(1, 4)
        dec = random_decomposition(n, rng)
        d = dec.dim_vector()
        e = tuple(rng.randint(0, x) for x in d)
        # duality reverses the vertex labels, so complement then reverse
        co = tuple(reversed([a - b for a, b in zip(d, e)]))
        dual_dec = IntervalDecomposition(
            n, {(n + 1 - j, n + 1 - i): m for (i, j), m in dec.m.items()})
        assert len(fixed_points(dec, e)) == len(fixed_points(dual_dec, co))


def test_max_cell_dimension_lower_bound():
    """Whenever nonempty, some cell reaches <e, d-e>."""
    from quivergrass.quiver import euler_form
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randint(1, 4)
        dec = random_decomposition(n, rng)
        d = dec.dim_vector()
        e = tuple(rng.randint(0, x) for x in d)
        pts = fixed_points(dec, e)
        if not pts:
            continue
        cq = coefficient_quiver(dec)
        best = max(cell_dimension(cq, pt) for pt in pts)
        q = linear_quiver(n)
        assert best >= euler_form(q, e, tuple(a - b for a, b in zip(d, e)))


def test_strata_example4():
    dec = IntervalDecomposition(2, {(1, 1): 1, (1, 2): 1, (2, 2): 1})
    st = strata(dec, (1, 1))
    by_class = {repr(s.isoclass): s for s in st}
    assert set(by_class) == {"U[1,2]", "U[1,1] + U[2,2]"}
    assert all(s.dim == 1 for s in st)


def test_strata_degenerate_flag():
    st = strata(degenerate_flag_dec(2), (1, 2))
    assert max(s.dim for s in st) == 3
    top = [s for s in st if s.dim == 3]
    assert len(top) == 1
    assert top[0].isoclass == IntervalDecomposition(2, {(1, 2): 1, (2, 2): 1})


def test_strata_most_flat_catalan():
    st2 = strata(most_flat_dec(2), (1, 2))
    assert sum(1 for s in st2 if s.dim == max(x.dim for x in st2)) == 2
    st3 = strata(most_flat_dec(3), (1, 2, 3))
    assert sum(1 for s in st3 if s.dim == max(x.dim for x in st3)) == 5


def test_is_catenoid():
    chain = IntervalDecomposition(
        3, {(3, 3): 1, (2, 3): 2, (2, 2): 1, (1, 2): 1, (1, 1): 1})
    assert is_catenoid(chain)
    bad = IntervalDecomposition(
        4, {(2, 4): 1, (2, 3): 1, (1, 2): 1, (4, 4): 1, (3, 3): 1, (2, 2): 1})
    assert not is_catenoid(bad)
    assert is_catenoid(IntervalDecomposition(5, {(2, 4): 7}))


def test_flat_locus_classes():
    for n in (2, 3, 4):
        assert flat_locus_class(flag_dec(n)) == "flat-irreducible"
        assert flat_locus_class(degenerate_flag_dec(n)) == "flat-irreducible"
        assert flat_locus_class(most_flat_dec(n)) == "flat-only"
        assert flat_locus_class(semisimple_dec(n)) == "non-flat"
    with pytest.raises(DomainError):
        flat_locus_class(IntervalDecomposition(2, {(1, 2): 1}))


def test_min_projective_resolution():
    proj = IntervalDecomposition(3, {(1, 3): 2, (2, 3): 1})
    p, r = min_projective_resolution(proj)
    assert p.total_dim() == 0 and r == proj
    p, r = min_projective_resolution(degenerate_flag_dec(3))
    assert len(r.summands()) == 6
    assert p.total_dim() == 3
    assert p == IntervalDecomposition(3, {(2, 3): 1, (3, 3): 1})
    # dimension bookkeeping of 0 -> P -> R -> M -> 0
    dm = degenerate_flag_dec(3).dim_vector()
    assert tuple(a - b for a, b in zip(r.dim_vector(), p.dim_vector())) == dm
    p, r = min_projective_resolution(IntervalDecomposition(2, {(1, 1): 1}))
    assert r == IntervalDecomposition(2, {(1, 2): 1})
    assert p == IntervalDecomposition(2, {(2, 2): 1})


def test_tau_interval():
    assert tau_interval((1, 2), 3) == (2, 3)
    assert tau_interval((2, 3), 3) is None
    assert tau_interval(tau_interval((1, 1), 3), 3) == (3, 3)
