"""Constacyclic codes, the symbol-pair metric, and the distance engines."""

import math
import random

import numpy as np
import pytest

from sympair import code, errors, gf, poly
from sympair.code import ConstacyclicCode
from sympair.poly import Poly

F2 = gf.prime_field(2)
F3 = gf.prime_field(3)
F5 = gf.prime_field(5)
F7 = gf.prime_field(7)


def _example_15_11():
    x = Poly.x(F5)
    one = Poly.one(F5)
    return ConstacyclicCode.from_generator(F5, 15, 1, (x - one) * (x**3 - one))


def _example_21_14():
    x = Poly.x(F7)
    one = Poly.one(F7)
    g = (x - one) ** 4 * (x - Poly(F7, [2])) ** 2 * (x - Poly(F7, [4]))
    return ConstacyclicCode.from_generator(F7, 21, 1, g)


def _example_24_3():
    return ConstacyclicCode.from_defining_set(F5, 24, set(range(24)) - {0, 19, 23})


WITNESS_21 = (6, 4, 1, 1, 0, 0, 0, 0, 0, 0, 3, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0)


def test_from_generator_dimensions():
    assert _example_15_11().k == 11
    assert _example_21_14().k == 14
    c = ConstacyclicCode.from_generator(F5, 4, 1, Poly(F5, [1, 0, 1]))
    assert c.k == 2


def test_from_generator_rejects_non_divisor():
    with pytest.raises(errors.NotDivisorError):
        ConstacyclicCode.from_generator(F5, 4, 1, Poly(F5, [2, 0, 1]))
    with pytest.raises(errors.BadParameterError):
        ConstacyclicCode.from_generator(F5, 4, 1, Poly(F5, [2, 0, 2]))
    with pytest.raises(errors.BadParameterError):
        ConstacyclicCode.from_generator(F5, 4, 0, Poly(F5, [1, 0, 1]))


def test_from_defining_set_examples():
    c = _example_24_3()
    assert (c.n, c.k) == (24, 3)
    assert c.defining_set() == frozenset(range(24)) - {0, 19, 23}

    c84 = ConstacyclicCode.from_defining_set(F3, 8, {0, 1, 3, 4})
    assert (c84.n, c84.k) == (8, 4)

    trivial = ConstacyclicCode.from_defining_set(F5, 6, set())
    assert trivial.k == 6
    assert trivial.g == Poly.one(F5)


def test_from_defining_set_validation():
    with pytest.raises(errors.NotCoprimeError):
        ConstacyclicCode.from_defining_set(F3, 6, {0})
    # {1} is not closed under multiplication by 3 mod 8
    with pytest.raises(errors.NotUnionOfCosetsError):
        ConstacyclicCode.from_defining_set(F3, 8, {1})
    expanded = ConstacyclicCode.from_defining_set(F3, 8, {1}, expand=True)
    assert expanded.defining_set() == frozenset({1, 3})


def test_encode_basics():
    c = _example_15_11()
    assert c.encode([0] * 11) == (0,) * 15
    e0 = [1] + [0] * 10
    assert c.encode(e0) == tuple(c.g.coeffs) + (0,) * (15 - len(c.g.coeffs))
    with pytest.raises(errors.LengthMismatchError):
        c.encode([0] * 10)


def test_encode_is_linear():
    rng = random.Random(53)
    c = _example_15_11()
    for _ in range(50):
        m1 = [rng.randrange(5) for _ in range(11)]
        m2 = [rng.randrange(5) for _ in range(11)]
        s = [F5.add(a, b) for a, b in zip(m1, m2)]
        summed = tuple(F5.add(a, b) for a, b in zip(c.encode(m1), c.encode(m2)))
        assert c.encode(s) == summed


def test_membership_witness_codeword():
    c = _example_21_14()
    assert c.is_member(WITNESS_21)
    assert not c.is_member((1,) + (0,) * 20)
    rng = random.Random(59)
    for _ in range(25):
        m = [rng.randrange(7) for _ in range(14)]
        assert c.is_member(c.encode(m))


def test_constacyclic_shift_examples():
    assert code.constacyclic_shift(F5, 1, (1, 2, 3)) == (3, 1, 2)
    assert code.constacyclic_shift(F3, 2, (1, 0, 0)) == (0, 1, 0)
    assert code.constacyclic_shift(F3, 2, (0, 0, 1)) == (2, 0, 0)


def test_n_shifts_scale_by_lambda():
    rng = random.Random(61)
    for lam in (2, 3, 4):
        word = tuple(rng.randrange(5) for _ in range(6))
        out = word
        for _ in range(6):
            out = code.constacyclic_shift(F5, lam, out)
        assert out == tuple(F5.mul(lam, s) for s in word)


def test_shift_closure_on_codewords():
    rng = random.Random(67)
    # cyclic example and a genuinely constacyclic one (lambda = 2 over GF(5))
    neg_g = poly.factor(poly.binomial(F5, 8, 2)).factors[0][0]
    cases = [_example_15_11(), ConstacyclicCode.from_generator(F5, 8, 2, neg_g)]
    for c in cases:
        for _ in range(40):
            m = [rng.randrange(c.field.q) for _ in range(c.k)]
            w = c.shift(c.encode(m))
            assert c.is_member(w)


def test_pair_read_vector_examples():
    assert code.pair_read_vector((1, 2, 0)) == ((1, 2), (2, 0), (0, 1))
    assert code.pair_read_vector((0, 0, 0, 0)) == ((0, 0),) * 4
    assert code.pair_read_vector((3, 3, 3)) == ((3, 3),) * 3
    with pytest.raises(errors.LengthTooShortError):
        code.pair_read_vector((1,))


def test_pair_weight_examples():
    assert code.pair_weight((1, 0, 0, 1, 1)) == 4
    assert code.pair_weight(WITNESS_21) == 8
    assert code.pair_weight((1, 2, 3, 4)) == 4
    assert code.pair_weight((0, 0, 0)) == 0
    assert code.pair_weight((0, 5, 0, 0)) == 2


def test_pair_distance_examples():
    a = (1, 2, 0, 4)
    assert code.pair_distance(a, a) == 0
    b = (1, 2, 3, 4)
    assert code.pair_distance(a, b) == 2


def test_pair_metric_identities_random():
    rng = random.Random(71)
    for _ in range(500):
        q = rng.choice([2, 3, 5, 7])
        field = gf.prime_field(q)
        n = rng.randrange(2, 31)
        a = tuple(rng.randrange(q) for _ in range(n))
        b = tuple(rng.randrange(q) for _ in range(n))
        pairs = code.pair_read_vector(a)
        # run formula agrees with the raw definition d_H(pi(a), pi(0))
        definitional = sum(1 for p in pairs if p != (0, 0))
        assert code.pair_weight(a) == definitional
        diff = tuple(field.sub(x, y) for x, y in zip(a, b))
        assert code.pair_distance(a, b) == code.pair_weight(diff)
        # sandwich relation on the weight level
        w = code.hamming_weight(a)
        if 0 < w < n:
            assert w + 1 <= code.pair_weight(a) <= 2 * w


def test_min_hamming_distance_reference_codes():
    r = code.min_hamming_distance(_example_24_3(), "exhaustive")
    assert (r.value, r.method, r.certified) == (19, "exhaustive", True)
    assert r.enumeration_count == 124

    assert code.min_hamming_distance(_example_15_11()).value == 3

    c3 = _example_21_14()
    cast = code.min_hamming_distance(c3, "castagnoli")
    assert (cast.value, cast.method, cast.certified) == (5, "castagnoli", True)
    found = code.min_hamming_distance(c3, "bounded", max_weight=5)
    assert (found.value, found.certified, found.is_lower_bound) == (5, True, False)


def test_bounded_strategy_reports_lower_bound_witness():
    r = code.min_hamming_distance(_example_24_3(), "bounded", max_weight=2)
    assert r.is_lower_bound
    assert r.value == 3  # proves d_H >= 3
    assert r.upper_bound == 19  # best codeword seen during the scan


def test_castagnoli_strategy_rejects_simple_root():
    with pytest.raises(errors.StrategyInapplicableError):
        code.min_hamming_distance(_example_24_3(), "castagnoli")


def test_budget_exceeded_carries_progress():
    with pytest.raises(errors.BudgetExceededError) as exc_info:
        code.min_hamming_distance(_example_24_3(), "exhaustive", budget=10)
    err = exc_info.value
    assert err.lower_bound >= 1
    assert err.enumerated <= 10


def test_min_pair_distance_reference_codes():
    assert code.min_pair_distance(_example_15_11()).value == 6
    r = code.min_pair_distance(_example_24_3(), "exhaustive")
    assert (r.value, r.certified) == (23, True)


def test_strategy_agreement_small_codes():
    # every nontrivial divisor code of x^n - lambda for a spread of shapes
    cases = [(F2, 7, 1), (F3, 6, 1), (F3, 8, 1), (F5, 6, 1), (F5, 4, 4), (F5, 10, 1)]
    checked = 0
    for field, n, lam in cases:
        fac = poly.factor(poly.binomial(field, n, lam))
        combos = [[]]
        for f, e in fac:
            combos = [c + [(f, m)] for c in combos for m in range(e + 1)]
        for combo in combos:
            g = Poly.one(field)
            for f, m in combo:
                g = g * f**m
            if g.degree in (0, n):
                continue
            c = ConstacyclicCode.from_generator(field, n, lam, g)
            if field.q**c.k > 200_000:
                continue
            dh_ex = code.min_hamming_distance(c, "exhaustive")
            dh_bd = code.min_hamming_distance(c, "bounded")
            assert dh_ex.value == dh_bd.value
            assert dh_bd.certified
            dp_ex = code.min_pair_distance(c, "exhaustive")
            dp_bd = code.min_pair_distance(c, "bounded")
            assert dp_ex.value == dp_bd.value
            assert dp_bd.certified
            if 0 < dh_ex.value < n:
                assert dh_ex.value + 1 <= dp_ex.value <= 2 * dh_ex.value
            checked += 1
    assert checked >= 40


def test_pair_distance_pairs_dominate_minimum():
    rng = random.Random(73)
    c = _example_15_11()
    dp = code.min_pair_distance(c).value
    for _ in range(200):
        a = c.encode([rng.randrange(5) for _ in range(11)])
        b = c.encode([rng.randrange(5) for _ in range(11)])
        if a != b:
            assert code.pair_distance(a, b) >= dp


def test_matrices_orthogonal_and_full_rank():
    c = _example_15_11()
    G = c.generator_matrix()
    H = c.parity_check_matrix()
    assert G.shape == (11, 15)
    assert H.shape == (4, 15)
    assert np.all((G @ H.T) % 5 == 0)
    # standard form has an identity block on the information set, so rank(G) = k
    S = c.standard_form()
    assert np.array_equal(S[:, :11], np.eye(11, dtype=S.dtype))

    c84 = ConstacyclicCode.from_defining_set(F3, 8, {0, 1, 3, 4})
    assert c84.parity_check_matrix().shape == (4, 8)


def test_generator_matrix_rows_are_shifts_of_g():
    c = _example_15_11()
    G = c.generator_matrix()
    g_coeffs = list(c.g.coeffs)
    for i in range(c.k):
        row = [0] * i + g_coeffs + [0] * (15 - i - len(g_coeffs))
        assert list(G[i]) == row


def test_degenerate_codes_rejected():
    full = ConstacyclicCode.from_defining_set(F5, 6, set())
    with pytest.raises(errors.DegenerateCodeError):
        full.parity_check_matrix()
    zero = ConstacyclicCode.from_generator(F5, 6, 1, poly.binomial(F5, 6, 1))
    assert zero.k == 0
    with pytest.raises(errors.ZeroCodeError):
        code.min_hamming_distance(zero)
    with pytest.raises(errors.ZeroCodeError):
        code.min_pair_distance(zero)


def test_codewords_enumerates_whole_code():
    c = ConstacyclicCode.from_defining_set(F3, 8, {0, 1, 3, 4})
    words = list(c.codewords())
    assert len(words) == 3**4
    assert len(set(words)) == 3**4
    assert all(c.is_member(w) for w in words)


def test_sharded_runs_match_single_job():
    c = _example_15_11()
    lone = code.min_pair_distance(c, "bounded", jobs=1)
    sharded = code.min_pair_distance(c, "bounded", jobs=3)
    assert (lone.value, lone.certified, lone.enumeration_count) == (
        sharded.value,
        sharded.certified,
        sharded.enumeration_count,
    )


def test_as_word_validates_symbols():
    assert code.as_word(F5, [1, 2, 3]) == (1, 2, 3)
    with pytest.raises(errors.BadParameterError):
        code.as_word(F5, [1, 5])


def test_is_simple_root_and_is_cyclic_flags():
    assert _example_24_3().is_simple_root
    assert _example_24_3().is_cyclic
    assert not _example_15_11().is_simple_root
    assert _example_15_11().is_cyclic
    neg_g = poly.factor(poly.binomial(F5, 8, 2)).factors[0][0]
    neg = ConstacyclicCode.from_generator(F5, 8, 2, neg_g)
    assert not neg.is_cyclic
    assert neg.defining_set() is None
