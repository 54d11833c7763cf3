"""Distance pipeline: dual spectrum, MacWilliams step, and the brute-force oracle."""

import math
import random

import numpy as np
import pytest

from crcsieve.distance import (
    BRUTE_FORCE_MAX_DIM,
    DistanceEngine,
    brute_force_min_distance,
    dual_weight_distribution,
    fwht_inplace,
    krawtchouk,
    min_distance,
    residues,
)
from crcsieve.gf2poly import Gf2Poly, mulx_mod, order, parse_hex


def rand_poly(rng, lo, hi):
    p = rng.randint(lo, hi)
    return Gf2Poly((1 << p) | (rng.getrandbits(p - 1) << 1) | 1)


def test_krawtchouk_point_value():
    assert krawtchouk(2, 3, 7) == -3


def test_krawtchouk_edge_rows():
    for n in range(1, 9):
        for i in range(n + 1):
            assert krawtchouk(i, 0, n) == math.comb(n, i)
        for w in range(n + 1):
            assert krawtchouk(0, w, n) == 1


def test_krawtchouk_row_sums():
    # sum_i K_i(w; n) x^i = (1+x)^(n-w) (1-x)^w, evaluated at x = 1
    for n in range(1, 10):
        for w in range(n + 1):
            total = sum(krawtchouk(i, w, n) for i in range(n + 1))
            assert total == (2**n if w == 0 else 0)


def test_krawtchouk_orthogonality():
    n = 9
    for i in range(n + 1):
        for j in range(i, n + 1):
            s = sum(
                math.comb(n, w) * krawtchouk(i, w, n) * krawtchouk(j, w, n)
                for w in range(n + 1)
            )
            assert s == (2**n * math.comb(n, i) if i == j else 0)


def test_krawtchouk_range_checks():
    with pytest.raises(ValueError):
        krawtchouk(-1, 0, 5)
    with pytest.raises(ValueError):
        krawtchouk(0, 6, 5)
    with pytest.raises(ValueError):
        krawtchouk(6, 0, 5)


def test_fwht_is_an_involution_up_to_scale():
    rng = random.Random(3)
    for k in range(7):
        a = np.array([rng.randint(-50, 50) for _ in range(1 << k)], dtype=np.int64)
        b = a.copy()
        fwht_inplace(b)
        assert b[0] == a.sum()
        fwht_inplace(b)
        assert np.array_equal(b, a * (1 << k))


def test_fwht_rejects_non_power_of_two():
    with pytest.raises(ValueError):
        fwht_inplace(np.zeros(3, dtype=np.int64))


def test_residue_columns_match_scalar_iteration():
    g = parse_hex("93f")
    cols = residues(g, 40)
    r = 1
    for c in cols.tolist():
        assert c == r
        r = mulx_mod(r, g)


def test_hamming_code_dual_spectrum():
    # x^3 + x + 1 at n = 7: the dual of the Hamming code is the simplex code
    g = Gf2Poly(0xB)
    b = dual_weight_distribution(g, 7)
    assert b.tolist() == [1, 0, 0, 0, 7, 0, 0, 0]
    assert min_distance(g, 7) == 3
    assert brute_force_min_distance(g, 7) == 3


def test_dual_spectrum_counts_whole_dual_code():
    rng = random.Random(4)
    for _ in range(30):
        g = rand_poly(rng, 2, 10)
        n = g.degree + rng.randint(1, 10)
        b = dual_weight_distribution(g, n)
        assert b.sum() == 1 << g.degree
        assert b[0] == 1


@pytest.mark.parametrize(
    "text,n,expect",
    [
        ("b", 7, 3),
        ("b", 8, 2),
        ("1a2eb", 17, 10),
        ("1a2eb", 20, 8),
        ("1a2eb", 100, 6),
        ("1a2eb", 512, 4),
        ("158ff", 17, 12),
    ],
)
def test_min_distance_known_points(text, n, expect):
    assert min_distance(parse_hex(text), n) == expect


def test_distance_two_exactly_beyond_the_order():
    rng = random.Random(9)
    for _ in range(40):
        g = rand_poly(rng, 2, 9)
        n_c = order(g)
        engine = DistanceEngine(g, order=n_c)
        for n in range(g.degree + 1, min(n_c + 3, g.degree + 30) + 1):
            assert (engine.min_distance(n) == 2) == (n > n_c)


def test_distance_is_monotone_in_length():
    rng = random.Random(10)
    for _ in range(25):
        g = rand_poly(rng, 4, 10)
        engine = DistanceEngine(g)
        prev = None
        for n in range(g.degree + 1, min(engine.order, g.degree + 40) + 1):
            d = engine.min_distance(n)
            assert prev is None or d <= prev
            prev = d


def test_distance_at_shortest_length_is_the_generator_weight():
    # at n = p + 1 the code is {0, g}
    rng = random.Random(11)
    for _ in range(60):
        g = rand_poly(rng, 2, 14)
        assert min_distance(g, g.degree + 1) == g.weight


def primal_distribution(g, n):
    """A[0..n] from the dual spectrum, exact integers."""
    b = dual_weight_distribution(g, n)
    support = [(w, int(bw)) for w, bw in enumerate(b.tolist()) if bw]
    out = []
    for i in range(n + 1):
        s = sum(bw * krawtchouk(i, w, n) for w, bw in support)
        q, r = divmod(s, 1 << g.degree)
        assert r == 0 and q >= 0, (g, n, i, s)
        out.append(q)
    return out


def test_macwilliams_distribution_is_a_code_spectrum():
    rng = random.Random(12)
    for _ in range(20):
        g = rand_poly(rng, 3, 8)
        n = g.degree + rng.randint(1, 8)
        a = primal_distribution(g, n)
        assert a[0] == 1
        assert sum(a) == 1 << (n - g.degree)
        d = min_distance(g, n)
        assert a[d] > 0
        assert all(x == 0 for x in a[1:d])


def test_transform_route_matches_brute_force():
    rng = random.Random(0xC0DE)
    for _ in range(150):
        g = rand_poly(rng, 4, 10)
        n = g.degree + rng.randint(1, 14)
        assert min_distance(g, n) == brute_force_min_distance(g, n), (g.to_hex(), n)


def test_engine_counts_transforms_and_skips_them_beyond_order():
    engine = DistanceEngine(parse_hex("1a2eb"))
    assert engine.order == 32767
    assert engine.eval_count == 0
    engine.min_distance(17)
    engine.min_distance(18)
    assert engine.eval_count == 2
    assert engine.min_distance(40000) == 2
    assert engine.eval_count == 2


def test_engine_shared_scratch():
    scratch = np.empty(1 << 11, dtype=np.int32)
    a = DistanceEngine(parse_hex("93f"), scratch=scratch)
    b = DistanceEngine(parse_hex("e21"), scratch=scratch)
    assert a.min_distance(12) == Gf2Poly(0x93F).weight
    assert b.min_distance(12) == Gf2Poly(0xE21).weight


def test_engine_rejects_bad_scratch():
    with pytest.raises(ValueError):
        DistanceEngine(Gf2Poly(0x93F), scratch=np.zeros(100, dtype=np.int32))
    with pytest.raises(ValueError):
        DistanceEngine(Gf2Poly(0x93F), scratch=np.zeros(1 << 11, dtype=np.int64))


def test_length_validation():
    g = Gf2Poly(0x93F)
    with pytest.raises(ValueError):
        min_distance(g, g.degree)
    with pytest.raises(ValueError):
        dual_weight_distribution(g, 5)


def test_brute_force_dimension_cap():
    g = Gf2Poly(0xB)
    with pytest.raises(ValueError):
        brute_force_min_distance(g, g.degree + BRUTE_FORCE_MAX_DIM + 1)


def test_brute_force_wide_word_path():
    # lengths past 64 bits take the plain-integer path; keep it consistent
    # with the packed path across the boundary
    g = Gf2Poly((1 << 62) | 0xB)
    d63 = brute_force_min_distance(g, 63)
    d64 = brute_force_min_distance(g, 64)
    d66 = brute_force_min_distance(g, 66)
    assert d63 == g.weight
    assert d63 >= d64 >= d66 >= 1
    wrap = Gf2Poly((1 << 55) | 1)  # order 55, so weight 2 appears at n = 56
    assert brute_force_min_distance(wrap, 70) == 2
