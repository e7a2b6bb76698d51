import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobseries.series import (
    EXACT,
    CoefficientRing,
    TruncatedSeries,
    add,
    coefficient,
    invert,
    make_series,
    mul,
    negate,
    pentagonal_series,
    pochhammer,
    reduce_mod,
    triangular_cube_series,
)


def test_coefficient_ring_rejects_small_modulus():
    with pytest.raises(ValueError):
        CoefficientRing(1)
    with pytest.raises(ValueError):
        CoefficientRing(0)


def test_make_series_constant_one():
    s = make_series(EXACT, 3, [1])
    assert s.coeffs == (1, 0, 0, 0)


def test_make_series_modular_reduction():
    s = make_series(CoefficientRing(5), 2, [7, -1])
    assert s.coeffs == (2, 4, 0)


def test_make_series_empty_is_zero():
    assert make_series(EXACT, 0, []).coeffs == (0,)


def test_make_series_rejects_overlong():
    with pytest.raises(ValueError):
        make_series(EXACT, 1, [1, 2, 3])


def test_add_cancellation():
    a = make_series(EXACT, 1, [1, -1])
    b = make_series(EXACT, 1, [0, 1])
    assert add(a, b).coeffs == (1, 0)


def test_add_additive_inverse():
    p = pentagonal_series(EXACT, 7)
    assert add(p, negate(p)).is_zero()


def test_add_characteristic_two():
    ring = CoefficientRing(2)
    a = make_series(ring, 1, [1, 1])
    assert add(a, a).is_zero()


def test_add_rejects_mismatch():
    with pytest.raises(ValueError):
        add(make_series(EXACT, 2, [1]), make_series(EXACT, 3, [1]))
    with pytest.raises(ValueError):
        add(make_series(EXACT, 2, [1]), make_series(CoefficientRing(2), 2, [1]))


def test_mul_telescoping():
    a = make_series(EXACT, 3, [1, -1])
    b = make_series(EXACT, 3, [1, 1, 1, 1])
    assert mul(a, b).coeffs == (1, 0, 0, 0)


def test_mul_jacobi_cube():
    p = pentagonal_series(EXACT, 12)
    assert mul(mul(p, p), p) == triangular_cube_series(EXACT, 12)


def test_invert_geometric():
    a = make_series(EXACT, 4, [1, -1])
    assert invert(a).coeffs == (1, 1, 1, 1, 1)


def test_invert_pentagonal_gives_partition_numbers():
    # oracle: brute-force partition counts for n <= 10
    assert invert(pentagonal_series(EXACT, 10)).coeffs == (
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42,
    )


def test_invert_rejects_non_unit():
    with pytest.raises(ValueError):
        invert(make_series(EXACT, 2, [2]))
    with pytest.raises(ValueError):
        invert(make_series(CoefficientRing(6), 2, [3]))


def test_pochhammer_euler():
    got = pochhammer(EXACT, 7, 1, 1)
    assert got.coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_pochhammer_empty_window():
    assert pochhammer(EXACT, 2, 3, 3).coeffs == (1, 0, 0)


def test_pochhammer_even_steps():
    # (1-q^2)(1-q^4)(1-q^6) truncated at 6: the q^2*q^4 cross term cancels
    # the -q^6 factor term, so the q^6 coefficient is 0
    assert pochhammer(EXACT, 6, 2, 2).coeffs == (1, 0, -1, 0, -1, 0, 0)
    # doubled pentagonal exponents appear once the window is wide enough
    assert pochhammer(EXACT, 14, 2, 2) == make_series(
        EXACT, 14, [1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]
    )


def test_pochhammer_rejects_zero_parameters():
    with pytest.raises(ValueError):
        pochhammer(EXACT, 5, 0, 1)
    with pytest.raises(ValueError):
        pochhammer(EXACT, 5, 1, 0)


def test_pentagonal_series_small():
    assert pentagonal_series(EXACT, 7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)


def test_pentagonal_series_k_three_terms():
    s = pentagonal_series(EXACT, 15)
    assert s.coefficient(12) == -1
    assert s.coefficient(15) == -1


def test_pentagonal_series_trivial():
    assert pentagonal_series(EXACT, 0).coeffs == (1,)


def test_pentagonal_support_is_signed_units():
    for n in (10, 50, 199):
        s = pentagonal_series(EXACT, n)
        pentagonals = set()
        k = 0
        while (3 * k * k - k) // 2 <= n or (3 * k * k + k) // 2 <= n:
            for g in ((3 * k * k - k) // 2, (3 * k * k + k) // 2):
                if g <= n:
                    pentagonals.add(g)
            k += 1
        assert set(s.support()) == pentagonals
        assert all(s.coefficient(g) in (1, -1) for g in pentagonals)


def test_triangular_cube_series():
    s = triangular_cube_series(EXACT, 10)
    assert s.coeffs == (1, -3, 0, 5, 0, 0, -7, 0, 0, 0, 9)
    assert triangular_cube_series(EXACT, 0).coeffs == (1,)


def test_triangular_cube_mod_two_is_theta():
    s = reduce_mod(triangular_cube_series(EXACT, 10), 2)
    assert s.coeffs == (1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1)


def test_reduce_mod():
    a = make_series(EXACT, 3, [1, -3, 0, 5])
    assert reduce_mod(a, 2).coeffs == (1, 1, 0, 1)
    assert reduce_mod(make_series(EXACT, 4), 7).is_zero()
    got = reduce_mod(triangular_cube_series(EXACT, 6), 5)
    assert got.coeffs == (1, 2, 0, 0, 0, 0, 3)


def test_reduce_mod_rejects_bad_inputs():
    with pytest.raises(ValueError):
        reduce_mod(make_series(EXACT, 1, [1]), 1)
    with pytest.raises(ValueError):
        reduce_mod(make_series(CoefficientRing(3), 1, [1]), 2)


def test_coefficient_access():
    p = pentagonal_series(EXACT, 7)
    assert coefficient(p, 5) == 1
    assert coefficient(p, 3) == 0
    with pytest.raises(IndexError):
        coefficient(p, 8)
    with pytest.raises(IndexError):
        coefficient(p, -1)


# ---------------------------------------------------------------------------
# property tests


rings = st.one_of(
    st.just(EXACT),
    st.integers(min_value=2, max_value=97).map(CoefficientRing),
)


@st.composite
def series_pair(draw, count=2, unit_constant=False):
    ring = draw(rings)
    n = draw(st.integers(min_value=0, max_value=64))
    out = []
    for _ in range(count):
        coeffs = draw(
            st.lists(
                st.integers(min_value=-1000, max_value=1000),
                max_size=n + 1,
            )
        )
        if unit_constant:
            if ring.is_modular:
                unit = draw(
                    st.integers(min_value=1, max_value=ring.modulus - 1).filter(
                        lambda u: _coprime(u, ring.modulus)
                    )
                )
            else:
                unit = draw(st.sampled_from([1, -1]))
            coeffs = [unit] + coeffs[1:]
        out.append(make_series(ring, n, coeffs))
    return out


def _coprime(a, b):
    while b:
        a, b = b, a % b
    return a == 1


@settings(max_examples=60)
@given(series_pair(count=2))
def test_mul_commutes(pair):
    a, b = pair
    assert mul(a, b) == mul(b, a)


@settings(max_examples=60)
@given(series_pair(count=3))
def test_ring_axioms(triple):
    a, b, c = triple
    assert add(a, b) == add(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@settings(max_examples=60)
@given(series_pair(count=1, unit_constant=True))
def test_invert_is_right_inverse(single):
    (a,) = single
    one = make_series(a.ring, a.truncation, [1])
    assert mul(a, invert(a)) == one
    assert invert(invert(a)) == a
