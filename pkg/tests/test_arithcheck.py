import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopflift import arithcheck as ac
from hopflift._ntheory import primes_upto, totient
from hopflift.errors import DimensionTooSmall, NonConstantProduct, NotRealAtRoot


class TestCyclotomic:
    def test_examples(self):
        assert ac.cyclotomic(4).coeffs == (1, 0, 1)  # x^2 + 1
        assert ac.cyclotomic(6).coeffs == (1, -1, 1)  # x^2 - x + 1
        assert ac.cyclotomic(1).coeffs == (-1, 1)  # x - 1

    def test_against_sympy(self):
        sympy = pytest.importorskip("sympy")
        x = sympy.symbols("x")
        for r in list(range(1, 40)) + [105]:  # 105 has coefficients beyond {0,+-1}
            want = sympy.Poly(sympy.cyclotomic_poly(r, x), x).all_coeffs()[::-1]
            assert list(ac.cyclotomic(r).coeffs) == [int(c) for c in want]

    def test_product_identity(self):
        for r in range(1, 201):
            prod = ac.IntPolynomial.of([1])
            for d in range(1, r + 1):
                if r % d == 0:
                    prod = prod * ac.cyclotomic(d)
            want = ac.IntPolynomial.of([-1] + [0] * (r - 1) + [1])
            assert prod == want

    def test_degree_is_totient(self):
        for r in range(1, 120):
            assert ac.cyclotomic(r).degree == totient(r)


class TestConjugateProduct:
    def test_spec_values(self):
        assert ac.conjugate_product([2, 1, 1], 3) == 1
        assert ac.conjugate_product([1, 1, 0, 1], 4) == 1
        assert ac.conjugate_product([0, 1, 0, 1], 4) == 0  # P(i) = 0

    def test_rejects_asymmetric(self):
        with pytest.raises(NotRealAtRoot):
            ac.conjugate_product([0, 1, 0, 0], 5)  # P = x is not real at zeta_5

    def test_small_r_rejected(self):
        with pytest.raises(ValueError):
            ac.conjugate_product([1, 1], 2)

    def test_invariant_under_reduction_mod_xr_minus_1(self):
        # adding x^r * h(x) leaves N unchanged (here h = 5, so x^3*5 folds to degree 0)
        assert ac.conjugate_product([2, 1, 1, 5], 3) == ac.conjugate_product([7, 1, 1], 3)
        # and more legs: x^4 * 2 folds onto degree 1, mirrored at degree 2 by x^5 * 2
        assert ac.conjugate_product([2, 1, 1, 0, 2, 2], 3) == ac.conjugate_product([2, 3, 3], 3)

    def test_norm_of_symmetric_quadratic(self):
        # P = a + b x + b x^2 ... + b x^{r-1}? keep simple: P = c constant: N = c^{phi/2}
        for r in (3, 4, 5, 6):
            phi = totient(r)
            assert ac.conjugate_product([3], r) == 3 ** (phi // 2)


class TestLemma41:
    def test_example_r3_p7(self):
        rep = ac.lemma41([2, 1, 1], 3, 7)
        assert rep.bound == 4 and rep.N == 1
        assert rep.p_exceeds_bound and rep.p_coprime_to_r and not rep.p_divides_N
        assert rep.conclusion == "nonvanishing-guaranteed"
        assert rep.gcd_with_cyclotomic_trivial

    def test_example_r4_p5(self):
        rep = ac.lemma41([1, 1, 0, 1], 4, 5)
        assert rep.bound == 3
        assert rep.conclusion == "nonvanishing-guaranteed"
        assert rep.gcd_with_cyclotomic_trivial

    def test_inapplicable_p_divides_r(self):
        rep = ac.lemma41([2, 1, 1], 3, 3)
        assert rep.conclusion == "inapplicable"
        assert rep.gcd_with_cyclotomic_trivial is None

    def test_vanishing_poly_never_guaranteed(self):
        rep = ac.lemma41([0, 1, 0, 1], 4, 101)
        assert rep.N == 0 and rep.p_divides_N
        assert rep.conclusion == "not-guaranteed"

    def test_agreement_on_primes_up_to_100(self):
        for p in primes_upto(100):
            for coeffs, r in [([2, 1, 1], 3), ([1, 1, 0, 1], 4)]:
                if p % r == 0 or math.gcd(p, r) != 1:
                    continue
                rep = ac.lemma41(coeffs, r, p)
                if rep.conclusion == "nonvanishing-guaranteed":
                    assert rep.gcd_with_cyclotomic_trivial


@settings(max_examples=120, deadline=None)
@given(st.data())
def test_random_symmetric_bound_and_agreement(data):
    r = data.draw(st.integers(3, 24))
    half = data.draw(st.lists(st.integers(-4, 4), min_size=(r // 2) + 1, max_size=(r // 2) + 1))
    coeffs = [0] * r
    coeffs[0] = half[0]
    for l in range(1, r // 2 + 1):
        coeffs[l] = half[l]
        coeffs[r - l] = half[l]
    n_val = ac.conjugate_product(coeffs, r)
    d_sum = sum(abs(c) for c in coeffs)
    phi = totient(r)
    assert abs(n_val) ** 2 <= max(d_sum, 1) ** phi or (n_val == 0)
    p = data.draw(st.sampled_from([5, 7, 11, 101, 9973]))
    if math.gcd(p, r) == 1:
        rep = ac.lemma41(coeffs, r, p)
        if rep.conclusion == "nonvanishing-guaranteed":
            assert rep.gcd_with_cyclotomic_trivial


class TestThreshold:
    def test_spot_values(self):
        assert ac.kaplansky_threshold(6) == (6, 2)
        assert ac.kaplansky_threshold(4) == (4, 2)
        assert ac.kaplansky_threshold(8) == (64, 4)

    def test_formula_range(self):
        for d in range(3, 31):
            thr, phi = ac.kaplansky_threshold(d)
            assert phi % 2 == 0
            assert thr == d ** (phi // 2)

    def test_too_small(self):
        with pytest.raises(DimensionTooSmall):
            ac.kaplansky_threshold(2)
