from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spaceform import A0, A2, canonicalize, identity_even, multiply_even, odd
from spaceform.monoid_even import is_unit


class TestCanonicalize:
    def test_multiples_of_four_collapse(self):
        assert canonicalize(8) is A0
        assert canonicalize(0) is A0
        assert canonicalize(-12) is A0

    def test_twos_mod_four_collapse(self):
        assert canonicalize(6) is A2
        assert canonicalize(2) is A2
        assert canonicalize(-2) is A2

    def test_odd_keeps_value(self):
        assert canonicalize(7) == odd(7)
        assert canonicalize(-3) == odd(-3)
        assert canonicalize(7) != canonicalize(9)

    def test_odd_rejects_even_payload(self):
        with pytest.raises(ValueError):
            odd(4)


class TestMultiply:
    def test_even_times_even_is_a0(self):
        for x, y in product((A0, A2), repeat=2):
            assert multiply_even(x, y) is A0

    def test_even_absorbs_odd(self):
        for x in (A0, A2):
            for k in (-5, -1, 1, 3, 9):
                assert multiply_even(x, odd(k)) is x
                assert multiply_even(odd(k), x) is x

    def test_odd_times_odd(self):
        assert multiply_even(odd(3), odd(5)) == odd(15)
        assert multiply_even(odd(-3), odd(5)) == odd(-15)

    def test_identity(self):
        e = identity_even()
        for x in (A0, A2, odd(9), odd(-7)):
            assert multiply_even(e, x) == x
            assert multiply_even(x, e) == x

    def test_units_are_plus_minus_one(self):
        assert is_unit(odd(1)) and is_unit(odd(-1))
        assert not is_unit(odd(3))
        assert not is_unit(A0) and not is_unit(A2)


class TestQuotientStructure:
    def test_well_defined_on_classes(self):
        # canonicalize(x*y) must depend only on the classes of x and y
        reps = range(-200, 201)
        seen: dict[tuple, object] = {}
        for x in reps:
            cx = canonicalize(x)
            key_x = cx if cx.tag != "odd" else ("odd", cx.k)
            for y in reps:
                cy = canonicalize(y)
                key_y = cy if cy.tag != "odd" else ("odd", cy.k)
                key = (key_x, key_y)
                result = canonicalize(x * y)
                if key in seen:
                    assert seen[key] == result
                else:
                    seen[key] = result

    def test_class_table_matches_integer_multiplication_window(self):
        for a in range(-300, 301):
            ca = canonicalize(a)
            for b in range(-300, 301):
                assert multiply_even(ca, canonicalize(b)) == canonicalize(a * b)

    def test_commutative_and_associative(self):
        sample = [A0, A2, odd(-3), odd(-1), odd(1), odd(5), odd(9)]
        for x, y in product(sample, repeat=2):
            assert multiply_even(x, y) == multiply_even(y, x)
        for x, y, z in product(sample, repeat=3):
            assert multiply_even(multiply_even(x, y), z) == multiply_even(
                x, multiply_even(y, z)
            )

    @given(st.integers(), st.integers())
    def test_canonicalize_is_a_homomorphism(self, a, b):
        assert multiply_even(canonicalize(a), canonicalize(b)) == canonicalize(a * b)
