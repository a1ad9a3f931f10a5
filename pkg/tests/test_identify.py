import pytest

from spaceform import element_order, make_cyclic, make_generalized_quaternion
from spaceform.identify import identify_group


def profile(g):
    return tuple(element_order(g, x) for x in range(g.order))


class TestIdentifyGroup:
    @pytest.mark.parametrize("m", range(1, 17))
    def test_cyclic(self, m):
        g = make_cyclic(m)
        assert identify_group(m, True, profile(g)) == f"C{m}"

    def test_klein_four(self):
        assert identify_group(4, True, (1, 2, 2, 2)) == "C2 x C2"

    def test_q8(self):
        g = make_generalized_quaternion(8)
        assert identify_group(8, False, profile(g)) == "Q8"

    def test_q16(self):
        g = make_generalized_quaternion(16)
        assert identify_group(16, False, profile(g)) == "Q16"

    def test_unknown_profile(self):
        assert identify_group(8, False, (1,) * 8) == "unrecognized"

    def test_large_order(self):
        assert identify_group(24, True, ()) == "unrecognized (order > 16)"
