from fractions import Fraction

import pytest

from rmbispec.qseries import Params


@pytest.fixture
def P():
    """Default generic parameters used throughout the verification suites."""
    return Params(Fraction(2, 7), Fraction(3, 5), generic=True)


@pytest.fixture
def P13():
    return Params(Fraction(1, 3), Fraction(1, 2))
