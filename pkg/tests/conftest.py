from fractions import Fraction

import pytest
from hypothesis import strategies as st

from jack_graph import clear_memo, configure_memo, set_store
from kappa_field import KField


def fractions(max_value: int = 6, max_denominator: int = 5):
    return st.fractions(min_value=-max_value, max_value=max_value, max_denominator=max_denominator)


def kfields(max_degree: int = 2):
    """
    Small rational functions with a nonzero denominator
    """
    coefficients = st.lists(fractions(), min_size=0, max_size=max_degree + 1)
    denominators = st.lists(fractions(), min_size=1, max_size=max_degree + 1).filter(lambda d: any(d))
    return st.builds(KField, coefficients, denominators)


def nonzero_kfields(max_degree: int = 2):
    return kfields(max_degree).filter(bool)


@st.composite
def subsets(draw, N: int, size: int | None = None):
    """
    A subset of 1..N as a sorted tuple of positions
    """
    if size is None:
        size = draw(st.integers(min_value=0, max_value=N))
    return tuple(sorted(draw(st.permutations(range(1, N + 1)))[:size]))


@pytest.fixture(autouse=True)
def fresh_memo():
    clear_memo()
    configure_memo(4096)
    set_store(None)
    yield
    set_store(None)


@pytest.fixture
def generic_point():
    return Fraction(1, 97)
