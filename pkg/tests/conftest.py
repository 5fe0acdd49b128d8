"""Shared fixtures: the worked example polynomials and their frozen data."""

from __future__ import annotations

import pytest

from f2rep import parse_poly

# Cofactor exponent sets of the two degree-9/10 worked examples, frozen from
# the published expansions of (1 + x^63)/(1 + x + x^7 + x^9) and
# (1 + x^73)/(1 + x + x^8 + x^10).
F31_STAR_EXPONENTS = (
    54, 52, 50, 48, 45, 44, 41, 40, 38, 37, 36, 34, 33, 32, 27, 26, 25, 24,
    22, 20, 19, 18, 17, 16, 13, 12, 11, 10, 9, 8, 6, 5, 4, 3, 2, 1, 0,
)

F32_STAR_EXPONENTS = (
    63, 61, 59, 57, 55, 54, 51, 50, 47, 46, 45, 43, 42, 41, 39, 38, 37, 36,
    31, 30, 29, 28, 27, 25, 23, 22, 21, 20, 19, 18, 15, 14, 13, 12, 11, 10,
    9, 7, 6, 5, 4, 3, 2, 1, 0,
)


@pytest.fixture(scope="session")
def f31():
    return parse_poly("x^9 + x^7 + x + 1")


@pytest.fixture(scope="session")
def f32():
    return parse_poly("x^10 + x^8 + x + 1")
