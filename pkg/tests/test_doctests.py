"""Run the docstring examples shipped with each module."""

import doctest

import pytest

import jointdigits.dependence
import jointdigits.digits
import jointdigits.image
import jointdigits.torus
import jointdigits.witness


@pytest.mark.parametrize(
    "module",
    [
        jointdigits.digits,
        jointdigits.dependence,
        jointdigits.image,
        jointdigits.witness,
        jointdigits.torus,
    ],
)
def test_module_doctests(module):
    result = doctest.testmod(module, verbose=False)
    assert result.failed == 0
    assert result.attempted > 0
