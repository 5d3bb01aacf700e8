import os
import sys

import pytest
from hypothesis import settings

from superwedge.indexset import Shape

sys.path.insert(0, os.path.dirname(__file__))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GRID = [
    Shape((1,), (0,), eps)
    for eps in (0, 1)
] + [
    Shape((1,), (1,), eps) for eps in (0, 1)
] + [
    Shape((1, 1), (0, 1), eps) for eps in (0, 1)
] + [
    Shape((2,), (0,), eps) for eps in (0, 1)
]

S0 = Shape((1,), (0,), 0)


def shape_id(shape):
    return f"n{''.join(map(str, shape.n))}c{''.join(map(str, shape.c))}e{shape.epsilon}"


@pytest.fixture(params=GRID, ids=shape_id)
def shape(request):
    return request.param
