import pytest

from chordedit.graph import Graph


def cycle(n, start=0):
    vs = list(range(start, start + n))
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path(n, start=0):
    return Graph(range(start, start + n), [(i, i + 1) for i in range(start, start + n - 1)])


def complete(n, start=0):
    vs = range(start, start + n)
    return Graph(vs, [(u, v) for u in vs for v in vs if u < v])


@pytest.fixture
def c4():
    return cycle(4, 1)


@pytest.fixture
def c5():
    return cycle(5, 1)
