import pytest

from syzex.algebra import AlgebraSpec, build_algebra


def kron2_spec(p=2):
    return AlgebraSpec(
        p,
        ["0", "1"],
        [{"name": "x0", "from": "0", "to": "1"}, {"name": "x1", "from": "0", "to": "1"}],
        [],
    )


def beilinson2_spec(p=2):
    arrows = []
    for l in (1, 2):
        for i in range(3):
            arrows.append({"name": "x%d_%d" % (i, l), "from": str(l - 1), "to": str(l)})
    relations = []
    for i in range(3):
        for j in range(i + 1, 3):
            relations.append(
                [
                    {"coeff": 1, "path": ["x%d_1" % i, "x%d_2" % j]},
                    {"coeff": -1, "path": ["x%d_1" % j, "x%d_2" % i]},
                ]
            )
    return AlgebraSpec(p, ["0", "1", "2"], arrows, relations)


def fivevertex_spec(p=2):
    arrows = [
        {"name": "alpha", "from": "2", "to": "1"},
        {"name": "beta1", "from": "3", "to": "2"},
        {"name": "beta2", "from": "4", "to": "2"},
        {"name": "beta3", "from": "5", "to": "2"},
    ]
    relations = [[{"coeff": 1, "path": ["beta%d" % i, "alpha"]}] for i in (1, 2, 3)]
    return AlgebraSpec(p, ["1", "2", "3", "4", "5"], arrows, relations)


def semisimple3_spec(p=2):
    return AlgebraSpec(p, ["a", "b", "c"], [], [])


def dualnumbers_spec(p=2):
    return AlgebraSpec(
        p, ["1"], [{"name": "x", "from": "1", "to": "1"}], [[{"coeff": 1, "path": ["x", "x"]}]]
    )


@pytest.fixture(scope="session")
def kron2():
    return build_algebra(kron2_spec())


@pytest.fixture(scope="session")
def beilinson2():
    return build_algebra(beilinson2_spec())


@pytest.fixture(scope="session")
def fivevertex():
    return build_algebra(fivevertex_spec())


@pytest.fixture(scope="session")
def semisimple3():
    return build_algebra(semisimple3_spec())


@pytest.fixture(scope="session")
def dualnumbers():
    return build_algebra(dualnumbers_spec())
