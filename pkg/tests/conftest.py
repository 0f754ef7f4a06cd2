import pytest

from HomCat.core import MPoly, Var
from HomCat.Presentations.ringPres import present_web
from HomCat.Webs.resolutions import moy_axiom_webs


@pytest.fixture(scope = "session")
def webs():
    return moy_axiom_webs()


@pytest.fixture(scope = "session")
def presentations(webs):
    cache = {}
    def get(name):
        if name not in cache:
            cache[name] = present_web(webs[name], name = name)
        return cache[name]
    return get


@pytest.fixture
def xy():
    x, y = Var("x", 2), Var("y", 2)
    return x, y, MPoly.variable(x), MPoly.variable(y)
