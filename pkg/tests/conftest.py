import pytest

from girthlab.geometry import gq_w3, incidence_graph, pg2_incidence


@pytest.fixture(scope="session")
def heawood():
    return incidence_graph(pg2_incidence(2))


@pytest.fixture(scope="session")
def tutte_coxeter():
    return incidence_graph(gq_w3(2))
