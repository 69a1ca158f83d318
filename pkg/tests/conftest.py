import pathlib

import pytest

from condorcet.generate import generate_domain
from condorcet.model import Domain, parse_order
from condorcet.schemes import fishburn_scheme, named_set, set_alternating_scheme

DATA = pathlib.Path(__file__).parent / "data"

# a maximal, connected, maximum-width peak-pit domain on six alternatives
# that admits no bipartition at all; used in several places
NONBIPARTITE_19 = [
    "123456", "123546", "123564", "125346", "125364", "125634", "152346",
    "152364", "152634", "156234", "165234", "615234", "651234", "652134",
    "652314", "652341", "652431", "654231", "654321",
]

# single-crossing on four alternatives: maximal Condorcet domain with no
# midpoint bipartition under any axis
SINGLE_CROSSING_7 = ["1423", "3241", "3421", "4123", "4213", "4231", "4321"]


@pytest.fixture(scope="session")
def even6():
    return generate_domain(set_alternating_scheme(named_set("even", 6), 6))


@pytest.fixture(scope="session")
def fishburn8():
    return generate_domain(fishburn_scheme(8))


@pytest.fixture(scope="session")
def fixture19():
    return Domain([parse_order(o) for o in NONBIPARTITE_19])


@pytest.fixture(scope="session")
def single_crossing():
    return Domain([parse_order(o) for o in SINGLE_CROSSING_7])
