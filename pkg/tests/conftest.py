import pytest

from mhl import core
from mhl.core import build_matroid
from mhl.fixtures import p3_match, pair_u, star2, triangle

# one modest fixture pair per spec family, all with ground size <= 7,
# used by the exhaustive axiom checks
FAMILY_SPECS = {
    "uniform": core.uniform(6, 3),
    "partition": core.partition([[0, 1, 2], [3, 4], [5, 6]], [2, 1, 0]),
    "graphic": core.graphic(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 1)]),
    "linear_gf2": core.linear_gf2([(1, 0, 0), (0, 1, 0), (1, 1, 0),
                                   (0, 0, 1), (1, 1, 1), (0, 0, 0)]),
    "direct_sum": core.direct_sum_spec(core.uniform(3, 1),
                                       core.graphic(3, [(0, 1), (1, 2), (2, 0)])),
    "minor": core.minor_spec(core.graphic(4, [(0, 1), (1, 2), (2, 3), (3, 0),
                                              (0, 2), (1, 3)]),
                             "contract", {5}),
}


@pytest.fixture(params=sorted(FAMILY_SPECS))
def family_oracle(request):
    return build_matroid(FAMILY_SPECS[request.param])


@pytest.fixture
def k3():
    return triangle()


@pytest.fixture
def fixtures_pairs():
    return {
        "p3": p3_match(),
        "star2": star2(),
        "pair_u": pair_u(),
    }
