"""Small named instances shared by tests, docs, and quick experiments."""

from __future__ import annotations

from . import core
from .core import MatroidOracle, build_matroid
from .instances import InstanceFile, build_pair


def u24() -> MatroidOracle:
    return build_matroid(core.uniform(4, 2))


def u12() -> MatroidOracle:
    return build_matroid(core.uniform(2, 1))


def triangle() -> MatroidOracle:
    """Graphic matroid of the 3-cycle: edges 0=ab, 1=bc, 2=ca."""
    return build_matroid(core.graphic(3, [(0, 1), (1, 2), (2, 0)]))


def free(n: int) -> MatroidOracle:
    return build_matroid(core.uniform(n, n))


def loops(n: int) -> MatroidOracle:
    return build_matroid(core.uniform(n, 0))


def p3_match_instance() -> InstanceFile:
    """Three elements; both sides are two-block partition matroids with unit
    capacities. The unique maximum common independent set is {e0, e2}."""
    return InstanceFile(
        ground_size=3,
        m_spec=core.partition([[0], [1, 2]], [1, 1]),
        n_spec=core.partition([[0, 1], [2]], [1, 1]),
        labels=("e0", "e1", "e2"),
    )


def star2_instance() -> InstanceFile:
    """Two elements; a rank-one side against a free side, so only one of the
    two can ever be picked and the pair is not matchable."""
    return InstanceFile(
        ground_size=2,
        m_spec=core.uniform(2, 1),
        n_spec=core.uniform(2, 2),
        labels=("e0", "e1"),
    )


def pair_u_instance() -> InstanceFile:
    """Both sides the rank-one uniform matroid on two elements."""
    return InstanceFile(
        ground_size=2,
        m_spec=core.uniform(2, 1),
        n_spec=core.uniform(2, 1),
    )


def p3_match() -> tuple[MatroidOracle, MatroidOracle]:
    return build_pair(p3_match_instance())


def star2() -> tuple[MatroidOracle, MatroidOracle]:
    return build_pair(star2_instance())


def pair_u() -> tuple[MatroidOracle, MatroidOracle]:
    return build_pair(pair_u_instance())
