"""Instance parsing, serialization round-trips, and seeded generation."""

import json

import pytest

from mhl import core
from mhl.brute import mask_to_set
from mhl.errors import InputError
from mhl.fixtures import p3_match_instance, u12
from mhl.instances import (FAMILIES, SplitMix64, bipartite_pair, build_pair,
                           generate_instance, instance_to_json, parse_instance,
                           random_bipartite_edges)


def test_splitmix64_reference_vector():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix64_bounded():
    rng = SplitMix64(7)
    draws = [rng.below(5) for _ in range(100)]
    assert all(0 <= d < 5 for d in draws)
    with pytest.raises(InputError):
        rng.below(0)


def test_round_trip_p3():
    instance = p3_match_instance()
    text = instance_to_json(instance)
    again = parse_instance(text)
    assert again == instance
    assert instance_to_json(again) == text


def test_parse_rejects_ground_size_mismatch():
    doc = {
        "ground_size": 2,
        "m": {"kind": "uniform", "size": 3, "rank": 1},
        "n": {"kind": "uniform", "size": 2, "rank": 1},
    }
    with pytest.raises(InputError, match="instance.m"):
        parse_instance(json.dumps(doc))


def test_parse_rejects_unknown_tag():
    doc = {
        "ground_size": 2,
        "m": {"kind": "mystery", "size": 2},
        "n": {"kind": "uniform", "size": 2, "rank": 1},
    }
    with pytest.raises(InputError, match="mystery"):
        parse_instance(json.dumps(doc))


def test_parse_reports_json_position():
    with pytest.raises(InputError, match="line 1"):
        parse_instance("{not json")


def test_parse_reports_field_path():
    doc = {
        "ground_size": 1,
        "m": {"kind": "graphic", "vertices": 2, "edges": [[0]]},
        "n": {"kind": "uniform", "size": 1, "rank": 1},
    }
    with pytest.raises(InputError, match=r"instance\.m\.edges\[0\]"):
        parse_instance(json.dumps(doc))


def test_parse_semantic_validation():
    doc = {
        "ground_size": 2,
        "m": {"kind": "partition", "blocks": [[0, 1], [1]], "capacities": [1, 1]},
        "n": {"kind": "uniform", "size": 2, "rank": 1},
    }
    with pytest.raises(InputError):
        parse_instance(json.dumps(doc))


def test_parse_label_validation():
    base = {
        "ground_size": 2,
        "m": {"kind": "uniform", "size": 2, "rank": 1},
        "n": {"kind": "uniform", "size": 2, "rank": 2},
    }
    with pytest.raises(InputError, match="labels"):
        parse_instance(json.dumps({**base, "labels": ["a"]}))
    with pytest.raises(InputError, match="distinct"):
        parse_instance(json.dumps({**base, "labels": ["a", "a"]}))
    ok = parse_instance(json.dumps({**base, "labels": ["a", "b"]}))
    assert ok.label_of(1) == "b"


def test_parse_rejects_non_object():
    with pytest.raises(InputError, match="top level"):
        parse_instance("[1,2]")


def test_minor_spec_round_trip():
    spec = core.minor_spec(
        core.direct_sum_spec(core.uniform(2, 1), core.graphic(2, [(0, 1)])),
        "contract", {0})
    doc = {
        "ground_size": 2,
        "m": {
            "kind": "minor",
            "base": {"kind": "direct_sum",
                     "left": {"kind": "uniform", "size": 2, "rank": 1},
                     "right": {"kind": "graphic", "vertices": 2,
                               "edges": [[0, 1]]}},
            "minor_kind": "contract",
            "subset": [0],
        },
        "n": {"kind": "uniform", "size": 2, "rank": 1},
    }
    parsed = parse_instance(json.dumps(doc))
    assert parsed.m_spec == spec


def test_generation_is_deterministic():
    for family in FAMILIES:
        a = generate_instance(7, family, 6)
        b = generate_instance(7, family, 6)
        assert instance_to_json(a) == instance_to_json(b)
        c = generate_instance(8, family, 6)
        assert instance_to_json(a) != instance_to_json(c)


def test_generation_round_trips_and_builds():
    for family in FAMILIES:
        for seed in range(12):
            instance = generate_instance(seed, family, seed % 7)
            again = parse_instance(instance_to_json(instance))
            assert again == instance
            m, n = build_pair(instance)
            assert m.size == n.size == instance.ground_size


def test_generation_guards():
    with pytest.raises(InputError):
        generate_instance(1, "mixed", 15)
    with pytest.raises(InputError):
        generate_instance(1, "nope", 4)
    with pytest.raises(InputError):
        generate_instance(1, "mixed", -1)


def test_bipartite_pair_matches_matching_semantics():
    edges = [(0, 0), (0, 1), (1, 0)]
    instance = bipartite_pair(edges)
    m, n = build_pair(instance)
    # a set of edges is common independent iff no two share an endpoint
    for mask in range(1 << len(edges)):
        chosen = mask_to_set(mask)
        lefts = [edges[e][0] for e in chosen]
        rights = [edges[e][1] for e in chosen]
        is_matching = (len(set(lefts)) == len(lefts)
                       and len(set(rights)) == len(rights))
        assert (m.is_independent(chosen) and n.is_independent(chosen)) == is_matching


def test_bipartite_pair_star_is_rank_one():
    m, n = build_pair(bipartite_pair([(0, 0), (0, 1)]))
    reference = u12()
    for mask in range(4):
        s = mask_to_set(mask)
        assert m.is_independent(s) == reference.is_independent(s)


def test_bipartite_labels_disambiguate_parallel_edges():
    instance = bipartite_pair([(0, 0), (0, 0)])
    assert len(set(instance.labels)) == 2


def test_random_bipartite_edges_within_bounds():
    rng = SplitMix64(5)
    for _ in range(20):
        edges = random_bipartite_edges(rng, 6, 6, 12)
        assert 1 <= len(edges) <= 12
        assert all(0 <= u < 6 and 0 <= v < 6 for u, v in edges)
