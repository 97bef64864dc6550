"""Instance files: parsing, deterministic serialization, seeded generation.

An instance is a JSON document pairing two matroid specs over one ground
set, plus an optional label list for display. All randomness flows through
SplitMix64 so corpora regenerate byte-identically from a 64-bit seed in any
language.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from . import core
from .core import MatroidOracle, MatroidSpec, spec_ground_size
from .errors import InputError

FAMILIES = ("partition-pair", "graphic-pair", "gf2-pair", "mixed")
GROUND_LIMIT = 14

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64: state advances by the 64-bit golden-gamma constant and the
    output is a two-round xor-shift-multiply mix. Bounded draws reduce the
    raw output modulo n; the bias is irrelevant at the tiny ranges used here.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise InputError(f"bounded draw needs a positive bound, got {n}")
        return self.next_u64() % n


@dataclass(frozen=True)
class InstanceFile:
    """Two matroid specs over a shared ground set, with optional labels."""

    ground_size: int
    m_spec: MatroidSpec
    n_spec: MatroidSpec
    labels: Optional[tuple[str, ...]] = None

    def label_of(self, e: int) -> str:
        return self.labels[e] if self.labels is not None else str(e)


def build_pair(instance: InstanceFile) -> tuple[MatroidOracle, MatroidOracle]:
    return core.build_matroid(instance.m_spec), core.build_matroid(instance.n_spec)


# -- spec <-> dict ----------------------------------------------------------


def spec_to_dict(spec: MatroidSpec) -> dict:
    if isinstance(spec, core.Uniform):
        return {"kind": "uniform", "size": spec.size, "rank": spec.rank}
    if isinstance(spec, core.Partition):
        return {"kind": "partition",
                "blocks": [list(b) for b in spec.blocks],
                "capacities": list(spec.capacities)}
    if isinstance(spec, core.Graphic):
        return {"kind": "graphic", "vertices": spec.vertices,
                "edges": [list(e) for e in spec.edges]}
    if isinstance(spec, core.LinearGf2):
        return {"kind": "linear_gf2", "columns": [list(c) for c in spec.columns]}
    if isinstance(spec, core.DirectSumSpec):
        return {"kind": "direct_sum", "left": spec_to_dict(spec.left),
                "right": spec_to_dict(spec.right)}
    if isinstance(spec, core.MinorSpec):
        return {"kind": "minor", "base": spec_to_dict(spec.base),
                "minor_kind": spec.kind, "subset": sorted(spec.subset)}
    raise InputError(f"unknown matroid spec {spec!r}")


def _want(obj: dict, key: str, types, path: str):
    if key not in obj:
        raise InputError(f"{path}: missing field {key!r}")
    value = obj[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise InputError(f"{path}.{key}: expected {types}, got {type(value).__name__}")
    return value


def _int_list(value, path: str) -> list[int]:
    if not isinstance(value, list):
        raise InputError(f"{path}: expected a list")
    for i, item in enumerate(value):
        if not isinstance(item, int) or isinstance(item, bool):
            raise InputError(f"{path}[{i}]: expected an integer, got {item!r}")
    return value


def spec_from_dict(obj, path: str = "spec") -> MatroidSpec:
    if not isinstance(obj, dict):
        raise InputError(f"{path}: expected an object")
    kind = _want(obj, "kind", str, path)
    if kind == "uniform":
        return core.Uniform(_want(obj, "size", int, path), _want(obj, "rank", int, path))
    if kind == "partition":
        blocks = _want(obj, "blocks", list, path)
        out_blocks = tuple(
            tuple(_int_list(b, f"{path}.blocks[{i}]")) for i, b in enumerate(blocks))
        caps = tuple(_int_list(_want(obj, "capacities", list, path), f"{path}.capacities"))
        return core.Partition(out_blocks, caps)
    if kind == "graphic":
        vertices = _want(obj, "vertices", int, path)
        edges = _want(obj, "edges", list, path)
        out_edges = []
        for i, e in enumerate(edges):
            pair = _int_list(e, f"{path}.edges[{i}]")
            if len(pair) != 2:
                raise InputError(f"{path}.edges[{i}]: expected two endpoints")
            out_edges.append((pair[0], pair[1]))
        return core.Graphic(vertices, tuple(out_edges))
    if kind == "linear_gf2":
        cols = _want(obj, "columns", list, path)
        return core.LinearGf2(tuple(
            tuple(_int_list(c, f"{path}.columns[{i}]")) for i, c in enumerate(cols)))
    if kind == "direct_sum":
        return core.DirectSumSpec(
            spec_from_dict(_want(obj, "left", dict, path), f"{path}.left"),
            spec_from_dict(_want(obj, "right", dict, path), f"{path}.right"))
    if kind == "minor":
        base = spec_from_dict(_want(obj, "base", dict, path), f"{path}.base")
        minor_kind = _want(obj, "minor_kind", str, path)
        subset = frozenset(_int_list(_want(obj, "subset", list, path), f"{path}.subset"))
        return core.MinorSpec(base, minor_kind, subset)
    raise InputError(f"{path}.kind: unknown variant tag {kind!r}")


# -- whole-file parse / serialize -------------------------------------------


def parse_instance(text) -> InstanceFile:
    """Parse and fully validate an instance document.

    Both specs are built once to surface semantic errors (overlapping blocks,
    out-of-range endpoints, ...) at parse time, and their ground sizes must
    agree with the declared one.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise InputError(f"instance file is not UTF-8: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise InputError("instance: expected a JSON object at top level")
    ground = _want(obj, "ground_size", int, "instance")
    if ground < 0:
        raise InputError(f"instance.ground_size: must be non-negative, got {ground}")
    m_spec = spec_from_dict(_want(obj, "m", dict, "instance"), "instance.m")
    n_spec = spec_from_dict(_want(obj, "n", dict, "instance"), "instance.n")
    for name, spec in (("m", m_spec), ("n", n_spec)):
        got = spec_ground_size(spec)
        if got != ground:
            raise InputError(
                f"instance.{name}: spec resolves to ground size {got}, "
                f"declared {ground}")
        core.build_matroid(spec)
    labels = None
    if "labels" in obj:
        raw = obj["labels"]
        if (not isinstance(raw, list)
                or not all(isinstance(x, str) for x in raw)):
            raise InputError("instance.labels: expected a list of strings")
        if len(raw) != ground:
            raise InputError(
                f"instance.labels: {len(raw)} labels for {ground} elements")
        if len(set(raw)) != len(raw):
            raise InputError("instance.labels: labels must be distinct")
        labels = tuple(raw)
    return InstanceFile(ground, m_spec, n_spec, labels)


def instance_to_dict(instance: InstanceFile) -> dict:
    out = {
        "ground_size": instance.ground_size,
        "m": spec_to_dict(instance.m_spec),
        "n": spec_to_dict(instance.n_spec),
    }
    if instance.labels is not None:
        out["labels"] = list(instance.labels)
    return out


def instance_to_json(instance: InstanceFile) -> str:
    return json.dumps(instance_to_dict(instance), indent=2, sort_keys=True) + "\n"


# -- seeded generation -------------------------------------------------------


def _random_partition_spec(rng: SplitMix64, n: int) -> MatroidSpec:
    if n == 0:
        return core.Partition((), ())
    nblocks = 1 + rng.below(n)
    assignment = [rng.below(nblocks) for _ in range(n)]
    blocks = []
    caps = []
    for b in range(nblocks):
        block = tuple(e for e in range(n) if assignment[e] == b)
        if block:
            blocks.append(block)
            caps.append(rng.below(len(block) + 1))
    return core.Partition(tuple(blocks), tuple(caps))


def _random_graphic_spec(rng: SplitMix64, n: int) -> MatroidSpec:
    vertices = 2 + rng.below(max(1, n))
    edges = tuple((rng.below(vertices), rng.below(vertices)) for _ in range(n))
    return core.Graphic(vertices, edges)


def _random_gf2_spec(rng: SplitMix64, n: int) -> MatroidSpec:
    rows = 1 + rng.below(max(1, n))
    columns = tuple(tuple(rng.below(2) for _ in range(rows)) for _ in range(n))
    return core.LinearGf2(columns)


def _random_mixed_spec(rng: SplitMix64, n: int) -> MatroidSpec:
    pick = rng.below(4)
    if pick == 0:
        return core.Uniform(n, rng.below(n + 1))
    if pick == 1:
        return _random_partition_spec(rng, n)
    if pick == 2:
        return _random_graphic_spec(rng, n)
    return _random_gf2_spec(rng, n)


def generate_instance(seed: int, family: str, ground_size: int) -> InstanceFile:
    """Deterministic instance from (seed, family, ground_size)."""
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if not 0 <= ground_size <= GROUND_LIMIT:
        raise InputError(
            f"ground_size must lie in 0..{GROUND_LIMIT}, got {ground_size}")
    rng = SplitMix64(seed)
    if family == "partition-pair":
        m_spec = _random_partition_spec(rng, ground_size)
        n_spec = _random_partition_spec(rng, ground_size)
    elif family == "graphic-pair":
        m_spec = _random_graphic_spec(rng, ground_size)
        n_spec = _random_graphic_spec(rng, ground_size)
    elif family == "gf2-pair":
        m_spec = _random_gf2_spec(rng, ground_size)
        n_spec = _random_gf2_spec(rng, ground_size)
    else:
        m_spec = _random_mixed_spec(rng, ground_size)
        n_spec = _random_mixed_spec(rng, ground_size)
    return InstanceFile(ground_size, m_spec, n_spec)


def bipartite_pair(edges: list[tuple[int, int]],
                   labels: bool = True) -> InstanceFile:
    """Matching instance of a bipartite edge list: one partition matroid per
    side, every vertex with capacity one, edges indexed by position."""
    by_left: dict[int, list[int]] = {}
    by_right: dict[int, list[int]] = {}
    for idx, (u, v) in enumerate(edges):
        by_left.setdefault(u, []).append(idx)
        by_right.setdefault(v, []).append(idx)
    m_spec = core.Partition(
        tuple(tuple(by_left[u]) for u in sorted(by_left)),
        tuple(1 for _ in by_left))
    n_spec = core.Partition(
        tuple(tuple(by_right[v]) for v in sorted(by_right)),
        tuple(1 for _ in by_right))
    names = tuple(f"L{u}-R{v}" for u, v in edges) if labels else None
    if names is not None and len(set(names)) != len(names):
        names = tuple(f"L{u}-R{v}#{i}" for i, (u, v) in enumerate(edges))
    return InstanceFile(len(edges), m_spec, n_spec, names)


def random_bipartite_edges(rng: SplitMix64, max_left: int, max_right: int,
                           max_edges: int) -> list[tuple[int, int]]:
    lefts = 1 + rng.below(max_left)
    rights = 1 + rng.below(max_right)
    count = 1 + rng.below(max_edges)
    return [(rng.below(lefts), rng.below(rights)) for _ in range(count)]
