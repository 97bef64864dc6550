"""Seeded verification suite: every structural lemma as a counted check.

A corpus of generated instances is swept by named checks, each capped at the
ground size where exhaustive verification stays fast. Checks compare the
production operations against brute-force enumeration or against the
literal statement of the property they implement. The report is a pure
function of (seed, count, max_ground).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .brute import (IndependenceTable, max_common_independent_size,
                    max_matching_size, min_rank_cut, set_to_mask)
from .core import MatroidOracle
from .errors import MhlError
from .exchange import (AUDIT, build_exchange_digraph, enumerate_paths_in,
                       find_augmenting_path, validate_augmenting_path)
from .instances import (FAMILIES, InstanceFile, SplitMix64, bipartite_pair,
                        build_pair, generate_instance, instance_to_dict,
                        random_bipartite_edges)
from .solver import (Matchable, check_hall, is_finitely_matchable,
                     is_matchable, lex_subsets, max_common_independent,
                     min_max_certificate, solve_intersection)
from .structure import (LabContext, augmentation_closure, compute_witnesses,
                        is_negligible, is_stable, maximal_negligible,
                        merge_stable, switching_component)

_BIPARTITE_STREAM = 0x5DEECE66D


class Case:
    """One corpus instance with lazily built oracles and caches."""

    def __init__(self, index: int, family: str, instance: InstanceFile):
        self.index = index
        self.family = family
        self.instance = instance
        self._pair: Optional[tuple[MatroidOracle, MatroidOracle]] = None
        self._tables = None
        self._ctx: Optional[LabContext] = None
        self._hall_none: Optional[bool] = None

    @property
    def size(self) -> int:
        return self.instance.ground_size

    def pair(self) -> tuple[MatroidOracle, MatroidOracle]:
        if self._pair is None:
            self._pair = build_pair(self.instance)
        return self._pair

    def tables(self) -> tuple[IndependenceTable, IndependenceTable]:
        if self._tables is None:
            m, n = self.pair()
            self._tables = (IndependenceTable(m), IndependenceTable(n))
        return self._tables

    def ctx(self) -> LabContext:
        if self._ctx is None:
            self._ctx = LabContext(*self.pair())
        return self._ctx

    def hall_none(self) -> bool:
        if self._hall_none is None:
            self._hall_none = check_hall(*self.pair()) is None
        return self._hall_none


def build_corpus(seed: int, count: int, max_ground: int) -> list[Case]:
    rng = SplitMix64(seed)
    cases = []
    for i in range(count):
        family = FAMILIES[i % len(FAMILIES)]
        size = rng.below(max_ground + 1)
        cases.append(Case(i, family, generate_instance(rng.next_u64(), family, size)))
    return cases


@dataclass
class BipartiteCase:
    index: int
    edges: list[tuple[int, int]]
    instance: InstanceFile


def build_bipartite_corpus(seed: int, count: int, max_side: int = 6,
                           max_edges: int = 12) -> list[BipartiteCase]:
    rng = SplitMix64(seed ^ _BIPARTITE_STREAM)
    out = []
    for i in range(count):
        edges = random_bipartite_edges(rng, max_side, max_side, max_edges)
        out.append(BipartiteCase(i, edges, bipartite_pair(edges)))
    return out


# -- individual checks -------------------------------------------------------
#
# Each check takes a Case and returns (assertion_count, violation_details).


def check_closure_axioms(case: Case) -> tuple[int, list[str]]:
    rng = SplitMix64(case.index * 7919 + 17)
    checks, bad = 0, []
    for side, oracle in zip("mn", case.pair()):
        for _ in range(8):
            t = frozenset(e for e in range(case.size) if rng.below(2))
            s = frozenset(e for e in t if rng.below(2))
            cl_s, cl_t = oracle.closure(s), oracle.closure(t)
            checks += 3
            if not s <= cl_s:
                bad.append(f"{side}: closure not extensive on {sorted(s)}")
            if oracle.closure(cl_s) != cl_s:
                bad.append(f"{side}: closure not idempotent on {sorted(s)}")
            if not cl_s <= cl_t:
                bad.append(f"{side}: closure not monotone on {sorted(s)}<={sorted(t)}")
    return checks, bad


def check_exchange_axiom(case: Case) -> tuple[int, list[str]]:
    checks, bad = 0, []
    for side, table in zip("mn", case.tables()):
        indep = [m for m in range(1 << case.size) if table.indep[m]]
        for a in indep:
            for b in indep:
                if bin(a).count("1") >= bin(b).count("1"):
                    continue
                checks += 1
                extra = b & ~a
                if not any(table.indep[a | (1 << e)]
                           for e in range(case.size) if extra >> e & 1):
                    bad.append(f"{side}: no exchange from {a:b} into {b:b}")
    return checks, bad


def check_fundamental_circuit(case: Case) -> tuple[int, list[str]]:
    checks, bad = 0, []
    for side, (oracle, table) in zip("mn", zip(case.pair(), case.tables())):
        for mask in range(1 << case.size):
            if not table.indep[mask]:
                continue
            base = frozenset(e for e in range(case.size) if mask >> e & 1)
            for e in range(case.size):
                if mask >> e & 1 or table.indep[mask | 1 << e]:
                    continue
                circuit = oracle.fundamental_circuit(e, base)
                cmask = set_to_mask(circuit)
                checks += 1
                ok = (e in circuit and circuit - {e} <= base
                      and not table.indep[cmask]
                      and all(table.indep[cmask & ~(1 << x)] for x in circuit))
                if not ok:
                    bad.append(f"{side}: bad circuit {sorted(circuit)} for e={e}, "
                               f"I={sorted(base)}")
    return checks, bad


def check_greedy_rank(case: Case) -> tuple[int, list[str]]:
    checks, bad = 0, []
    for side, (oracle, table) in zip("mn", zip(case.pair(), case.tables())):
        for mask in range(1 << case.size):
            s = frozenset(e for e in range(case.size) if mask >> e & 1)
            checks += 1
            if oracle.rank(s) != table.rank(mask):
                bad.append(f"{side}: greedy rank differs on {sorted(s)}")
    return checks, bad


def check_minor_consistency(case: Case) -> tuple[int, list[str]]:
    checks, bad = 0, []
    for side, (oracle, table) in zip("mn", zip(case.pair(), case.tables())):
        for xmask in range(1 << case.size):
            rank_x = table.rank(xmask)
            bases = [b for b in range(1 << case.size)
                     if b & ~xmask == 0 and table.indep[b]
                     and bin(b).count("1") == rank_x]
            keep = [e for e in range(case.size) if not xmask >> e & 1]
            contracted = oracle.contract(
                frozenset(e for e in range(case.size) if xmask >> e & 1))
            for imask in range(1 << len(keep)):
                lifted = 0
                for i in range(len(keep)):
                    if imask >> i & 1:
                        lifted |= 1 << keep[i]
                verdicts = {table.indep[lifted | b] for b in bases}
                checks += 1
                if len(verdicts) != 1:
                    bad.append(f"{side}: contraction by {xmask:b} depends on the base")
                    continue
                got = contracted.is_independent(
                    frozenset(i for i in range(len(keep)) if imask >> i & 1))
                if got != verdicts.pop():
                    bad.append(f"{side}: contraction oracle disagrees at {imask:b}/{xmask:b}")
    return checks, bad


def check_intersection_vs_brute(case: Case) -> tuple[int, list[str]]:
    got = len(max_common_independent(*case.pair()))
    want = max_common_independent_size(*case.tables())
    return 1, [] if got == want else [f"solver found {got}, brute force {want}"]


def check_min_max(case: Case) -> tuple[int, list[str]]:
    bad = []
    k, cut = min_max_certificate(*case.pair())
    tm, tn = case.tables()
    want = min_rank_cut(tm, tn)
    if k != want:
        bad.append(f"solver size {k} differs from brute min cut {want}")
    full = (1 << case.size) - 1
    cut_mask = set_to_mask(cut)
    if tm.rank(cut_mask) + tn.rank(full ^ cut_mask) != k:
        bad.append(f"certificate {sorted(cut)} does not add up to {k}")
    return 2, bad


def check_certificate_soundness(case: Case) -> tuple[int, list[str]]:
    bad = []
    verdict = is_matchable(*case.pair())
    tm, tn = case.tables()
    full = (1 << case.size) - 1
    if isinstance(verdict, Matchable):
        base_mask = set_to_mask(verdict.base)
        if not (tm.indep[base_mask] and tn.indep[base_mask]
                and bin(base_mask).count("1") == tn.rank(full)):
            bad.append(f"matchable base {sorted(verdict.base)} is not an "
                       f"independent base")
    else:
        x = set_to_mask(verdict.blocking_set)
        restricted = tm.rank(x)
        contracted = tn.rank(full) - tn.rank(full ^ x)
        if (restricted, contracted) != (verdict.rank_restricted, verdict.rank_contracted):
            bad.append("blocked certificate ranks do not recompute")
        elif not restricted < contracted:
            bad.append("blocked certificate fails the strict inequality")
    return 1, bad


def check_hall_vs_matchable(case: Case) -> tuple[int, list[str]]:
    matchable = isinstance(is_matchable(*case.pair()), Matchable)
    if case.hall_none() != matchable:
        return 1, [f"hall verdict {case.hall_none()} vs matchable {matchable}"]
    return 1, []


def check_hall_hereditary(case: Case) -> tuple[int, list[str]]:
    if not case.hall_none():
        return 0, []
    m, n = case.pair()
    checks, bad = 0, []
    for subset in lex_subsets(case.size):
        x = frozenset(subset)
        checks += 1
        if check_hall(m.delete(x), n.contract(x)) is not None:
            bad.append(f"hall breaks after removing {sorted(x)}")
    return checks, bad


def check_augmentation_spans(case: Case) -> tuple[int, list[str]]:
    before_checks, before_bad = AUDIT.checks, AUDIT.violations
    solve_intersection(*case.pair())
    done = AUDIT.checks - before_checks
    broken = AUDIT.violations - before_bad
    return done, [f"{broken} span postconditions failed"] if broken else []


def check_arc_preservation(case: Case) -> tuple[int, list[str]]:
    ctx = case.ctx()
    checks, bad = 0, []
    for base in ctx.commons():
        digraph = ctx.digraph_of(base)
        for path in enumerate_paths_in(digraph):
            nodes = set(path.nodes)
            after = ctx.digraph_of(base ^ frozenset(path.nodes))
            for x in range(case.size):
                outs = set(digraph.out_neighbors(x))
                if x in nodes or outs & nodes:
                    continue
                checks += 1
                if not outs <= set(after.out_neighbors(x)):
                    bad.append(f"out-arcs of {x} lost augmenting {sorted(base)} "
                               f"by {path.nodes}")
    return checks, bad


def check_path_revalidation(case: Case) -> tuple[int, list[str]]:
    m, n = case.pair()
    checks, bad = 0, []
    for base in case.ctx().commons():
        path = find_augmenting_path(m, n, base)
        if path is None:
            continue
        checks += 1
        try:
            validate_augmenting_path(build_exchange_digraph(m, n, base), path.nodes)
        except MhlError as exc:
            bad.append(f"path {path.nodes} for {sorted(base)} rejected: {exc}")
    return checks, bad


def check_fingerprint_law(case: Case) -> tuple[int, list[str]]:
    ctx = case.ctx()
    commons = ctx.commons()
    checks, bad = 0, []
    for a in commons:
        fa = ctx.fingerprint_of(a)
        for b in commons:
            fb = ctx.fingerprint_of(b)
            mutual = (a <= fb.m_span and a <= fb.n_span
                      and b <= fa.m_span and b <= fa.n_span)
            checks += 1
            if (fa == fb) != mutual:
                bad.append(f"fingerprint law fails on {sorted(a)}, {sorted(b)}")
    return checks, bad


def check_switching_partition(case: Case) -> tuple[int, list[str]]:
    ctx = case.ctx()
    m, n = case.pair()
    poset = ctx.poset()
    checks, bad = 0, []
    for base in ctx.commons():
        component = switching_component(m, n, base, context=ctx)
        cls = set(poset.members[ctx.class_id_of(base)])
        checks += 1
        if component != cls:
            bad.append(f"component of {sorted(base)} differs from its class")
    return checks, bad


def check_reachability_invariance(case: Case) -> tuple[int, list[str]]:
    ctx = case.ctx()
    poset = ctx.poset()
    checks, bad = 0, []
    for cid in range(poset.class_count):
        rep_reach = {x: ctx.reach(cid, x) for x in range(case.size)}
        for member in poset.members[cid]:
            digraph = ctx.digraph_of(member)
            for x in range(case.size):
                checks += 1
                if digraph.reachable_from({x}) != rep_reach[x]:
                    bad.append(f"reach from {x} differs inside class of "
                               f"{sorted(member)}")
    return checks, bad


def check_upset_vs_augmentation(case: Case) -> tuple[int, list[str]]:
    ctx = case.ctx()
    m, n = case.pair()
    poset = ctx.poset()
    checks, bad = 0, []
    for cid in range(poset.class_count):
        closure_ids = augmentation_closure(m, n, poset.representatives[cid], context=ctx)
        checks += 1
        if closure_ids != poset.up_set(cid):
            bad.append(f"augmentation closure of class {cid} is {sorted(closure_ids)}, "
                       f"up-set is {sorted(poset.up_set(cid))}")
    return checks, bad


def _witness_sweep(case: Case):
    ctx = case.ctx()
    poset = ctx.poset()
    for choice in poset.maximal_ids():
        yield ctx, poset, compute_witnesses(*case.pair(), class_choice=choice,
                                            context=ctx)


def _check_witness_residue(case: Case) -> tuple[int, list[str]]:
    m, n = case.pair()
    checks, bad = 0, []
    for _, _, wit in _witness_sweep(case):
        checks += 1
        if not is_negligible(m, n, wit.residue):
            bad.append(f"residue {sorted(wit.residue)} of class "
                       f"{wit.chosen_class_id} is not negligible")
    return checks, bad


def check_witness_residue_hall_ok(case: Case) -> tuple[int, list[str]]:
    if not case.hall_none():
        return 0, []
    return _check_witness_residue(case)


def check_witness_residue_hall_violated(case: Case) -> tuple[int, list[str]]:
    if case.hall_none():
        return 0, []
    return _check_witness_residue(case)


def check_witness_core_spans_region(case: Case) -> tuple[int, list[str]]:
    m, _ = case.pair()
    checks, bad = 0, []
    for _, _, wit in _witness_sweep(case):
        checks += 1
        if not wit.reach_region <= m.closure(wit.core):
            bad.append(f"core {sorted(wit.core)} fails to span "
                       f"{sorted(wit.reach_region)}")
    return checks, bad


def check_witness_reach_self_span(case: Case) -> tuple[int, list[str]]:
    m, _ = case.pair()
    checks, bad = 0, []
    for ctx, poset, wit in _witness_sweep(case):
        family = wit.directed_class_ids
        for x, anchor in wit.anchor_sets.items():
            anchor_id = ctx.class_id_of(anchor)
            for cid in poset.up_set(anchor_id) & family:
                reach = ctx.reach(cid, x)
                checks += 1
                if not reach <= m.closure(poset.representatives[cid] & reach):
                    bad.append(f"reach of {x} above {sorted(anchor)} escapes its "
                               f"own span at class {cid}")
    return checks, bad


def check_witness_reach_monotone(case: Case) -> tuple[int, list[str]]:
    checks, bad = 0, []
    for ctx, poset, wit in _witness_sweep(case):
        family = wit.directed_class_ids
        for x, anchor in wit.anchor_sets.items():
            up = sorted(poset.up_set(ctx.class_id_of(anchor)) & family)
            for low in up:
                for high in up:
                    if low == high or not poset.leq(low, high):
                        continue
                    checks += 1
                    if not ctx.reach(low, x) <= ctx.reach(high, x):
                        bad.append(f"reach of {x} shrinks from class {low} "
                                   f"to {high}")
    return checks, bad


def check_witness_core_reach_inside(case: Case) -> tuple[int, list[str]]:
    checks, bad = 0, []
    for ctx, poset, wit in _witness_sweep(case):
        family = wit.directed_class_ids
        for y, (_, witness_set) in wit.reach_witnesses.items():
            for cid in poset.up_set(ctx.class_id_of(witness_set)) & family:
                checks += 1
                if not ctx.reach(cid, y) <= wit.reach_region:
                    bad.append(f"reach of core element {y} leaves the region "
                               f"at class {cid}")
    return checks, bad


def _stable_sets(case: Case) -> list[frozenset[int]]:
    m, n = case.pair()
    return [s for s in case.ctx().commons() if is_stable(m, n, s)]


def check_stable_merge(case: Case) -> tuple[int, list[str]]:
    m, n = case.pair()
    stable = _stable_sets(case)
    if not stable:
        return 0, []
    merged = merge_stable(m, n, stable)
    union = frozenset().union(*stable)
    checks, bad = 3, []
    if not is_stable(m, n, merged):
        bad.append(f"merged set {sorted(merged)} is not stable")
    if not merged <= union:
        bad.append("merged set leaves the family union")
    if not union <= m.closure(merged):
        bad.append(f"merged set {sorted(merged)} fails to span the family union")
    return checks, bad


def check_stable_chain_union(case: Case) -> tuple[int, list[str]]:
    m, n = case.pair()
    stable = _stable_sets(case)
    checks, bad = 0, []
    for a in stable:
        for b in stable:
            if not a < b:
                continue
            chain_union = a | b
            checks += 1
            if not is_stable(m, n, chain_union):
                bad.append(f"union of chain {sorted(a)} < {sorted(b)} unstable")
    return checks, bad


def _negligible_sets(m: MatroidOracle, n: MatroidOracle) -> list[frozenset[int]]:
    return [frozenset(s) for s in lex_subsets(m.size)
            if is_negligible(m, n, frozenset(s))]


def check_negligible_compose(case: Case) -> tuple[int, list[str]]:
    m, n = case.pair()
    checks, bad = 0, []
    for g in _negligible_sets(m, n):
        rest = sorted(m.universe() - g)
        minor_m, minor_n = m.delete(g), n.contract(g)
        for sub in lex_subsets(len(rest)):
            g2_minor = frozenset(sub)
            if not is_negligible(minor_m, minor_n, g2_minor):
                continue
            g2 = frozenset(rest[i] for i in g2_minor)
            checks += 1
            if not is_negligible(m, n, g | g2):
                bad.append(f"{sorted(g)} + {sorted(g2)} fails to compose")
    return checks, bad


def check_negligible_reduction(case: Case) -> tuple[int, list[str]]:
    m, n = case.pair()
    matchable_here = isinstance(is_matchable(m, n), Matchable)
    checks, bad = 0, []
    for g in _negligible_sets(m, n):
        if not isinstance(is_matchable(m.delete(g), n.contract(g)), Matchable):
            continue
        checks += 1
        if not matchable_here:
            bad.append(f"matchable after removing negligible {sorted(g)} "
                       f"but not matchable before")
    return checks, bad


def check_stable_reduction(case: Case) -> tuple[int, list[str]]:
    m, n = case.pair()
    if case.size == 0 or maximal_negligible(m, n):
        return 0, []
    wit = compute_witnesses(m, n, context=case.ctx())
    core_sorted = sorted(wit.core)
    checks, bad = 1, []
    if m.closure(wit.core) != m.universe():
        bad.append(f"core {core_sorted} is not spanning")
    rm, rn = m.restrict(wit.core), n.restrict(wit.core)
    stable_sets = []
    for mask in range(1 << len(core_sorted)):
        s = frozenset(i for i in range(len(core_sorted)) if mask >> i & 1)
        if (rm.is_independent(s) and rn.is_independent(s)
                and is_stable(rm, rn, s)):
            stable_sets.append(s)
    for i in range(len(core_sorted)):
        checks += 1
        if not any(i in rm.closure(s) for s in stable_sets):
            bad.append(f"no stable set spans {core_sorted[i]} inside the core")
    return checks, bad


def check_finitely_matchable_def(case: Case) -> tuple[int, list[str]]:
    tm, tn = case.tables()
    closures = [tn.closure_of_set(
        frozenset(e for e in range(case.size) if i >> e & 1))
        for i in range(1 << case.size)]
    spannable = [set_to_mask(c) for c in closures]
    def_holds = all(
        any(tm.indep[i] and f & ~spannable[i] == 0 for i in range(1 << case.size))
        for f in range(1 << case.size))
    got = is_finitely_matchable(*case.pair())
    return 1, [] if got == def_holds else [
        f"finitely-matchable verdict {got}, definition says {def_holds}"]


def check_negligible_def(case: Case) -> tuple[int, list[str]]:
    tm, tn = case.tables()
    m, n = case.pair()
    size = case.size
    full = (1 << size) - 1
    closures = [set_to_mask(tn.closure_of_set(
        frozenset(e for e in range(size) if i >> e & 1)))
        for i in range(1 << size)]
    checks, bad = 0, []
    for gmask in range(1 << size):
        def pair_ok(xmask: int, ymask: int) -> bool:
            for t in range(1 << size):
                if t & ymask:
                    continue
                if tm.rank(t | ymask) != bin(t).count("1") + tm.rank(ymask):
                    continue
                if xmask & ~closures[t] == 0:
                    return True
            return False

        definition = all(
            pair_ok(x, y)
            for x in range(1 << size) if x & ~gmask == 0
            for y in range(1 << size) if y & gmask == 0)
        got = is_negligible(m, n, frozenset(e for e in range(size) if gmask >> e & 1))
        checks += 1
        if got != definition:
            bad.append(f"negligibility of {gmask:b}: extreme check {got}, "
                       f"definition {definition}")
    return checks, bad


@dataclass(frozen=True)
class Check:
    name: str
    cap: int
    run: Callable[[Case], tuple[int, list[str]]]


CHECKS: tuple[Check, ...] = (
    Check("closure-axioms", 8, check_closure_axioms),
    Check("exchange-axiom", 5, check_exchange_axiom),
    Check("fundamental-circuit", 6, check_fundamental_circuit),
    Check("greedy-rank", 7, check_greedy_rank),
    Check("minor-consistency", 5, check_minor_consistency),
    Check("intersection-vs-brute", 8, check_intersection_vs_brute),
    Check("min-max", 8, check_min_max),
    Check("certificate-soundness", 8, check_certificate_soundness),
    Check("hall-vs-matchable", 7, check_hall_vs_matchable),
    Check("hall-hereditary", 5, check_hall_hereditary),
    Check("augmentation-spans", 8, check_augmentation_spans),
    Check("arc-preservation", 6, check_arc_preservation),
    Check("path-revalidation", 6, check_path_revalidation),
    Check("fingerprint-law", 6, check_fingerprint_law),
    Check("switching-partition", 6, check_switching_partition),
    Check("reachability-invariance", 6, check_reachability_invariance),
    Check("upset-vs-augmentation", 6, check_upset_vs_augmentation),
    Check("witness-residue-negligible-hall-ok", 6, check_witness_residue_hall_ok),
    Check("witness-residue-negligible-hall-violated", 6,
          check_witness_residue_hall_violated),
    Check("witness-core-spans-region", 6, check_witness_core_spans_region),
    Check("witness-reach-self-span", 6, check_witness_reach_self_span),
    Check("witness-reach-monotone", 6, check_witness_reach_monotone),
    Check("witness-core-reach-inside", 6, check_witness_core_reach_inside),
    Check("stable-merge", 5, check_stable_merge),
    Check("stable-chain-union", 5, check_stable_chain_union),
    Check("negligible-compose", 5, check_negligible_compose),
    Check("negligible-reduction", 5, check_negligible_reduction),
    Check("stable-reduction", 5, check_stable_reduction),
    Check("finitely-matchable-def", 4, check_finitely_matchable_def),
    Check("negligible-def", 4, check_negligible_def),
)


@dataclass
class CheckOutcome:
    name: str
    cases: int = 0
    checks: int = 0
    violations: int = 0
    counterexample: Optional[dict] = None


@dataclass
class VerifyReport:
    seed: int
    count: int
    max_ground: int
    outcomes: list[CheckOutcome] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(o.violations == 0 for o in self.outcomes)


def _record(outcome: CheckOutcome, case_dict: dict, index: int,
            checks: int, details: list[str]) -> None:
    outcome.cases += 1
    outcome.checks += checks
    outcome.violations += len(details)
    if details and outcome.counterexample is None:
        outcome.counterexample = {
            "case": index,
            "instance": case_dict,
            "detail": details[0],
        }


def run_verify(seed: int, count: int, max_ground: int) -> VerifyReport:
    """Sweep every check over a fresh corpus; never raises on violations."""
    report = VerifyReport(seed=seed, count=count, max_ground=max_ground)
    corpus = build_corpus(seed, count, max_ground)
    for check in CHECKS:
        outcome = CheckOutcome(check.name)
        for case in corpus:
            if case.size > check.cap:
                continue
            case_dict = instance_to_dict(case.instance)
            try:
                checks, details = check.run(case)
            except MhlError as exc:
                checks, details = 1, [f"raised {type(exc).__name__}: {exc}"]
            _record(outcome, case_dict, case.index, checks, details)
        report.outcomes.append(outcome)

    bipartite = CheckOutcome("bipartite-reduction")
    for bip in build_bipartite_corpus(seed, max(1, count // 2)):
        m, n = build_pair(bip.instance)
        got = len(max_common_independent(m, n))
        want = max_matching_size(bip.edges)
        details = [] if got == want else [
            f"solver matched {got} edges, brute force {want}"]
        _record(bipartite, instance_to_dict(bip.instance), bip.index, 1, details)
    report.outcomes.append(bipartite)
    return report


def report_to_dict(report: VerifyReport) -> dict:
    return {
        "seed": report.seed,
        "count": report.count,
        "max_ground": report.max_ground,
        "ok": report.ok,
        "checks": [
            {
                "name": o.name,
                "cases": o.cases,
                "checks": o.checks,
                "violations": o.violations,
                "counterexample": o.counterexample,
            }
            for o in report.outcomes
        ],
    }
