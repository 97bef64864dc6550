"""Class poset, switching cycles, stable and negligible sets, witnesses."""

import pytest

from mhl import core
from mhl.core import build_matroid, uniform
from mhl.errors import (CapacityError, InputError, PreconditionError,
                        ValidationError)
from mhl.fixtures import free, loops, p3_match, pair_u, star2
from mhl.solver import Matchable, is_matchable, lex_subsets
from mhl.structure import (LabContext, SwitchingCycle, apply_switching_cycle,
                           augmentation_closure, build_class_poset,
                           compute_witnesses, enumerate_common_independents,
                           find_switching_cycles, fingerprint, is_negligible,
                           is_stable, maximal_negligible, merge_stable,
                           preorder_leq, switching_component)
from mhl.verify import build_corpus


def test_enumerate_examples():
    m, n = pair_u()
    assert enumerate_common_independents(m, n) == [frozenset(), {0}, {1}]
    ms, ns = star2()
    assert enumerate_common_independents(ms, ns) == [frozenset(), {0}, {1}]
    lp = loops(1)
    assert enumerate_common_independents(lp, lp) == [frozenset()]


def test_enumerate_guard():
    big = build_matroid(uniform(15, 3))
    with pytest.raises(CapacityError):
        enumerate_common_independents(big, big)


def test_preorder_examples():
    m, n = pair_u()
    assert preorder_leq(m, n, {0}, {1})
    assert preorder_leq(m, n, {1}, {0})
    assert preorder_leq(m, n, frozenset(), {1})
    ms, ns = star2()
    assert not preorder_leq(ms, ns, {0}, {1})
    with pytest.raises(PreconditionError):
        preorder_leq(m, n, {0, 1}, {0})


def test_class_poset_examples():
    m, n = pair_u()
    poset = build_class_poset(m, n)
    assert poset.class_count == 2
    assert poset.representatives == (frozenset(), frozenset({0}))
    assert set(poset.members[1]) == {frozenset({0}), frozenset({1})}
    assert poset.leq(0, 1) and not poset.leq(1, 0)
    assert poset.maximal_ids() == (1,)

    ms, ns = star2()
    ps = build_class_poset(ms, ns)
    assert ps.class_count == 3
    assert ps.maximal_ids() == (1, 2)
    assert ps.down_set(1) == {0, 1}
    assert ps.down_set(2) == {0, 2}
    assert not ps.leq(1, 2) and not ps.leq(2, 1)

    lp = loops(1)
    assert build_class_poset(lp, lp).class_count == 1


def test_empty_class_is_minimum_on_loop_free_instances():
    for case in build_corpus(41, 40, 6):
        m, n = case.pair()
        if m.loops() or n.loops():
            continue
        poset = build_class_poset(m, n, context=case.ctx())
        empty_id = case.ctx().class_id_of(frozenset())
        assert poset.minimal_ids() == (empty_id,)
        assert all(poset.leq(empty_id, j) for j in range(poset.class_count))


def test_fingerprint_law():
    for case in build_corpus(42, 50, 6):
        m, n = case.pair()
        ctx = case.ctx()
        commons = ctx.commons()
        for a in commons:
            for b in commons:
                mutual = (preorder_leq(m, n, a, b) and preorder_leq(m, n, b, a))
                same = ctx.fingerprint_of(a) == ctx.fingerprint_of(b)
                assert mutual == same


def test_switching_cycle_examples():
    m, n = pair_u()
    cycles = find_switching_cycles(m, n, {0})
    assert [c.nodes for c in cycles] == [(1, 0)]
    mp, np_ = p3_match()
    assert find_switching_cycles(mp, np_, {0, 2}) == []
    assert find_switching_cycles(mp, np_, frozenset()) == []


def test_long_chordless_cycles():
    # the two perfect matchings of an even cycle graph exchange along one
    # chordless switching cycle through all edges
    m4 = build_matroid(core.partition([[0, 1], [2, 3]], [1, 1]))
    n4 = build_matroid(core.partition([[0, 3], [1, 2]], [1, 1]))
    cycles = find_switching_cycles(m4, n4, {0, 2})
    assert [c.nodes for c in cycles] == [(1, 0, 3, 2)]
    assert apply_switching_cycle(m4, n4, {0, 2}, cycles[0]) == {1, 3}
    assert switching_component(m4, n4, {0, 2}) == {frozenset({0, 2}),
                                                   frozenset({1, 3})}
    m6 = build_matroid(core.partition([[0, 1], [2, 3], [4, 5]], [1, 1, 1]))
    n6 = build_matroid(core.partition([[0, 5], [1, 2], [3, 4]], [1, 1, 1]))
    six = find_switching_cycles(m6, n6, {0, 2, 4})
    assert [c.nodes for c in six] == [(1, 0, 5, 4, 3, 2)]


def test_apply_switching_cycle():
    m, n = pair_u()
    cycle = SwitchingCycle((1, 0))
    flipped = apply_switching_cycle(m, n, {0}, cycle)
    assert flipped == {1}
    assert fingerprint(m, n, flipped) == fingerprint(m, n, {0})
    # involution: flipping back restores the original set
    again = find_switching_cycles(m, n, flipped)
    assert [c.element_set() for c in again] == [frozenset({0, 1})]
    assert apply_switching_cycle(m, n, flipped, again[0]) == {0}
    mp, np_ = p3_match()
    with pytest.raises(ValidationError):
        apply_switching_cycle(mp, np_, {0, 2}, cycle)


def test_switching_component_examples():
    m, n = pair_u()
    assert switching_component(m, n, {0}) == {frozenset({0}), frozenset({1})}
    assert switching_component(m, n, frozenset()) == {frozenset()}
    ms, ns = star2()
    assert switching_component(ms, ns, {0}) == {frozenset({0})}


def test_switching_component_equals_class():
    for case in build_corpus(43, 50, 6):
        m, n = case.pair()
        ctx = case.ctx()
        poset = ctx.poset()
        for base in ctx.commons():
            component = switching_component(m, n, base, context=ctx)
            assert component == set(poset.members[ctx.class_id_of(base)])


def test_reachability_is_class_invariant():
    for case in build_corpus(44, 50, 6):
        ctx = case.ctx()
        poset = ctx.poset()
        for cid in range(poset.class_count):
            for member in poset.members[cid]:
                digraph = ctx.digraph_of(member)
                for x in range(case.size):
                    assert digraph.reachable_from({x}) == ctx.reach(cid, x)


def test_augmentation_closure_examples():
    m, n = p3_match()
    poset = build_class_poset(m, n)
    assert augmentation_closure(m, n, frozenset()) == frozenset(
        range(poset.class_count))
    ms, ns = star2()
    ctx = LabContext(ms, ns)
    assert augmentation_closure(ms, ns, {0}, context=ctx) == {
        ctx.class_id_of(frozenset({0}))}
    for base in enumerate_common_independents(m, n):
        ids = augmentation_closure(m, n, base)
        ctx2 = LabContext(m, n)
        assert ctx2.class_id_of(base) in ids


def test_augmentation_closure_equals_up_set():
    for case in build_corpus(45, 50, 6):
        m, n = case.pair()
        ctx = case.ctx()
        poset = ctx.poset()
        for cid in range(poset.class_count):
            closure_ids = augmentation_closure(
                m, n, poset.representatives[cid], context=ctx)
            assert closure_ids == poset.up_set(cid)


def test_stable_examples():
    for m, n in (p3_match(), star2(), pair_u()):
        assert is_stable(m, n, frozenset())
    m2, n2 = free(2), build_matroid(uniform(2, 1))
    assert not is_stable(m2, n2, {0})
    mu, nu = pair_u()
    assert is_stable(mu, nu, {0})
    with pytest.raises(PreconditionError):
        is_stable(mu, nu, {0, 1})


def test_merge_stable_examples():
    m, n = pair_u()
    assert merge_stable(m, n, [{0}]) == {0}
    assert merge_stable(m, n, [frozenset(), frozenset()]) == frozenset()
    merged = merge_stable(m, n, [{0}, {1}])
    assert merged == {0}
    assert m.closure(merged) >= {0, 1}
    m2, n2 = free(2), build_matroid(uniform(2, 1))
    with pytest.raises(PreconditionError):
        merge_stable(m2, n2, [{0}])


def test_merge_stable_postconditions():
    for case in build_corpus(46, 40, 5):
        m, n = case.pair()
        stable = [s for s in case.ctx().commons() if is_stable(m, n, s)]
        if not stable:
            continue
        merged = merge_stable(m, n, stable)
        union = frozenset().union(*stable)
        assert is_stable(m, n, merged)
        assert merged <= union
        assert union <= m.closure(merged)


def test_negligible_examples():
    for m, n in (p3_match(), star2(), pair_u()):
        assert is_negligible(m, n, frozenset())
    assert not is_negligible(loops(1), free(1), {0})
    assert is_negligible(free(1), loops(1), {0})


def test_maximal_negligible_examples():
    m, n = pair_u()
    assert maximal_negligible(m, n) == {0, 1}
    assert maximal_negligible(loops(1), free(1)) == frozenset()
    m3 = free(3)
    n3 = loops(3)
    assert maximal_negligible(m3, n3) == {0, 1, 2}


def test_negligible_extreme_check_equals_definition():
    for case in build_corpus(47, 40, 4):
        tm, tn = case.tables()
        m, n = case.pair()
        size = case.size
        closures = [tn.closure_of_set(
            frozenset(e for e in range(size) if i >> e & 1))
            for i in range(1 << size)]
        for gmask in range(1 << size):
            g = frozenset(e for e in range(size) if gmask >> e & 1)

            def spanned_pair(xmask, ymask):
                for t in range(1 << size):
                    if t & ymask:
                        continue
                    if tm.rank(t | ymask) != bin(t).count("1") + tm.rank(ymask):
                        continue
                    if all(closures[t] >= {e} for e in range(size)
                           if xmask >> e & 1):
                        return True
                return False

            definition = all(
                spanned_pair(x, y)
                for x in range(1 << size) if x & ~gmask == 0
                for y in range(1 << size) if y & gmask == 0)
            assert is_negligible(m, n, g) == definition


def test_negligible_composition():
    for case in build_corpus(48, 40, 5):
        m, n = case.pair()
        for g_tuple in lex_subsets(case.size):
            g = frozenset(g_tuple)
            if not is_negligible(m, n, g):
                continue
            rest = sorted(m.universe() - g)
            minor_m, minor_n = m.delete(g), n.contract(g)
            for sub in lex_subsets(len(rest)):
                inner = frozenset(sub)
                if not is_negligible(minor_m, minor_n, inner):
                    continue
                lifted = frozenset(rest[i] for i in inner)
                assert is_negligible(m, n, g | lifted)


def test_negligible_reduction():
    for case in build_corpus(49, 40, 5):
        m, n = case.pair()
        matchable_here = isinstance(is_matchable(m, n), Matchable)
        for g_tuple in lex_subsets(case.size):
            g = frozenset(g_tuple)
            if not is_negligible(m, n, g):
                continue
            if isinstance(is_matchable(m.delete(g), n.contract(g)), Matchable):
                assert matchable_here


def test_witnesses_pair_u():
    m, n = pair_u()
    wit = compute_witnesses(m, n)
    assert wit.directed_class_ids == {0, 1}
    assert wit.reach_region == frozenset()
    assert wit.core == frozenset()
    assert wit.residue == {0, 1}
    assert is_negligible(m, n, wit.residue)
    assert wit.anchor_sets == {}


def test_witnesses_star2():
    ms, ns = star2()
    ctx = LabContext(ms, ns)
    poset = ctx.poset()
    choice = ctx.class_id_of(frozenset({0}))
    wit = compute_witnesses(ms, ns, class_choice=choice, context=ctx)
    assert wit.anchor_sets == {1: frozenset({0})}
    assert wit.reach_region == {0, 1}
    assert wit.core == {0}
    assert wit.residue == frozenset()
    assert wit.reach_witnesses[0][0] == 1
    with pytest.raises(InputError):
        compute_witnesses(ms, ns, class_choice=ctx.class_id_of(frozenset()))


def test_witnesses_empty_ground():
    empty = build_matroid(uniform(0, 0))
    wit = compute_witnesses(empty, empty)
    assert wit.reach_region == frozenset()
    assert wit.core == frozenset()
    assert wit.residue == frozenset()
    assert wit.anchor_sets == {}
    assert wit.reach_witnesses == {}


def test_witness_invariants_small_corpus():
    for case in build_corpus(50, 30, 5):
        m, n = case.pair()
        ctx = case.ctx()
        poset = ctx.poset()
        for choice in poset.maximal_ids():
            wit = compute_witnesses(m, n, class_choice=choice, context=ctx)
            family = wit.directed_class_ids
            assert is_negligible(m, n, wit.residue)
            assert wit.reach_region <= m.closure(wit.core)
            family_n_span = frozenset().union(
                *(poset.fingerprints[c].n_span for c in family))
            assert m.universe() - family_n_span <= wit.reach_region
            assert wit.core == wit.reach_region & family_n_span
            for x, anchor in wit.anchor_sets.items():
                up = poset.up_set(ctx.class_id_of(anchor)) & family
                for cid in up:
                    reach = ctx.reach(cid, x)
                    assert reach <= m.closure(poset.representatives[cid] & reach)
                for low in up:
                    for high in up:
                        if poset.leq(low, high):
                            assert ctx.reach(low, x) <= ctx.reach(high, x)
            for y, (x_y, j_y) in wit.reach_witnesses.items():
                assert x_y in m.universe() - family_n_span
                assert y in ctx.reach(ctx.class_id_of(j_y), x_y)
                up = poset.up_set(ctx.class_id_of(j_y)) & family
                for cid in up:
                    assert ctx.reach(cid, y) <= wit.reach_region


def test_class_order_is_partial_order():
    for case in build_corpus(52, 40, 5):
        poset = case.ctx().poset()
        k = poset.class_count
        for i in range(k):
            assert poset.leq(i, i)
            for j in range(k):
                if poset.leq(i, j) and poset.leq(j, i):
                    assert i == j
                for l in range(k):
                    if poset.leq(i, j) and poset.leq(j, l):
                        assert poset.leq(i, l)
        topo = poset.topological_order()
        position = {cid: idx for idx, cid in enumerate(topo)}
        for i in range(k):
            for j in poset.up_set(i) - {i}:
                assert position[i] < position[j]


def test_directed_family_invariants():
    # the chosen family is downward closed, directed, and maximal among
    # directed subsets of the class poset
    for case in build_corpus(53, 40, 5):
        m, n = case.pair()
        ctx = case.ctx()
        poset = ctx.poset()
        for choice in poset.maximal_ids():
            wit = compute_witnesses(m, n, class_choice=choice, context=ctx)
            family = wit.directed_class_ids
            for cid in family:
                assert poset.down_set(cid) <= family
            for a in family:
                for b in family:
                    assert any(poset.leq(a, u) and poset.leq(b, u)
                               for u in family)
            for extra in set(range(poset.class_count)) - family:
                grown = family | {extra}
                directed = all(
                    any(poset.leq(a, u) and poset.leq(b, u) for u in grown)
                    for a in grown for b in grown)
                assert not directed


def test_stable_reduction_on_reduced_instances():
    hits = 0
    for case in build_corpus(51, 60, 5):
        m, n = case.pair()
        if case.size == 0 or maximal_negligible(m, n):
            continue
        hits += 1
        wit = compute_witnesses(m, n, context=case.ctx())
        assert m.closure(wit.core) == m.universe()
        core_sorted = sorted(wit.core)
        rm, rn = m.restrict(wit.core), n.restrict(wit.core)
        stable_sets = []
        for mask in range(1 << len(core_sorted)):
            s = frozenset(i for i in range(len(core_sorted)) if mask >> i & 1)
            if (rm.is_independent(s) and rn.is_independent(s)
                    and is_stable(rm, rn, s)):
                stable_sets.append(s)
        for i in range(len(core_sorted)):
            assert any(i in rm.closure(s) for s in stable_sets)
    assert hits > 0


def test_guard_on_witnesses():
    big = build_matroid(uniform(15, 2))
    with pytest.raises(CapacityError):
        compute_witnesses(big, big)
