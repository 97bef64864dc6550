"""Verification-suite plumbing: determinism, counters, and detection teeth."""

from mhl.core import MatroidOracle, uniform
from mhl.instances import InstanceFile
from mhl.verify import (Case, CheckOutcome, _record, build_corpus,
                        check_exchange_axiom, check_greedy_rank, run_verify,
                        report_to_dict)


def test_report_is_deterministic():
    a = report_to_dict(run_verify(5, 20, 5))
    b = report_to_dict(run_verify(5, 20, 5))
    assert a == b
    assert a["ok"] is True


def test_corpus_shape():
    corpus = build_corpus(9, 40, 6)
    assert len(corpus) == 40
    assert all(0 <= case.size <= 6 for case in corpus)
    families = {case.family for case in corpus}
    assert families == {"partition-pair", "graphic-pair", "gf2-pair", "mixed"}


class _InjectedCase(Case):
    """Case whose oracles come from raw predicates instead of the instance."""

    def __init__(self, m, n):
        placeholder = InstanceFile(m.size, uniform(m.size, 0), uniform(n.size, 0))
        super().__init__(0, "injected", placeholder)
        self._pair = (m, n)


def test_exchange_axiom_check_flags_non_matroid():
    # {0,1} and {2} are the maximal sets; nothing extends {2}, breaking
    # the exchange property
    ok_sets = {frozenset(), frozenset({0}), frozenset({1}), frozenset({2}),
               frozenset({0, 1})}
    fake = MatroidOracle(3, lambda s: s in ok_sets, "broken")
    case = _InjectedCase(fake, fake)
    _, details = check_exchange_axiom(case)
    assert details


def test_greedy_rank_check_flags_non_matroid():
    ok_sets = {frozenset(), frozenset({0}), frozenset({1}), frozenset({2}),
               frozenset({1, 2})}
    fake = MatroidOracle(3, lambda s: s in ok_sets, "broken")
    case = _InjectedCase(fake, fake)
    _, details = check_greedy_rank(case)
    assert details


def test_record_keeps_first_counterexample():
    outcome = CheckOutcome("demo")
    _record(outcome, {"id": 1}, 1, 4, [])
    _record(outcome, {"id": 2}, 2, 4, ["first failure"])
    _record(outcome, {"id": 3}, 3, 4, ["second failure", "third failure"])
    assert outcome.cases == 3
    assert outcome.checks == 12
    assert outcome.violations == 3
    assert outcome.counterexample == {
        "case": 2, "instance": {"id": 2}, "detail": "first failure"}
