import itertools

import pytest

from parahoric import (
    HypothesisUnmet,
    NotPrime,
    SimpleLedger,
    build_root_datum,
    chi_char,
    dim,
    dot_reflect,
    dual,
    ext1_dim,
    ext2_chain,
    jantzen_report,
    jantzen_sum,
    lowest_alcove_test,
    resolve_simple,
    tensor,
)
from parahoric.jantzen import JANTZEN_RESOLVED, LOWEST_ALCOVE
from parahoric.rootdata import NotDominant, dot


def test_dot_reflect_anchor(a2):
    theta = a2.highest_root(0)
    assert dot_reflect(a2, theta, 5, (3, 1)) == (2, 0)
    alpha1 = a2.simple_roots[0]
    assert dot_reflect(a2, alpha1, 5, (5, 0)) == (3, 1)


def test_dot_reflect_fixes_hyperplane(a2):
    for lam in [(2, 0), (3, 1), (0, 0)]:
        for alpha in a2.positive_roots:
            n = dot(lam, alpha.coroot) + alpha.coroot_height
            assert dot_reflect(a2, alpha, n, lam) == lam


def test_dot_reflect_involution(a2):
    for lam in itertools.product(range(-2, 4), repeat=2):
        for alpha in a2.positive_roots:
            for n in (3, 5):
                image = dot_reflect(a2, alpha, n, lam)
                assert dot_reflect(a2, alpha, n, image) == lam


def test_jantzen_sum_known_values(a2):
    assert jantzen_sum(a2, 5, (3, 1)).coeffs == {(2, 0): 1}
    assert jantzen_sum(a2, 5, (5, 0)).coeffs == {(3, 1): 1, (2, 0): -1}
    assert jantzen_sum(a2, 5, (0, 0)).coeffs == {}


def test_jantzen_sum_validates_input(a2):
    with pytest.raises(NotPrime):
        jantzen_sum(a2, 6, (1, 0))
    with pytest.raises(NotDominant):
        jantzen_sum(a2, 5, (-1, 0))


def test_jantzen_sum_empty_for_interior_lowest_alcove():
    for name in ["A2", "B2", "G2"]:
        rd = build_root_datum(name)
        for p in (2, 3, 5, 7):
            for lam in itertools.product(range(p + 1), repeat=rd.n):
                interior = all(
                    dot(lam, a.coroot) + a.coroot_height < p
                    for a in rd.positive_roots
                )
                if lowest_alcove_test(rd, p, lam) and interior:
                    assert jantzen_sum(rd, p, lam).coeffs == {}, (name, p, lam)


def test_lowest_alcove_examples(a2):
    assert lowest_alcove_test(a2, 2, (0, 0))
    assert lowest_alcove_test(a2, 5, (2, 0))
    assert not lowest_alcove_test(a2, 5, (3, 1))


def test_lowest_alcove_matches_rank2_inequality(a2):
    # for this type the test amounts to <tau, a1^vee + a2^vee> <= p - 2
    for p in (3, 5, 7):
        for tau in itertools.product(range(p + 2), repeat=2):
            assert lowest_alcove_test(a2, p, tau) == (tau[0] + tau[1] <= p - 2)


def test_resolve_simple_chain_p5(a2):
    ledger = SimpleLedger(a2, 5)
    ch_gamma = resolve_simple(a2, 5, (2, 0), ledger)
    assert dim(ch_gamma) == 6
    assert ledger.entries[(2, 0)].provenance == LOWEST_ALCOVE
    ch_mu = resolve_simple(a2, 5, (3, 1), ledger)
    assert dim(ch_mu) == 18
    assert ledger.entries[(3, 1)].provenance == JANTZEN_RESOLVED
    assert ledger.entries[(3, 1)].radical == {(2, 0): 1}
    ch_lam = resolve_simple(a2, 5, (5, 0), ledger)
    assert dim(ch_lam) == 3
    assert ledger.entries[(5, 0)].radical == {(3, 1): 1}


def test_resolve_simple_is_memoized(a2):
    ledger = SimpleLedger(a2, 5)
    first = resolve_simple(a2, 5, (5, 0), ledger)
    again = resolve_simple(a2, 5, (5, 0), ledger)
    assert first == again
    assert dim(first) <= a2.weyl_dim((5, 0))


def test_ledger_merge(a2):
    left = SimpleLedger(a2, 5)
    right = SimpleLedger(a2, 5)
    resolve_simple(a2, 5, (2, 0), left)
    resolve_simple(a2, 5, (3, 1), right)
    merged = left.merge(right)
    assert set(merged.entries) == {(2, 0), (3, 1)}


def test_ext1_examples(a2):
    ledger = SimpleLedger(a2, 5)
    assert ext1_dim(a2, 5, (2, 0), (0, 0), ledger) == 0  # lowest alcove: rad 0
    assert ext1_dim(a2, 5, (3, 1), (2, 0), ledger) == 1
    assert ext1_dim(a2, 5, (3, 1), (0, 0), ledger) == 0
    with pytest.raises(HypothesisUnmet):
        ext1_dim(a2, 5, (2, 0), (5, 0), ledger)  # gamma strictly above tau


def test_ext2_chain_values(a2):
    for p in (3, 5, 7, 11):
        lam, mu, gamma = (p, 0), (p - 2, 1), (p - 3, 0)
        ledger = SimpleLedger(a2, p)
        assert ext2_chain(a2, p, lam, mu, gamma, ledger) == 1


def test_ext2_chain_zero_case(a2):
    # rad V(mu) = L((2,0)) does not contain the trivial module
    ledger = SimpleLedger(a2, 5)
    resolve_simple(a2, 5, (5, 0), ledger)
    assert ext1_dim(a2, 5, (3, 1), (0, 0), ledger) == 0


def test_ext2_chain_hypothesis_checks(a2):
    ledger = SimpleLedger(a2, 5)
    with pytest.raises(HypothesisUnmet):
        ext2_chain(a2, 5, (5, 0), (2, 0), (0, 0), ledger)  # rad V(lam) != L((2,0))


def test_full_chain_all_p(a2):
    for p in (3, 5, 7, 11):
        lam, mu, gamma = (p, 0), (p - 2, 1), (p - 3, 0)
        assert jantzen_sum(a2, p, mu).coeffs == {gamma: 1}
        assert jantzen_sum(a2, p, lam).coeffs == {mu: 1, gamma: -1}
        ledger = SimpleLedger(a2, p)
        assert ext2_chain(a2, p, lam, mu, gamma, ledger) == 1
        w = tensor(dual(ledger.entries[lam].char), ledger.entries[gamma].char)
        assert dim(w) == 3 * (p - 1) * (p - 2) // 2


def test_steinberg_dimension_crosscheck(a2):
    # dim L(p*w1) equals dim L(w1) through the Frobenius-twist identity
    for p in (3, 5, 7, 11):
        ledger = SimpleLedger(a2, p)
        ch = resolve_simple(a2, p, (p, 0), ledger)
        assert dim(ch) == 3


def test_report_json(a2):
    report = jantzen_report(a2, 5, (5, 0))
    data = report.to_json_dict()
    assert data == {
        "lambda": "5,0",
        "p": 5,
        "J": {"2,0": -1, "3,1": 1},
        "radical": "3,1",
        "chL_dim": 3,
        "provenance": "jantzen_resolved",
    }
