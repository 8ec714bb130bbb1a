"""Chain counts, Kostka numbers, tensor decompositions and the LR rule."""

from fractions import Fraction

import pytest

from superwalk import (
    AlgebraKind,
    InvalidInputError,
    ProbVector,
    decompose_product,
    dec_skew_identity,
    enumerate_standard,
    f_count,
    f_skew,
    is_valid_tableau,
    kostka,
    lr_count,
    lr_enumerate,
    pi_weight,
    schur,
    successors,
    theta_embed,
    verify_m_le_K,
)
from superwalk.kinds import sub_weights
from superwalk.multiplicities import (
    decompose_by_linear_system,
    dec_skew_coefficient_identity,
    lr_reading_word,
    shapes_of_size,
)
from superwalk.simulate import drift_shape
from superwalk.suites import condition_points, shapes_up_to

KE2 = AlgebraKind.empty(2)
KE3 = AlgebraKind.empty(3)
KS3 = AlgebraKind.strict(3)
KH22 = AlgebraKind.hook(2, 2)
KH33 = AlgebraKind.hook(3, 3)

EXAM_LAMBDA = (3, 3, 3, 2, 2, 2)   # (3,3,3|3,3) in split coordinates
EXAM_KAPPA = (2,)                  # (2,0,0|0,0)
EXAM_MU = (3, 3, 2, 2, 2, 1)       # (3,3,2|3,2)


def test_f_count_examples():
    assert f_count(KE3, (2, 1)) == 2
    assert f_skew(KE3, (2, 1), (2, 1)) == 1
    assert f_skew(KE2, (2, 2), (1,)) == 2


def test_f_counts_match_chain_enumeration():
    for kind in (KE3, KH22, KS3):
        for lam in shapes_up_to(kind, 5):
            assert f_count(kind, lam) == len(enumerate_standard(kind, lam))
            for nu in shapes_up_to(kind, 4):
                expected = len(enumerate_standard(kind, lam, nu))
                assert f_skew(kind, lam, nu) == expected


def test_total_probability_identity():
    # sum over shapes of f * s at any admissible p is one
    for kind in (KE3, KH22, KS3):
        p = condition_points(kind)[0]
        for level in range(1, 6):
            total = sum(
                f_count(kind, lam) * schur(kind, lam, p, budget=6)
                for lam in shapes_of_size(kind, level)
            )
            assert total == 1


def test_kostka_examples():
    for kind in (KE3, KH22, KS3):
        for lam in shapes_up_to(kind, 5):
            assert kostka(kind, lam, pi_weight(kind, lam)) == 1
        single = (1,)
        for i in range(kind.N):
            e_i = tuple(1 if j == i else 0 for j in range(kind.N))
            assert kostka(kind, single, e_i) == 1
    assert kostka(KE3, (2,), (1, -1, 2)) == 0


def test_pieri_rule():
    for kind in (KE3, KH22, KS3):
        for mu in shapes_up_to(kind, 4):
            dec = decompose_product(kind, mu, (1,))
            assert dec == {lam: 1 for lam in successors(kind, mu)}


def test_product_commutes_and_is_consistent():
    for kind in (KE2, KH22, KS3):
        p = condition_points(kind)[0]
        pairs = [
            (ka, mu)
            for ka in shapes_up_to(kind, 3)
            for mu in shapes_up_to(kind, 3)
            if sum(ka) + sum(mu) <= 6 and ka and mu
        ]
        for ka, mu in pairs:
            left = decompose_product(kind, ka, mu)
            assert left == decompose_product(kind, mu, ka)
            assert all(v > 0 for v in left.values())
            for lam in left:
                assert sum(lam) == sum(ka) + sum(mu)
            # evaluating both sides of the decomposition at a rational point
            lhs = schur(kind, ka, p, budget=6) * schur(kind, mu, p, budget=6)
            rhs = sum(
                mult * schur(kind, lam, p, budget=6) for lam, mult in left.items()
            )
            assert lhs == rhs


def test_linear_system_agrees_with_greedy():
    cases = [
        (KE2, (2, 1), (1, 1)),
        (KS3, (2, 1), (2,)),
        (KH22, (2, 1), (1, 1)),
    ]
    for kind, ka, mu in cases:
        assert decompose_by_linear_system(kind, ka, mu) == decompose_product(kind, ka, mu)


def test_lr_exam_instance():
    tabs = lr_enumerate(KH33, EXAM_LAMBDA, EXAM_KAPPA, EXAM_MU)
    assert len(tabs) == 1
    tab = tabs[0]
    assert tab.rows == ((1,), (1, 1, 2), (2, 2, 3), (3, 4), (4, 5), (5, 6))
    assert lr_reading_word(tab) == (1, 2, 1, 1, 3, 2, 2, 4, 5, 6, 3, 4, 5)
    assert tab.content() == EXAM_MU


def test_lr_trivial_cases():
    assert lr_count(KH22, (2, 1), (2, 1), ()) == 1
    with pytest.raises(InvalidInputError):
        lr_enumerate(KH22, (2, 1), (1,), (1,))  # size mismatch


def test_lr_agrees_with_decomposition():
    for lam in shapes_up_to(KH22, 8):
        for kappa in shapes_up_to(KH22, sum(lam)):
            if not all(
                a >= b for a, b in zip(pi_weight(KH22, lam), pi_weight(KH22, kappa))
            ):
                continue
            for mu in shapes_of_size(KH22, sum(lam) - sum(kappa)):
                assert lr_count(KH22, lam, kappa, mu) == decompose_product(
                    KH22, kappa, mu, budget=8
                ).get(lam, 0)


def test_lr_exam_matches_decomposition():
    dec = decompose_product(KH33, EXAM_KAPPA, EXAM_MU, budget=16, max_nodes=10**7)
    assert dec.get(EXAM_LAMBDA, 0) == 1
    assert dec.get(EXAM_LAMBDA, 0) == lr_count(KH33, EXAM_LAMBDA, EXAM_KAPPA, EXAM_MU)


def test_theta_exam_golden():
    tab = lr_enumerate(KH33, EXAM_LAMBDA, EXAM_KAPPA, EXAM_MU)[0]
    theta = theta_embed(tab)
    assert theta.rows == (
        (-3, -2, -2),
        (-2, -1, -1),
        (-1, 1),
        (1, 2),
        (1, 2),
        (2,),
    )
    assert is_valid_tableau(theta)
    assert theta.shape == EXAM_MU
    assert theta.weight() == sub_weights(
        pi_weight(KH33, EXAM_LAMBDA), pi_weight(KH33, EXAM_KAPPA)
    )


def test_theta_contract_and_injectivity():
    for lam in shapes_up_to(KH22, 6):
        for kappa in shapes_up_to(KH22, sum(lam)):
            if not all(
                a >= b for a, b in zip(pi_weight(KH22, lam), pi_weight(KH22, kappa))
            ):
                continue
            for mu in shapes_of_size(KH22, sum(lam) - sum(kappa)):
                images = set()
                for tab in lr_enumerate(KH22, lam, kappa, mu):
                    theta = theta_embed(tab)
                    assert is_valid_tableau(theta)
                    assert theta.shape == mu
                    assert theta.weight() == sub_weights(
                        pi_weight(KH22, lam), pi_weight(KH22, kappa)
                    )
                    images.add(theta.rows)
                assert len(images) == lr_count(KH22, lam, kappa, mu)


def test_theta_empty():
    tab = lr_enumerate(KH22, (2, 1), (2, 1), ())[0]
    assert theta_embed(tab).rows == ()


def test_m_le_K_sweep():
    for kind in (KE3, KH22, KS3):
        for lam in shapes_up_to(kind, 6):
            for kappa in shapes_up_to(kind, sum(lam)):
                if not all(
                    a >= b
                    for a, b in zip(pi_weight(kind, lam), pi_weight(kind, kappa))
                ):
                    continue
                for mu in shapes_of_size(kind, sum(lam) - sum(kappa)):
                    assert verify_m_le_K(kind, lam, kappa, mu)


def test_m_equals_K_along_drift():
    # at drift scale the bound is attained for every admissible kappa
    for kind in (KE2, AlgebraKind.strict(2), AlgebraKind.hook(1, 1)):
        p = ProbVector(kind, (Fraction(2, 3), Fraction(1, 3)))
        for scale in (20, 30):
            lam = drift_shape(kind, p, scale)
            for mu in shapes_up_to(kind, 3):
                if not mu:
                    continue
                kappas = {lam}
                for _ in range(sum(mu)):
                    kappas = {
                        smaller
                        for shape in kappas
                        for smaller in _shrink_once(kind, shape)
                    }
                for kappa in kappas:
                    mult = decompose_product(kind, kappa, mu, budget=60).get(lam, 0)
                    diff = sub_weights(pi_weight(kind, lam), pi_weight(kind, kappa))
                    assert mult == kostka(kind, mu, diff, budget=60)


def _shrink_once(kind, shape):
    from superwalk import predecessors

    return predecessors(kind, shape)


def test_dec_skew_identity_sweep():
    for kind in (KE2, KH22, AlgebraKind.strict(2)):
        for lam in shapes_up_to(kind, 6):
            for nu in shapes_up_to(kind, sum(lam)):
                if not all(
                    a >= b for a, b in zip(pi_weight(kind, lam), pi_weight(kind, nu))
                ):
                    continue
                assert dec_skew_identity(kind, lam, nu)


def test_dec_skew_coefficient_identity_along_drift():
    for kind in (KE2, AlgebraKind.strict(2), AlgebraKind.hook(1, 1)):
        p = ProbVector(kind, (Fraction(2, 3), Fraction(1, 3)))
        for scale in (20, 30):
            lam = drift_shape(kind, p, scale)
            for mu in ((1,), (2,), (2, 1)):
                if not _valid_for(kind, mu):
                    continue
                assert dec_skew_coefficient_identity(kind, lam, mu, budget=8)


def _valid_for(kind, shape):
    from superwalk import is_valid_shape

    return is_valid_shape(kind, shape)
