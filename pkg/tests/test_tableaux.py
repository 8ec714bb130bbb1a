"""Tableau validity, hook words, enumeration and standard chains."""

from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from superwalk import (
    AlgebraKind,
    BudgetExceededError,
    Tableau,
    enumerate_standard,
    enumerate_tableaux,
    is_hook_word,
    is_valid_tableau,
    longest_hook_subword,
    reading,
    weight_of,
)
from superwalk.multiplicities import shapes_of_size
from superwalk.tableaux import (
    StandardTableau,
    hook_decompose,
    iter_hook_words,
    standard_from_rows,
)

KE = AlgebraKind.empty(4)
KH = AlgebraKind.hook(2, 3)
KS4 = AlgebraKind.strict(4)
KS5 = AlgebraKind.strict(5)


def brute_longest_hook_subword(word):
    best = 0
    for k in range(1, len(word) + 1):
        for picks in combinations(range(len(word)), k):
            if is_hook_word([word[i] for i in picks]):
                best = max(best, k)
    return best


def test_hook_word_basics():
    assert is_hook_word((2, 1))
    assert is_hook_word((1, 1))
    assert is_hook_word((3, 1, 2, 4))
    assert not is_hook_word((1, 2, 1))
    assert not is_hook_word(())
    assert hook_decompose((3, 1, 2, 4)) == ([3, 1], [2, 4])
    assert hook_decompose((1, 2, 3)) == ([1], [2, 3])


def test_longest_hook_subword_examples():
    assert longest_hook_subword((2, 1)) == 2
    assert longest_hook_subword(()) == 0
    assert longest_hook_subword((1, 2, 1, 3)) == 3


def test_longest_hook_subword_matches_brute_force_exhaustively():
    # every word of length up to eight over a three-letter alphabet
    for length in range(9):
        for word in product((1, 2, 3), repeat=length):
            assert longest_hook_subword(word) == brute_longest_hook_subword(word)


@settings(max_examples=100)
@given(st.lists(st.integers(1, 5), min_size=9, max_size=14))
def test_longest_hook_subword_matches_brute_force_sampled(word):
    assert longest_hook_subword(word) == brute_longest_hook_subword(word)


def test_iter_hook_words_complete():
    for n, length in [(2, 4), (3, 3), (4, 2)]:
        got = list(iter_hook_words(n, length))
        assert len(set(got)) == len(got)
        expect = [w for w in product(range(1, n + 1), repeat=length) if is_hook_word(w)]
        assert sorted(got) == sorted(expect)


def test_validity_golden_examples():
    assert is_valid_tableau(Tableau(KE, ((1, 2, 2), (3, 3), (4,))))
    assert is_valid_tableau(Tableau(KS4, ((4, 3, 3, 1, 5), (3, 2, 1), (2,)))) is False
    assert is_valid_tableau(Tableau(KS5, ((4, 3, 3, 1, 5), (3, 2, 1), (2,))))
    assert is_valid_tableau(Tableau(KH, ((-2, -2, 3), (-1, -1), (2, 3), (2,))))


def test_validity_counterexamples():
    # column repeats a letter
    assert not is_valid_tableau(Tableau(KE, ((1, 2), (1,))))
    # strict maximality failure: rows [1,2],[2] has a hook subword 2,1,2 of length 3
    assert not is_valid_tableau(Tableau(AlgebraKind.strict(2), ((1, 2), (2,))))
    # barred letter repeated in a column
    assert not is_valid_tableau(Tableau(KH, ((-2,), (-2,))))
    # unbarred letter repeated in a row
    assert not is_valid_tableau(Tableau(KH, ((1, 1),)))
    # barred repeats are fine along rows, unbarred down columns
    assert is_valid_tableau(Tableau(KH, ((-2, -2), (1,), (1,))))


def test_reading_words():
    assert reading(Tableau(KE, ((1, 2, 2), (3, 3), (4,)))) == (2, 2, 1, 3, 3, 4)
    assert reading(Tableau(KE, ((3,),))) == (3,)
    t = Tableau(KS5, ((4, 3, 3, 1, 5), (3, 2, 1), (2,)))
    assert reading(t) == (2, 3, 2, 1, 4, 3, 3, 1, 5)


def test_enumerate_empty_kind_small():
    ke2 = AlgebraKind.empty(2)
    singles = enumerate_tableaux(ke2, (1,))
    assert [t.rows for t in singles] == [((1,),), ((2,),)]
    col = enumerate_tableaux(ke2, (1, 1))
    assert [t.rows for t in col] == [((1,), (2,))]


def test_enumerate_strict_row_two():
    ks2 = AlgebraKind.strict(2)
    tabs = enumerate_tableaux(ks2, (2,))
    assert sorted(t.rows[0] for t in tabs) == [(1, 1), (1, 2), (2, 1), (2, 2)]


def test_enumerate_validates_and_weights():
    for kind in (AlgebraKind.empty(3), AlgebraKind.hook(2, 2), AlgebraKind.strict(3)):
        for size in range(5):
            for lam in shapes_of_size(kind, size):
                tabs = enumerate_tableaux(kind, lam)
                assert len({t.rows for t in tabs}) == len(tabs)
                for t in tabs:
                    assert is_valid_tableau(t)
                    assert t.shape == lam
                    assert sum(t.weight()) == size


def test_enumerate_budget():
    with pytest.raises(BudgetExceededError):
        enumerate_tableaux(KE, (5, 4), budget=8)
    with pytest.raises(BudgetExceededError):
        enumerate_tableaux(AlgebraKind.empty(3), (3, 2), max_nodes=3)


def test_strict_rows_have_nonempty_decreasing_part():
    ks3 = AlgebraKind.strict(3)
    for size in range(1, 6):
        for lam in shapes_of_size(ks3, size):
            for t in enumerate_tableaux(ks3, lam):
                for row in t.rows:
                    down, _ = hook_decompose(row)
                    assert down


def test_enumerate_standard_examples():
    ke = AlgebraKind.empty(3)
    chains = enumerate_standard(ke, (2, 1))
    assert len(chains) == 2
    assert {c.chain for c in chains} == {
        ((1,), (2,), (2, 1)),
        ((1,), (1, 1), (2, 1)),
    }
    assert len(enumerate_standard(ke, (2, 2), (2, 2))) == 1
    assert enumerate_standard(ke, (2, 2), (2, 2))[0].chain == ()
    # (2,2)/(1): the two middle boxes are incomparable, giving two chains
    ke2 = AlgebraKind.empty(2)
    assert {c.chain for c in enumerate_standard(ke2, (2, 2), (1,))} == {
        ((2,), (2, 1), (2, 2)),
        ((1, 1), (2, 1), (2, 2)),
    }


def test_strict_standard_chains_respect_validity():
    ks2 = AlgebraKind.strict(2)
    chains = enumerate_standard(ks2, (2, 1))
    # (1,1) is not a strict shape so only one chain survives
    assert [c.chain for c in chains] == [((1,), (2,), (2, 1))]


def test_standard_rows_roundtrip():
    for kind in (AlgebraKind.empty(3), AlgebraKind.hook(2, 2), AlgebraKind.strict(4)):
        for size in range(1, 6):
            for lam in shapes_of_size(kind, size):
                for chain in enumerate_standard(kind, lam):
                    rows = chain.to_rows()
                    assert standard_from_rows(kind, rows) == chain


def test_skew_standard_roundtrip():
    ke = AlgebraKind.empty(3)
    for chain in enumerate_standard(ke, (3, 2, 1), (1, 1)):
        rows = chain.to_rows()
        rebuilt = standard_from_rows(ke, rows, inner=(1, 1))
        assert rebuilt == chain


def test_standard_tableau_fields():
    t = StandardTableau(((1,), (2,)))
    assert t.size == 2
    assert t.shape == (2,)
    assert t.to_rows() == ((1, 2),)
