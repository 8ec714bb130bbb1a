"""The three insertion schemes, the P/Q correspondence and the Pitman map.

Empty and hook kinds insert through columns: the incoming letter bumps the
smallest admissible entry of the first column and the bumped letter recurses
into the remaining columns.  The strict kind inserts through rows kept as
hook words: an inadmissible letter bumps inside the increasing part, the
bumped letter displaces inside the decreasing part, and the displaced letter
recurses into the rows below.

The recording side never looks at letters: it is the chain of shapes of the
insertion tableau over prefixes, which is also the generalized Pitman
transform of the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import BudgetExceededError, InvalidInputError
from .kinds import (
    EMPTY,
    HOOK,
    STRICT,
    AlgebraKind,
    Shape,
    Word,
    check_word,
    is_barred,
)
from .tableaux import (
    DEFAULT_BOX_BUDGET,
    StandardTableau,
    Tableau,
    empty_tableau,
    hook_decompose,
    is_hook_word,
)

ShapeSequence = tuple[Shape, ...]


@dataclass(frozen=True)
class RskPair:
    p: Tableau
    q: StandardTableau

    def __post_init__(self):
        if self.p.shape != self.q.shape:
            raise InvalidInputError("P and Q tableaux must share their shape")


# ---------------------------------------------------------------------------
# Single-letter insertions
# ---------------------------------------------------------------------------

def _rows_to_cols(rows) -> list[list[int]]:
    if not rows:
        return []
    return [
        [rows[r][c] for r in range(len(rows)) if len(rows[r]) > c]
        for c in range(len(rows[0]))
    ]


def _cols_to_rows(cols) -> tuple[tuple[int, ...], ...]:
    if not cols:
        return ()
    return tuple(
        tuple(cols[c][r] for c in range(len(cols)) if len(cols[c]) > r)
        for r in range(len(cols[0]))
    )


def _insert_columns(kind: AlgebraKind, rows, x: int) -> tuple[tuple[int, ...], ...]:
    cols = _rows_to_cols(rows)
    j = 0
    while True:
        if j == len(cols):
            cols.append([x])
            return _cols_to_rows(cols)
        col = cols[j]
        if kind.kind == EMPTY or is_barred(x):
            if all(t < x for t in col):
                col.append(x)
                return _cols_to_rows(cols)
            y = min(t for t in col if t >= x)
        else:
            if all(t <= x for t in col):
                col.append(x)
                return _cols_to_rows(cols)
            y = min(t for t in col if t > x)
        # replace the highest occurrence of y (the only one unless y repeats)
        col[col.index(y)] = x
        x = y
        j += 1


def insert_empty(tab: Tableau, x: int) -> Tableau:
    """Column insertion for gl(n)-tableaux."""
    if tab.kind.kind != EMPTY:
        raise InvalidInputError("insert_empty expects an empty-kind tableau")
    tab.kind.letter_index(x)
    return Tableau(tab.kind, _insert_columns(tab.kind, tab.rows, x))


def insert_hook(tab: Tableau, x: int) -> Tableau:
    """Column insertion for gl(m,n)-tableaux with the barred/unbarred cases."""
    if tab.kind.kind != HOOK:
        raise InvalidInputError("insert_hook expects a hook-kind tableau")
    tab.kind.letter_index(x)
    return Tableau(tab.kind, _insert_columns(tab.kind, tab.rows, x))


def insert_strict(tab: Tableau, x: int) -> Tableau:
    """Row insertion for q(n)-tableaux keeping every row a hook word."""
    if tab.kind.kind != STRICT:
        raise InvalidInputError("insert_strict expects a strict-kind tableau")
    tab.kind.letter_index(x)
    rows = [list(r) for r in tab.rows]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            break
        w = rows[i]
        if is_hook_word(w + [x]):
            w.append(x)
            break
        down, up = hook_decompose(w)
        y = min(t for t in up if t >= x)
        up[up.index(y)] = x
        z = max(t for t in down if t < y)
        down[down.index(z)] = y
        rows[i] = down + up
        x = z
        i += 1
    return Tableau(tab.kind, tuple(tuple(r) for r in rows))


def insert(kind: AlgebraKind, tab: Tableau, x: int) -> Tableau:
    if kind.kind == EMPTY:
        return insert_empty(tab, x)
    if kind.kind == HOOK:
        return insert_hook(tab, x)
    return insert_strict(tab, x)


# ---------------------------------------------------------------------------
# P, Q, RSK and Pitman
# ---------------------------------------------------------------------------

def insertion_trace(kind: AlgebraKind, word: Sequence[int]) -> list[Tableau]:
    """Tableaux after each prefix of the word (length many entries)."""
    word = check_word(kind, word)
    tab = empty_tableau(kind)
    out = []
    for x in word:
        tab = insert(kind, tab, x)
        out.append(tab)
    return out


def p_tableau(kind: AlgebraKind, word: Sequence[int]) -> Tableau:
    """Left fold of the kind's insertion over the word."""
    trace = insertion_trace(kind, word)
    return trace[-1] if trace else empty_tableau(kind)


def q_tableau(kind: AlgebraKind, word: Sequence[int]) -> StandardTableau:
    """Recording tableau: the chain of shapes over prefixes."""
    return StandardTableau(tuple(t.shape for t in insertion_trace(kind, word)))


def rsk(kind: AlgebraKind, word: Sequence[int]) -> RskPair:
    trace = insertion_trace(kind, word)
    p = trace[-1] if trace else empty_tableau(kind)
    q = StandardTableau(tuple(t.shape for t in trace))
    return RskPair(p, q)


def pitman(kind: AlgebraKind, word: Sequence[int]) -> ShapeSequence:
    """Generalized Pitman transform: prefix shapes of the insertion tableau."""
    return tuple(t.shape for t in insertion_trace(kind, word))


def rsk_inverse(kind: AlgebraKind, pair: RskPair) -> Word:
    """Recover the word from its tableau pair by reverse bumping (empty kind).

    Each step removes the box recorded last and walks it back through the
    columns: the entry bumped out of column j was placed there by the largest
    entry of column j-1 not exceeding it.  For the hook and strict kinds no
    reverse procedure is provided; their bijectivity is certified by
    exhaustive forward testing instead.
    """
    if kind.kind != EMPTY:
        raise InvalidInputError("reverse bumping is implemented for the empty kind only")
    if pair.p.kind != kind:
        raise InvalidInputError("tableau kind does not match")
    cols = _rows_to_cols(pair.p.rows)
    chain = (pair.q.inner,) + pair.q.chain
    letters: list[int] = []
    for k in range(len(chain) - 1, 0, -1):
        small, large = chain[k - 1], chain[k]
        row = next(
            r for r in range(len(large))
            if (small[r] if r < len(small) else 0) != large[r]
        )
        col = large[row] - 1
        if len(cols[col]) != row + 1:
            raise InvalidInputError("recording chain does not match the tableau")
        bumped = cols[col].pop()
        if not cols[col]:
            cols.pop()
        for j in range(col - 1, -1, -1):
            value = max(t for t in cols[j] if t <= bumped)
            index = cols[j].index(value)
            cols[j][index] = bumped
            bumped = value
        letters.append(bumped)
    letters.reverse()
    return tuple(letters)


def words_with_recording(
    kind: AlgebraKind,
    tab: StandardTableau,
    budget: int = DEFAULT_BOX_BUDGET,
) -> list[Word]:
    """All words whose recording tableau equals ``tab``, by exhaustive filter."""
    length = tab.size
    if length > budget:
        raise BudgetExceededError(
            f"recording tableau has {length} boxes, budget is {budget}"
        )
    out = []
    for letters in product(kind.alphabet, repeat=length):
        if q_tableau(kind, letters) == tab:
            out.append(letters)
    return out
