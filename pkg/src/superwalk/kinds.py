"""Alphabets, words, weights and the three partition families.

Everything downstream is parameterized by an :class:`AlgebraKind`, which
selects one of three combinatorial worlds:

* ``empty`` -- ordinary partitions with at most ``n`` rows, alphabet ``1..n``;
* ``hook``  -- hook partitions (``lam_i <= n`` below row ``m``), alphabet
  ``-m .. -1, 1 .. n`` where negative integers encode barred letters and the
  total order is the integer order (every barred letter precedes every
  unbarred one);
* ``strict`` -- partitions with distinct nonzero parts and at most ``n``
  rows, drawn as shifted diagrams, alphabet ``1..n``.

Weights are integer vectors of length ``N`` (``n``, or ``m+n`` for hook)
counting letters in increasing alphabet order; for hook kind the barred
counts occupy the first ``m`` coordinates, written
``(b_mbar, ..., b_1bar | b_1, ..., b_n)``.

Shapes are plain tuples of weakly decreasing nonnegative integers with
trailing zeros stripped; equality and hashing therefore never see padding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvalidInputError

Shape = tuple[int, ...]
Weight = tuple[int, ...]
Word = tuple[int, ...]

EMPTY = "empty"
HOOK = "hook"
STRICT = "strict"
KIND_NAMES = (EMPTY, HOOK, STRICT)


@dataclass(frozen=True)
class AlgebraKind:
    """Selector for gl(n) (``empty``), gl(m,n) (``hook``) or q(n) (``strict``).

    ``m`` is meaningful only for the hook kind and must be 0 otherwise.
    """

    kind: str
    n: int
    m: int = 0

    def __post_init__(self):
        if self.kind not in KIND_NAMES:
            raise InvalidInputError(f"unknown kind {self.kind!r}")
        if self.n < 1:
            raise InvalidInputError("n must be a positive integer")
        if self.kind == HOOK:
            if self.m < 1:
                raise InvalidInputError("hook kind requires a positive m")
        elif self.m != 0:
            raise InvalidInputError(f"kind {self.kind!r} does not take m")

    @classmethod
    def empty(cls, n: int) -> "AlgebraKind":
        return cls(EMPTY, n)

    @classmethod
    def hook(cls, m: int, n: int) -> "AlgebraKind":
        return cls(HOOK, n, m)

    @classmethod
    def strict(cls, n: int) -> "AlgebraKind":
        return cls(STRICT, n)

    @property
    def N(self) -> int:
        """Alphabet size: ``n`` for empty/strict, ``m+n`` for hook."""
        return self.m + self.n if self.kind == HOOK else self.n

    @property
    def alphabet(self) -> tuple[int, ...]:
        """Letters in increasing order; barred letters are the negatives."""
        if self.kind == HOOK:
            return tuple(range(-self.m, 0)) + tuple(range(1, self.n + 1))
        return tuple(range(1, self.n + 1))

    def letter_index(self, letter: int) -> int:
        """Position of ``letter`` in the alphabet (also its weight coordinate)."""
        if self.kind == HOOK and -self.m <= letter <= -1:
            return letter + self.m
        if 1 <= letter <= self.n:
            return letter - 1 + (self.m if self.kind == HOOK else 0)
        raise InvalidInputError(f"letter {letter} not in the {self.describe()} alphabet")

    def describe(self) -> str:
        if self.kind == EMPTY:
            return f"gl({self.n})"
        if self.kind == HOOK:
            return f"gl({self.m},{self.n})"
        return f"q({self.n})"


def is_barred(letter: int) -> bool:
    return letter < 0


# ---------------------------------------------------------------------------
# Words and weights
# ---------------------------------------------------------------------------

def check_word(kind: AlgebraKind, word: Sequence[int]) -> Word:
    """Validate letters and return the word as a tuple."""
    w = tuple(word)
    for x in w:
        kind.letter_index(x)
    return w


def weight_of(kind: AlgebraKind, word: Sequence[int]) -> Weight:
    """Letter-count vector of a word, in increasing alphabet order."""
    counts = [0] * kind.N
    for x in word:
        counts[kind.letter_index(x)] += 1
    return tuple(counts)


def add_weights(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def sub_weights(a: Sequence[int], b: Sequence[int]) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Shapes
# ---------------------------------------------------------------------------

def normalize_shape(parts: Iterable[int]) -> Shape:
    """Strip trailing zeros; identifies (3,1) with (3,1,0)."""
    out = list(parts)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def shape_size(shape: Sequence[int]) -> int:
    return sum(shape)


def conjugate(shape: Sequence[int]) -> Shape:
    """Transpose of a partition diagram."""
    parts = normalize_shape(shape)
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j) for j in range(1, parts[0] + 1))


def _is_partition(parts: Sequence[int]) -> bool:
    return all(isinstance(p, int) and p >= 0 for p in parts) and all(
        a >= b for a, b in zip(parts, parts[1:])
    )


def is_valid_shape(kind: AlgebraKind, parts: Sequence[int]) -> bool:
    """Kind-specific partition validity.

    empty: at most ``n`` nonzero parts.
    hook:  any length, but ``parts[i] <= n`` for every row index ``i > m``.
    strict: at most ``n`` parts with distinct nonzero parts.
    """
    if not _is_partition(parts):
        return False
    norm = normalize_shape(parts)
    if kind.kind == EMPTY:
        return len(norm) <= kind.n
    if kind.kind == STRICT:
        if len(norm) > kind.n:
            return False
        return all(a > b for a, b in zip(norm, norm[1:]) if b > 0)
    return all(p <= kind.n for p in norm[kind.m:])


def check_shape(kind: AlgebraKind, parts: Sequence[int]) -> Shape:
    if not is_valid_shape(kind, parts):
        raise InvalidInputError(
            f"{tuple(parts)} is not a valid {kind.describe()} shape"
        )
    return normalize_shape(parts)


def hook_split(kind: AlgebraKind, shape: Sequence[int]) -> tuple[Shape, Shape]:
    """Split a hook partition into its first-m-rows part and the conjugated rest."""
    if kind.kind != HOOK:
        raise InvalidInputError("hook_split is defined for the hook kind only")
    lam = check_shape(kind, shape)
    first = normalize_shape(lam[: kind.m])
    rest = conjugate(lam[kind.m:])
    return first, rest


def pi_weight(kind: AlgebraKind, shape: Sequence[int]) -> Weight:
    """Dominant-weight embedding of a shape.

    Identity (up to zero padding) for empty/strict; for hook the barred block
    carries the m longest rows and the unbarred block the conjugate of the
    remainder.
    """
    lam = check_shape(kind, shape)
    if kind.kind == HOOK:
        first, rest = hook_split(kind, lam)
        return first + (0,) * (kind.m - len(first)) + rest + (0,) * (kind.n - len(rest))
    return lam + (0,) * (kind.n - len(lam))


def shape_from_weight(kind: AlgebraKind, weight: Sequence[int]) -> Shape:
    """Inverse of :func:`pi_weight` on the dominant integer points."""
    w = tuple(weight)
    if len(w) != kind.N:
        raise InvalidInputError(f"weight has length {len(w)}, expected {kind.N}")
    if not in_semigroup(kind, w):
        raise InvalidInputError(f"{w} is not a dominant {kind.describe()} weight")
    if kind.kind != HOOK:
        return normalize_shape(w)
    barred, unbarred = w[: kind.m], w[kind.m:]
    return normalize_shape(tuple(barred) + conjugate(unbarred))


def contains(kind: AlgebraKind, outer: Sequence[int], inner: Sequence[int]) -> bool:
    """Diagram containment; equivalent to coordinatewise order of pi-weights."""
    a, b = pi_weight(kind, outer), pi_weight(kind, inner)
    return all(x >= y for x, y in zip(a, b))


def successors(kind: AlgebraKind, shape: Sequence[int]) -> list[Shape]:
    """All valid shapes obtained by adding one box, in pi-coordinate order.

    Coordinate order means barred rows come before unbarred columns for the
    hook kind; for empty/strict it is the row index of the added box.
    """
    base = pi_weight(kind, shape)
    out = []
    for i in range(kind.N):
        cand = base[:i] + (base[i] + 1,) + base[i + 1:]
        if in_semigroup(kind, cand):
            out.append(shape_from_weight(kind, cand))
    return out


def predecessors(kind: AlgebraKind, shape: Sequence[int]) -> list[Shape]:
    """All valid shapes obtained by removing one box, in pi-coordinate order."""
    base = pi_weight(kind, shape)
    out = []
    for i in range(kind.N):
        if base[i] == 0:
            continue
        cand = base[:i] + (base[i] - 1,) + base[i + 1:]
        if in_semigroup(kind, cand):
            out.append(shape_from_weight(kind, cand))
    return out


def added_coordinate(kind: AlgebraKind, small: Sequence[int], large: Sequence[int]) -> int:
    """Index of the pi coordinate incremented when going from small to large.

    Raises unless the two shapes differ by exactly one box.
    """
    a, b = pi_weight(kind, small), pi_weight(kind, large)
    diffs = [i for i in range(kind.N) if a[i] != b[i]]
    if len(diffs) != 1 or b[diffs[0]] - a[diffs[0]] != 1:
        raise InvalidInputError(f"{tuple(large)} does not cover {tuple(small)}")
    return diffs[0]


# ---------------------------------------------------------------------------
# Semigroups
# ---------------------------------------------------------------------------

def in_semigroup(kind, x: Sequence, interior: bool = False) -> bool:
    """Membership of a rational vector in the kind's semigroup C.

    Closed conditions:
      empty:  x_1 >= ... >= x_n >= 0;
      strict: additionally all nonzero coordinates distinct;
      hook:   both blocks weakly decreasing and nonnegative, and x_i = 0 for
              every unbarred index i exceeding the last barred coordinate.

    With ``interior=True``, strict inequalities; for hook the last barred
    coordinate must additionally exceed n (which makes the zero condition
    vacuous).
    """
    v = tuple(x)
    if len(v) != kind.N:
        raise InvalidInputError(f"vector has length {len(v)}, expected {kind.N}")
    if kind.kind == HOOK:
        barred, unbarred = v[: kind.m], v[kind.m:]
        if interior:
            return (
                all(a > b for a, b in zip(barred, barred[1:]))
                and barred[-1] > kind.n
                and all(a > b for a, b in zip(unbarred, unbarred[1:]))
                and unbarred[-1] > 0
            )
        if not all(a >= b for a, b in zip(barred, barred[1:])) or barred[-1] < 0:
            return False
        if not all(a >= b for a, b in zip(unbarred, unbarred[1:])) or unbarred[-1] < 0:
            return False
        return all(unbarred[i] == 0 for i in range(kind.n) if i + 1 > barred[-1])
    if interior:
        return all(a > b for a, b in zip(v, v[1:])) and v[-1] > 0
    if not all(a >= b for a, b in zip(v, v[1:])) or v[-1] < 0:
        return False
    if kind.kind == STRICT:
        return all(a != b for a, b in zip(v, v[1:]) if a != 0)
    return True


# ---------------------------------------------------------------------------
# Parsing and JSON encodings
# ---------------------------------------------------------------------------

def parse_word(kind: AlgebraKind, text: str) -> Word:
    """Parse a word string.

    Accepts a compact digit string like ``"232143"`` (with ``-`` prefixing a
    barred digit, e.g. ``"-23-2"``) or comma/space separated tokens. The
    compact form supports single-digit letters only, which covers every desk
    scale rank.
    """
    text = text.strip()
    if not text:
        return ()
    if "," in text or " " in text:
        tokens = [t for t in text.replace(",", " ").split() if t]
    else:
        tokens, i = [], 0
        while i < len(text):
            if text[i] == "-":
                if i + 1 >= len(text) or not text[i + 1].isdigit():
                    raise InvalidInputError(f"dangling '-' in word {text!r}")
                tokens.append(text[i : i + 2])
                i += 2
            elif text[i].isdigit():
                tokens.append(text[i])
                i += 1
            else:
                raise InvalidInputError(f"unexpected character {text[i]!r} in word")
    try:
        letters = tuple(int(t) for t in tokens)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse word {text!r}") from exc
    return check_word(kind, letters)


def format_word(word: Sequence[int]) -> str:
    return ",".join(str(x) for x in word)


def parse_shape(kind: AlgebraKind, text: str) -> Shape:
    text = text.strip()
    if not text or text in ("0", "()", "[]"):
        return ()
    try:
        parts = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse shape {text!r}") from exc
    return check_shape(kind, parts)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError(f"cannot parse rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def shape_to_json(shape: Sequence[int]) -> list[int]:
    return list(normalize_shape(shape))


def weight_to_json(kind: AlgebraKind, weight: Sequence[int]):
    if kind.kind == HOOK:
        return {"barred": list(weight[: kind.m]), "unbarred": list(weight[kind.m:])}
    return list(weight)


def word_to_json(word: Sequence[int]) -> str:
    return format_word(word)
