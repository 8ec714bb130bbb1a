"""Multiplicities: chain counts, Kostka numbers, tensor decompositions and
the hook-kind Littlewood-Richardson rule with its embedding into tableaux.

Tensor product multiplicities are computed by greedy leading-term
elimination on exact character polynomials, guarded by nonnegativity and a
zero residual; if the guard trips, an exact linear system over deterministic
rational evaluation points takes over.  For the hook kind the independent
combinatorial route (LR skew tableaux with a ballot reading) cross-checks
the character route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .characters import SparseCharacter, character_polynomial, character_value
from .errors import BudgetExceededError, DecompositionError, InvalidInputError
from .kinds import (
    HOOK,
    AlgebraKind,
    Shape,
    Weight,
    check_shape,
    contains,
    pi_weight,
    shape_from_weight,
    shape_size,
    sub_weights,
    successors,
)
from .tableaux import DEFAULT_BOX_BUDGET, DEFAULT_NODE_BUDGET, Tableau

# ---------------------------------------------------------------------------
# Chain counts
# ---------------------------------------------------------------------------

def f_skew(kind: AlgebraKind, outer: Sequence[int], inner: Sequence[int] = ()) -> int:
    """Number of one-box chains from inner to outer through valid shapes.

    Computed by forward recursion over the interval, not by listing chains,
    so drift-scale shapes stay cheap.
    """
    outer = check_shape(kind, outer)
    inner = check_shape(kind, inner)
    if not contains(kind, outer, inner):
        return 0
    frontier: dict[Shape, int] = {inner: 1}
    for _ in range(shape_size(outer) - shape_size(inner)):
        nxt: dict[Shape, int] = {}
        for nu, cnt in frontier.items():
            for step in successors(kind, nu):
                if contains(kind, outer, step):
                    nxt[step] = nxt.get(step, 0) + cnt
        frontier = nxt
    return frontier.get(outer, 0)


def f_count(kind: AlgebraKind, shape: Sequence[int]) -> int:
    """Multiplicity of the shape's irreducible in the |shape|-th tensor power."""
    return f_skew(kind, shape, ())


def kostka(
    kind: AlgebraKind,
    shape: Sequence[int],
    weight: Sequence[int],
    budget: int = DEFAULT_BOX_BUDGET,
) -> int:
    """Dimension of the weight space: tableaux of the shape with that weight."""
    w = tuple(weight)
    if len(w) != kind.N:
        raise InvalidInputError(f"weight has length {len(w)}, expected {kind.N}")
    if any(e < 0 for e in w):
        return 0
    return character_polynomial(kind, shape, budget=budget).coefficient(w)


def shapes_of_size(kind: AlgebraKind, boxes: int) -> list[Shape]:
    """All valid shapes with the given number of boxes, in a stable order."""
    level = [()]
    for _ in range(boxes):
        nxt: dict[Shape, None] = {}
        for shape in level:
            for s in successors(kind, shape):
                nxt[s] = None
        level = list(nxt)
    return sorted(level)


# ---------------------------------------------------------------------------
# Tensor product decomposition
# ---------------------------------------------------------------------------

def _revlex_max(weights) -> Weight:
    # revlex-greater means smaller in the last differing coordinate, so the
    # maximum is the lexicographic minimum of the reversed tuples
    return min(weights, key=lambda w: w[::-1])


def decompose_product(
    kind: AlgebraKind,
    kappa: Sequence[int],
    mu: Sequence[int],
    budget: int = DEFAULT_BOX_BUDGET,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> dict[Shape, int]:
    """Multiplicities of the tensor product of two irreducibles.

    Greedy elimination: repeatedly match the revlex-maximal remaining weight
    of the product character to a highest shape and subtract its character.
    Falls back to an exact linear system if the greedy guard trips.
    """
    kappa = check_shape(kind, kappa)
    mu = check_shape(kind, mu)
    total = shape_size(kappa) + shape_size(mu)
    if total > budget:
        raise BudgetExceededError(f"product has {total} boxes, budget is {budget}")
    product = character_polynomial(kind, kappa, budget, max_nodes) * character_polynomial(
        kind, mu, budget, max_nodes
    )
    try:
        return _decompose_greedy(kind, product, budget, max_nodes)
    except _GreedyFailure:
        result = decompose_by_linear_system(kind, kappa, mu, budget, max_nodes)
        if result is None:
            raise DecompositionError(
                f"cannot decompose product of {kappa} and {mu} for {kind.describe()}"
            )
        return result


class _GreedyFailure(Exception):
    pass


def _decompose_greedy(
    kind: AlgebraKind, product: SparseCharacter, budget: int, max_nodes: int
) -> dict[Shape, int]:
    residual = product
    out: dict[Shape, int] = {}
    while residual:
        top = _revlex_max(residual.terms)
        coeff = residual.terms[top]
        if coeff < 0:
            raise _GreedyFailure
        try:
            lam = shape_from_weight(kind, top)
        except InvalidInputError:
            raise _GreedyFailure from None
        residual = residual.scaled_minus(
            coeff, character_polynomial(kind, lam, budget, max_nodes)
        )
        out[lam] = coeff
    return out


_EVALUATION_BASES = tuple(range(2, 40))


def evaluation_point(kind: AlgebraKind, index: int) -> tuple[Fraction, ...]:
    """Deterministic sequence of distinct small rational evaluation points."""
    base = _EVALUATION_BASES[index % len(_EVALUATION_BASES)] + index // len(
        _EVALUATION_BASES
    ) * len(_EVALUATION_BASES)
    return tuple(Fraction(1, base ** (i + 1)) for i in range(kind.N))


def decompose_by_linear_system(
    kind: AlgebraKind,
    kappa: Sequence[int],
    mu: Sequence[int],
    budget: int = DEFAULT_BOX_BUDGET,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> dict[Shape, int] | None:
    """Solve for the multiplicities by evaluating both sides at rational points.

    Characters of inequivalent irreducibles are linearly independent
    functions, so adding points until the column space has full rank
    determines the coefficients uniquely.
    """
    kappa = check_shape(kind, kappa)
    mu = check_shape(kind, mu)
    candidates = shapes_of_size(kind, shape_size(kappa) + shape_size(mu))
    k = len(candidates)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for index in range(4 * k + 8):
        point = evaluation_point(kind, index)
        rows.append(
            [character_value(kind, lam, point, budget=budget, max_nodes=max_nodes)
             for lam in candidates]
        )
        rhs.append(
            character_value(kind, kappa, point, budget=budget, max_nodes=max_nodes)
            * character_value(kind, mu, point, budget=budget, max_nodes=max_nodes)
        )
        solution = _solve_exact(rows, rhs, k)
        if solution is not None:
            out = {}
            for lam, value in zip(candidates, solution):
                if value == 0:
                    continue
                if value != int(value) or value < 0:
                    return None
                out[lam] = int(value)
            return out
    return None


def _solve_exact(rows, rhs, unknowns) -> list[Fraction] | None:
    """Gaussian elimination; None unless the system has full column rank."""
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(unknowns):
        pivot = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pivot is None:
            return None
        aug[r], aug[pivot] = aug[pivot], aug[r]
        head = aug[r][c]
        aug[r] = [v / head for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [v - factor * w for v, w in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    # consistency of the remaining rows
    for i in range(r, len(aug)):
        if any(v != 0 for v in aug[i]):
            return None
    return [aug[i][-1] for i in range(unknowns)]


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule for the hook kind
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LrTableau:
    """Skew filling of outer/inner by positive integers, hook-kind LR style.

    ``rows[r]`` holds only the skew cells of row r (columns inner_r .. outer_r-1).
    """

    kind: AlgebraKind
    outer: Shape
    inner: Shape
    rows: tuple[tuple[int, ...], ...]

    def content(self) -> tuple[int, ...]:
        counts: dict[int, int] = {}
        for row in self.rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        if not counts:
            return ()
        return tuple(counts.get(i, 0) for i in range(1, max(counts) + 1))

    def to_json(self) -> dict:
        return {
            "outer": list(self.outer),
            "inner": list(self.inner),
            "rows": [list(r) for r in self.rows],
        }


def lr_reading_word(tab: LrTableau) -> tuple[int, ...]:
    """Appendix reading: the first m rows right-to-left top-to-bottom, then
    the columns of the part below row m, rightmost column first, each top to
    bottom."""
    m = tab.kind.m
    inner = tab.inner + (0,) * (len(tab.outer) - len(tab.inner))
    word: list[int] = []
    for r in range(min(m, len(tab.rows))):
        word.extend(reversed(tab.rows[r]))
    below = range(m, len(tab.rows))
    if below:
        width = max((tab.outer[r] for r in below), default=0)
        for col in range(width - 1, -1, -1):
            for r in below:
                if inner[r] <= col < tab.outer[r]:
                    word.append(tab.rows[r][col - inner[r]])
    return tuple(word)


def is_permutation_word(word: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if counts[x] > counts.get(x - 1, 0) and x > 1:
            return False
    return True


def lr_enumerate(
    kind: AlgebraKind,
    lam: Sequence[int],
    kappa: Sequence[int],
    mu: Sequence[int],
) -> list[LrTableau]:
    """All LR tableaux of shape lam/kappa with content mu (hook kind)."""
    if kind.kind != HOOK:
        raise InvalidInputError("the LR rule implemented here is hook-kind only")
    lam = check_shape(kind, lam)
    kappa = check_shape(kind, kappa)
    mu = check_shape(kind, mu)
    if not contains(kind, lam, kappa):
        raise InvalidInputError(f"{kappa} is not contained in {lam}")
    if shape_size(mu) != shape_size(lam) - shape_size(kappa):
        raise InvalidInputError("content size must match the skew size")
    inner = kappa + (0,) * (len(lam) - len(kappa))
    cells = [
        (r, c) for r in range(len(lam)) for c in range(inner[r], lam[r])
    ]
    content = mu
    maxletter = len(content)
    grid = {cell: 0 for cell in cells}
    used = [0] * (maxletter + 1)
    out: list[LrTableau] = []

    def admissible(r: int, c: int, v: int) -> bool:
        if c - 1 >= inner[r] and grid[(r, c - 1)] > v:
            return False
        if r > 0 and c >= inner[r - 1] and c < lam[r - 1] and grid[(r - 1, c)] >= v:
            return False
        return True

    def rec(k: int):
        if k == len(cells):
            rows = tuple(
                tuple(grid[(r, c)] for c in range(inner[r], lam[r]))
                for r in range(len(lam))
            )
            tab = LrTableau(kind, lam, kappa, rows)
            if is_permutation_word(lr_reading_word(tab)):
                out.append(tab)
            return
        r, c = cells[k]
        for v in range(1, maxletter + 1):
            if used[v] < content[v - 1] and admissible(r, c, v):
                grid[(r, c)] = v
                used[v] += 1
                rec(k + 1)
                used[v] -= 1
        grid[(r, c)] = 0

    rec(0)
    out.sort(key=lambda t: t.rows)
    return out


def lr_count(
    kind: AlgebraKind,
    lam: Sequence[int],
    kappa: Sequence[int],
    mu: Sequence[int],
) -> int:
    return len(lr_enumerate(kind, lam, kappa, mu))


def theta_embed(tab: LrTableau) -> Tableau:
    """Embed an LR tableau as a hook tableau of shape mu and weight lam - kappa.

    Barred phase: the first skew row contributes that many letters -m on row
    one; each later row among the first m adds one barred letter per entry i
    onto row i of the partial tableau.  Unbarred phase: column j of the part
    below row m adds a letter j onto row i for each entry i it contains.
    """
    kind = tab.kind
    m = kind.m
    inner = tab.inner + (0,) * (len(tab.outer) - len(tab.inner))
    rows: list[list[int]] = []

    def put(row_index: int, letter: int):
        while len(rows) <= row_index:
            rows.append([])
        rows[row_index].append(letter)

    first_len = (tab.outer[0] - inner[0]) if tab.outer else 0
    for _ in range(first_len):
        put(0, -m)
    for r in range(1, min(m, len(tab.rows))):
        letter = -(m - r)
        for entry in tab.rows[r]:
            put(entry - 1, letter)
    below = range(m, len(tab.rows))
    if below:
        width = max((tab.outer[r] for r in below), default=0)
        for col in range(width):
            letter = col + 1
            for r in below:
                if inner[r] <= col < tab.outer[r]:
                    put(tab.rows[r][col - inner[r]] - 1, letter)
    return Tableau(kind, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# Identity checks
# ---------------------------------------------------------------------------

def verify_m_le_K(
    kind: AlgebraKind,
    lam: Sequence[int],
    kappa: Sequence[int],
    mu: Sequence[int],
    budget: int = DEFAULT_BOX_BUDGET,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> bool:
    """Tensor multiplicity bounded by the Kostka number of weight lam - kappa."""
    lam = check_shape(kind, lam)
    kappa = check_shape(kind, kappa)
    mu = check_shape(kind, mu)
    mult = decompose_product(kind, kappa, mu, budget, max_nodes).get(lam, 0)
    diff = sub_weights(pi_weight(kind, lam), pi_weight(kind, kappa))
    return mult <= kostka(kind, mu, diff, budget=budget)


def dec_skew_identity(
    kind: AlgebraKind,
    lam: Sequence[int],
    nu: Sequence[int],
    budget: int = DEFAULT_BOX_BUDGET,
    max_nodes: int = DEFAULT_NODE_BUDGET,
) -> bool:
    """Skew chain count as a multiplicity-weighted sum over straight shapes."""
    lam = check_shape(kind, lam)
    nu = check_shape(kind, nu)
    if not contains(kind, lam, nu):
        raise InvalidInputError(f"{nu} is not contained in {lam}")
    boxes = shape_size(lam) - shape_size(nu)
    total = 0
    for mu in shapes_of_size(kind, boxes):
        mult = decompose_product(kind, nu, mu, budget, max_nodes).get(lam, 0)
        if mult:
            total += f_count(kind, mu) * mult
    return total == f_skew(kind, lam, nu)


def dec_skew_coefficient_identity(
    kind: AlgebraKind,
    lam: Sequence[int],
    mu: Sequence[int],
    budget: int = DEFAULT_BOX_BUDGET,
) -> bool:
    """Drift-regime expansion of the skew count through Kostka numbers."""
    lam = check_shape(kind, lam)
    mu = check_shape(kind, mu)
    poly = character_polynomial(kind, mu, budget=budget)
    target = pi_weight(kind, lam)
    total = 0
    for gamma, mult in poly.terms.items():
        reduced = sub_weights(target, gamma)
        try:
            shape = shape_from_weight(kind, reduced)
        except InvalidInputError:
            continue
        total += f_count(kind, shape) * mult
    return total == f_skew(kind, lam, mu)
