"""Named exhaustive verification suites driven by the ``verify`` subcommand.

Each suite runs an exact identity sweep at a configurable desk-scale budget
and returns a list of failure descriptions (empty means the suite passed).
"""

from __future__ import annotations

import inspect
from fractions import Fraction
from itertools import product
from typing import Callable

from .characters import (
    ProbVector,
    psi,
    schur,
    schur_by_tableaux,
    schur_weyl_empty,
    schur_weyl_hook,
    schur_weyl_strict,
    weyl_route_applicable,
)
from .insertion import pitman, rsk
from .kinds import EMPTY, HOOK, AlgebraKind, pi_weight, shape_size, successors
from .markov import doob_transform, pi_restricted, pi_shape, stay_probability
from .multiplicities import (
    decompose_product,
    dec_skew_identity,
    f_count,
    lr_count,
    shapes_of_size,
)
from .tableaux import enumerate_standard, enumerate_tableaux

SUITE_NAMES = (
    "rsk-bijection",
    "characters-dual-route",
    "markov-law",
    "pieri",
    "lr-hook",
    "dec-skew",
    "dim2",
)


def condition_points(kind: AlgebraKind, count: int = 3) -> list[ProbVector]:
    """Deterministic strictly decreasing probability vectors."""
    out = []
    for base in (2, 3, 5)[:count]:
        raw = [Fraction(base ** (kind.N - i), 1) for i in range(kind.N)]
        total = sum(raw)
        out.append(ProbVector(kind, tuple(v / total for v in raw)))
    return out


def shapes_up_to(kind: AlgebraKind, boxes: int):
    for size in range(boxes + 1):
        yield from shapes_of_size(kind, size)


def _default_kinds(n: int, m: int) -> list[AlgebraKind]:
    return [AlgebraKind.empty(n), AlgebraKind.hook(m, n), AlgebraKind.strict(n)]


def suite_rsk_bijection(n: int = 3, m: int = 2, length: int = 5, budget: int = 8) -> list[str]:
    failures = []
    for kind in _default_kinds(n, m):
        for L in range(1, length + 1):
            seen = {}
            by_shape: dict[tuple, set] = {}
            for w in product(kind.alphabet, repeat=L):
                pair = rsk(kind, w)
                key = (pair.p.rows, pair.q.chain)
                if key in seen:
                    failures.append(f"{kind.describe()} L={L}: collision at {w} and {seen[key]}")
                    continue
                seen[key] = w
                by_shape.setdefault(pair.p.shape, set()).add(key)
            total = 0
            for lam, got in by_shape.items():
                tabs = enumerate_tableaux(kind, lam, budget=budget)
                chains = enumerate_standard(kind, lam)
                expect = {(t.rows, q.chain) for t in tabs for q in chains}
                if got != expect:
                    failures.append(
                        f"{kind.describe()} L={L} shape {lam}: image has {len(got)} pairs, expected {len(expect)}"
                    )
                total += len(expect)
            if total != len(kind.alphabet) ** L:
                failures.append(
                    f"{kind.describe()} L={L}: sum f*|T| = {total} != N^L = {len(kind.alphabet) ** L}"
                )
    return failures


def suite_characters_dual_route(n: int = 3, m: int = 2, budget: int = 6) -> list[str]:
    failures = []
    kinds = [AlgebraKind.empty(min(n, 3)), AlgebraKind.strict(min(n, 3)), AlgebraKind.hook(min(m, 2), min(n, 3))]
    for kind in kinds:
        for p in condition_points(kind):
            for lam in shapes_up_to(kind, budget):
                tab_value = schur_by_tableaux(kind, lam, p, budget=budget)
                if not weyl_route_applicable(kind, lam, p.values):
                    continue
                if kind.kind == EMPTY:
                    weyl_value = schur_weyl_empty(kind, lam, p)
                elif kind.kind == HOOK:
                    weyl_value = schur_weyl_hook(kind, lam, p)
                else:
                    weyl_value = schur_weyl_strict(kind, lam, p)
                if tab_value != weyl_value:
                    failures.append(
                        f"{kind.describe()} {lam} at p={p.to_json()}: tableaux {tab_value} != weyl {weyl_value}"
                    )
    return failures


def suite_markov_law(n: int = 2, m: int = 1, length: int = 4, budget: int = 8) -> list[str]:
    failures = []
    for kind in _default_kinds(n, m):
        p = condition_points(kind)[0]
        kernel = pi_shape(kind, p, budget=budget)
        for lam in shapes_up_to(kind, length + 1):
            if kernel.row_sum(lam) != 1:
                failures.append(f"{kind.describe()}: row sum at {lam} is not 1")
        # exact law of the Pitman image by full enumeration
        law: dict[tuple, Fraction] = {}
        for w in product(kind.alphabet, repeat=length):
            prob = Fraction(1)
            for x in w:
                prob *= p.prob(x)
            lam = pitman(kind, w)[-1]
            law[lam] = law.get(lam, Fraction(0)) + prob
        for lam, mass in law.items():
            expected = f_count(kind, lam) * schur(kind, lam, p, budget=budget)
            if mass != expected:
                failures.append(f"{kind.describe()}: P[H={lam}] = {mass} != f*s = {expected}")
        # psi is harmonic: the Doob transform of the restriction matches pi_shape
        restricted = pi_restricted(kind, p)
        doob = doob_transform(restricted, lambda s: psi(kind, s, p, budget=budget))
        for lam in shapes_up_to(kind, length):
            if dict(doob.successors(lam)) != dict(kernel.successors(lam)):
                failures.append(f"{kind.describe()}: Doob transform differs from pi_shape at {lam}")
    return failures


def suite_pieri(n: int = 3, m: int = 2, budget: int = 5) -> list[str]:
    failures = []
    for kind in _default_kinds(n, m):
        for mu in shapes_up_to(kind, budget - 1):
            dec = decompose_product(kind, mu, (1,), budget=budget)
            expected = {lam: 1 for lam in successors(kind, mu)}
            if dec != expected:
                failures.append(f"{kind.describe()}: Pieri failure at {mu}: {dec}")
    return failures


def suite_lr_hook(n: int = 2, m: int = 2, budget: int = 6) -> list[str]:
    failures = []
    kind = AlgebraKind.hook(m, n)
    for lam in shapes_up_to(kind, budget):
        for kappa in shapes_up_to(kind, shape_size(lam)):
            if not all(x >= y for x, y in zip(pi_weight(kind, lam), pi_weight(kind, kappa))):
                continue
            rest = shape_size(lam) - shape_size(kappa)
            for mu in shapes_of_size(kind, rest):
                combinatorial = lr_count(kind, lam, kappa, mu)
                algebraic = decompose_product(kind, kappa, mu, budget=budget).get(lam, 0)
                if combinatorial != algebraic:
                    failures.append(
                        f"lr({lam},{kappa},{mu}) = {combinatorial} != decompose {algebraic}"
                    )
    return failures


def suite_dec_skew(n: int = 2, m: int = 1, budget: int = 5) -> list[str]:
    failures = []
    for kind in _default_kinds(n, m):
        for lam in shapes_up_to(kind, budget):
            for nu in shapes_up_to(kind, shape_size(lam)):
                if not all(x >= y for x, y in zip(pi_weight(kind, lam), pi_weight(kind, nu))):
                    continue
                if not dec_skew_identity(kind, lam, nu, budget=budget):
                    failures.append(f"{kind.describe()}: dec-skew failure at {lam}/{nu}")
    return failures


def suite_dim2(length: int = 8) -> list[str]:
    failures = []
    ke, ks, kh = AlgebraKind.empty(2), AlgebraKind.strict(2), AlgebraKind.hook(1, 1)
    for pe in condition_points(ke):
        p1, p2 = pe.values
        if stay_probability(ke, (), pe) != 1 - p2 / p1:
            failures.append(f"empty stay formula failed at {pe.to_json()}")
        ps = ProbVector(ks, pe.values)
        if stay_probability(ks, (), ps) != p1 * (1 - p2 / p1):
            failures.append(f"strict stay formula failed at {pe.to_json()}")
        ph = ProbVector(kh, pe.values)
        if stay_probability(kh, (), ph) != ph.values[0]:
            failures.append(f"hook stay formula failed at {pe.to_json()}")
    for L in range(1, length + 1):
        for w in product(ke.alphabet, repeat=L):
            lam = pitman(ke, w[:-1])[-1] if L > 1 else ()
            lam = lam + (0,) * (2 - len(lam))
            expected = tuple(v for v in (lam[0] + 1, lam[1]) if v)
            got = pitman(ks, w)[-1]
            if got != expected:
                failures.append(f"(Pit2) failed at word {w}: {got} != {expected}")
    return failures


def run_suite(name: str, **overrides) -> list[str]:
    table: dict[str, Callable[..., list[str]]] = {
        "rsk-bijection": suite_rsk_bijection,
        "characters-dual-route": suite_characters_dual_route,
        "markov-law": suite_markov_law,
        "pieri": suite_pieri,
        "lr-hook": suite_lr_hook,
        "dec-skew": suite_dec_skew,
        "dim2": suite_dim2,
    }
    if name not in table:
        raise KeyError(name)
    func = table[name]
    accepted = {
        k: v for k, v in overrides.items()
        if v is not None and k in inspect.signature(func).parameters
    }
    return func(**accepted)
