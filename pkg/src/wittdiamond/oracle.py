"""Independent brute-force oracles.

These deliberately re-derive results through naive routes: truncated
submodule closure (a desk-scale stand-in for simplicity statements),
free-word rewriting (cross-check for the PBW straightener), and cofactor
determinants (cross-check for elimination).  Constructive results are
only trusted once an oracle here agrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exceptions import ZeroVector
from .lie import FAMILIES, Generator, UEnvElement, bracket, gen
from .linalg import SpanBasis
from .poly import SparsePoly, monomials_within
from .scalars import ONE, ZERO


@dataclass(frozen=True)
class TruncationPolicy:
    max_total_degree: int = 4
    generator_window: int = 2
    max_steps: int = 64

    def __post_init__(self):
        if self.max_total_degree < 1 or self.generator_window < 1 or self.max_steps < 1:
            raise ValueError("policy fields must be positive")


@dataclass
class ClosureReport:
    start: str
    reached_dim: int
    ambient_dim: int
    verdict: str
    overflow_count: int
    rounds: int
    exact_invariant: bool

    FILLS = "fills-truncation"
    PROPER = "proper-at-truncation"
    INCONCLUSIVE = "inconclusive"


def _truncate(p: SparsePoly, max_degree: int) -> tuple[SparsePoly, bool]:
    inside = {}
    spilled = False
    for exps, c in p.terms.items():
        if sum(abs(e) for e in exps) <= max_degree:
            inside[exps] = c
        else:
            spilled = True
    return SparsePoly(p.ring, inside), spilled


def truncated_closure(module, start: SparsePoly, policy: TruncationPolicy) -> ClosureReport:
    """Exact span closure of the truncated generator action.

    Generators are applied to each new span vector, degrees beyond the
    policy bound are projected away (counted as overflow), and the span
    is grown exactly until a fixpoint.  A fixpoint below the ambient
    truncated dimension is a proper invariant subspace of the truncated
    action; it is an exact submodule of the full action only when the
    overflow count is zero, which the report exposes separately.
    """
    if start.is_zero:
        raise ZeroVector("closure of the zero vector")
    if any(sum(abs(e) for e in exps) > policy.max_total_degree for exps in start.terms):
        raise ValueError("start vector lies outside the truncation")
    ambient = sum(1 for _ in monomials_within(module.ring, policy.max_total_degree))
    ops = [
        gen(f, n)
        for f in FAMILIES
        for n in range(-policy.generator_window, policy.generator_window + 1)
    ]
    basis = SpanBasis()
    basis.add(start.terms)
    frontier = [start]
    overflow = 0
    rounds = 0
    while frontier and rounds < policy.max_steps and basis.dim < ambient:
        rounds += 1
        new = []
        for vec in frontier:
            for g in ops:
                image = module.act(g, vec)
                inside, spilled = _truncate(image, policy.max_total_degree)
                if spilled:
                    overflow += 1
                if inside.terms and basis.add(inside.terms):
                    new.append(inside)
        frontier = new
    if basis.dim >= ambient:
        verdict = ClosureReport.FILLS
    elif not frontier:
        verdict = ClosureReport.PROPER
    else:
        verdict = ClosureReport.INCONCLUSIVE
    return ClosureReport(
        start=str(start),
        reached_dim=basis.dim,
        ambient_dim=ambient,
        verdict=verdict,
        overflow_count=overflow,
        rounds=rounds,
        exact_invariant=(verdict == ClosureReport.PROPER and overflow == 0),
    )


def free_word_oracle(word) -> UEnvElement:
    """Naive straightening by repeated single-inversion rewriting.

    Independent of the production straightener: scans the whole term dict
    each round and rewrites one inversion at a time.
    """
    terms: dict[tuple[Generator, ...], Fraction] = {tuple(word): ONE}
    while True:
        found = None
        for w in sorted(terms, key=lambda w: (-len(w), [g.sort_key() for g in w])):
            for i in range(len(w) - 1):
                if w[i].sort_key() > w[i + 1].sort_key():
                    found = (w, i)
                    break
            if found:
                break
        if not found:
            return UEnvElement(terms)
        w, i = found
        c = terms.pop(w)
        swapped = w[:i] + (w[i + 1], w[i]) + w[i + 2 :]
        nv = terms.get(swapped, ZERO) + c
        if nv:
            terms[swapped] = nv
        else:
            terms.pop(swapped, None)
        for g2, bc in bracket(w[i], w[i + 1]).terms.items():
            short = w[:i] + (g2,) + w[i + 2 :]
            nv = terms.get(short, ZERO) + c * bc
            if nv:
                terms[short] = nv
            else:
                terms.pop(short, None)


def naive_det(matrix) -> Fraction:
    """Cofactor expansion with minor memoization; oracle for small sizes."""
    n = len(matrix)
    if n == 0:
        return ONE
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant requires a square matrix")
    cache: dict[tuple[int, ...], Fraction] = {}

    def minor(row: int, cols: tuple[int, ...]) -> Fraction:
        if not cols:
            return ONE
        key = cols
        if row == n - len(cols) and key in cache:
            return cache[key]
        total = ZERO
        for sign_idx, col in enumerate(cols):
            entry = matrix[row][col]
            if entry:
                sub = minor(row + 1, cols[:sign_idx] + cols[sign_idx + 1 :])
                total += (-1) ** sign_idx * entry * sub
        if row == n - len(cols):
            cache[key] = total
        return total

    return minor(0, tuple(range(n)))
