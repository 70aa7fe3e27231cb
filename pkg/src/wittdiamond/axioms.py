"""Representation-property checking shared by every concrete module.

A module object only needs a ``ring`` attribute and an ``act(gen, vec)``
method; the check verifies x(y v) - y(x v) = [x, y] v exactly for every
generator pair in an index window, on a supplied list of sample vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .lie import FAMILIES, UEnvElement, bracket, gen
from .poly import PolyRing, SparsePoly, monomials_within
from .scalars import ONE, scalar


def apply_uenv(module, u: UEnvElement, v: SparsePoly) -> SparsePoly:
    """Act with an enveloping-algebra element, rightmost letter first."""
    out = module.ring.zero()
    for word, c in u.terms.items():
        w = v
        for g in reversed(word):
            w = module.act(g, w)
        out = out + w * c
    return out


@dataclass
class AxiomReport:
    window: int
    vectors: int
    pairs_checked: int = 0
    violations: list[tuple[str, str, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def module_axiom_check(module, window: int, vectors) -> AxiomReport:
    if window < 1:
        raise ValueError("window must be at least 1")
    gens = [gen(f, n) for f in FAMILIES for n in range(-window, window + 1)]
    report = AxiomReport(window=window, vectors=len(vectors))
    for i, x in enumerate(gens):
        for y in gens[i:]:
            br = bracket(x, y)
            for idx, v in enumerate(vectors):
                report.pairs_checked += 1
                lhs = module.act(x, module.act(y, v)) - module.act(y, module.act(x, v))
                rhs = module.ring.zero()
                for g2, c in br.terms.items():
                    rhs = rhs + module.act(g2, v) * c
                if lhs != rhs:
                    report.violations.append((str(x), str(y), idx))
    return report


def basis_monomials(ring: PolyRing, max_total_degree: int) -> list[SparsePoly]:
    return [
        SparsePoly(ring, {exps: ONE})
        for exps in monomials_within(ring, max_total_degree)
    ]


def random_vector(
    ring: PolyRing,
    rng: random.Random,
    max_total_degree: int = 3,
    terms: int = 3,
) -> SparsePoly:
    """Random nonzero vector with small rational coefficients."""
    pool = list(monomials_within(ring, max_total_degree))
    chosen = rng.sample(pool, min(terms, len(pool)))
    out = {}
    for exps in chosen:
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        den = rng.choice([1, 1, 2, 3])
        out[exps] = scalar(num) / den
    return SparsePoly(ring, out)


def sample_vectors(ring: PolyRing, rng: random.Random, count: int = 4,
                   max_total_degree: int = 3) -> list[SparsePoly]:
    """A spread of test vectors: the unit, a few monomials, random mixes."""
    vecs = [ring.one()]
    pool = [e for e in monomials_within(ring, max_total_degree) if any(e)]
    for exps in rng.sample(pool, min(2, len(pool))):
        vecs.append(SparsePoly(ring, {exps: ONE}))
    while len(vecs) < count + 1:
        vecs.append(random_vector(ring, rng, max_total_degree))
    return vecs
