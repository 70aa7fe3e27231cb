"""The P (x) V module family: action tables, Q, simplicity, weights."""

import random
from fractions import Fraction as F

import pytest

from wittdiamond.axioms import apply_uenv, module_axiom_check, sample_vectors
from wittdiamond.exceptions import NotWeight, UnsupportedOperation
from wittdiamond.fock import (
    FModule,
    MFactor,
    OmegaFactor,
    OneDim,
    Whittaker,
    epsilon_simplicity,
    q_action,
    weight_decomposition,
)
from wittdiamond.lie import gen
from wittdiamond.oracle import ClosureReport, TruncationPolicy, truncated_closure
from wittdiamond.poly import PolyRing


def weight_module(alpha=F(1, 2), beta=F(3), w0=F(0), w1=F(1, 2), eps=F(2)):
    return FModule(alpha, beta, MFactor(w0), MFactor(w1), OneDim(eps))


def test_weight_action_table():
    # a_n x0^p x1^q = (beta w1 + beta q + eps) x0^(n+p) x1^(q+1), etc.
    M = weight_module()
    v = M.ring.monomial({"x0": 2, "x1": -1})
    coef = F(3) * (F(1, 2) + (-1)) + F(2)
    assert M.act(gen("a", 1), v) == M.ring.monomial({"x0": 3}, coef)
    assert M.act(gen("L", 2), v) == M.ring.monomial({"x0": 4, "x1": -1}, 0 + 2 + 2 * F(1, 2))
    assert M.act(gen("d", 1), v) == M.ring.monomial({"x0": 3, "x1": -1}, F(1, 2) - 1)
    assert M.act(gen("b", 0), v) == M.ring.monomial({"x0": 2, "x1": -2})
    assert M.act(gen("c", 0), v) == M.ring.monomial({"x0": 2, "x1": -1}, -3)


def test_shift_action_table():
    # b_n f = l0^n l1^-1 f(d0 - n, d1 + 1); c_n keeps the d0 shift
    M = FModule(F(1), F(2), OmegaFactor(F(2)), OmegaFactor(F(3)), OneDim(F(1)))
    f = M.ring.var("d0")
    out = M.act(gen("b", 1), f)
    expected = (M.ring.var("d0") - 1) * F(2, 3)
    assert out == expected
    out_c = M.act(gen("c", 1), f)
    assert out_c == (M.ring.var("d0") - 1) * (-2) * 2


def test_c0_is_minus_beta():
    rng = random.Random(0)
    for module in [
        weight_module(),
        FModule(F(1), F(2), OmegaFactor(F(2)), OmegaFactor(F(3)), Whittaker()),
    ]:
        for v in sample_vectors(module.ring, rng, count=2):
            assert module.act(gen("c", 0), v) == v * (-module.beta)


def random_parameters(rng):
    alpha = F(rng.randint(-4, 4), rng.randint(1, 3))
    beta = F(rng.randint(1, 5), rng.randint(1, 3)) * rng.choice([1, -1])
    return alpha, beta


def _nonzero(rng):
    return F(rng.randint(1, 5), rng.randint(1, 3)) * rng.choice([1, -1])


def test_axioms_all_instances_random_tuples():
    rng = random.Random(12)
    builders = [
        lambda a, b: FModule(a, b, MFactor(_nonzero(rng)), MFactor(_nonzero(rng)), OneDim(_nonzero(rng))),
        lambda a, b: FModule(a, b, OmegaFactor(_nonzero(rng)), OmegaFactor(_nonzero(rng)), OneDim(_nonzero(rng))),
        lambda a, b: FModule(a, b, MFactor(_nonzero(rng)), MFactor(_nonzero(rng)), Whittaker()),
        lambda a, b: FModule(a, b, OmegaFactor(_nonzero(rng)), MFactor(_nonzero(rng)), OneDim(_nonzero(rng))),
    ]
    for build in builders:
        for _ in range(3):
            module = build(*random_parameters(rng))
            vectors = sample_vectors(module.ring, rng, count=3, max_total_degree=3)
            report = module_axiom_check(module, 2, vectors)
            assert report.ok, report.violations[:3]


def test_q_acts_as_eps_on_one_dimensional_v():
    rng = random.Random(3)
    for module in [
        weight_module(eps=F(5, 2)),
        FModule(F(0), F(1), OmegaFactor(F(2)), OmegaFactor(F(5)), OneDim(F(-1, 3))),
        FModule(F(2), F(-2), OmegaFactor(F(3)), MFactor(F(1, 4)), OneDim(F(0))),
    ]:
        eps = module.v_space.eps
        for v in sample_vectors(module.ring, rng, count=4, max_total_degree=3):
            assert q_action(module, v) == v * eps


def test_q_non_scalar_on_whittaker():
    module = FModule(F(1, 2), F(3), MFactor(F(0)), MFactor(F(1, 2)), Whittaker())
    v = module.one()
    qv = q_action(module, v)
    # qv proportional to v would force qv to be a constant multiple of 1
    assert qv == module.ring.monomial({"h": 1}, -module.beta)
    assert not any(qv == v * c for c in (F(0), F(1), F(-3), qv.coefficient((0, 0, 0))))


def test_q_equals_parsed_expression():
    from wittdiamond.lie import parse_uenv

    module = weight_module()
    q = parse_uenv("b[0] a[0] + c[0] d[0]")
    rng = random.Random(1)
    for v in sample_vectors(module.ring, rng, count=3):
        assert apply_uenv(module, q, v) == q_action(module, v)


def test_epsilon_simplicity_examples():
    assert epsilon_simplicity(
        FModule(F(0), F(1), MFactor(F(0)), MFactor(F(1, 2)), OneDim(F(0)))
    ).simple
    res = epsilon_simplicity(FModule(F(0), F(1), MFactor(F(0)), MFactor(F(2)), OneDim(F(-3))))
    assert not res.simple and res.witness == 1
    assert epsilon_simplicity(
        FModule(F(0), F(2), MFactor(F(0)), MFactor(F(0)), OneDim(F(1)))
    ).simple


def test_epsilon_simplicity_requires_m_type_and_one_dim():
    with pytest.raises(UnsupportedOperation):
        epsilon_simplicity(FModule(F(0), F(1), MFactor(F(0)), OmegaFactor(F(2)), OneDim(F(0))))
    with pytest.raises(UnsupportedOperation):
        epsilon_simplicity(FModule(F(0), F(1), MFactor(F(0)), MFactor(F(0)), Whittaker()))


def test_epsilon_simplicity_matches_closure_oracle():
    # designed 3 simple + 3 non-simple tuples; closure starts inside the
    # candidate invariant subspace (x1-level = witness)
    cases = [
        (F(1), F(1, 2), F(0), True),
        (F(2), F(0), F(1), True),
        (F(1), F(-1, 3), F(0), True),
        (F(1), F(2), F(-3), False),  # witness 1
        (F(2), F(0), F(-4), False),  # witness 2
        (F(1), F(-1), F(3), False),  # witness -2
    ]
    policy = TruncationPolicy(max_total_degree=3, generator_window=2, max_steps=32)
    for beta, w, eps, expect_simple in cases:
        module = FModule(F(1, 3), beta, MFactor(F(1, 5)), MFactor(w), OneDim(eps))
        verdict = epsilon_simplicity(module)
        assert verdict.simple == expect_simple
        if verdict.simple:
            start = module.one()
            expected = ClosureReport.FILLS
        else:
            start = module.ring.monomial({"x1": verdict.witness})
            expected = ClosureReport.PROPER
        report = truncated_closure(module, start, policy)
        assert report.verdict == expected, (beta, w, eps, report)


def test_weight_decomposition_eigenvalues():
    module = weight_module(w0=F(1, 3), w1=F(1, 5))
    decomp = weight_decomposition(module, 1)
    x0_idx = module.ring.index("x0")
    for (ev0, ev1), monos in decomp.items():
        for exps in monos:
            assert ev0 == F(1, 3) + exps[0]
            assert ev1 == F(1, 5) + exps[1]
    # vectors with equal exponent offsets share a weight space
    assert all(len(m) == 1 for m in decomp.values())


def test_weight_decomposition_whittaker_has_infinite_dim_spaces():
    module = FModule(F(0), F(1), MFactor(F(0)), MFactor(F(0)), Whittaker())
    decomp = weight_decomposition(module, 2)
    sizes = sorted(len(m) for m in decomp.values())
    assert sizes[-1] > 1  # h-powers pile into the same weight


def test_weight_decomposition_rejects_shift_type():
    module = FModule(F(0), F(1), OmegaFactor(F(2)), OmegaFactor(F(3)), OneDim(F(0)))
    with pytest.raises(NotWeight):
        weight_decomposition(module, 1)


def test_unknown_generator_family_rejected():
    from wittdiamond.exceptions import InvalidGenerator
    from wittdiamond.lie import Generator

    module = weight_module()
    with pytest.raises(InvalidGenerator):
        module.act(Generator("x", 0), module.one())


def test_whittaker_v_reduction_reaches_constant():
    # e-shift degree drop: f - e f has degree exactly deg f - 1
    hring = PolyRing(("h",), (False,))
    rng = random.Random(5)
    for _ in range(10):
        coeffs = {(k,): F(rng.randint(-3, 3)) for k in range(rng.randint(1, 4))}
        coeffs[(rng.randint(1, 3),)] = F(rng.randint(1, 3))
        f = hring.from_terms(coeffs.items())
        deg = f.var_degree("h")
        steps = 0
        while f.var_degree("h") > 0:
            f = f - f.shift("h", 1)
            steps += 1
        assert not f.is_zero
        assert steps <= deg
