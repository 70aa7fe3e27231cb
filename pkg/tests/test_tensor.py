"""Tensor products: determinant lemma, spans, certificates, rank, iso."""

import itertools
import random
from fractions import Fraction as F

import pytest

from wittdiamond.axioms import module_axiom_check, random_vector, sample_vectors
from wittdiamond.exceptions import InvalidSpec, NotApplicable, RequiresSimple
from wittdiamond.lie import gen
from wittdiamond.omega import OmegaModule, OmegaParams, omega_reduce_to_one
from wittdiamond.oracle import naive_det
from wittdiamond.poly import SparsePoly
from wittdiamond.tensor import (
    DetSpec,
    TensorModule,
    canonical_form,
    det_matrix,
    det_r,
    iso_check,
    lemma42_extract,
    r_g,
    simplicity_decision,
    span_NXg,
    tensor_generate,
    tensor_reduce_to_bottom,
    w_invariance_check,
)

A = OmegaParams(F(1, 2), F(3), F(0), F(2), (F(1), F(0), F(1)))
B = OmegaParams(F(1), F(1), F(1), F(3), (F(2),))
C = OmegaParams(F(-1), F(2), F(0), F(5), (F(0), F(1)))


def test_det_spec_examples():
    r1 = det_r(DetSpec((F(2), F(3)), (1, 1), 0))
    assert r1.computed == r1.closed_form == 1
    r2 = det_r(DetSpec((F(2),), (2,), 0))
    assert r2.computed == r2.closed_form == 2
    r3 = det_r(DetSpec((F(5),), (1,), 3))
    assert r3.computed == r3.closed_form == 125


def test_det_spec_validation():
    with pytest.raises(InvalidSpec):
        DetSpec((F(2), F(2)), (1, 1), 0)
    with pytest.raises(InvalidSpec):
        DetSpec((F(0),), (1,), 0)
    with pytest.raises(InvalidSpec):
        DetSpec((F(2),), (0,), 0)


def test_det_sweep_small_with_naive_oracle():
    alphas = (F(1), F(2), F(-2))
    for m in (1, 2):
        for subset in itertools.permutations(alphas, m):
            for sizes in itertools.product((1, 2), repeat=m):
                for r in range(2):
                    spec = DetSpec(subset, sizes, r)
                    result = det_r(spec)
                    assert result.ok, spec
                    assert naive_det(det_matrix(spec)) == result.computed


def test_leibniz_action_matches_single_factor():
    T1 = TensorModule([A])
    M = OmegaModule(A)
    rng = random.Random(4)
    rename = {"s1": "s", "t1": "t"}
    for v in sample_vectors(T1.ring, rng, count=3):
        mv = SparsePoly(M.ring, dict(v.terms))
        for fam in "Labcd":
            for n in (-2, 0, 1):
                out = T1.act(gen(fam, n), v)
                expected = M.act(gen(fam, n), mv)
                assert dict(out.terms) == dict(expected.terms)


def test_action_examples_m2():
    T = TensorModule([A, B])
    one = T.one()
    assert T.act(gen("a", 0), one) == T.ring.var("t1") + T.ring.var("t2")
    # c_n 1 = -(sum_k lam_k^n beta_k) 1
    assert T.act(gen("c", 1), one) == one * (-(F(2) * F(3) + F(3) * F(1)))
    assert T.act(gen("c", 0), one) == one * (-(F(3) + F(1)))


def test_axioms_m2_random():
    rng = random.Random(13)
    for _ in range(3):
        factors = [
            OmegaParams(
                F(rng.randint(-2, 2)),
                F(rng.randint(1, 4)) * rng.choice([1, -1]),
                F(rng.randint(-2, 2)),
                F(k + rng.randint(2, 3) * (k + 1)),
                tuple(F(rng.randint(-2, 2)) for _ in range(rng.randint(1, 2))),
            )
            for k in range(2)
        ]
        T = TensorModule(factors)
        report = module_axiom_check(T, 2, sample_vectors(T.ring, rng, count=3, max_total_degree=2))
        assert report.ok, report.violations[:3]


def test_span_examples():
    T = TensorModule([A, B])
    _, dim = span_NXg(T, "a", T.one())
    assert dim == 3  # 1, t1, t2
    _, dim = span_NXg(T, "L", T.one())
    assert dim == 3  # 1, s1, s2
    T1 = TensorModule([A])
    _, dim = span_NXg(T1, "a", T1.ring.var("t1"))
    assert dim == 2  # t, t^2


def test_lemma42_extractions():
    T1 = TensorModule([A])
    target, cert = lemma42_extract(T1, T1.one(), 1, 10)
    assert target == T1.ring.var("t1")
    assert cert.replay(T1, T1.one()) == target
    target, cert = lemma42_extract(T1, T1.one(), 1, 9)
    assert target == T1.ring.var("s1")
    T2 = TensorModule([A, B])
    g = T2.ring.var("s1")
    target, cert = lemma42_extract(T2, g, 1, 11)
    assert target == T2.ring.var("t1")
    assert cert.replay(T2, g) == target


def test_lemma42_requires_distinct_lambdas():
    T = TensorModule([A, OmegaParams(F(1), F(1), F(0), A.lam, (F(1),))])
    with pytest.raises(NotApplicable):
        lemma42_extract(T, T.one(), 1, 10)


def test_reduce_to_bottom_m1_matches_single_module_route():
    T1 = TensorModule([A])
    M = OmegaModule(A)
    rng = random.Random(6)
    for _ in range(5):
        v = random_vector(T1.ring, rng, max_total_degree=3, terms=2)
        cert, bottom = tensor_reduce_to_bottom(T1, v)
        assert cert.replay(T1, v) == bottom
        assert set(bottom.terms) == {(0, 0)}
        mv = SparsePoly(M.ring, dict(v.terms))
        assert omega_reduce_to_one(M, mv).replay(M, mv) == M.one()


def test_reduce_to_bottom_m2():
    T = TensorModule([A, B])
    g = T.ring.monomial({"s1": 1, "t2": 1})
    cert, bottom = tensor_reduce_to_bottom(T, g)
    assert cert.replay(T, g) == bottom
    assert set(bottom.terms) == {(0, 0, 0, 0)}
    assert len(cert.steps) >= 2


def test_generate_examples():
    T = TensorModule([A, B])
    for exps in [(0, 0, 1, 1), (1, 0, 0, 0), (0, 0, 0, 0), (1, 1, 2, 0)]:
        cert = tensor_generate(T, exps)
        assert cert.replay(T, T.one()) == SparsePoly(T.ring, {exps: F(1)})


def test_r_g_examples():
    for factors in ([A], [A, B], [A, B, C]):
        T = TensorModule(factors)
        assert r_g(T, T.one()) == len(factors) + 1
    T1 = TensorModule([A])
    assert r_g(T1, T1.ring.var("s1")) == 4
    T2 = TensorModule([A, B])
    assert r_g(T2, T2.ring.var("t1", 3)) == 3


def test_r_g_dichotomy_random():
    rng = random.Random(23)
    for factors in ([A], [A, B], [A, B, C]):
        T = TensorModule(factors)
        m = T.m
        for _ in range(6):
            v = random_vector(T.ring, rng, max_total_degree=2, terms=2)
            value = r_g(T, v)
            in_bottom = all(not any(e[:m]) for e in v.terms)
            assert value >= m + 1
            assert (value == m + 1) == in_bottom, (factors, dict(v.terms))


def test_simplicity_distinct_lambdas():
    T = TensorModule([A, B])
    result = simplicity_decision(T, seed=5, samples=3)
    assert result.simple
    assert len(result.evidence) == 3
    for ev in result.evidence:
        assert ev.bottom_coefficient != 0


def test_simplicity_repeated_lambda_witness():
    lamA = A.lam
    T = TensorModule([A, OmegaParams(F(1), F(1), F(1), lamA, (F(2),))])
    result = simplicity_decision(T)
    assert not result.simple
    assert result.witness_pair == (1, 2)
    assert result.invariance.ok
    assert result.invariance.escapes == []


def test_w_invariance_explicit_action():
    # L_n (s1+s2)^p = lam^n (s1+s2+n(alpha1+alpha2)) (s1+s2-n)^p stays in W
    lam = F(2)
    f1 = OmegaParams(F(1), F(1), F(0), lam, (F(1),))
    f2 = OmegaParams(F(3), F(2), F(1), lam, (F(1),))
    T = TensorModule([f1, f2])
    s1, s2 = T.ring.var("s1"), T.ring.var("s2")
    w = (s1 + s2) ** 2
    out = T.act(gen("L", 1), w)
    expected = (s1 + s2 + (F(1) + F(3))) * (s1 + s2 - 1) ** 2 * lam
    assert out == expected
    report = w_invariance_check(T, 1, 2, max_total_degree=4, window=2)
    assert report.ok


def test_m1_always_simple():
    result = simplicity_decision(TensorModule([A]), seed=2, samples=2)
    assert result.simple


def test_canonical_form_permutation_invariant():
    perms = [TensorModule(list(p)) for p in itertools.permutations([A, B, C])]
    forms = {canonical_form(T) for T in perms}
    assert len(forms) == 1


def test_iso_checks():
    TAB = TensorModule([A, B])
    TBA = TensorModule([B, A])
    res = iso_check(TAB, TBA)
    assert res.isomorphic and res.permutation == (2, 1)
    res = iso_check(TAB, TAB)
    assert res.isomorphic and res.permutation == (1, 2)

    def perturb(**kw):
        return OmegaParams(
            kw.get("alpha", B.alpha),
            kw.get("beta", B.beta),
            kw.get("gamma", B.gamma),
            kw.get("lam", B.lam),
            kw.get("g", B.g),
        )

    for field, kw in [
        ("alpha", {"alpha": B.alpha + 1}),
        ("beta", {"beta": B.beta + 1}),
        ("gamma", {"gamma": B.gamma - 2}),
        ("lambda", {"lam": F(7)}),
        ("g", {"g": (F(2), F(1))}),
    ]:
        out = iso_check(TAB, TensorModule([A, perturb(**kw)]))
        assert not out.isomorphic
        assert out.invariant == field

    out = iso_check(TensorModule([A]), TAB)
    assert not out.isomorphic and out.invariant == "factor count"


def test_iso_requires_simple():
    T = TensorModule([A, OmegaParams(F(1), F(1), F(0), A.lam, (F(1),))])
    with pytest.raises(RequiresSimple):
        iso_check(T, T)
