import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftvf.algebra import Poly, render
from liftvf.crosscap import CrossCapError, build_context
from liftvf.fields import family, generator_set
from liftvf.classify import (
    LinearFunction,
    LinearFunctionError,
    codim1_certificate,
    compare_closed_forms,
    field_applied_to_linear,
    linear_part_matrix,
    modulom_closed_form,
    random_linear_function,
    random_sweep,
    trial_seeds,
    truncate_mod_m2,
)
from fixtures import K3_U1_V2_MATRIX
from oracles import dense_rank

K3 = build_context(3)


def P(text, ctx=K3):
    return Poly.parse(ctx.codomain, text)


def test_truncation_examples():
    assert truncate_mod_m2(P("-3*V1*W1 + 2*U1*W2")).is_zero()
    assert truncate_mod_m2(P("-5*U1*V2 - 3*W2")) == P("-3*W2")
    assert truncate_mod_m2(P("U1 - 2*W1")) == P("U1 - 2*W1")


def test_field_applied_k3_xi11_symbolic_coefficients():
    # each coefficient picks out one component of the field
    xi = family(K3, 1, 1)
    for pos in range(5):
        coeffs = [0] * 5
        coeffs[pos] = 1
        h = LinearFunction(coeffs[:1], coeffs[1:3], coeffs[3], coeffs[4])
        assert field_applied_to_linear(K3, xi, h) == xi[pos]


def test_k3_family1_mod_m2():
    h = LinearFunction([2], [3, 5], 7, 11)
    direct = truncate_mod_m2(field_applied_to_linear(K3, family(K3, 1, 1), h))
    assert direct == P("-15*W2")  # -3 * beta_2 * W2
    assert modulom_closed_form(K3, 1, 1, h) == P("-15*W2")
    assert truncate_mod_m2(modulom_closed_form(K3, 1, 2, h)) == P("-9*W2 + 15*V1")


def test_zero_h():
    h = LinearFunction([0], [0, 0], 0, 0)
    assert h.is_zero()
    for xi in generator_set(K3):
        assert truncate_mod_m2(field_applied_to_linear(K3, xi, h)).is_zero()


@pytest.mark.parametrize("k", range(2, 6))
def test_family1_closed_form_agrees(k):
    ctx = build_context(k)
    rng = random.Random(k)
    for _ in range(10):
        h = random_linear_function(k, rng)
        for cmp in compare_closed_forms(ctx, h):
            if cmp.family == 1:
                assert cmp.match, (cmp.j, render(cmp.direct), render(cmp.closed))


@pytest.mark.parametrize("k", range(2, 6))
def test_family3_closed_form_agrees(k):
    # the U_{k+j-1} W2 term is quadratic or vanishes, so the odd index never matters mod m^2
    ctx = build_context(k)
    rng = random.Random(10 + k)
    for _ in range(10):
        h = random_linear_function(k, rng)
        assert all(c.match for c in compare_closed_forms(ctx, h) if c.family == 3)


def test_family2_closed_form_mismatch_is_reported():
    # the direct computation is normative; the literal closed form differs at k=3, j=1
    h = LinearFunction([1], [0, 0], 1, 0)
    cmp = next(c for c in compare_closed_forms(K3, h) if (c.family, c.j) == (2, 1))
    assert not cmp.match
    assert cmp.direct == P("6*U1 + 9*W1")
    assert cmp.closed == P("2*U1 - 9*W1")


def test_closed_form_bad_arguments():
    h = LinearFunction([1], [1, 1], 0, 0)
    with pytest.raises(CrossCapError):
        modulom_closed_form(K3, 4, 1, h)
    with pytest.raises(CrossCapError):
        modulom_closed_form(K3, 1, 3, h)


def test_wrong_k_rejected():
    with pytest.raises(LinearFunctionError):
        field_applied_to_linear(K3, family(K3, 1, 1), LinearFunction([], [1], 0, 0))


def test_k3_u1_plus_v2():
    h = LinearFunction([1], [0, 1], 0, 0)
    lpm = linear_part_matrix(K3, h)
    rows = [[int(e.constant_term()) for e in row] for row in lpm.matrix.to_rows()]
    assert rows == K3_U1_V2_MATRIX
    assert lpm.labels[-1] == "h" and lpm.rows == 3 * 3 - 2 + 1
    cert = codim1_certificate(K3, h)
    assert (cert.rank, cert.certified) == (5, True)
    assert dense_rank(rows) == 5


def test_w2_only():
    h = LinearFunction([0], [0, 0], 0, 1)
    lpm = linear_part_matrix(K3, h)
    fam2 = [i for i, lab in enumerate(lpm.labels) if lab != "h" and lab[0] == 2]
    assert all(lpm.matrix[i, c].is_zero() for i in fam2 for c in range(5))
    cert = codim1_certificate(K3, h)
    assert cert.rank == dense_rank([[e.constant_term() for e in r] for r in lpm.matrix.to_rows()])


@pytest.mark.parametrize("k", range(2, 6))
def test_ideal_inside_m(k):
    ctx = build_context(k)
    h = random_linear_function(k, random.Random(k))
    for xi in generator_set(ctx):
        assert field_applied_to_linear(ctx, xi, h).constant_term() == 0
    assert h.as_poly(ctx).constant_term() == 0


@pytest.mark.parametrize("k", [3, 4, 5])
def test_certified_with_rational_coefficients(k):
    ctx = build_context(k)
    rng = random.Random(k * 7)
    for _ in range(20):
        alpha = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k - 2)]
        beta = [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(k - 1)]
        alpha[-1] = alpha[-1] or Fraction(1, 3)
        beta[-1] = beta[-1] or Fraction(-2, 7)
        h = LinearFunction(alpha, beta, Fraction(rng.randint(-9, 9), 4), rng.randint(-9, 9))
        assert codim1_certificate(ctx, h).certified


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 5), st.integers(0, 10**9), st.sampled_from([Fraction(-1), Fraction(3, 7), Fraction(5)]))
def test_scaling_invariance(k, seed, c):
    ctx = build_context(k)
    h = random_linear_function(k, random.Random(seed))
    assert codim1_certificate(ctx, h) == codim1_certificate(ctx, h.scale(c))


def test_random_function_constraints():
    rng = random.Random(0)
    for k in (2, 3, 4, 5):
        for _ in range(200):
            h = random_linear_function(k, rng)
            assert h.b(k - 1) != 0 and (k == 2 or h.a(k - 2) != 0)
            assert all(-9 <= c <= 9 for c in h.coefficients())


def test_sweep_is_reproducible():
    assert trial_seeds(5, 4) == trial_seeds(5, 4)
    a = [(h.to_json(), c.to_json()) for h, c in random_sweep(build_context(3), 5, 42)]
    b = [(h.to_json(), c.to_json()) for h, c in random_sweep(build_context(3), 5, 42)]
    assert a == b


def test_k2_reports_without_claims():
    results = random_sweep(build_context(2), 20, 1234)
    assert all(c.k == 2 and 0 <= c.rank <= 3 for _, c in results)


def test_linear_function_json(tmp_path):
    h = LinearFunction(["1/2", "0"], ["0", "0", "1"], "0", "-3")
    assert LinearFunction.from_json(json.loads(json.dumps(h.to_json()))) == h
    path = tmp_path / "h.json"
    path.write_text(json.dumps({"alpha": ["1", "0"], "beta": ["0", "0", "1"], "gamma1": "0", "gamma2": "0"}))
    loaded = LinearFunction.load(path)
    assert loaded.k == 4 and loaded.a(1) == 1 and loaded.b(3) == 1


@pytest.mark.parametrize("bad", [{}, {"alpha": [], "beta": ["x"], "gamma1": "0", "gamma2": "0"},
                                 {"alpha": [], "beta": ["1/0"], "gamma1": "0", "gamma2": "0"}])
def test_malformed_json(bad):
    with pytest.raises(LinearFunctionError):
        LinearFunction.from_json(bad)
