import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cyclocode.charsum import (
    CharSpec,
    as_base_field,
    EisensteinInt,
    GaussianInt,
    W,
    additive_char,
    cubic_AB,
    cyclotomic_class_index,
    gauss_quadratic_exact,
    gauss_sum,
    gauss_sum_lifted,
    jacobi_cubic,
    power_sum_direct,
    power_sum_gauss,
    quartic_candidates,
    quartic_decompose,
    round_integral,
    s_sum_numeric,
    t_sum_closed_form,
    t_sum_exact,
    tolerance,
    z_count,
)
from cyclocode.code import validate_spec
from cyclocode.errors import (
    EvenCharacteristic,
    NonIntegralResult,
    NotOneModFour,
    OrderNotDividing,
    ZeroInput,
)
from cyclocode.field import build_base_field, build_extension
from cyclocode.theory import quartic_pi

SMALL_Q = {4: (2, 2), 5: (5, 1), 7: (7, 1), 9: (3, 2), 13: (13, 1)}


def field(q):
    return build_base_field(*SMALL_Q.get(q, (q, 1)))


def gauss_oracle(f, order, exponent=1):
    """Sum over t of zeta_order^(exponent t) zeta_p^(Tr(gen^t)), one element at a time."""
    total = 0j
    for t in range(f.order):
        x = int(f.gen_power(t))
        y, tr = x, x
        for _ in range(f.e - 1):
            y = f.power(y, f.p)
            tr = f.add(tr, y)
        total += cmath.exp(2j * math.pi * (exponent * t / order + tr / f.p))
    return total


# -- exact rings ------------------------------------------------------------

@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_eisenstein_ring(a, b, c, d):
    x, y = EisensteinInt(a, b), EisensteinInt(c, d)
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-6
    assert abs(complex(x + y) - (complex(x) + complex(y))) < 1e-9
    assert x.norm() == round(abs(complex(x)) ** 2)
    assert (x * x.conj()).b == 0 and (x * x.conj()).a == x.norm()
    assert x.two_re() == round(2 * complex(x).real)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_gaussian_ring(a, b, c, d):
    x, y = GaussianInt(a, b), GaussianInt(c, d)
    assert complex(x * y) == complex(x) * complex(y)
    assert x.norm() == a * a + b * b
    assert x.conj() == GaussianInt(a, -b)


def test_omega_cubes_to_one():
    assert W * W * W == EisensteinInt(1, 0)
    assert W * W == EisensteinInt(-1, -1)


def test_round_integral():
    assert round_integral(3 + 1e-9j, 1e-6) == 3
    with pytest.raises(NonIntegralResult):
        round_integral(3.5, 1e-6)


# -- characters -------------------------------------------------------------

@pytest.mark.parametrize("q", [4, 5, 7, 9, 13])
def test_multiplicative_orthogonality(q):
    f = field(q)
    x = f.nonzero()
    for i in range(f.order):
        for j in range(f.order):
            s = np.sum(CharSpec(f, f.order, i)(x) * np.conj(CharSpec(f, f.order, j)(x)))
            assert abs(s - (f.order if i == j else 0)) < tolerance(q)


@pytest.mark.parametrize("q", [4, 5, 7, 9, 13])
def test_additive_orthogonality(q):
    f = field(q)
    x = f.elements()
    for a in range(q):
        for b in range(q):
            s = np.sum(additive_char(f, f.mul(x, np.full(q, a)))
                       * np.conj(additive_char(f, f.mul(x, np.full(q, b)))))
            assert abs(s - (q if a == b else 0)) < tolerance(q)


def test_character_zero_convention():
    f = field(7)
    assert CharSpec(f, 3, 0)(0) == 1
    assert CharSpec(f, 3, 1)(0) == 0
    assert abs(CharSpec(f, 6)(f.delta) - cmath.exp(2j * math.pi / 6)) < 1e-12
    with pytest.raises(OrderNotDividing):
        CharSpec(f, 4)


def test_additive_char_on_extension_lifts_through_trace():
    base = field(4)
    ext = build_extension(base, 3)
    x = ext.elements()
    assert np.allclose(additive_char(ext, x), additive_char(base, ext.trace_table()[x]))


@pytest.mark.parametrize("q", [4, 5, 7, 9, 13])
def test_gauss_sum_modulus_and_oracle(q):
    f = field(q)
    for order in range(1, f.order + 1):
        if f.order % order:
            continue
        for j in range(order):
            g = gauss_sum(CharSpec(f, order, j))
            assert abs(g - gauss_oracle(f, order, j)) < tolerance(q)
            if j % order:
                assert abs(abs(g) ** 2 - q) < tolerance(q)
            else:
                assert abs(g + 1) < tolerance(q)


@pytest.mark.parametrize("p,e", [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (3, 3),
                                 (5, 2), (7, 2), (3, 4)])
def test_quadratic_gauss_closed_form(p, e):
    g = gauss_sum(CharSpec(build_base_field(p, e), 2))
    assert abs(g - gauss_quadratic_exact(p, e).value) < tolerance(p**e)


def test_quadratic_exact_strings():
    assert str(gauss_quadratic_exact(5, 1)) == "sqrt(5)"
    assert str(gauss_quadratic_exact(3, 1)) == "i*sqrt(3)"
    assert str(gauss_quadratic_exact(3, 2)) == "sqrt(9)"
    assert str(gauss_quadratic_exact(3, 3)) == "-i*sqrt(27)"
    with pytest.raises(EvenCharacteristic):
        gauss_quadratic_exact(2, 3)


@pytest.mark.parametrize("p,e,k", [(2, 2, 3), (3, 1, 3), (2, 1, 4), (5, 1, 2)])
def test_davenport_hasse(p, e, k):
    base = build_base_field(p, e)
    ext = build_extension(base, k)
    for order in range(2, base.order + 1):
        if base.order % order:
            continue
        for j in range(1, order):
            char = CharSpec(base, order, j)
            lhs = gauss_sum_lifted(char, ext)
            rhs = (-1) ** (k - 1) * gauss_sum(char) ** k
            assert abs(lhs - rhs) < tolerance(base.q, k)


# -- cubic ------------------------------------------------------------------

@pytest.mark.parametrize("q", [4, 7, 13, 16, 19, 25, 31, 37, 43, 49, 64])
def test_jacobi_cubic(q):
    f = as_base_field(q)
    j = jacobi_cubic(f)
    assert j.b % 3 == 0 and (j.a + 1) % 3 == 0
    assert j.norm() == q
    phi = CharSpec(f, 3)
    numeric = sum(phi(int(u)) * phi(f.sub(1, int(u))) for u in f.elements())
    assert abs(numeric - complex(j)) < tolerance(q)
    assert abs(gauss_sum(phi) ** 3 - q * complex(j)) < tolerance(q, 2)
    ab = cubic_AB(f)
    assert 4 * q == ab.A**2 + 27 * ab.B**2 and ab.A % 3 == 1


def test_cubic_AB_values():
    assert jacobi_cubic(4) == EisensteinInt(2, 0)
    assert (cubic_AB(4).A, cubic_AB(4).B) == (4, 0)
    assert (cubic_AB(7).A, cubic_AB(7).B) == (1, 1)
    assert (cubic_AB(13).A, cubic_AB(13).B) == (-5, 1)
    assert (cubic_AB(19).A, cubic_AB(19).B) == (7, 1)
    with pytest.raises(OrderNotDividing):
        jacobi_cubic(5)


def test_jacobi_other_generator_is_conjugate():
    f = field(13)
    assert jacobi_cubic(f, 2) == jacobi_cubic(f).conj()


# -- quartic ----------------------------------------------------------------

@pytest.mark.parametrize("q", [5, 9, 13, 17, 25, 29, 37, 41, 81, 125])
def test_quartic(q):
    mn = quartic_decompose(q)
    assert mn.m**2 + mn.n**2 == q and mn.m % 2 == 1 and mn.n % 2 == 0 and mn.m > 0
    f = as_base_field(q)
    g4 = gauss_sum(CharSpec(f, 4)) ** 4 / q
    assert abs(abs(g4) - q) < tolerance(q, 1)
    pi = quartic_pi(f)
    assert abs(complex(pi * pi) - g4) < tolerance(q, 1)
    assert pi in (mn, mn.conj(), -mn, -mn.conj())


def test_quartic_known_values():
    assert (quartic_decompose(5).m, quartic_decompose(5).n) == (1, 2)
    assert (quartic_decompose(9).m, quartic_decompose(9).n) == (3, 0)
    assert (quartic_decompose(13).m, quartic_decompose(13).n) == (3, 2)
    # two representations; the Gauss sum selects one
    assert set(quartic_candidates(25)) == {GaussianInt(3, 4), GaussianInt(5, 0)}
    assert quartic_decompose(25) == GaussianInt(3, 4)
    with pytest.raises(NotOneModFour):
        quartic_decompose(7)


# -- cyclotomic classes, S/T/Z --------------------------------------------

def test_cyclotomic_classes_partition():
    f = field(13)
    for N in (1, 2, 3, 4, 6, 12):
        idx = [cyclotomic_class_index(f, N, x) for x in range(1, 13)]
        assert np.bincount(idx).tolist() == [12 // N] * N
    with pytest.raises(OrderNotDividing):
        cyclotomic_class_index(f, 5, 1)


def test_s_sums_over_scalings_give_t():
    spec = validate_spec(3, 1, 3, 1, 1)
    base = spec.base
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = int(rng.integers(1, spec.q))
        b = int(rng.integers(1, spec.q**spec.k))
        total = sum(s_sum_numeric(spec, base.mul(y, a), spec.ext.mul(y, b))
                    for y in range(1, spec.q))
        t = t_sum_exact(spec, a, b)
        assert abs(total - t) < tolerance(spec.q, spec.k)
        assert spec.q * z_count(spec, a, b) - spec.n == t


CLOSED_FORM_SPECS = {1: (2, 2, 2, 1, 1), 2: (3, 1, 3, 1, 1), 3: (2, 2, 2, 2, 1), 4: (5, 1, 3, 1, 3)}


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_t_closed_form_all_pairs(d):
    spec = validate_spec(*CLOSED_FORM_SPECS[d])
    assert spec.d == d
    for a in range(1, spec.q):
        for b in range(1, spec.q**spec.k):
            assert t_sum_closed_form(spec, a, b) == t_sum_exact(spec, a, b)
    with pytest.raises(ZeroInput):
        t_sum_closed_form(spec, 0, 1)


def test_t_is_one_for_d1():
    spec = validate_spec(2, 2, 3, 1, 1)
    for a in range(1, spec.q):
        for b in range(1, spec.q**spec.k):
            assert t_sum_exact(spec, a, b) == 1


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([5, 7, 9, 13]), st.sampled_from([2, 3, 4]), st.data())
def test_power_sum_identity(q, n, data):
    f = field(q)
    a = data.draw(st.integers(1, q - 1))
    b = data.draw(st.integers(0, q - 1))
    assert abs(power_sum_direct(f, a, n, b) - power_sum_gauss(f, a, n, b)) < tolerance(q)
