"""Characters, Gauss and Jacobi sums, cyclotomic classes and the S/T/Z sums.

Floating complex values are used only to check identities.  Anything that
feeds a closed-form weight table is exact: Z-counts are integers, Jacobi
sums live in Z[omega], quartic decompositions in Z[i].
"""

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint

from .errors import (
    EvenCharacteristic,
    NonIntegralResult,
    NotOneModFour,
    OrderNotDividing,
    ZeroInput,
)
from .field import BaseField, ExtensionField, build_base_field


def tolerance(q, k=0):
    """Absolute tolerance for floating identities over sums of size ~q^((k+1)/2)."""
    return 1e-6 * max(1.0, math.sqrt(q ** (k + 1)))


def round_integral(z, tol):
    """Nearest integer to a complex value, or NonIntegralResult."""
    r = round(z.real)
    if abs(z - r) >= tol:
        raise NonIntegralResult(f"{z} is not within {tol:g} of an integer")
    return int(r)


def as_base_field(q):
    """Accept a BaseField or a prime power q."""
    if isinstance(q, BaseField):
        return q
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, e),) = f.items()
    return build_base_field(p, e)


# ---------------------------------------------------------------------------
# exact rings

@dataclass(frozen=True)
class EisensteinInt:
    """a + b*omega with omega = (-1 + sqrt(-3))/2."""

    a: int
    b: int

    def __add__(self, o):
        return EisensteinInt(self.a + o.a, self.b + o.b)

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, o):
        if isinstance(o, int):
            return EisensteinInt(self.a * o, self.b * o)
        # omega^2 = -1 - omega
        return EisensteinInt(self.a * o.a - self.b * o.b,
                             self.a * o.b + self.b * o.a - self.b * o.b)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = EisensteinInt(1, 0)
        for _ in range(n):
            out = out * self
        return out

    def conj(self):
        return EisensteinInt(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def two_re(self):
        return 2 * self.a - self.b

    def __complex__(self):
        return self.a + self.b * OMEGA


OMEGA = cmath.exp(2j * cmath.pi / 3)
W = EisensteinInt(0, 1)


@dataclass(frozen=True)
class GaussianInt:
    """m + n*i."""

    m: int
    n: int

    def __add__(self, o):
        return GaussianInt(self.m + o.m, self.n + o.n)

    def __neg__(self):
        return GaussianInt(-self.m, -self.n)

    def __mul__(self, o):
        if isinstance(o, int):
            return GaussianInt(self.m * o, self.n * o)
        return GaussianInt(self.m * o.m - self.n * o.n, self.m * o.n + self.n * o.m)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = GaussianInt(1, 0)
        for _ in range(k):
            out = out * self
        return out

    def conj(self):
        return GaussianInt(self.m, -self.n)

    def norm(self):
        return self.m * self.m + self.n * self.n

    def two_re(self):
        return 2 * self.m

    def __complex__(self):
        return complex(self.m, self.n)


I = GaussianInt(0, 1)


@dataclass(frozen=True)
class CubicAB:
    A: int
    B: int


# ---------------------------------------------------------------------------
# characters

@dataclass(frozen=True)
class CharSpec:
    """Multiplicative character with phi(gen) = exp(2*pi*i*exponent/order).

    ``gen`` is delta for a BaseField and gamma for an ExtensionField.  Zero is
    sent to 1 by the trivial character and to 0 otherwise.
    """

    field: object
    order: int
    exponent: int = 1

    def __post_init__(self):
        if self.order < 1 or self.field.order % self.order:
            raise OrderNotDividing(
                f"order {self.order} does not divide {self.field.order}")

    @property
    def trivial(self):
        return self.exponent % self.order == 0

    def index(self, x):
        """Exponent j with phi(x) = zeta_order^j (x nonzero)."""
        return (self.exponent * self.field.discrete_log(x)) % self.order

    def __call__(self, x):
        if np.ndim(x) == 0:
            if x == 0:
                return 1 + 0j if self.trivial else 0j
            return cmath.exp(2j * cmath.pi * self.index(x) / self.order)
        x = np.asarray(x)
        nz = x != 0
        out = np.full(x.shape, 1 + 0j if self.trivial else 0j)
        logs = self.field.log[x[nz]]
        out[nz] = np.exp(2j * np.pi * ((self.exponent * logs) % self.order) / self.order)
        return out

    def power(self, j):
        return CharSpec(self.field, self.order, (self.exponent * j) % self.order)

    def conj(self):
        return self.power(-1)

    def on_generator_powers(self):
        """phi(gen^t) for t = 0 .. field.order-1."""
        t = np.arange(self.field.order)
        return np.exp(2j * np.pi * ((self.exponent * t) % self.order) / self.order)


def mult_char(char, x):
    return char(x)


def _abs_trace(field, x):
    if isinstance(field, ExtensionField):
        return field.base.absolute_trace_table()[field.trace_table()[x]]
    return field.absolute_trace_table()[x]


def additive_char(field, x):
    """Canonical additive character; for F_{q^k} this is the lift through the trace."""
    tr = _abs_trace(field, x)
    return np.exp(2j * np.pi * np.asarray(tr) / field.p) if np.ndim(tr) else \
        cmath.exp(2j * cmath.pi * int(tr) / field.p)


@lru_cache(maxsize=None)
def _gauss_cached(field, order, exponent):
    psi = CharSpec(field, order, exponent).on_generator_powers()
    chi = additive_char(field, field.nonzero())
    return complex(np.sum(psi * chi))


def gauss_sum(char):
    """G(psi, chi) = sum over nonzero x of psi(x) chi(x)."""
    return _gauss_cached(char.field, char.order, char.exponent % char.order)


def gauss_sum_lifted(char, ext):
    """G(psi o N, chi o Tr) over ext, with psi a character of ext.base."""
    x = ext.nonzero()
    return complex(np.sum(char(ext.norm(x)) * additive_char(ext, x)))


@dataclass(frozen=True)
class QuadraticGauss:
    """sign * sqrt(q), times i when ``imaginary``."""

    q: int
    sign: int
    imaginary: bool

    @property
    def value(self):
        v = self.sign * math.sqrt(self.q)
        return complex(0, v) if self.imaginary else complex(v, 0)

    def __str__(self):
        s = "-" if self.sign < 0 else ""
        return f"{s}{'i*' if self.imaginary else ''}sqrt({self.q})"


def gauss_quadratic_exact(p, e):
    """Closed form of the quadratic Gauss sum over GF(p^e), p odd."""
    if p == 2:
        raise EvenCharacteristic("quadratic character needs odd p")
    sign = (-1) ** (e - 1)
    if p % 4 == 1:
        return QuadraticGauss(p**e, sign, False)
    # (sqrt(-1))^e cycles 1, i, -1, -i
    unit_sign, imaginary = [(1, False), (1, True), (-1, False), (-1, True)][e % 4]
    return QuadraticGauss(p**e, sign * unit_sign, imaginary)


def jacobi_cubic(field, exponent=1):
    """J(phi, phi) in Z[omega] for the cubic phi with phi(delta) = omega^exponent."""
    field = as_base_field(field)
    if field.order % 3:
        raise OrderNotDividing(f"3 does not divide q-1 = {field.order}")
    u = field.exp[field.exp != 1]
    v = field.sub(1, u)
    idx = (exponent * (field.log[u] + field.log[v])) % 3
    c0, c1, c2 = (int(np.count_nonzero(idx == r)) for r in range(3))
    j = EisensteinInt(c0 - c2, c1 - c2)
    if j.b % 3 or (j.a + 1) % 3:
        raise AssertionError(f"Jacobi sum {j} violates the cubic congruences")
    return j


def cubic_AB(q):
    """(A, B) with 4q = A^2 + 27B^2, A = 1 mod 3, B >= 0."""
    j = jacobi_cubic(q)
    A, B = 2 * j.a - j.b, j.b // 3
    field = as_base_field(q)
    assert 4 * field.q == A * A + 27 * B * B and A % 3 == 1
    return CubicAB(A, abs(B))


def quartic_candidates(q):
    out = []
    m = 1
    while m * m <= q:
        r = q - m * m
        n = math.isqrt(r)
        if n * n == r and n % 2 == 0:
            out.append(GaussianInt(m, n))
        m += 2
    return out


def quartic_decompose(q):
    """(m, n) with q = m^2 + n^2, m odd > 0, n even >= 0, matching G(phi)^4 = q*pi^2.

    When q has several such representations the quartic Gauss sum picks the
    one whose square is +-(G^4/q) up to conjugation.
    """
    field = as_base_field(q)
    if field.q % 4 != 1:
        raise NotOneModFour(f"q = {field.q} is not 1 mod 4")
    g4 = gauss_sum(CharSpec(field, 4)) ** 4 / field.q
    target = GaussianInt(round(g4.real), round(g4.imag))
    if abs(complex(target) - g4) > tolerance(field.q, 1):
        raise NonIntegralResult(f"G^4/q = {g4} is not a Gaussian integer")
    allowed = {target, -target, target.conj(), -target.conj()}
    for cand in quartic_candidates(field.q):
        if cand * cand in allowed:
            return cand
    raise AssertionError(f"no m+ni with (m+ni)^2 ~ {target} for q = {field.q}")


def cyclotomic_class_index(field, N, x):
    if N < 1 or field.order % N:
        raise OrderNotDividing(f"N = {N} does not divide q-1 = {field.order}")
    return field.discrete_log(x) % N


# ---------------------------------------------------------------------------
# sums attached to a code spec

def _coordinate_parts(spec, b):
    """(delta^(e1 i), Tr(b gamma^(e2 i))) for i < n, straight from the definition."""
    ext = spec.ext
    i = np.arange(spec.n, dtype=np.int64)
    first = ext.gen_power(ext.norm_exponent * spec.e1 * i)
    second = ext.trace(ext.mul(np.full(spec.n, b), ext.gen_power(spec.e2 * i)))
    return first, second


def z_count(spec, a, b):
    """#{i : a*gamma^((q^k-1)e1 i/(q-1)) + Tr(b*gamma^(e2 i)) = 0}."""
    base = spec.base
    first, second = _coordinate_parts(spec, b)
    coords = base.add(base.mul(np.full(spec.n, a), first), second)
    return int(np.count_nonzero(coords == 0))


def t_sum_exact(spec, a, b):
    """T(a, b) through the integer identity T = q*Z(a, b) - (q^k - 1)."""
    return spec.q * z_count(spec, a, b) - spec.n


def t_sum_closed_form(spec, a, b):
    """Gauss-sum evaluation of T(a, b) for a, b nonzero, rounded to an integer."""
    if a == 0 or b == 0:
        raise ZeroInput("closed form needs a != 0 and b != 0")
    base, ext, k, d = spec.base, spec.ext, spec.k, spec.d
    c = base.mul(int(ext.norm(b)), base.power(a, -k))
    phi = CharSpec(base, d)
    total = 0j
    for i in range(d):
        term = phi.power(-i)(c) * gauss_sum(phi.power(-k * i)) * gauss_sum(phi.power(i)) ** k
        total += term
    total *= (-1) ** (k - 1)
    return round_integral(total, tolerance(spec.q, spec.k))


def s_sum_numeric(spec, a, b):
    """S(a, b) = sum over x in F_{q^k}^* of chi(a x^((q^k-1)e1/(q-1))) chi'(b x^e2)."""
    base, ext = spec.base, spec.ext
    t = np.arange(ext.order, dtype=np.int64)
    first = base.mul(np.full(ext.order, a), ext.gen_power(ext.norm_exponent * spec.e1 * t))
    second = ext.mul(np.full(ext.order, b), ext.gen_power(spec.e2 * t))
    return complex(np.sum(additive_char(base, first) * additive_char(ext, second)))


def power_sum_direct(field, a, n, b):
    """sum over x in F_q of chi(a x^n + b)."""
    x = field.elements()
    return complex(np.sum(additive_char(field, field.add(field.mul(np.full(x.shape, a),
                                                                   field.power(x, n)), b))))


def power_sum_gauss(field, a, n, b):
    """chi(b) * sum_{j=1}^{s-1} conj(psi)^j(a) G(psi^j), psi of order s = gcd(n, q-1)."""
    s = math.gcd(n, field.order)
    psi = CharSpec(field, s)
    total = 0j
    for j in range(1, s):
        total += psi.power(-j)(a) * gauss_sum(psi.power(j))
    return additive_char(field, b) * total
