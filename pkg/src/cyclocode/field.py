"""Exact arithmetic in GF(p), F_q = GF(p^e) and the tower F_{q^k} / F_q.

Elements are plain integers.  An element of a field built over a coefficient
field of size ``s`` is the integer ``sum(c_j * s**j)`` where ``c_j`` are its
coefficients in the polynomial basis ``1, x, ..., x^(m-1)``.  Because the
coefficients of F_q are themselves base-p digit strings, every element of
F_{q^k} is a base-p digit string of length ``e*k`` and the subfield F_q is
exactly the integers ``0 .. q-1``.

All arithmetic functions accept Python ints or numpy integer arrays.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from sympy import factorint, isprime

from .errors import DegreeTooLarge, NonPrime, ZeroInput

BASE_FIELD_CAP = 2**20
EXTENSION_CAP = 2**24


class PrimeOps:
    """Scalar arithmetic in GF(p)."""

    def __init__(self, p):
        self.p = p
        self.size = p

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroInput("0 has no inverse")
        return pow(x, -1, self.p)


# ---------------------------------------------------------------------------
# dense polynomials over a scalar ops object, constant term first

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_add(ops, f, g):
    n = max(len(f), len(g))
    f = list(f) + [0] * (n - len(f))
    g = list(g) + [0] * (n - len(g))
    return _trim([ops.add(a, b) for a, b in zip(f, g)])


def poly_sub(ops, f, g):
    return poly_add(ops, f, [ops.neg(c) for c in g])


def poly_mul(ops, f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b:
                out[i + j] = ops.add(out[i + j], ops.mul(a, b))
    return _trim(out)


def poly_divmod(ops, f, g):
    g = _trim(list(g))
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = _trim(list(f))
    if len(r) < len(g):
        return [], r
    lead_inv = ops.inv(g[-1])
    quot = [0] * (len(r) - len(g) + 1)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        c = ops.mul(r[-1], lead_inv)
        quot[shift] = c
        for j, b in enumerate(g):
            r[shift + j] = ops.sub(r[shift + j], ops.mul(c, b))
        _trim(r)
    return _trim(quot), r


def poly_gcd(ops, f, g):
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, poly_divmod(ops, f, g)[1]
    if not f:
        return f
    inv = ops.inv(f[-1])
    return [ops.mul(c, inv) for c in f]


def poly_powmod(ops, f, exponent, mod):
    result = [1]
    base = poly_divmod(ops, f, mod)[1]
    while exponent:
        if exponent & 1:
            result = poly_divmod(ops, poly_mul(ops, result, base), mod)[1]
        base = poly_divmod(ops, poly_mul(ops, base, base), mod)[1]
        exponent >>= 1
    return result


def is_irreducible(ops, f):
    """Ben-Or test: no factor of degree <= deg(f)/2."""
    f = _trim(list(f))
    m = len(f) - 1
    if m < 1:
        return False
    x = [0, 1]
    xq = x
    for _ in range(m // 2):
        xq = poly_powmod(ops, xq, ops.size, f)
        if len(poly_gcd(ops, f, poly_sub(ops, xq, x))) > 1:
            return False
    return True


def smallest_irreducible(ops, m):
    """Monic irreducible of degree m, smallest in (c0, c1, ...) order."""
    for low in itertools.product(range(ops.size), repeat=m):
        f = list(low) + [1]
        if is_irreducible(ops, f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {m}")


def prime_divisors(n):
    return sorted(factorint(n))


# ---------------------------------------------------------------------------

class _Field:
    """Shared machinery for a field built as sub[x]/(modulus)."""

    def __init__(self, sub, degree, p):
        self.coeff_ring = sub
        self.degree = degree
        self.p = p
        self.size = sub.size**degree
        self.order = self.size - 1
        self.ndigits = 0
        while p**self.ndigits < self.size:
            self.ndigits += 1
        self.modulus = smallest_irreducible(sub, degree)

    # -- slow arithmetic used only while building tables
    def _to_coeffs(self, x):
        s = self.coeff_ring.size
        return [(x // s**j) % s for j in range(self.degree)]

    def _from_coeffs(self, c):
        s = self.coeff_ring.size
        return sum(int(v) * s**j for j, v in enumerate(c))

    def _slow_mul(self, x, y):
        prod = poly_mul(self.coeff_ring, self._to_coeffs(x), self._to_coeffs(y))
        return self._from_coeffs(poly_divmod(self.coeff_ring, prod, self.modulus)[1])

    def _slow_pow(self, x, t):
        result, base = 1, x
        while t:
            if t & 1:
                result = self._slow_mul(result, base)
            base = self._slow_mul(base, base)
            t >>= 1
        return result

    def _smallest_primitive(self):
        cofactors = [self.order // r for r in prime_divisors(self.order)]
        for g in range(1, self.size):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        raise AssertionError("no primitive element")

    def _build_tables(self, g):
        exp = np.empty(self.order, dtype=np.int64)
        x = 1
        for t in range(self.order):
            exp[t] = x
            x = self._slow_mul(x, g)
        assert x == 1, "generator order mismatch"
        return exp

    def _install_tables(self, gen, exp):
        self.gen = gen
        self.exp = exp
        self.exp.setflags(write=False)
        log = np.full(self.size, -1, dtype=np.int64)
        log[exp] = np.arange(self.order, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        self.log = log
        self.log.setflags(write=False)
        self._exp_l = exp.tolist()
        self._log_l = log.tolist()

    # -- public arithmetic
    def elements(self):
        return np.arange(self.size, dtype=np.int64)

    def nonzero(self):
        """Nonzero elements ordered by discrete log: gen^0, gen^1, ..."""
        return self.exp

    def add(self, x, y):
        p = self.p
        if p == 2:
            return x ^ y
        out, scale = 0, 1
        for _ in range(self.ndigits):
            out = out + ((x % p + y % p) % p) * scale
            x, y, scale = x // p, y // p, scale * p
        return out

    def neg(self, x):
        p = self.p
        if p == 2:
            return x
        out, scale = 0, 1
        for _ in range(self.ndigits):
            out = out + ((-(x % p)) % p) * scale
            x, scale = x // p, scale * p
        return out

    def sub(self, x, y):
        return self.add(x, self.neg(y))

    def scale_int(self, x, c):
        """x added to itself c times."""
        p = self.p
        out, scale = 0, 1
        for _ in range(self.ndigits):
            out = out + (((x % p) * c) % p) * scale
            x, scale = x // p, scale * p
        return out

    def mul(self, x, y):
        if isinstance(x, (int, np.integer)) and isinstance(y, (int, np.integer)):
            if x == 0 or y == 0:
                return 0
            return self._exp_l[(self._log_l[x] + self._log_l[y]) % self.order]
        x, y = np.asarray(x), np.asarray(y)
        r = self.exp[(self.log[x] + self.log[y]) % self.order]
        return np.where((x == 0) | (y == 0), 0, r)

    def inv(self, x):
        if isinstance(x, (int, np.integer)):
            if x == 0:
                raise ZeroInput("0 has no inverse")
            return self._exp_l[(-self._log_l[x]) % self.order]
        x = np.asarray(x)
        if (x == 0).any():
            raise ZeroInput("0 has no inverse")
        return self.exp[(-self.log[x]) % self.order]

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def power(self, x, t):
        if isinstance(x, (int, np.integer)):
            if x == 0:
                if t < 0:
                    raise ZeroInput("0 has no inverse")
                return 1 if t == 0 else 0
            return self._exp_l[(self._log_l[x] * t) % self.order]
        x = np.asarray(x)
        r = self.exp[(self.log[x] * t) % self.order]
        if t == 0:
            return np.ones_like(x)
        return np.where(x == 0, 0, r)

    def gen_power(self, t):
        """gen**t for integer or array t."""
        if isinstance(t, (int, np.integer)):
            return self._exp_l[t % self.order]
        return self.exp[np.asarray(t) % self.order]

    def discrete_log(self, x):
        if isinstance(x, (int, np.integer)):
            if x == 0:
                raise ZeroInput("discrete log of 0")
            return self._log_l[x]
        x = np.asarray(x)
        if (x == 0).any():
            raise ZeroInput("discrete log of 0")
        return self.log[x]

    def multiplicative_order(self, x):
        return self.order // math.gcd(self.discrete_log(x), self.order)

    def coeffs(self, x):
        """Coefficient vector over the immediate subfield (full length)."""
        return self._to_coeffs(int(x))

    def from_coeffs(self, c):
        return self._from_coeffs(c)

    # coefficient-ring interface used by polynomial helpers
    def __hash__(self):
        return id(self)


class BaseField(_Field):
    """F_q = GF(p^e) with primitive element ``delta``."""

    def __init__(self, p, e):
        self.e = e
        self.q = p**e
        super().__init__(PrimeOps(p), e, p)
        g = self._smallest_primitive()
        self._install_tables(g, self._build_tables(g))

    @property
    def delta(self):
        return self.gen

    def __repr__(self):
        return f"GF({self.p}^{self.e})"

    def absolute_trace(self, x):
        """Tr_{q/p}(x) as an integer in [0, p)."""
        acc = x
        y = x
        for _ in range(self.e - 1):
            y = self.power(y, self.p)
            acc = self.add(acc, y)
        return acc

    def absolute_trace_table(self):
        if not hasattr(self, "_abs_tr"):
            t = np.asarray(self.absolute_trace(self.elements()))
            t.setflags(write=False)
            self._abs_tr = t
        return self._abs_tr


class ExtensionField(_Field):
    """F_{q^k} as a degree-k algebra over ``base``.

    ``gamma`` is primitive and satisfies gamma**((q^k-1)/(q-1)) == base.delta.
    """

    def __init__(self, base, k):
        self.base = base
        self.k = k
        self.q = base.q
        super().__init__(base, k, base.p)
        self.norm_exponent = self.order // (self.q - 1)
        g0 = self._smallest_primitive()
        exp0 = self._build_tables(g0)
        # delta0 = norm(g0) is primitive in F_q; rescale so norm(gamma) = delta
        delta0 = int(exp0[self.norm_exponent % self.order])
        r = base.discrete_log(delta0)
        qm1 = self.q - 1
        u = pow(r, -1, qm1) if qm1 > 1 else 1
        u = u or qm1
        while math.gcd(u, self.order) != 1:
            u += qm1
        self.gamma_exponent = u
        idx = (np.arange(self.order, dtype=np.int64) * u) % self.order
        exp = exp0[idx]
        self._install_tables(int(exp[1]) if self.order > 1 else 1, exp)

    @property
    def gamma(self):
        return self.gen

    def __repr__(self):
        return f"GF({self.q}^{self.k})"

    def frobenius(self, x, times=1):
        return self.power(x, self.q**times)

    def trace(self, x):
        """Tr_{q^k/q}(x) = sum of x^(q^i), i < k, computed by powering."""
        acc = x
        y = x
        for _ in range(self.k - 1):
            y = self.power(y, self.q)
            acc = self.add(acc, y)
        return acc

    def trace_table(self):
        """Trace of every element, built from the traces of the basis x^j."""
        if not hasattr(self, "_tr"):
            base = self.base
            basis_tr = [int(self.trace(self.q**j)) for j in range(self.k)]
            elems = self.elements()
            out = np.zeros(self.size, dtype=np.int64)
            for j, t in enumerate(basis_tr):
                digit = (elems // self.q**j) % self.q
                out = base.add(out, base.mul(digit, np.full_like(digit, t)))
            out.setflags(write=False)
            self._tr = out
        return self._tr

    def norm(self, x):
        """x**((q^k-1)/(q-1)), landing in the embedded F_q."""
        if isinstance(x, (int, np.integer)) and x == 0:
            raise ZeroInput("norm of 0")
        if not isinstance(x, (int, np.integer)) and (np.asarray(x) == 0).any():
            raise ZeroInput("norm of 0")
        return self.power(x, self.norm_exponent)

    def embed(self, c):
        """F_q element as an element of F_{q^k} (identity on encodings)."""
        return c


# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def build_base_field(p, e=1):
    if not isprime(p):
        raise NonPrime(f"p = {p} is not prime")
    if e < 1 or p**e > BASE_FIELD_CAP:
        raise DegreeTooLarge(f"p^e = {p}^{e} exceeds the cap 2^20")
    return BaseField(p, e)


@lru_cache(maxsize=None)
def build_extension(base, k):
    if k < 2 or base.q**k > EXTENSION_CAP:
        raise DegreeTooLarge(f"q^k = {base.q}^{k} exceeds the cap 2^24 (or k < 2)")
    return ExtensionField(base, k)


def trace(ext, x):
    return ext.trace(x)


def norm(ext, x):
    return ext.norm(x)


def discrete_log(field, x):
    return field.discrete_log(x)


@dataclass(frozen=True)
class Polynomial:
    """Polynomial over ``field``; coefficients constant term first."""

    field: object
    coeffs: tuple

    @classmethod
    def make(cls, field, coeffs):
        return cls(field, tuple(_trim([int(c) for c in coeffs])))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __mul__(self, other):
        return Polynomial.make(self.field, poly_mul(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other):
        quot, rem = poly_divmod(self.field, self.coeffs, other.coeffs)
        return Polynomial.make(self.field, quot), Polynomial.make(self.field, rem)

    def evaluate(self, x, ambient=None):
        """Horner evaluation at x, in ``ambient`` (a field containing the coefficients)."""
        ambient = ambient or self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = ambient.add(ambient.mul(acc, x), c)
        return acc

    def is_zero(self):
        return not self.coeffs

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(reversed(terms))


def minimal_polynomial(ext, a):
    """Minimal polynomial over F_q of gamma**(-a)."""
    beta = ext.gen_power(-a)
    conj = []
    y = beta
    while y not in conj:
        conj.append(y)
        y = ext.power(y, ext.q)
    coeffs = [1]
    for c in conj:
        # multiply by (x - c) in F_{q^k}[x]
        shifted = [0] + coeffs
        scaled = [ext.mul(ext.neg(c), v) for v in coeffs] + [0]
        coeffs = [ext.add(u, v) for u, v in zip(shifted, scaled)]
    if any(c >= ext.q for c in coeffs):
        raise AssertionError("minimal polynomial coefficients left F_q")
    return Polynomial.make(ext.base, coeffs)


def parity_check_polynomial(spec):
    """h(x) = h_{(q^k-1)e1/(q-1)}(x) * h_{e2}(x) for a validated code spec."""
    ext = spec.ext
    h1 = minimal_polynomial(ext, ext.norm_exponent * spec.e1)
    h2 = minimal_polynomial(ext, spec.e2)
    return h1 * h2


def x_n_minus_one(field, n):
    return Polynomial.make(field, [field.neg(1)] + [0] * (n - 1) + [1])
