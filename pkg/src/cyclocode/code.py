"""The cyclic code c(a, b) = (a*gamma^((q^k-1)e1 i/(q-1)) + Tr(b*gamma^(e2 i)))_i.

Exhaustive weight enumeration, minimum distance, the Griesmer sum, the
Gauss-sum lower bound on the minimum distance, a dual-distance probe and the
first two Pless power moments.
"""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np
from sympy import isprime

from .errors import (
    GcdE1E2Violation,
    GcdE2Violation,
    MomentMismatch,
    NonPrime,
    TooLarge,
    ZeroCode,
)
from .field import (
    BASE_FIELD_CAP,
    EXTENSION_CAP,
    build_base_field,
    build_extension,
    parity_check_polynomial,
)

BRUTE_CAP = 10**9
DUAL_CAP = 5000


@dataclass(frozen=True)
class CodeSpec:
    p: int
    e: int
    k: int
    e1: int
    e2: int
    q: int = dc_field(init=False)
    n: int = dc_field(init=False)
    dim: int = dc_field(init=False)
    d: int = dc_field(init=False)

    def __post_init__(self):
        q = self.p**self.e
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "n", q**self.k - 1)
        object.__setattr__(self, "dim", self.k + 1)
        object.__setattr__(self, "d", math.gcd(q - 1, self.k * self.e1 - self.e2))

    @property
    def base(self):
        return build_base_field(self.p, self.e)

    @property
    def ext(self):
        return build_extension(self.base, self.k)

    def as_dict(self):
        return {"p": self.p, "e": self.e, "k": self.k, "e1": self.e1, "e2": self.e2,
                "q": self.q, "n": self.n, "dim": self.dim, "d": self.d}

    def __str__(self):
        return f"q={self.q} k={self.k} e1={self.e1} e2={self.e2} (d={self.d})"


def validate_spec(p, e, k, e1, e2):
    if not isprime(p):
        raise NonPrime(f"p = {p} is not prime")
    if e < 1 or k < 2 or e1 < 1 or e2 < 1:
        raise ValueError("need e >= 1, k >= 2, e1 >= 1, e2 >= 1")
    q = p**e
    if q > BASE_FIELD_CAP or q**k > EXTENSION_CAP:
        raise TooLarge(f"q^k = {q}^{k} exceeds the field size cap")
    N = (q**k - 1) // (q - 1)
    if math.gcd(N, e2) != 1:
        raise GcdE2Violation(f"gcd((q^k-1)/(q-1), e2) = gcd({N}, {e2}) != 1")
    if math.gcd(math.gcd(q - 1, e1), e2) != 1:
        raise GcdE1E2Violation(f"gcd(q-1, e1, e2) = gcd({q - 1}, {e1}, {e2}) != 1")
    spec = CodeSpec(p, e, k, e1, e2)
    assert math.gcd(k, spec.d) == 1, "gcd(k, d) must be 1 under the standing assumptions"
    return spec


@dataclass(frozen=True)
class WeightDistribution:
    """Sorted (weight, frequency) pairs of a whole code."""

    entries: tuple

    @classmethod
    def from_counts(cls, counts):
        return cls(tuple(sorted((int(w), int(c)) for w, c in dict(counts).items() if c)))

    def as_dict(self):
        return dict(self.entries)

    @property
    def total(self):
        return sum(c for _, c in self.entries)

    def nonzero_weights(self):
        return [w for w, _ in self.entries if w]

    def enumerator(self):
        parts = []
        for w, c in self.entries:
            if w == 0:
                parts.append(str(c))
            else:
                parts.append(f"{'' if c == 1 else c}z^{w}")
        return "+".join(parts)

    def __str__(self):
        return self.enumerator()


def _first_row(spec):
    ext = spec.ext
    i = np.arange(spec.n, dtype=np.int64)
    return np.asarray(ext.gen_power(ext.norm_exponent * spec.e1 * i))


def build_codeword(spec, a, b):
    """Symbols of c(a, b) as an integer array over F_q."""
    base, ext = spec.base, spec.ext
    i = np.arange(spec.n, dtype=np.int64)
    second = ext.trace(ext.mul(np.full(spec.n, b), ext.gen_power(spec.e2 * i)))
    return base.add(base.mul(np.full(spec.n, a), _first_row(spec)), second)


def weight(cw):
    return int(np.count_nonzero(cw))


def _default_workers():
    env = os.environ.get("CHARCODE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def weight_distribution_brute(spec, workers=1):
    """Exact distribution over every (a, b) in F_q x F_{q^k}.

    For b = gamma^j the trace vector is Tr(gamma^(j + e2 i)), read from a
    table of Tr(gamma^t); each a is then matched coordinatewise against
    -a*delta^(e1 i).
    """
    q, n = spec.q, spec.n
    if q ** (spec.k + 1) * n > BRUTE_CAP:
        raise TooLarge(f"q^(k+1)*n = {q ** (spec.k + 1) * n} exceeds {BRUTE_CAP}")
    base, ext = spec.base, spec.ext
    u = _first_row(spec)
    targets = np.stack([np.asarray(base.neg(base.mul(np.full(n, a), u))) for a in range(q)])
    tr_pow = ext.trace_table()[ext.exp]
    steps = (spec.e2 * np.arange(n, dtype=np.int64)) % n

    hist = np.zeros(n + 1, dtype=np.int64)
    # b = 0
    for a in range(q):
        hist[n - np.count_nonzero(targets[a] == 0)] += 1

    chunk = max(1, 2_000_000 // max(n, 1))

    def sweep(lo, hi):
        local = np.zeros(n + 1, dtype=np.int64)
        for start in range(lo, hi, chunk):
            j = np.arange(start, min(start + chunk, hi), dtype=np.int64)
            tv = tr_pow[(j[:, None] + steps[None, :]) % n]
            for a in range(q):
                z = np.count_nonzero(tv == targets[a][None, :], axis=1)
                local += np.bincount(n - z, minlength=n + 1)
        return local

    workers = max(1, min(workers or 1, n))
    if workers == 1:
        hist += sweep(0, n)
    else:
        bounds = np.linspace(0, n, workers + 1).astype(int)
        with ThreadPoolExecutor(workers) as pool:
            for part in pool.map(lambda lh: sweep(*lh), zip(bounds[:-1], bounds[1:])):
                hist += part
    return WeightDistribution.from_counts(
        {w: c for w, c in enumerate(hist.tolist()) if c})


def min_distance(dist):
    nz = dist.nonzero_weights()
    if not nz:
        raise ZeroCode("the code has no nonzero codeword")
    return min(nz)


def griesmer_sum(l, h, q):
    return sum(-(-h // q**i) for i in range(l))


def is_griesmer_optimal(spec, h):
    return griesmer_sum(spec.dim, h, spec.q) == spec.n


def min_distance_lower_bound(spec):
    """floor(q^(k-1)(q-1) - 1 - (d-1) q^((k-1)/2)), computed exactly."""
    q, k, d = spec.q, spec.k, spec.d
    # ceil((d-1) * sqrt(q^(k-1)))
    m = (d - 1) ** 2 * q ** (k - 1)
    r = math.isqrt(m)
    if r * r < m:
        r += 1
    return q ** (k - 1) * (q - 1) - 1 - r


def generator_matrix(spec):
    """(k+1) x n matrix: row delta^(e1 i), then Tr(x^j gamma^(e2 i)) for j < k."""
    ext = spec.ext
    i = np.arange(spec.n, dtype=np.int64)
    g = ext.gen_power(spec.e2 * i)
    rows = [_first_row(spec)]
    for j in range(spec.k):
        beta = spec.q**j
        rows.append(ext.trace_table()[ext.mul(np.full(spec.n, beta), g)])
    return np.stack(rows)


def _normalize_columns(field, cols):
    """Scale each row of ``cols`` (one column vector per row) to lead with 1."""
    nz = cols != 0
    lead_pos = np.argmax(nz, axis=1)
    lead = cols[np.arange(len(cols)), lead_pos]
    inv = field.power(lead, -1)
    return field.mul(cols, inv[:, None])


def _encode(cols, q):
    weights = q ** np.arange(cols.shape[1], dtype=np.int64)
    return cols @ weights


def dual_distance_from_matrix(field, G):
    """Minimum distance of the dual of the code spanned by G, capped at '>3'."""
    cols = np.asarray(G, dtype=np.int64).T.copy()
    if (~(cols != 0).any(axis=1)).any():
        return 1
    q = field.q
    normed = _normalize_columns(field, cols)
    codes = _encode(normed, q)
    if len(np.unique(codes)) < len(codes):
        return 2
    code_set = np.sort(codes)
    n = len(cols)
    for i in range(n - 1):
        others = cols[i + 1:]
        for lam in range(1, q):
            combo = field.add(cols[i][None, :], field.mul(others, np.full(others.shape, lam)))
            enc = _encode(_normalize_columns(field, combo), q)
            pos = np.searchsorted(code_set, enc)
            pos[pos == n] = 0
            if (code_set[pos] == enc).any():
                return 3
    return ">3"


def dual_distance_probe(spec):
    if spec.n > DUAL_CAP:
        raise TooLarge(f"n = {spec.n} exceeds the dual probe cap {DUAL_CAP}")
    return dual_distance_from_matrix(spec.base, generator_matrix(spec))


def pless_moment_check(spec, dist):
    """First two power moments: sum A_w = q^(k+1), sum w A_w = n (q-1) q^k."""
    q, k, n = spec.q, spec.k, spec.n
    zeroth = dist.total
    first = sum(w * c for w, c in dist.entries)
    if dist.as_dict().get(0) != 1:
        raise MomentMismatch("weight 0 must occur exactly once")
    if zeroth != q ** (k + 1):
        raise MomentMismatch(f"sum A_w = {zeroth}, expected {q ** (k + 1)}")
    if first != n * (q - 1) * q**k:
        raise MomentMismatch(f"sum w A_w = {first}, expected {n * (q - 1) * q ** k}")
    return True


def satisfies_parity_check(spec, cw, h=None):
    """c(x) h(x) == 0 mod x^n - 1 over F_q."""
    base = spec.base
    h = h or parity_check_polynomial(spec)
    acc = np.zeros(spec.n, dtype=np.int64)
    cw = np.asarray(cw, dtype=np.int64)
    for j, hj in enumerate(h.coeffs):
        if hj:
            acc = base.add(acc, base.mul(np.roll(cw, j), np.full(spec.n, hj)))
    return not np.asarray(acc).any()


def cyclic_shift(cw):
    return np.roll(cw, 1)
