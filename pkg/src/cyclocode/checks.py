"""Quick property suite run by ``cyclocode verify``.

Each check returns (name, ok, detail).  The checks use small fields so the
whole suite runs in a few seconds.
"""

import numpy as np
from sympy import factorint

from .charsum import (
    CharSpec,
    cubic_AB,
    gauss_quadratic_exact,
    gauss_sum,
    gauss_sum_lifted,
    jacobi_cubic,
    t_sum_closed_form,
    t_sum_exact,
    tolerance,
)
from .code import (
    build_codeword,
    cyclic_shift,
    dual_distance_probe,
    griesmer_sum,
    min_distance,
    min_distance_lower_bound,
    pless_moment_check,
    satisfies_parity_check,
    validate_spec,
    weight,
    weight_distribution_brute,
)
from .errors import CycloCodeError, Mismatch
from .field import build_base_field, build_extension
from .golden import GOLDEN_EXAMPLES
from .theory import compare, predict


def _run(name, fn):
    try:
        detail = fn()
        return name, True, detail or ""
    except (AssertionError, CycloCodeError) as exc:
        return name, False, str(exc)


def check_field_axioms():
    for p, e, k in ((2, 2, 3), (3, 1, 3), (3, 2, 2)):
        base = build_base_field(p, e)
        ext = build_extension(base, k)
        x = ext.nonzero()
        assert (ext.mul(x, ext.inv(x)) == 1).all()
        assert (ext.add(x, ext.neg(x)) == 0).all()
        assert ext.power(ext.gamma, ext.norm_exponent) == base.delta
        tr = ext.trace_table()
        assert (np.bincount(tr, minlength=base.q) == base.q ** (k - 1)).all()
        nm = ext.norm(x)
        assert (np.bincount(nm, minlength=base.q)[1:] == ext.norm_exponent).all()
    return "inverses, trace and norm fibres"


def check_orthogonality():
    base = build_base_field(7)
    chars = [CharSpec(base, 6, j) for j in range(6)]
    x = base.nonzero()
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            s = np.sum(a(x) * np.conj(b(x)))
            assert abs(s - (base.order if i == j else 0)) < 1e-9
    return "GF(7), order 6"


def check_gauss_modulus():
    for q in (4, 5, 7, 9, 13, 16):
        base = build_base_field(*_pe(q))
        for order in range(2, base.order + 1):
            if base.order % order:
                continue
            g = gauss_sum(CharSpec(base, order))
            assert abs(abs(g) ** 2 - q) < tolerance(q), (q, order)
    return "|G|^2 = q"


def check_quadratic():
    for p, e in ((3, 1), (5, 1), (7, 1), (3, 2), (3, 3), (7, 2)):
        g = gauss_sum(CharSpec(build_base_field(p, e), 2))
        assert abs(g - gauss_quadratic_exact(p, e).value) < tolerance(p**e), (p, e)
    return "quadratic closed form"


def check_cubic():
    for q in (4, 7, 13, 16, 19, 25, 31):
        base = build_base_field(*_pe(q))
        j = jacobi_cubic(base)
        g = gauss_sum(CharSpec(base, 3))
        assert abs(g**3 - q * complex(j)) < tolerance(q, 2), q
        ab = cubic_AB(base)
        assert 4 * q == ab.A**2 + 27 * ab.B**2 and ab.A % 3 == 1
    return "G^3 = qJ, 4q = A^2 + 27B^2"


def check_davenport_hasse():
    for (p, e, k, order) in ((2, 2, 3, 3), (3, 1, 3, 2)):
        base = build_base_field(p, e)
        ext = build_extension(base, k)
        char = CharSpec(base, order)
        lhs = gauss_sum_lifted(char, ext)
        rhs = (-1) ** (k - 1) * gauss_sum(char) ** k
        assert abs(lhs - rhs) < tolerance(base.q, k)
    return "GF(4)->GF(64), GF(3)->GF(27)"


def check_t_closed_form():
    for params in ((2, 2, 2, 1, 1), (3, 1, 3, 1, 1), (2, 2, 2, 2, 1), (5, 1, 3, 1, 3)):
        spec = validate_spec(*params)
        rng = np.random.default_rng(0)
        for _ in range(20):
            a = int(rng.integers(1, spec.q))
            b = int(rng.integers(1, spec.q**spec.k))
            assert t_sum_closed_form(spec, a, b) == t_sum_exact(spec, a, b), (params, a, b)
    return "d = 1..4"


def check_code_invariants():
    spec = validate_spec(2, 2, 3, 1, 1)
    rng = np.random.default_rng(1)
    for _ in range(10):
        a, b = int(rng.integers(spec.q)), int(rng.integers(spec.q**spec.k))
        cw = build_codeword(spec, a, b)
        assert satisfies_parity_check(spec, cw)
        assert satisfies_parity_check(spec, cyclic_shift(cw))
    dist = weight_distribution_brute(spec)
    pless_moment_check(spec, dist)
    h = min_distance(dist)
    assert h >= min_distance_lower_bound(spec)
    assert griesmer_sum(spec.dim, h, spec.q) == spec.n
    assert weight(build_codeword(spec, 0, 0)) == 0
    return "parity check, shifts, moments, bounds"


def _pe(q):
    f = factorint(q)
    if len(f) != 1:
        raise ValueError(f"{q} is not a prime power")
    return next(iter(f.items()))


PROPERTY_CHECKS = (
    ("field axioms", check_field_axioms),
    ("character orthogonality", check_orthogonality),
    ("gauss modulus", check_gauss_modulus),
    ("quadratic gauss", check_quadratic),
    ("cubic jacobi", check_cubic),
    ("davenport-hasse", check_davenport_hasse),
    ("T closed form", check_t_closed_form),
    ("code invariants", check_code_invariants),
)


def property_suite():
    return [_run(name, fn) for name, fn in PROPERTY_CHECKS]


def golden_suite(workers=1, dual=False):
    out = []
    for ex in GOLDEN_EXAMPLES:
        spec = validate_spec(*ex.params)

        def one(spec=spec, ex=ex):
            brute = weight_distribution_brute(spec, workers=workers)
            assert brute.as_dict() == ex.enumerator, f"enumerated {brute}"
            assert predict(spec).distribution.as_dict() == ex.enumerator, "predicted differs"
            msg = "match"
            if dual and ex.dual_distance is not None:
                dd = dual_distance_probe(spec)
                assert dd == ex.dual_distance, f"dual distance {dd}"
                msg += f", dual distance {dd}"
            return msg
        out.append(_run(f"{ex.label} [{spec}]", one))
    return out


def sweep_specs(q, k, e_max):
    """Valid specs with d <= 4 for e1, e2 in 1..e_max."""
    p, e = _pe(q)
    specs = []
    for e1 in range(1, e_max + 1):
        for e2 in range(1, e_max + 1):
            try:
                spec = validate_spec(p, e, k, e1, e2)
            except CycloCodeError:
                continue
            if spec.d <= 4:
                specs.append(spec)
    return specs


def sweep_suite(q, k, e_max, workers=1):
    out = []
    for spec in sweep_specs(q, k, e_max):
        def one(spec=spec):
            try:
                return compare(spec, workers=workers)
            except Mismatch as exc:
                raise AssertionError(str(exc))
        out.append(_run(f"sweep [{spec}]", one))
    return out
