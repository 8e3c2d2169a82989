"""Building F_{q^k} over F_q and checking the tower is coherent.

Run: python3 demos/01_tower_fields.py
"""
import numpy as np

from cyclocode.field import build_base_field, build_extension, minimal_polynomial

base = build_base_field(2, 2)          # F_4
ext = build_extension(base, 3)         # F_64 over F_4
print(base, "modulus", base.modulus, "delta =", base.delta)
print(ext, "modulus", ext.modulus, "gamma =", ext.gamma)

# gamma is normalized so its norm is delta
print("gamma^21 =", ext.power(ext.gamma, ext.norm_exponent), "(delta =", base.delta, ")")

# trace and norm fibres
tr = np.bincount(ext.trace_table(), minlength=base.q)
nm = np.bincount(ext.norm(ext.nonzero()), minlength=base.q)
print("trace fibre sizes", tr.tolist())
print("norm fibre sizes ", nm.tolist())

for a in (0, 1, 21):
    print(f"minimal polynomial of gamma^-{a}:", minimal_polynomial(ext, a))
