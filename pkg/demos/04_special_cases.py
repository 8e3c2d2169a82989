"""Specialized tables for d = 3 and d = 4 and where rows merge.

Run: python3 demos/04_special_cases.py
"""
from cyclocode import specialize_check, validate_spec
from cyclocode.charsum import cubic_AB

for params in [(7, 1, 2, 2, 1), (19, 1, 2, 2, 1), (2, 2, 2, 2, 1), (13, 1, 3, 3, 5),
               (3, 2, 3, 3, 5)]:
    spec = validate_spec(*params)
    print(spec)
    for r in specialize_check(spec):
        print("   ", r)

# q = 4 forces A = 4, B = 0 (4q = 16 = A^2 + 27 B^2), so two rows of the
# B = 0 table coincide and the code has three weights, not four.
print("q=4:", cubic_AB(4))
