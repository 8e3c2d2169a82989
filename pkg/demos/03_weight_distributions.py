"""Closed-form weight distributions against exhaustive enumeration.

Run: python3 demos/03_weight_distributions.py
"""
import time

from cyclocode import (
    GOLDEN_EXAMPLES,
    compare,
    is_griesmer_optimal,
    min_distance,
    min_distance_lower_bound,
    predict,
    validate_spec,
    weight_distribution_brute,
)

print(f"{'spec':34s} {'table':>5s} {'h':>5s} {'bound':>5s} griesmer  time  enumerator")
for ex in GOLDEN_EXAMPLES:
    spec = validate_spec(*ex.params)
    t0 = time.perf_counter()
    brute = weight_distribution_brute(spec)
    dt = time.perf_counter() - t0
    pred = predict(spec)
    assert compare(spec) == "match"
    h = min_distance(brute)
    print(f"{str(spec):34s} {pred.table:5d} {h:5d} {min_distance_lower_bound(spec):5d} "
          f"{str(is_griesmer_optimal(spec, h)):8s} {dt:5.2f}s {brute}")
