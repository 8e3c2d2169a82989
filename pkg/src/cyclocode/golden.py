"""Published weight enumerators used as golden data."""

from dataclasses import dataclass


@dataclass(frozen=True)
class GoldenExample:
    label: str
    params: tuple  # (p, e, k, e1, e2)
    enumerator: dict
    dual_distance: object = None


GOLDEN_EXAMPLES = (
    GoldenExample("golden-1", (2, 2, 3, 1, 1), {0: 1, 47: 189, 48: 63, 63: 3}, 3),
    GoldenExample("golden-2", (3, 1, 4, 1, 3), {0: 1, 53: 160, 54: 80, 80: 2}, 3),
    GoldenExample("golden-3", (3, 1, 3, 1, 1), {0: 1, 14: 26, 18: 26, 20: 26, 26: 2}),
    GoldenExample("golden-4", (3, 2, 3, 1, 1), {0: 1, 638: 2912, 648: 728, 656: 2912, 728: 8}),
    GoldenExample("golden-5", (2, 2, 2, 2, 1), {0: 1, 9: 30, 12: 15, 15: 18}),
    GoldenExample("golden-6", (7, 1, 4, 1, 1),
                  {0: 1, 2022: 4800, 2058: 2400, 2064: 4800, 2085: 4800, 2400: 6}),
    GoldenExample("golden-7", (2, 2, 5, 1, 2), {0: 1, 735: 1023, 768: 1023, 783: 2046, 1023: 3}),
    GoldenExample("golden-8", (3, 2, 3, 3, 5), {0: 1, 620: 1456, 648: 728, 656: 4368, 728: 8}),
    GoldenExample("golden-9", (5, 1, 5, 1, 1),
                  {0: 1, 2444: 3124, 2484: 3124, 2500: 3124, 2504: 3124, 2564: 3124, 3124: 4}),
)

# (q, k) pairs of the theory-vs-enumeration sweep, e1, e2 in 1..SWEEP_E_MAX
SWEEP_QK = ((3, 3), (3, 4), (4, 2), (4, 3), (5, 2), (5, 3), (7, 2), (9, 2))
SWEEP_E_MAX = 8
