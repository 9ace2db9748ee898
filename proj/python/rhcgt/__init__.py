"""Robin Hood and Little John combinatorial game engine.

Exact values come back as :class:`fractions.Fraction`; positions are
``(n, a, b)`` triples with heap size ``n`` and wealths ``a`` (Left) and
``b`` (Right).
"""

from ._rhcgt import (
    Engine,
    StoreCapacityExceeded,
    euclid_winner,
    golden_class,
    lj_path,
    lj_stops_formula,
    main_mean,
    main_temperature,
    mp_from_pair,
    suite_names,
    verify,
)

__all__ = [
    "Engine",
    "StoreCapacityExceeded",
    "euclid_winner",
    "golden_class",
    "lj_path",
    "lj_stops_formula",
    "main_mean",
    "main_temperature",
    "mp_from_pair",
    "suite_names",
    "verify",
]
