"""Exact enumeration of lattice paths by descents, major index and crossings."""

from ._latcross import (
    LatcrossError,
    QTPoly,
    apply_map,
    crossings,
    decode,
    encode,
    gpoly,
    hpoly,
    oracle_g,
    oracle_h,
    qbinom,
    rectangle_poly,
    stats,
)

__all__ = [
    "LatcrossError",
    "QTPoly",
    "apply_map",
    "crossings",
    "decode",
    "encode",
    "gpoly",
    "hpoly",
    "oracle_g",
    "oracle_h",
    "qbinom",
    "rectangle_poly",
    "stats",
]
