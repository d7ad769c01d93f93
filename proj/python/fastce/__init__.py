"""Histogram-based contrast enhancement accelerated by selective downsampling.

The heavy lifting lives in the C++ extension module ``_fastce``.
"""

from ._fastce import (  # noqa: F401
    IoError,
    ParamError,
    ParseError,
    extract_luminance,
    fhe,
    fsmirank,
    generate,
    he,
    histogram,
    read_image,
    recombine_luminance,
    smirank,
    spatial_downsample,
    write_image,
)

__all__ = [
    "IoError",
    "ParamError",
    "ParseError",
    "extract_luminance",
    "fhe",
    "fsmirank",
    "generate",
    "he",
    "histogram",
    "read_image",
    "recombine_luminance",
    "smirank",
    "spatial_downsample",
    "write_image",
]
