"""Anime SR dataset engineering toolkit.

Three pipelines: curating the least-compressed, most-informative frames
from video sources; synthesizing paired HR/LR training data through a
seeded two-stage degradation model with single-frame video compression;
and preparing pseudo ground truth with enhanced hand-drawn lines.
"""

from .image import EdgeMap, RasterImage, load_image, psnr, save_image
from .seeds import SeedSpec, derive_stream

__version__ = "0.1.0"

__all__ = [
    "RasterImage",
    "EdgeMap",
    "load_image",
    "save_image",
    "psnr",
    "SeedSpec",
    "derive_stream",
    "__version__",
]
