"""Step types for the degradation pipeline.

Every step is a frozen dataclass with fully bound sampled parameters, so
a plan is reproducible bit-for-bit from its serialized form. Blur kernel
weights are derived from the stored parameters on demand and never
serialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

BLUR_KINDS = (
    "iso", "aniso", "generalized_iso", "generalized_aniso",
    "plateau_iso", "plateau_aniso", "sinc", "identity",
)
NOISE_FAMILIES = ("gaussian", "poisson")
RESIZE_MODES = ("up", "down", "keep")
RESIZE_INTERPS = ("area", "bilinear", "bicubic")
CODECS = ("jpeg", "webp", "avif", "mpeg2", "mpeg4", "h264", "h265")
VIDEO_PRESETS = ("slow", "medium", "fast", "faster", "superfast")

# quality-parameter ranges, inclusive, per codec
QUALITY_RANGES = {
    "jpeg": (20, 95),
    "webp": (20, 95),
    "avif": (20, 95),
    "mpeg2": (8, 31),   # qscale
    "mpeg4": (8, 31),   # qscale
    "h264": (23, 38),   # crf
    "h265": (28, 42),   # crf
}
SPEED_RANGE = (0, 6)  # webp/avif encoder effort


@dataclass(frozen=True)
class BlurStep:
    """2-D convolution with a sampled kernel; weights sum to 1."""

    stage: int
    kind: str
    size: int
    sigma_x: float = 0.0
    sigma_y: float = 0.0
    rotation: float = 0.0
    beta: float = 0.0
    omega: float = 0.0  # sinc cutoff frequency

    op = "blur"

    def __post_init__(self):
        if self.kind not in BLUR_KINDS:
            raise ValueError(f"unknown kernel kind: {self.kind}")
        if self.size % 2 != 1 or self.size < 1:
            raise ValueError(f"kernel size must be odd and positive: {self.size}")

    @cached_property
    def weights(self) -> np.ndarray:
        from .kernels import build_kernel
        return build_kernel(self)


@dataclass(frozen=True)
class NoiseStep:
    """Additive gaussian or signal-dependent poisson (shot) noise.

    ``strength`` is sigma in normalized units for gaussian, the scale
    factor for poisson. ``gray`` shares one noise field across channels.
    """

    stage: int
    family: str
    strength: float
    gray: bool

    op = "noise"

    def __post_init__(self):
        if self.family not in NOISE_FAMILIES:
            raise ValueError(f"unknown noise family: {self.family}")
        if self.strength < 0:
            raise ValueError("noise strength must be nonnegative")


@dataclass(frozen=True)
class ResizeStep:
    """Resample by ``factor`` with the named interpolator."""

    stage: int
    mode: str
    factor: float
    interp: str
    position_slot: int

    op = "resize"

    def __post_init__(self):
        if self.mode not in RESIZE_MODES:
            raise ValueError(f"unknown resize mode: {self.mode}")
        if self.interp not in RESIZE_INTERPS:
            raise ValueError(f"unknown interpolator: {self.interp}")
        if self.factor <= 0:
            raise ValueError("resize factor must be positive")
        if not 0 <= self.position_slot <= 3:
            raise ValueError("position_slot must be in 0..3")


@dataclass(frozen=True)
class CompressionStep:
    """One lossy encode/decode round trip.

    ``quality`` is the JPEG/WebP/AVIF quality factor, the MPEG qscale, or
    the H.26x CRF. ``speed`` is the WebP/AVIF effort knob; ``preset`` the
    video-encoder speed preset.
    """

    stage: int
    codec: str
    quality: int
    speed: int | None = None
    preset: str | None = None

    op = "compression"

    def __post_init__(self):
        if self.codec not in CODECS:
            raise ValueError(f"unknown codec: {self.codec}")
        lo, hi = QUALITY_RANGES[self.codec]
        if not lo <= self.quality <= hi:
            raise ValueError(
                f"{self.codec} quality {self.quality} outside [{lo}, {hi}]")
        if self.codec in ("webp", "avif"):
            if self.speed is None or not SPEED_RANGE[0] <= self.speed <= SPEED_RANGE[1]:
                raise ValueError(f"{self.codec} needs speed in {SPEED_RANGE}")
        if self.codec in ("mpeg2", "mpeg4", "h264", "h265"):
            if self.preset not in VIDEO_PRESETS:
                raise ValueError(f"{self.codec} needs a preset from {VIDEO_PRESETS}")

    @property
    def is_video(self) -> bool:
        return self.codec in ("mpeg2", "mpeg4", "h264", "h265")
