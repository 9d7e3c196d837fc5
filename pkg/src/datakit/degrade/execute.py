"""Plan execution and aligned patch cropping.

Degradation runs on the whole HR image, not on crops: codec artifacts
(block grids, intra prediction) depend on absolute geometry, and patching
afterwards keeps them authentic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import codecs
from ..errors import CodecError, PlanExecutionError
from ..image import RasterImage, float_to_u8
from ..seeds import derive_stream
from .ops import blur_float, noise_float, resize_float, resize_to
from .plan import DegradationPlan
from .steps import BlurStep, CompressionStep, NoiseStep, ResizeStep

TERMINAL_INTERP = "bicubic"


def execute_plan(hr: RasterImage, plan: DegradationPlan,
                 codec_bridge=None) -> RasterImage:
    """Run every step in plan order and the terminal resize to LR size.

    The same (image, plan, codec versions) always yields bit-identical
    output. Codec failures re-raise with the failing step index attached.
    """
    if hr.size != plan.hr_size:
        raise ValueError(f"plan sampled for {plan.hr_size}, image is {hr.size}")
    bridge = codec_bridge if codec_bridge is not None else codecs.roundtrip

    x = hr.to_float()
    for index, step in enumerate(plan.steps):
        if isinstance(step, BlurStep):
            x = blur_float(x, step.weights)
        elif isinstance(step, ResizeStep):
            x = resize_float(x, step.factor, step.interp)
        elif isinstance(step, NoiseStep):
            rng = derive_stream(plan.seed.for_stage(f"noise{step.stage}"))
            x = noise_float(x, step, rng)
        elif isinstance(step, CompressionStep):
            try:
                out = bridge(RasterImage(float_to_u8(np.clip(x, 0, 1))), step)
            except CodecError as exc:
                raise PlanExecutionError(index, str(exc)) from exc
            x = out.to_float()
        else:
            raise PlanExecutionError(index, f"unknown step type {type(step)!r}")

    x = resize_to(x, plan.final_size, TERMINAL_INTERP)
    return RasterImage(float_to_u8(np.clip(x, 0.0, 1.0)))


@dataclass(frozen=True)
class PatchPair:
    """One aligned (HR, LR) crop; offsets are in LR coordinates."""

    hr: RasterImage
    lr: RasterImage
    lr_x: int
    lr_y: int

    @property
    def hr_offset(self) -> tuple[int, int]:
        return self.lr_x * (self.hr.width // self.lr.width), \
            self.lr_y * (self.hr.height // self.lr.height)


def crop_pairs(hr: RasterImage, lr: RasterImage, hr_patch: int, scale: int,
               stream: np.random.Generator, count: int = 4) -> list[PatchPair]:
    """Random aligned crops from an HR/LR pair.

    Offsets are drawn uniformly on the LR grid and multiplied up, which
    keeps the pair pixel-aligned by construction. An image that admits
    only the (0, 0) crop yields exactly one pair.
    """
    if hr_patch % scale:
        raise ValueError(f"hr_patch {hr_patch} not divisible by scale {scale}")
    if hr.width != lr.width * scale or hr.height != lr.height * scale:
        raise ValueError(
            f"HR {hr.size} is not exactly {scale}x the LR {lr.size}")
    lr_patch = hr_patch // scale
    max_x = lr.width - lr_patch
    max_y = lr.height - lr_patch
    if max_x < 0 or max_y < 0:
        raise ValueError(f"image smaller than patch: LR {lr.size} < {lr_patch}")

    if max_x == 0 and max_y == 0:
        offsets = [(0, 0)]
    else:
        offsets = [(int(stream.integers(0, max_x + 1)),
                    int(stream.integers(0, max_y + 1))) for _ in range(count)]

    pairs = []
    for ox, oy in offsets:
        hx, hy = ox * scale, oy * scale
        hr_crop = np.ascontiguousarray(
            hr.data[hy:hy + hr_patch, hx:hx + hr_patch])
        lr_crop = np.ascontiguousarray(
            lr.data[oy:oy + lr_patch, ox:ox + lr_patch])
        pairs.append(PatchPair(hr=RasterImage(hr_crop),
                               lr=RasterImage(lr_crop), lr_x=ox, lr_y=oy))
    return pairs
