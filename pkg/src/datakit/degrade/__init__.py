"""Two-stage degradation model with shuffled resize placement."""

from .config import DegradationConfig, StageConfig, load_degradation_config
from .execute import PatchPair, crop_pairs, execute_plan
from .kernels import build_kernel, sample_blur_step, sinc_kernel
from .ops import add_noise, apply_blur, apply_resize
from .plan import DegradationPlan, parse_plan, sample_plan
from .steps import (
    BlurStep,
    CompressionStep,
    NoiseStep,
    ResizeStep,
    QUALITY_RANGES,
    VIDEO_PRESETS,
)

__all__ = [
    "DegradationConfig",
    "StageConfig",
    "load_degradation_config",
    "DegradationPlan",
    "sample_plan",
    "parse_plan",
    "execute_plan",
    "crop_pairs",
    "PatchPair",
    "BlurStep",
    "NoiseStep",
    "ResizeStep",
    "CompressionStep",
    "QUALITY_RANGES",
    "VIDEO_PRESETS",
    "apply_blur",
    "add_noise",
    "apply_resize",
    "build_kernel",
    "sample_blur_step",
    "sinc_kernel",
]
