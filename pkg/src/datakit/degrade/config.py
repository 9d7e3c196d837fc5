"""Degradation-model configuration with shipped defaults.

Every probability and range the sampler draws from lives here and can be
overridden from a YAML file. Categorical probabilities must sum to 1
within 1e-9; violations fail fast at construction.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from ..errors import ConfigError
from .steps import CODECS, RESIZE_INTERPS, VIDEO_PRESETS

_PROB_TOL = 1e-9

_KERNEL_KINDS = ("iso", "aniso", "generalized_iso", "generalized_aniso",
                 "plateau_iso", "plateau_aniso")
_KERNEL_SIZES = tuple(range(7, 22, 2))


@dataclass(frozen=True)
class StageConfig:
    """Distributions for one degradation stage."""

    kernel_sizes: tuple[int, ...] = _KERNEL_SIZES
    kernel_kinds: tuple[str, ...] = _KERNEL_KINDS
    kernel_probs: tuple[float, ...] = (0.45, 0.25, 0.12, 0.03, 0.12, 0.03)
    sinc_prob: float = 0.1
    blur_sigma: tuple[float, float] = (0.2, 3.0)
    betag_range: tuple[float, float] = (0.5, 4.0)
    betap_range: tuple[float, float] = (1.0, 2.0)

    resize_mode_probs: tuple[float, float, float] = (0.2, 0.7, 0.1)  # up/down/keep
    resize_range: tuple[float, float] = (0.1, 1.2)
    resize_interps: tuple[str, ...] = RESIZE_INTERPS

    gaussian_prob: float = 0.5
    noise_sigma: tuple[float, float] = (1.0, 30.0)  # 8-bit units
    poisson_scale: tuple[float, float] = (0.05, 3.0)
    gray_noise_prob: float = 0.4

    codecs: tuple[str, ...] = ("jpeg", "webp")
    codec_probs: tuple[float, ...] = (0.4, 0.6)
    speed_range: tuple[int, int] = (0, 6)
    presets: tuple[str, ...] = VIDEO_PRESETS
    preset_probs: tuple[float, ...] = (0.05, 0.35, 0.3, 0.2, 0.1)

    def __post_init__(self):
        for name, probs, options in (
            ("kernel_probs", self.kernel_probs, self.kernel_kinds),
            ("codec_probs", self.codec_probs, self.codecs),
            ("preset_probs", self.preset_probs, self.presets),
        ):
            if len(probs) != len(options):
                raise ConfigError(f"{name}: {len(probs)} probabilities for "
                                  f"{len(options)} options")
            if abs(sum(probs) - 1.0) > _PROB_TOL:
                raise ConfigError(f"{name} must sum to 1 (got {sum(probs)!r})")
        if abs(sum(self.resize_mode_probs) - 1.0) > _PROB_TOL:
            raise ConfigError("resize_mode_probs must sum to 1")
        for codec in self.codecs:
            if codec not in CODECS:
                raise ConfigError(f"unknown codec in config: {codec}")
        if self.resize_range[0] > self.resize_range[1] or self.resize_range[0] <= 0:
            raise ConfigError(f"bad resize_range: {self.resize_range}")


_STAGE2 = StageConfig(
    blur_sigma=(0.2, 1.5),
    resize_range=(0.15, 1.2),
    noise_sigma=(1.0, 25.0),
    poisson_scale=(0.05, 2.5),
    codecs=("jpeg", "webp", "avif", "mpeg2", "mpeg4", "h264", "h265"),
    codec_probs=(0.06, 0.1, 0.1, 0.12, 0.12, 0.3, 0.2),
)


@dataclass(frozen=True)
class DegradationConfig:
    stage1: StageConfig = field(default_factory=StageConfig)
    stage2: StageConfig = field(default_factory=lambda: _STAGE2)

    def stage(self, n: int) -> StageConfig:
        if n == 1:
            return self.stage1
        if n == 2:
            return self.stage2
        raise ValueError(f"no stage {n}")


def _merge_stage(base: StageConfig, overrides: dict) -> StageConfig:
    known = {f.name for f in dataclasses.fields(StageConfig)}
    bad = set(overrides) - known
    if bad:
        raise ConfigError(f"unknown degradation keys: {sorted(bad)}")
    coerced = {}
    for key, value in overrides.items():
        if isinstance(value, list):
            value = tuple(tuple(v) if isinstance(v, list) else v for v in value)
        coerced[key] = value
    return dataclasses.replace(base, **coerced)


def load_degradation_config(path=None) -> DegradationConfig:
    """Shipped defaults, optionally overridden by a YAML file with
    ``stage1:`` / ``stage2:`` sections."""
    cfg = DegradationConfig()
    if path is None:
        return cfg
    try:
        raw = yaml.safe_load(Path(path).read_text(encoding="utf-8")) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigError(f"cannot load degradation config {path}: {exc}")
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: expected a mapping at top level")
    bad = set(raw) - {"stage1", "stage2"}
    if bad:
        raise ConfigError(f"{path}: unknown sections {sorted(bad)}")
    return DegradationConfig(
        stage1=_merge_stage(cfg.stage1, raw.get("stage1", {}) or {}),
        stage2=_merge_stage(cfg.stage2, raw.get("stage2", {}) or {}),
    )
