"""Degradation plans: sampling, canonical serialization, digests.

A plan is the full record of one HR -> LR synthesis: two blur, two noise,
and two compression steps, two stochastically placed resize steps, and a
terminal resize to the paired LR size. All parameters are bound at
sampling time from a seeded stream, so a (seed, config) pair maps to
exactly one plan and one output.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass

import numpy as np

from ..errors import ConfigError
from ..seeds import SeedSpec, derive_stream
from .config import DegradationConfig, StageConfig
from .kernels import sample_blur_step
from .steps import (
    QUALITY_RANGES,
    BlurStep,
    CompressionStep,
    NoiseStep,
    ResizeStep,
)

PLAN_VERSION = 1

Step = BlurStep | NoiseStep | ResizeStep | CompressionStep

_STEP_TYPES = {
    "blur": BlurStep,
    "noise": NoiseStep,
    "resize": ResizeStep,
    "compression": CompressionStep,
}


@dataclass(frozen=True)
class DegradationPlan:
    seed: SeedSpec
    hr_size: tuple[int, int]  # (width, height)
    scale: int
    steps: tuple[Step, ...]
    final_size: tuple[int, int]

    def serialize(self) -> str:
        """Canonical JSON: sorted keys, compact separators, repr floats."""
        payload = {
            "version": PLAN_VERSION,
            "seed": asdict(self.seed),
            "hr_size": list(self.hr_size),
            "scale": self.scale,
            "final_size": list(self.final_size),
            "steps": [dict(asdict(s), op=s.op) for s in self.steps],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.serialize().encode("utf-8")).hexdigest()


def parse_plan(text: str) -> DegradationPlan:
    """Inverse of serialize(); parse(serialize(p)) == p."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"bad plan JSON: {exc}")
    if payload.get("version") != PLAN_VERSION:
        raise ConfigError(f"unsupported plan version: {payload.get('version')}")
    try:
        steps = []
        for raw in payload["steps"]:
            raw = dict(raw)
            cls = _STEP_TYPES[raw.pop("op")]
            steps.append(cls(**raw))
        return DegradationPlan(
            seed=SeedSpec(**payload["seed"]),
            hr_size=tuple(payload["hr_size"]),
            scale=int(payload["scale"]),
            steps=tuple(steps),
            final_size=tuple(payload["final_size"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad plan payload: {exc}")


def _sample_resize(stage: int, cfg: StageConfig,
                   rng: np.random.Generator) -> ResizeStep:
    slot = int(rng.integers(0, 4))
    mode = str(rng.choice(np.asarray(["up", "down", "keep"]),
                          p=np.asarray(cfg.resize_mode_probs)))
    if mode == "up":
        factor = float(rng.uniform(1.0, cfg.resize_range[1]))
    elif mode == "down":
        factor = float(rng.uniform(cfg.resize_range[0], 1.0))
    else:
        factor = 1.0
    interp = str(rng.choice(np.asarray(cfg.resize_interps)))
    return ResizeStep(stage=stage, mode=mode, factor=factor, interp=interp,
                      position_slot=slot)


def _sample_noise(stage: int, cfg: StageConfig,
                  rng: np.random.Generator) -> NoiseStep:
    gaussian = rng.random() < cfg.gaussian_prob
    gray = rng.random() < cfg.gray_noise_prob
    if gaussian:
        strength = float(rng.uniform(*cfg.noise_sigma)) / 255.0
        return NoiseStep(stage=stage, family="gaussian", strength=strength,
                         gray=gray)
    strength = float(rng.uniform(*cfg.poisson_scale))
    return NoiseStep(stage=stage, family="poisson", strength=strength, gray=gray)


def _sample_compression(stage: int, cfg: StageConfig,
                        rng: np.random.Generator) -> CompressionStep:
    codec = str(rng.choice(np.asarray(cfg.codecs), p=np.asarray(cfg.codec_probs)))
    lo, hi = QUALITY_RANGES[codec]
    quality = int(rng.integers(lo, hi + 1))
    speed = None
    preset = None
    if codec in ("webp", "avif"):
        speed = int(rng.integers(cfg.speed_range[0], cfg.speed_range[1] + 1))
    if codec in ("mpeg2", "mpeg4", "h264", "h265"):
        preset = str(rng.choice(np.asarray(cfg.presets),
                                p=np.asarray(cfg.preset_probs)))
    return CompressionStep(stage=stage, codec=codec, quality=quality,
                           speed=speed, preset=preset)


def sample_plan(hr_size: tuple[int, int], scale: int, cfg: DegradationConfig,
                seed: SeedSpec) -> DegradationPlan:
    """Draw one fully bound plan for an HR image of ``hr_size`` (w, h).

    Within each stage the resize step lands uniformly in one of four
    slots: before blur, between blur and noise, between noise and
    compression, or after compression.
    """
    w, h = hr_size
    if scale < 1:
        raise ValueError("scale must be >= 1")
    if w % scale or h % scale:
        raise ValueError(f"HR size {hr_size} not divisible by scale {scale}")

    rng = derive_stream(seed)
    steps: list[Step] = []
    for stage in (1, 2):
        scfg = cfg.stage(stage)
        resize = _sample_resize(stage, scfg, rng)
        ordered: list[Step] = [
            sample_blur_step(stage, scfg, rng),
            _sample_noise(stage, scfg, rng),
            _sample_compression(stage, scfg, rng),
        ]
        ordered.insert(resize.position_slot, resize)
        steps.extend(ordered)

    return DegradationPlan(
        seed=seed,
        hr_size=(w, h),
        scale=scale,
        steps=tuple(steps),
        final_size=(w // scale, h // scale),
    )
