"""Image complexity scoring and top-K frame selection.

The builtin proxy rates "amount and variety of detail" from two cheap,
deterministic signals: Sobel gradient-magnitude density and 8-bit
grayscale entropy, each mapped to [0, 1] by a fixed cap and averaged.
A neural scorer can be plugged in through an external score file.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np
from scipy import ndimage

from ..errors import ConfigError
from ..image import RasterImage
from .frames import FrameRecord

BUILTIN_SCORER_ID = "builtin-proxy"
EXTERNAL_SCORER_ID = "external"

# caps mapping each raw signal onto [0, 1]
GRADIENT_DENSITY_CAP = 0.35
ENTROPY_CAP_BITS = 8.0


@dataclass(frozen=True)
class ComplexityScore:
    value: float
    scorer_id: str

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"score {self.value} outside [0, 1]")


@dataclass(frozen=True)
class ScorerConfig:
    kind: str = "builtin-proxy"  # or "external-file"
    external_path: Path | None = None

    def __post_init__(self):
        if self.kind not in ("builtin-proxy", "external-file"):
            raise ConfigError(f"unknown scorer kind: {self.kind}")
        if (self.kind == "external-file") != (self.external_path is not None):
            raise ConfigError("external_path is required iff kind is external-file")


def proxy_complexity(img: RasterImage) -> float:
    """Gradient/entropy composite in [0, 1]; 0 for any constant image."""
    gray = img.gray()
    gx = ndimage.sobel(gray, axis=1, mode="reflect")
    gy = ndimage.sobel(gray, axis=0, mode="reflect")
    grad_density = float(np.mean(np.hypot(gx, gy)))
    grad_term = min(grad_density / GRADIENT_DENSITY_CAP, 1.0)

    gray_u8 = np.floor(gray * 255.0 + 0.5).astype(np.uint8)
    counts = np.bincount(gray_u8.ravel(), minlength=256)
    p = counts[counts > 0] / gray_u8.size
    entropy_bits = float(-(p * np.log2(p)).sum())
    entropy_term = min(entropy_bits / ENTROPY_CAP_BITS, 1.0)

    return 0.5 * grad_term + 0.5 * entropy_term


@lru_cache(maxsize=8)
def _load_score_table(path_str: str) -> dict[str, float]:
    table: dict[str, float] = {}
    path = Path(path_str)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read score file {path}: {exc}")
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ConfigError(f"{path}:{lineno}: expected '<path>\\t<score>'")
        try:
            value = float(parts[1])
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: bad score {parts[1]!r}")
        if not 0.0 <= value <= 1.0:
            raise ConfigError(f"{path}:{lineno}: score {value} outside [0, 1]")
        table[parts[0]] = value
    return table


def score_complexity(img: RasterImage, cfg: ScorerConfig,
                     rel_path: str | None = None) -> ComplexityScore:
    """Score one image under the configured scorer.

    External scoring looks the image up by its relative path in the score
    file; a missing entry is an error rather than a silent default.
    """
    if cfg.kind == "builtin-proxy":
        return ComplexityScore(proxy_complexity(img), BUILTIN_SCORER_ID)
    table = _load_score_table(str(cfg.external_path))
    if rel_path is None or rel_path not in table:
        raise ConfigError(
            f"no score entry for {rel_path!r} in {cfg.external_path}")
    return ComplexityScore(table[rel_path], EXTERNAL_SCORER_ID)


def select_top_k(scored: list[tuple[FrameRecord, ComplexityScore]],
                 k: int) -> list[FrameRecord]:
    """Keep the k highest-scoring frames per video.

    Output is grouped by video (first-appearance order) and sorted by
    descending score within each video; ties break toward the earlier
    frame. All scores must come from one scorer.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    scorer_ids = {s.scorer_id for _, s in scored}
    if len(scorer_ids) > 1:
        raise ValueError(f"mixed scorer ids: {sorted(scorer_ids)}")

    by_video: dict[str, list[tuple[FrameRecord, ComplexityScore]]] = {}
    for rec, score in scored:
        by_video.setdefault(rec.video_id, []).append((rec, score))

    selected: list[FrameRecord] = []
    for pairs in by_video.values():
        pairs.sort(key=lambda rs: (-rs[1].value, rs[0].frame_index))
        selected.extend(rec for rec, _ in pairs[:k])
    return selected
