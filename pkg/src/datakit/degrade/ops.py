"""Pixel operations for degradation steps: blur, noise, resize.

All three work on normalized float32 arrays so a plan executes without
intermediate quantization (compression steps quantize on their own).
"""

from __future__ import annotations

import cv2
import numpy as np
from scipy import ndimage

from ..image import RasterImage, float_to_u8
from .steps import BlurStep, NoiseStep, ResizeStep

_INTERP = {
    "area": cv2.INTER_AREA,
    "bilinear": cv2.INTER_LINEAR,
    "bicubic": cv2.INTER_CUBIC,
}


def blur_float(arr: np.ndarray, kernel: np.ndarray) -> np.ndarray:
    """2-D convolution per channel with mirrored borders."""
    out = np.empty_like(arr)
    for c in range(arr.shape[2]):
        ndimage.convolve(arr[:, :, c], kernel, output=out[:, :, c], mode="mirror")
    return out


def apply_blur(img: RasterImage, step: BlurStep) -> RasterImage:
    """Convolve an image with a blur step's kernel; dims unchanged."""
    weights = step.weights
    if abs(float(weights.sum()) - 1.0) > 1e-6:
        raise ValueError("kernel weights must sum to 1")
    return RasterImage.from_float(blur_float(img.to_float(), weights))


def noise_float(arr: np.ndarray, step: NoiseStep,
                rng: np.random.Generator) -> np.ndarray:
    """Add one noise realization and clip to [0, 1]."""
    h, w, c = arr.shape
    if step.family == "gaussian":
        if step.gray:
            noise = rng.standard_normal((h, w, 1)).astype(np.float32)
        else:
            noise = rng.standard_normal((h, w, c)).astype(np.float32)
        out = arr + noise * step.strength
    else:
        if step.gray:
            base = arr.mean(axis=2, keepdims=True)
        else:
            base = arr
        quantized = np.round(base * 255.0) / 255.0
        levels = len(np.unique(quantized))
        vals = 2.0 ** np.ceil(np.log2(max(levels, 2)))
        shot = rng.poisson(np.clip(quantized, 0, 1) * vals) / vals
        noise = (shot - quantized).astype(np.float32)
        out = arr + noise * step.strength
    return np.clip(out, 0.0, 1.0)


def add_noise(img: RasterImage, step: NoiseStep,
              rng: np.random.Generator) -> RasterImage:
    return RasterImage.from_float(noise_float(img.to_float(), step, rng))


def resize_float(arr: np.ndarray, factor: float, interp: str) -> np.ndarray:
    """Resample by ``factor``; new dims are round(dim * factor), min 1."""
    h, w = arr.shape[:2]
    new_w = max(int(w * factor + 0.5), 1)
    new_h = max(int(h * factor + 0.5), 1)
    if (new_w, new_h) == (w, h):
        return arr.copy()
    return cv2.resize(arr, (new_w, new_h), interpolation=_INTERP[interp])


def resize_to(arr: np.ndarray, size: tuple[int, int], interp: str) -> np.ndarray:
    """Resample to an exact (width, height)."""
    if (arr.shape[1], arr.shape[0]) == size:
        return arr.copy()
    return cv2.resize(arr, size, interpolation=_INTERP[interp])


def apply_resize(img: RasterImage, step: ResizeStep) -> RasterImage:
    out = resize_float(img.to_float(), step.factor, step.interp)
    if out.shape[0] < 1 or out.shape[1] < 1:
        raise ValueError("resize produced degenerate dimensions")
    return RasterImage(float_to_u8(out))
