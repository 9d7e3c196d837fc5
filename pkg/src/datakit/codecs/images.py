"""In-process image codec round trips (JPEG, WebP, AVIF)."""

from __future__ import annotations

import io

import cv2
import numpy as np
from PIL import Image

from ..errors import CodecError
from ..image import RasterImage


def _jpeg_roundtrip(rgb: np.ndarray, quality: int) -> np.ndarray:
    bgr = np.ascontiguousarray(rgb[:, :, ::-1])
    ok, buf = cv2.imencode(".jpg", bgr, [cv2.IMWRITE_JPEG_QUALITY, quality])
    if not ok:
        raise CodecError("jpeg encode failed")
    dec = cv2.imdecode(buf, cv2.IMREAD_COLOR)
    if dec is None:
        raise CodecError("jpeg decode failed")
    return dec[:, :, ::-1]


def _webp_roundtrip(rgb: np.ndarray, quality: int, speed: int) -> np.ndarray:
    # Pillow exposes the encoder effort knob ("method"); cv2 does not.
    buf = io.BytesIO()
    Image.fromarray(rgb, "RGB").save(buf, format="WEBP",
                                     quality=quality, method=speed)
    buf.seek(0)
    with Image.open(buf) as im:
        return np.asarray(im.convert("RGB"), dtype=np.uint8)


def _avif_roundtrip(rgb: np.ndarray, quality: int, speed: int) -> np.ndarray:
    bgr = np.ascontiguousarray(rgb[:, :, ::-1])
    params = [cv2.IMWRITE_AVIF_QUALITY, quality, cv2.IMWRITE_AVIF_SPEED, speed]
    try:
        ok, buf = cv2.imencode(".avif", bgr, params)
    except cv2.error as exc:
        raise CodecError(f"avif encoder unavailable: {exc}")
    if not ok:
        raise CodecError("avif encode failed")
    dec = cv2.imdecode(buf, cv2.IMREAD_COLOR)
    if dec is None:
        raise CodecError("avif decode failed")
    return dec[:, :, ::-1]


def roundtrip_image_codec(img: RasterImage, step) -> RasterImage:
    """Encode-then-decode with an image codec; dimensions are preserved."""
    if step.codec == "jpeg":
        out = _jpeg_roundtrip(img.data, step.quality)
    elif step.codec == "webp":
        out = _webp_roundtrip(img.data, step.quality, step.speed)
    elif step.codec == "avif":
        out = _avif_roundtrip(img.data, step.quality, step.speed)
    else:
        raise CodecError(f"not an image codec: {step.codec}")
    if out.shape != img.data.shape:
        raise CodecError(
            f"{step.codec} changed dimensions: {img.data.shape} -> {out.shape}")
    return RasterImage(np.ascontiguousarray(out))
