"""720P rescaling: back to the native production resolution."""

from __future__ import annotations

import cv2

from ..image import RasterImage

TARGET_HEIGHT = 720


def rescale_720(img: RasterImage) -> RasterImage:
    """Resample so height is exactly 720, preserving aspect ratio.

    Bicubic both ways (sources below 720 are upscaled). Images already at
    height 720 pass through unchanged, which also makes this idempotent.
    """
    if img.height == TARGET_HEIGHT:
        return img
    new_w = int(img.width * TARGET_HEIGHT / img.height + 0.5)
    new_w = max(new_w, 1)
    resized = cv2.resize(img.data, (new_w, TARGET_HEIGHT),
                         interpolation=cv2.INTER_CUBIC)
    return RasterImage(resized)
