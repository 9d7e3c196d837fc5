"""Image and edge-map containers plus file I/O.

Pixels are stored as 8-bit RGB. Filtering math runs on a normalized
float32 view in [0, 1]; the u8 -> float -> u8 round trip is the identity
(rounding half away from zero).
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import ImageIOError

# Rec.601 luma weights, used for every grayscale conversion in the toolkit.
LUMA_WEIGHTS = (0.299, 0.587, 0.114)

SUPPORTED_FORMATS = ("png", "jpeg", "webp")

_QUALITY_RANGES = {"jpeg": (1, 100), "webp": (1, 100)}


@dataclass(frozen=True, eq=False)
class RasterImage:
    """An 8-bit RGB image backed by a read-only (h, w, 3) uint8 array."""

    data: np.ndarray

    def __post_init__(self):
        d = self.data
        if d.ndim != 3 or d.shape[2] != 3:
            raise ValueError(f"expected (h, w, 3) array, got shape {d.shape}")
        if d.dtype != np.uint8:
            raise ValueError(f"expected uint8 pixels, got {d.dtype}")
        if d.shape[0] < 1 or d.shape[1] < 1:
            raise ValueError("zero-dimension image")
        if not d.flags.c_contiguous:
            d = np.ascontiguousarray(d)
            object.__setattr__(self, "data", d)
        d.flags.writeable = False

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def size(self) -> tuple[int, int]:
        """(width, height)."""
        return self.data.shape[1], self.data.shape[0]

    def to_float(self) -> np.ndarray:
        """Normalized float32 copy in [0, 1]."""
        return self.data.astype(np.float32) / 255.0

    @classmethod
    def from_float(cls, arr: np.ndarray) -> "RasterImage":
        """Quantize a float array in [0, 1] back to u8 (half away from zero)."""
        return cls(float_to_u8(arr))

    def gray(self) -> np.ndarray:
        """Rec.601 luma as float32 in [0, 1]."""
        f = self.to_float()
        r, g, b = LUMA_WEIGHTS
        return r * f[:, :, 0] + g * f[:, :, 1] + b * f[:, :, 2]


@dataclass(frozen=True, eq=False)
class EdgeMap:
    """A strictly binary mask with the geometry of its source image."""

    bits: np.ndarray

    def __post_init__(self):
        b = self.bits
        if b.ndim != 2:
            raise ValueError(f"expected (h, w) mask, got shape {b.shape}")
        if b.dtype != np.bool_:
            raise ValueError(f"expected bool mask, got {b.dtype}")
        if not b.flags.c_contiguous:
            b = np.ascontiguousarray(b)
            object.__setattr__(self, "bits", b)
        b.flags.writeable = False

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    def true_fraction(self) -> float:
        return float(np.count_nonzero(self.bits)) / self.bits.size


def float_to_u8(arr: np.ndarray) -> np.ndarray:
    """[0, 1] floats to u8, rounding half away from zero."""
    out = np.floor(np.asarray(arr, dtype=np.float32) * 255.0 + 0.5)
    return np.clip(out, 0.0, 255.0).astype(np.uint8)


def load_image(path) -> RasterImage:
    """Decode a PNG/JPEG/WebP file to RGB.

    Alpha, if present, is composited over a white background (cel
    convention). Raises ImageIOError for unreadable or truncated files.
    """
    path = Path(path)
    try:
        with Image.open(path) as im:
            im.load()
            if im.mode == "P":
                im = im.convert("RGBA" if "transparency" in im.info else "RGB")
            if im.mode in ("RGBA", "LA"):
                rgba = im.convert("RGBA")
                bg = Image.new("RGB", rgba.size, (255, 255, 255))
                bg.paste(rgba, mask=rgba.getchannel("A"))
                im = bg
            elif im.mode != "RGB":
                im = im.convert("RGB")
            arr = np.asarray(im, dtype=np.uint8)
    except FileNotFoundError:
        raise ImageIOError(f"no such file: {path}") from None
    except (UnidentifiedImageError, OSError, SyntaxError) as exc:
        raise ImageIOError(f"cannot decode {path}: {exc}") from exc
    if arr.size == 0:
        raise ImageIOError(f"zero-dimension image: {path}")
    return RasterImage(arr.copy())


def save_image(img: RasterImage, path, format: str | None = None,
               quality: int | None = None) -> None:
    """Write an image as PNG (lossless), JPEG, or WebP.

    ``format`` defaults to the file extension. ``quality`` is only valid
    for the lossy formats and must lie in the codec's range.
    """
    path = Path(path)
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt == "jpg":
        fmt = "jpeg"
    if fmt not in SUPPORTED_FORMATS:
        raise ImageIOError(f"unsupported format: {fmt}")
    if fmt == "png":
        if quality is not None:
            raise ImageIOError("quality is only valid for lossy formats")
        kwargs = {}
    else:
        kwargs = {}
        if quality is not None:
            lo, hi = _QUALITY_RANGES[fmt]
            if not lo <= quality <= hi:
                raise ImageIOError(
                    f"{fmt} quality {quality} outside codec range [{lo}, {hi}]")
            kwargs["quality"] = quality
    try:
        Image.fromarray(img.data, "RGB").save(path, format=fmt.upper(), **kwargs)
    except OSError as exc:
        raise ImageIOError(f"cannot write {path}: {exc}") from exc


def encode_png_bytes(img: RasterImage) -> bytes:
    """PNG-encode in memory (used for content digests and temp transport)."""
    buf = io.BytesIO()
    Image.fromarray(img.data, "RGB").save(buf, format="PNG")
    return buf.getvalue()


def psnr(a: RasterImage | np.ndarray, b: RasterImage | np.ndarray) -> float:
    """Peak signal-to-noise ratio between two same-sized images, in dB."""
    xa = a.data if isinstance(a, RasterImage) else np.asarray(a)
    xb = b.data if isinstance(b, RasterImage) else np.asarray(b)
    if xa.shape != xb.shape:
        raise ValueError(f"shape mismatch: {xa.shape} vs {xb.shape}")
    mse = np.mean((xa.astype(np.float64) - xb.astype(np.float64)) ** 2)
    if mse == 0:
        return float("inf")
    return float(10.0 * np.log10(255.0 ** 2 / mse))
