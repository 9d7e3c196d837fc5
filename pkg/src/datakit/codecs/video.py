"""Single-frame video compression through the external encoder.

A one-frame stream forces the codec into pure intra prediction, which is
what real-world re-encodes do to stills, so the decoded frame carries
authentic video-compression artifacts without any temporal input.
"""

from __future__ import annotations

import shutil
import subprocess
import tempfile
from pathlib import Path

import cv2
import numpy as np

from ..errors import CodecError
from ..image import RasterImage
from .tooling import probe_tooling

_CODEC_ARGS = {
    # encoder name, container extension, quality flag
    "mpeg2": ("mpeg2video", "mpg", "-qscale:v"),
    "mpeg4": ("mpeg4", "mpg", "-qscale:v"),
    "h264": ("libx264", "mp4", "-crf"),
    "h265": ("libx265", "mp4", "-crf"),
}

# x264/x265 understand -preset; the MPEG encoders have no speed preset,
# so the sampled value is recorded in the plan but not passed through.
_PRESET_CODECS = ("h264", "h265")


def _run(cmd: list[str], what: str) -> None:
    try:
        proc = subprocess.run(cmd, capture_output=True, text=True, timeout=300)
    except OSError as exc:
        raise CodecError(f"{what}: cannot run encoder: {exc}")
    except subprocess.TimeoutExpired:
        raise CodecError(f"{what}: encoder timed out")
    if proc.returncode != 0:
        tail = proc.stderr.strip()[-500:]
        raise CodecError(f"{what} failed: {tail}")


def roundtrip_video_codec(img: RasterImage, step, tools=None) -> RasterImage:
    """Encode as a one-frame video stream and decode back.

    Odd dimensions are edge-padded to even sizes before encoding (4:2:0
    chroma needs them) and cropped after decoding. Temp files are private
    to the invocation and removed on success or error.
    """
    if step.codec not in _CODEC_ARGS:
        raise CodecError(f"not a video codec: {step.codec}")
    if tools is None:
        tools = probe_tooling()
    if tools.ffmpeg_path is None:
        raise CodecError("ffmpeg not found (set DATAKIT_FFMPEG or add it to PATH)")
    if not tools.supports(step.codec):
        raise CodecError(f"installed ffmpeg lacks the {step.codec} encoder")

    encoder, ext, quality_flag = _CODEC_ARGS[step.codec]
    h, w = img.data.shape[:2]
    pad_h, pad_w = h % 2, w % 2
    pixels = img.data
    if pad_h or pad_w:
        pixels = np.pad(pixels, ((0, pad_h), (0, pad_w), (0, 0)), mode="edge")

    tmp = Path(tempfile.mkdtemp(prefix="datakit-codec-"))
    try:
        src = tmp / "in.png"
        enc = tmp / f"out.{ext}"
        dec = tmp / "dec.png"
        if not cv2.imwrite(str(src), np.ascontiguousarray(pixels[:, :, ::-1])):
            raise CodecError("cannot write temp frame")

        cmd = [tools.ffmpeg_path, "-hide_banner", "-loglevel", "error", "-y",
               "-i", str(src), "-c:v", encoder, quality_flag, str(step.quality)]
        if step.codec in _PRESET_CODECS and step.preset:
            cmd += ["-preset", step.preset]
        cmd += ["-pix_fmt", "yuv420p", "-frames:v", "1", "-threads", "1",
                str(enc)]
        _run(cmd, f"{step.codec} encode")

        _run([tools.ffmpeg_path, "-hide_banner", "-loglevel", "error", "-y",
              "-i", str(enc), "-frames:v", "1", str(dec)],
             f"{step.codec} decode")

        out_bgr = cv2.imread(str(dec), cv2.IMREAD_COLOR)
        if out_bgr is None:
            raise CodecError(f"{step.codec}: decoded frame unreadable")
    finally:
        shutil.rmtree(tmp, ignore_errors=True)

    out = out_bgr[:h, :w, ::-1]
    if out.shape != img.data.shape:
        raise CodecError(
            f"{step.codec} changed dimensions: {img.data.shape} -> {out.shape}")
    return RasterImage(np.ascontiguousarray(out))
