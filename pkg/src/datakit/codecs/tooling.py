"""External encoder discovery and capability reporting.

Tool versions are captured once per process and recorded into every
manifest: encoded bytes are only promised to be bit-reproducible for a
fixed encoder version.
"""

from __future__ import annotations

import os
import shutil
import subprocess
from dataclasses import dataclass

_IMAGE_CODECS = ("jpeg", "webp", "avif")
_ENCODER_NAMES = {
    "mpeg2": "mpeg2video",
    "mpeg4": "mpeg4",
    "h264": "libx264",
    "h265": "libx265",
}


def find_ffmpeg() -> str | None:
    return os.environ.get("DATAKIT_FFMPEG") or shutil.which("ffmpeg")


def find_ffprobe() -> str | None:
    return os.environ.get("DATAKIT_FFPROBE") or shutil.which("ffprobe")


@dataclass(frozen=True)
class ToolingReport:
    ffmpeg_path: str | None
    ffmpeg_version: str | None
    ffprobe_path: str | None
    ffprobe_version: str | None
    supported_codecs: tuple[str, ...]

    def supports(self, codec: str) -> bool:
        return codec in self.supported_codecs

    def as_header(self) -> dict:
        """Fields embedded into manifest headers."""
        return {
            "ffmpeg_version": self.ffmpeg_version,
            "ffprobe_version": self.ffprobe_version,
            "supported_codecs": list(self.supported_codecs),
        }


def _version_line(tool_path: str) -> str | None:
    try:
        proc = subprocess.run([tool_path, "-version"],
                              capture_output=True, text=True, timeout=30)
    except (OSError, subprocess.TimeoutExpired):
        return None
    if proc.returncode != 0 or not proc.stdout:
        return None
    return proc.stdout.splitlines()[0].strip()


def _list_encoders(ffmpeg_path: str) -> str:
    try:
        proc = subprocess.run([ffmpeg_path, "-hide_banner", "-encoders"],
                              capture_output=True, text=True, timeout=30)
    except (OSError, subprocess.TimeoutExpired):
        return ""
    return proc.stdout if proc.returncode == 0 else ""


_cached_report: ToolingReport | None = None


def probe_tooling(refresh: bool = False) -> ToolingReport:
    """Inspect available encoders. An absent tool degrades capability

    (video codecs drop out of supported_codecs) instead of raising.
    """
    global _cached_report
    if _cached_report is not None and not refresh:
        return _cached_report

    ffmpeg = find_ffmpeg()
    ffprobe = find_ffprobe()
    supported = list(_IMAGE_CODECS)
    ffmpeg_version = None
    if ffmpeg:
        ffmpeg_version = _version_line(ffmpeg)
        if ffmpeg_version:
            encoders = _list_encoders(ffmpeg)
            for codec, encoder in _ENCODER_NAMES.items():
                if f" {encoder} " in encoders:
                    supported.append(codec)
        else:
            ffmpeg = None

    report = ToolingReport(
        ffmpeg_path=ffmpeg,
        ffmpeg_version=ffmpeg_version,
        ffprobe_path=ffprobe,
        ffprobe_version=_version_line(ffprobe) if ffprobe else None,
        supported_codecs=tuple(supported),
    )
    _cached_report = report
    return report
