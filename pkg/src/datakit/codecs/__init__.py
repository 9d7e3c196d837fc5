"""Single-image compression round trips: in-process image codecs and
single-frame video compression through an external encoder."""

from .images import roundtrip_image_codec
from .tooling import ToolingReport, find_ffmpeg, find_ffprobe, probe_tooling
from .video import roundtrip_video_codec

IMAGE_CODECS = ("jpeg", "webp", "avif")
VIDEO_CODECS = ("mpeg2", "mpeg4", "h264", "h265")


def roundtrip(img, step):
    """Dispatch a compression step to the image or video path."""
    if step.codec in IMAGE_CODECS:
        return roundtrip_image_codec(img, step)
    return roundtrip_video_codec(img, step)


__all__ = [
    "roundtrip",
    "roundtrip_image_codec",
    "roundtrip_video_codec",
    "probe_tooling",
    "ToolingReport",
    "find_ffmpeg",
    "find_ffprobe",
    "IMAGE_CODECS",
    "VIDEO_CODECS",
]
