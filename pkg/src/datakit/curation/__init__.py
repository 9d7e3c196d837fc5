"""Frame curation: probe coded frames, pull I-frames, score, select, rescale."""

from .frames import (
    FrameRecord,
    FrameSizeReport,
    extract_iframes,
    frame_size_report,
    probe_frames,
)
from .rescale import rescale_720
from .scoring import (
    ComplexityScore,
    ScorerConfig,
    proxy_complexity,
    score_complexity,
    select_top_k,
)

__all__ = [
    "FrameRecord",
    "FrameSizeReport",
    "probe_frames",
    "extract_iframes",
    "frame_size_report",
    "ComplexityScore",
    "ScorerConfig",
    "score_complexity",
    "proxy_complexity",
    "select_top_k",
    "rescale_720",
]
