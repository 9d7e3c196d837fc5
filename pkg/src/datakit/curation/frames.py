"""Coded-frame probing, I-frame extraction, and frame-size statistics.

Intra-coded frames get the largest byte budget from every mainstream
encoder, so they are the least-compressed stills a video can yield.
Probing runs through ffprobe; extraction decodes in-process and keeps
exactly the frames the probe classified as I.
"""

from __future__ import annotations

import json
import subprocess
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import cv2

from ..codecs.tooling import find_ffprobe
from ..errors import InsufficientDataError, ProbeError

PICTURE_TYPES = ("I", "P", "B")


@dataclass(frozen=True)
class FrameRecord:
    """One coded frame as reported by the container."""

    video_id: str
    frame_index: int
    picture_type: str
    byte_size: int
    presentation_timestamp: Fraction

    def __post_init__(self):
        if self.frame_index < 0:
            raise ValueError("frame_index must be nonnegative")
        if self.picture_type not in PICTURE_TYPES:
            raise ValueError(f"picture_type must be one of {PICTURE_TYPES}")
        if self.byte_size <= 0:
            raise ValueError("byte_size must be positive")


@dataclass(frozen=True)
class FrameSizeReport:
    mean_i: float
    mean_non_i: float

    @property
    def ratio(self) -> float:
        return self.mean_i / self.mean_non_i


def probe_frames(video_path) -> list[FrameRecord]:
    """List every coded frame with its picture type and packet size.

    Frames are reported in presentation order; frame_index is the position
    in that order. Raises ProbeError when the probe tool is missing or the
    container cannot be decoded.
    """
    video_path = Path(video_path)
    ffprobe = find_ffprobe()
    if ffprobe is None:
        raise ProbeError("ffprobe not found (set DATAKIT_FFPROBE or add it to PATH)")
    cmd = [
        ffprobe, "-v", "error",
        "-select_streams", "v:0",
        "-show_entries", "frame=pict_type,pkt_size,pts",
        "-show_entries", "stream=time_base",
        "-of", "json",
        str(video_path),
    ]
    proc = subprocess.run(cmd, capture_output=True, text=True)
    if proc.returncode != 0:
        raise ProbeError(
            f"ffprobe failed on {video_path}: {proc.stderr.strip()[-500:]}")
    try:
        payload = json.loads(proc.stdout)
    except json.JSONDecodeError as exc:
        raise ProbeError(f"unparseable ffprobe output for {video_path}: {exc}")

    frames = payload.get("frames", [])
    if not frames:
        raise ProbeError(f"no decodable video frames in {video_path}")
    streams = payload.get("streams", [])
    tb_num, tb_den = 1, 1
    if streams and "time_base" in streams[0]:
        tb_num, tb_den = (int(x) for x in streams[0]["time_base"].split("/"))

    video_id = video_path.stem
    records = []
    for idx, fr in enumerate(frames):
        pict = fr.get("pict_type", "?")
        if pict not in PICTURE_TYPES:
            raise ProbeError(f"{video_path}: frame {idx} has picture type {pict!r}")
        size = int(fr.get("pkt_size", 0))
        if size <= 0:
            raise ProbeError(f"{video_path}: frame {idx} reports no packet size")
        pts = int(fr.get("pts", idx))
        records.append(FrameRecord(
            video_id=video_id,
            frame_index=idx,
            picture_type=pict,
            byte_size=size,
            presentation_timestamp=Fraction(pts * tb_num, tb_den),
        ))
    return records


def iframe_filename(video_id: str, frame_index: int) -> str:
    return f"{video_id}_f{frame_index:06d}.png"


def extract_iframes(video_path, out_dir,
                    records: list[FrameRecord] | None = None) -> list[Path]:
    """Decode the video and write one lossless PNG per I-frame.

    Filenames encode (video_id, frame_index); the output count always
    equals the number of I records reported by probe_frames.
    """
    video_path = Path(video_path)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    if records is None:
        records = probe_frames(video_path)

    wanted = {r.frame_index for r in records if r.picture_type == "I"}
    video_id = records[0].video_id

    cap = cv2.VideoCapture(str(video_path))
    if not cap.isOpened():
        raise ProbeError(f"decoder cannot open {video_path}")
    written: list[Path] = []
    try:
        index = 0
        while True:
            ok, frame_bgr = cap.read()
            if not ok:
                break
            if index in wanted:
                path = out_dir / iframe_filename(video_id, index)
                if not cv2.imwrite(str(path), frame_bgr):
                    raise ProbeError(f"cannot write {path}")
                written.append(path)
            index += 1
    finally:
        cap.release()

    if len(written) != len(wanted):
        raise ProbeError(
            f"{video_path}: decoded {len(written)} I-frames, probe reported "
            f"{len(wanted)}")
    return written


def frame_size_report(records: list[FrameRecord]) -> FrameSizeReport:
    """Mean packet size of I-frames vs non-I frames and their ratio."""
    i_sizes = [r.byte_size for r in records if r.picture_type == "I"]
    o_sizes = [r.byte_size for r in records if r.picture_type != "I"]
    if not i_sizes or not o_sizes:
        raise InsufficientDataError(
            "need at least one I-frame and one non-I frame")
    return FrameSizeReport(
        mean_i=sum(i_sizes) / len(i_sizes),
        mean_non_i=sum(o_sizes) / len(o_sizes),
    )
