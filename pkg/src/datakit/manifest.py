"""Dataset manifest: the provenance ledger for every pipeline run.

Line-delimited JSON, UTF-8, one record per line. The first line is a
header carrying the resolved configuration and tool versions; every
following line is one entry. Entries are append-only within a run and
every emitted file appears in exactly one entry; failures are recorded
as entries with ``rejected=true`` and no output file.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ConfigError

HEADER_KIND = "header"
ENTRY_KIND = "entry"


def make_entry(*, source_video_id: str | None = None,
               frame_index: int | None = None,
               picture_type: str | None = None,
               complexity_score: float | None = None,
               output_path: str | None = None,
               rescaled_720p: bool = False,
               rejected: bool = False,
               reason: str | None = None,
               plan_digest: str | None = None,
               **extra) -> dict:
    """Build one manifest entry with the canonical field set."""
    entry = {
        "kind": ENTRY_KIND,
        "source_video_id": source_video_id,
        "frame_index": frame_index,
        "picture_type": picture_type,
        "complexity_score": complexity_score,
        "output_path": output_path,
        "rescaled_720p": rescaled_720p,
        "rejected": rejected,
        "reason": reason,
        "plan_digest": plan_digest,
    }
    entry.update(extra)
    return entry


class ManifestWriter:
    """Serialized single-writer append log. Not thread-safe by design:

    workers hand results back to one owner, which appends in item order so
    reruns are byte-identical.
    """

    def __init__(self, path, header: dict):
        self.path = Path(path)
        self.entry_count = 0
        self._fh = self.path.open("w", encoding="utf-8", newline="\n")
        record = {"kind": HEADER_KIND}
        record.update(header)
        self._write(record)

    def _write(self, record: dict) -> None:
        self._fh.write(json.dumps(record, sort_keys=True) + "\n")

    def append(self, entry: dict) -> None:
        if entry.get("kind") != ENTRY_KIND:
            entry = dict(entry, kind=ENTRY_KIND)
        self._write(entry)
        self.entry_count += 1

    def close(self) -> None:
        if not self._fh.closed:
            self._fh.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()
        return False


def read_manifest(path) -> tuple[dict, list[dict]]:
    """Parse a manifest back into (header, entries)."""
    header = None
    entries = []
    with Path(path).open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}:{lineno}: bad manifest line: {exc}")
            if record.get("kind") == HEADER_KIND:
                if header is not None:
                    raise ConfigError(f"{path}: duplicate manifest header")
                header = record
            else:
                entries.append(record)
    if header is None:
        raise ConfigError(f"{path}: missing manifest header")
    return header, entries
