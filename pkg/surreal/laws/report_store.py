#!/usr/bin/env python3
"""
Persistence for law reports.

- a run document (JSON): every report of one ``laws`` invocation, rewritten
  atomically
- a history log (JSONL): one line per report, appended across runs

Both files are guarded by a sibling ``.lock`` file so concurrent runs do not
interleave writes.
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

from filelock import FileLock

from surreal import __version__
from surreal.core.constants import LOCK_TIMEOUT_SECONDS
from surreal.laws.harness import LawReport

logger = logging.getLogger(__name__)


class ReportStore:
    """Writes law reports to a run document and/or a history log."""

    def __init__(self, lock_timeout: float = LOCK_TIMEOUT_SECONDS):
        self.lock_timeout = lock_timeout

    def write_run(self, path: Union[str, Path], reports: Iterable[LawReport]) -> Dict[str, Any]:
        """
        Atomically replace ``path`` with a document holding every report.

        Returns:
            The document written
        """
        items = [r.to_dict() for r in reports]
        document = {
            "version": __version__,
            "laws": len(items),
            "failures": sum(item["failures"] for item in items),
            "reports": items,
        }
        self._atomic_write_json(Path(path), document)
        logger.info("Wrote %d law reports to %s", len(items), path)
        return document

    def record(self, path: Union[str, Path], reports: Iterable[LawReport]) -> int:
        """
        Append each report as one line to the history log.

        Returns:
            Number of lines appended
        """
        stamp = datetime.now(timezone.utc).isoformat()
        count = 0
        for report in reports:
            entry = {"recorded_at": stamp, **report.to_dict()}
            self._append_jsonl(Path(path), entry)
            count += 1
        logger.debug("Appended %d law reports to %s", count, path)
        return count

    def history(self, path: Union[str, Path]) -> List[Dict[str, Any]]:
        """Read back the history log; a missing file is an empty history."""
        path = Path(path)
        if not path.exists():
            return []
        with FileLock(f"{path}.lock", timeout=self.lock_timeout):
            with open(path) as f:
                return [json.loads(line) for line in f if line.strip()]

    def _atomic_write_json(self, path: Path, data: Dict[str, Any]) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(f"{path}.lock", timeout=self.lock_timeout):
            tmp_path = path.with_suffix(".tmp")
            try:
                with open(tmp_path, "w") as f:
                    json.dump(data, f, indent=2)
                tmp_path.replace(path)
            except Exception:
                if tmp_path.exists():
                    tmp_path.unlink()
                raise

    def _append_jsonl(self, path: Path, entry: Dict[str, Any]) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with FileLock(f"{path}.lock", timeout=self.lock_timeout):
            with open(path, "a") as f:
                json.dump(entry, f)
                f.write("\n")
