"""Content-addressed on-disk cache for serialized command output.

One JSON file per key.  The key hashes the tool version together with the
command and its full parameter set, so entries from other versions are simply
never looked up.  Writes go through a temporary file and ``os.replace``.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Mapping

ENV_VAR = "TAQLAB_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "taqlab"


def cache_key(version: str, command: str, params: Mapping[str, Any]) -> str:
    blob = json.dumps(
        {"version": version, "command": command, "params": dict(params)},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CachedResult:
    key: str
    version: str
    payload: bytes
    created_at: str


class ResultCache:
    def __init__(self, root: str | os.PathLike, version: str):
        self.root = Path(root)
        self.version = version

    def path(self, key: str) -> Path:
        return self.root / f"{key}.json"

    def get(self, key: str) -> CachedResult | None:
        try:
            raw = json.loads(self.path(key).read_text(encoding="utf-8"))
        except (OSError, ValueError):
            return None
        if raw.get("version") != self.version or raw.get("key") != key:
            return None
        return CachedResult(key, raw["version"], raw["payload"].encode("utf-8"), raw.get("created_at", ""))

    def put(self, key: str, payload: bytes) -> CachedResult:
        entry = CachedResult(key, self.version, payload, datetime.now(timezone.utc).isoformat())
        doc = {
            "key": key,
            "version": entry.version,
            "created_at": entry.created_at,
            "payload": payload.decode("utf-8"),
        }
        self.root.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(doc, fh, sort_keys=True)
            os.replace(tmp, self.path(key))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
        return entry
