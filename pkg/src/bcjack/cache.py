"""Content-addressed on-disk cache for exact results."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

CACHE_VERSION = "bcjack-cache/1"
ENV_VAR = "BCJACK_CACHE"
DEFAULT_DIR = ".bcjack-cache"


def cache_dir() -> Path:
    return Path(os.environ.get(ENV_VAR, DEFAULT_DIR))


def cache_key(kind: str, params: dict) -> str:
    blob = json.dumps({"kind": kind, "params": params, "version": CACHE_VERSION}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _path(kind: str, params: dict) -> Path:
    key = cache_key(kind, params)
    return cache_dir() / kind / key[:2] / f"{key}.json"


def load(kind: str, params: dict) -> dict | None:
    """Cached result object, or None when absent, stale or unreadable."""
    path = _path(kind, params)
    try:
        entry = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if entry.get("version") != CACHE_VERSION or entry.get("params") != params:
        return None
    return entry.get("result")


def store(kind: str, params: dict, result: dict) -> None:
    path = _path(kind, params)
    path.parent.mkdir(parents=True, exist_ok=True)
    entry = {"version": CACHE_VERSION, "kind": kind, "params": params, "result": result}
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        json.dump(entry, fh)
    os.replace(tmp, path)


def cached(kind: str, params: dict, compute, use_cache: bool = True) -> dict:
    """``compute()`` memoized on disk under ``(kind, params)``."""
    if use_cache:
        hit = load(kind, params)
        if hit is not None:
            return hit
    result = compute()
    if use_cache:
        store(kind, params, result)
    return result
