"""On-disk JSON cache for expensive enumerations (Weyl tables, character
tables).

Entries are single JSON files keyed by a fingerprint of the inputs, carrying
a schema version and a SHA-256 checksum over the canonical payload encoding.
A corrupted or version-mismatched entry is never returned: the caller
recomputes and the event is logged as a warning.  Stores go through an
advisory lock file so a single process owns the directory.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass

SCHEMA_VERSION = 1

logger = logging.getLogger("weylkit.cache")


def default_cache_dir() -> str:
    return os.environ.get(
        "WEYLKIT_CACHE_DIR",
        os.path.join(os.path.expanduser("~"), ".cache", "weylkit"),
    )


def _canonical(payload) -> bytes:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()


def _checksum(payload) -> str:
    return hashlib.sha256(_canonical(payload)).hexdigest()


def fingerprint(kind: str, **params) -> str:
    blob = _canonical({"kind": kind, "params": params})
    return hashlib.sha256(blob).hexdigest()[:24]


@dataclass(frozen=True)
class CacheEntry:
    schema_version: int
    fingerprint: str
    payload: object
    checksum: str

    @classmethod
    def make(cls, fp: str, payload) -> "CacheEntry":
        return cls(SCHEMA_VERSION, fp, payload, _checksum(payload))

    def to_json(self):
        return {
            "schema_version": self.schema_version,
            "fingerprint": self.fingerprint,
            "payload": self.payload,
            "checksum": self.checksum,
        }


class _AdvisoryLock:
    def __init__(self, directory: str):
        self.path = os.path.join(directory, ".lock")
        self._fd = None

    def __enter__(self):
        self._fd = os.open(self.path, os.O_CREAT | os.O_RDWR)
        try:
            import fcntl

            fcntl.flock(self._fd, fcntl.LOCK_EX)
        except ImportError:  # non-POSIX: best effort
            pass
        return self

    def __exit__(self, *exc):
        try:
            import fcntl

            fcntl.flock(self._fd, fcntl.LOCK_UN)
        except ImportError:
            pass
        os.close(self._fd)
        return False


def _entry_path(directory: str, fp: str) -> str:
    return os.path.join(directory, f"{fp}.json")


def cache_store(entry: CacheEntry, directory: str | None = None) -> str:
    directory = directory or default_cache_dir()
    path = _entry_path(directory, entry.fingerprint)
    try:
        os.makedirs(directory, exist_ok=True)
        with _AdvisoryLock(directory):
            tmp = path + ".tmp"
            with open(tmp, "w") as fh:
                json.dump(entry.to_json(), fh, sort_keys=True, indent=0)
            os.replace(tmp, path)
    except OSError as exc:
        logger.warning("cache store failed (%s); continuing in memory", exc)
    return path


def cache_load(fp: str, directory: str | None = None) -> CacheEntry | None:
    directory = directory or default_cache_dir()
    path = _entry_path(directory, fp)
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        logger.warning("cache entry %s unreadable (%s); recomputing", fp, exc)
        return None
    if raw.get("schema_version") != SCHEMA_VERSION:
        logger.warning("cache entry %s has stale schema; recomputing", fp)
        return None
    payload = raw.get("payload")
    if raw.get("checksum") != _checksum(payload):
        logger.warning("cache entry %s failed checksum; recomputing", fp)
        return None
    return CacheEntry(raw["schema_version"], raw["fingerprint"], payload, raw["checksum"])


def cached(kind: str, compute, directory: str | None = None, **params):
    """Fetch-or-compute: returns the payload, storing on miss."""
    fp = fingerprint(kind, **params)
    hit = cache_load(fp, directory)
    if hit is not None:
        return hit.payload
    payload = compute()
    cache_store(CacheEntry.make(fp, payload), directory)
    return payload
