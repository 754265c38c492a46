"""Deterministic cache for Groebner computations.

Keys are sha256 hashes of a canonical JSON serialization of the request
(ring, sorted generators, order, coefficient domain, pair-processing mode).
Values live in an in-process dictionary and, when a cache directory is
configured, as one JSON file per key written atomically (tempfile +
os.replace).  A per-key lock gives compute-once semantics inside a process;
duplicate computation across processes is acceptable and yields an
identical payload, so replace-style writes are safe.

The cache directory comes from configure() (the CLI --cache flag) or, when
never configured, from the GMACHECK_CACHE environment variable.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading

_UNSET = object()

_mem: dict = {}
_locks: dict = {}
_meta_lock = threading.Lock()
_disk_dir = _UNSET


def cache_key(parts) -> str:
    """Collision-resistant hex key for a JSON-serializable request."""
    blob = json.dumps(parts, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def configure(directory):
    """Set (or, with None, disable) the on-disk cache directory."""
    global _disk_dir
    _disk_dir = directory


def clear_memory():
    with _meta_lock:
        _mem.clear()
        _locks.clear()


def _directory():
    if _disk_dir is _UNSET:
        return os.environ.get("GMACHECK_CACHE") or None
    return _disk_dir


def _disk_path(key):
    d = _directory()
    if not d:
        return None
    return os.path.join(d, key + ".json")


def _read_disk(key):
    path = _disk_path(key)
    if path is None or not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            entry = json.load(fh)
    except (OSError, ValueError):
        return None
    if entry.get("key") != key:
        return None
    return entry.get("payload")


def _write_disk(key, payload):
    path = _disk_path(key)
    if path is None:
        return
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    blob = json.dumps({"key": key, "payload": payload}, sort_keys=True)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path) or ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    except OSError:
        try:
            os.unlink(tmp)
        except OSError:
            pass


def get_or_compute(key, compute, to_payload, from_payload):
    """Fetch `key`, computing (and storing) on miss.

    compute() builds the live object, to_payload/from_payload convert
    between the live object and its JSON-serializable form.
    """
    hit = _mem.get(key)
    if hit is not None:
        return from_payload(hit)
    with _meta_lock:
        lock = _locks.setdefault(key, threading.Lock())
    with lock:
        hit = _mem.get(key)
        if hit is not None:
            return from_payload(hit)
        payload = _read_disk(key)
        if payload is None:
            value = compute()
            payload = to_payload(value)
            _write_disk(key, payload)
            _mem[key] = payload
            return value
        _mem[key] = payload
        return from_payload(payload)
