"""Append-only JSON-lines result cache with per-line checksums.

Each line stores {"key", "payload", "checksum"} where the checksum covers
the key and payload together.  Lines that fail to parse or whose checksum
does not match are skipped on load; corruption is never fatal.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _checksum(key: str, payload) -> str:
    return hashlib.sha256(_canonical([key, payload]).encode()).hexdigest()


def cache_key(command: str, parameters: dict, decimal_digits: int) -> str:
    """Stable key: the command, its parameters, and the precision in force."""
    return _canonical({"command": command, "parameters": parameters,
                       "decimal_digits": decimal_digits})


def load(path) -> dict:
    """Read every intact line into {key: payload}; later lines win."""
    entries: dict = {}
    path = Path(path)
    if not path.exists():
        return entries
    try:
        text = path.read_text()
    except OSError:
        return entries
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            record = json.loads(line)
            key = record["key"]
            payload = record["payload"]
            if record["checksum"] != _checksum(key, payload):
                continue
        except (json.JSONDecodeError, KeyError, TypeError):
            continue
        entries[key] = payload
    return entries


def append(path, key: str, payload) -> None:
    """Append one checksummed record; directories are created as needed."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    record = {"key": key, "payload": payload,
              "checksum": _checksum(key, payload)}
    with path.open("a") as handle:
        handle.write(json.dumps(record, sort_keys=True) + "\n")
