"""Disk and complex file formats.

Disks travel as CSV, one `id,x,y,r` record per line with `#` comments and
blank lines allowed, or as JSON `{"disks": [{"id", "x", "y", "r"}, ...]}`.
A path ending in .json selects JSON; anything else is CSV.  Floats are
written with repr so read(write(ds)) reproduces every bit.

Complexes travel as JSON `{"levels": [[...simplices...], ...], "dmax": ...}`
with simplices as sorted id arrays; "kind" and "complete" ride along so a
reloaded complex answers membership queries exactly like the original.
"""

from __future__ import annotations

import json
from pathlib import Path

from .complexes import CECH, RIPS, DiskSet, SimplicialComplex, _neighbors_from_pairs
from .geometry import Disk


class DiskFileError(ValueError):
    """Unreadable or malformed disk file; message carries path and line."""


def _is_json(path: str | Path) -> bool:
    return Path(path).suffix.lower() == ".json"


def read_disks(path: str | Path) -> DiskSet:
    """Load a DiskSet from a CSV or JSON disk file."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise DiskFileError(f"{path}: {exc.strerror or exc}") from exc
    if _is_json(path):
        return _disks_from_json(path, text)
    return _disks_from_csv(path, text)


def _disks_from_csv(path: str | Path, text: str) -> DiskSet:
    disks = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 4:
            raise DiskFileError(
                f"{path}:{lineno}: expected 4 fields id,x,y,r, got {len(fields)}"
            )
        try:
            disk = Disk.of(int(fields[0]), float(fields[1]), float(fields[2]),
                           float(fields[3]))
        except ValueError as exc:
            raise DiskFileError(f"{path}:{lineno}: {exc}") from exc
        disks.append(disk)
    return _disk_set(path, disks)


def _disks_from_json(path: str | Path, text: str) -> DiskSet:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiskFileError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    records = data.get("disks") if isinstance(data, dict) else None
    if not isinstance(records, list):
        raise DiskFileError(f'{path}: expected an object with a "disks" array')
    disks = []
    for i, rec in enumerate(records):
        try:
            disk = Disk.of(int(rec["id"]), float(rec["x"]), float(rec["y"]),
                           float(rec["r"]))
        except (TypeError, KeyError, ValueError) as exc:
            raise DiskFileError(f"{path}: disk record {i}: {exc}") from exc
        disks.append(disk)
    return _disk_set(path, disks)


def _disk_set(path: str | Path, disks: list[Disk]) -> DiskSet:
    try:
        return DiskSet(tuple(disks))
    except ValueError as exc:
        raise DiskFileError(f"{path}: {exc}") from exc


def disks_to_csv(ds: DiskSet) -> str:
    """CSV text for a DiskSet; floats via repr so the round trip is exact."""
    lines = ["# id,x,y,r"]
    for d in ds:
        lines.append(f"{d.id},{d.center.x!r},{d.center.y!r},{d.radius!r}")
    return "\n".join(lines) + "\n"


def write_disks(ds: DiskSet, path: str | Path) -> None:
    """Write a DiskSet as CSV (default) or JSON (.json paths)."""
    if _is_json(path):
        payload = {
            "disks": [
                {"id": d.id, "x": d.center.x, "y": d.center.y, "r": d.radius}
                for d in ds
            ]
        }
        Path(path).write_text(json.dumps(payload, indent=2) + "\n")
        return
    Path(path).write_text(disks_to_csv(ds))


def write_complex(cx: SimplicialComplex, path: str | Path) -> None:
    """Write a complex as JSON with levels of sorted id arrays."""
    payload = {
        "levels": [[list(s) for s in level] for level in cx.levels],
        "dmax": cx.dmax,
        "kind": cx.kind,
        "complete": cx.complete,
    }
    Path(path).write_text(json.dumps(payload) + "\n")


def read_complex(path: str | Path) -> SimplicialComplex:
    """Load a complex written by write_complex."""
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise DiskFileError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise DiskFileError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    if not isinstance(data, dict) or "levels" not in data:
        raise DiskFileError(f'{path}: expected an object with a "levels" array')
    try:
        levels = tuple(
            tuple(tuple(int(v) for v in s) for s in level)
            for level in data["levels"]
        )
        dmax = data.get("dmax")
        if dmax is not None:
            dmax = int(dmax)
        kind = data.get("kind", CECH)
        if kind not in (CECH, RIPS):
            raise ValueError(f"unknown complex kind {kind!r}")
        complete = bool(data.get("complete", dmax is None))
    except (TypeError, ValueError) as exc:
        raise DiskFileError(f"{path}: {exc}") from exc
    if not levels:
        raise DiskFileError(f"{path}: complex must include at least level 0")
    pairs = levels[1] if len(levels) > 1 else ()
    return SimplicialComplex(
        levels=levels,
        neighbors=_neighbors_from_pairs(len(levels[0]), pairs),
        dmax=dmax,
        kind=kind,
        complete=complete,
    )
