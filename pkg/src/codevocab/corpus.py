"""Project ingestion, exact-content deduplication and project-level splits."""
from __future__ import annotations

import hashlib
import logging
import math
import os
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path

import numpy as np

log = logging.getLogger(__name__)

SPLITS = ("train", "validation", "test")


class CorpusError(Exception):
    pass


@dataclass(frozen=True)
class Project:
    id: str
    # paths relative to the corpus root, POSIX style, sorted
    files: tuple[str, ...]
    split: str | None = None


@dataclass
class ProjectSet:
    root: Path
    projects: list[Project]
    warnings: list[str] = field(default_factory=list)

    @property
    def n_files(self) -> int:
        return sum(len(p.files) for p in self.projects)

    def files(self) -> list[str]:
        return [f for p in self.projects for f in p.files]

    def by_split(self, split: str) -> list[Project]:
        return [p for p in self.projects if p.split == split]

    def path(self, rel: str) -> Path:
        return self.root / rel


@dataclass
class DedupIndex:
    canonical: dict[str, str]  # digest -> retained relative path
    duplicates: int = 0

    def dumps(self) -> str:
        lines = [f"#duplicates\t{self.duplicates}\n"]
        lines += [f"{d}\t{p}\n" for d, p in sorted(self.canonical.items())]
        return "".join(lines)


def ingest(root: str | Path, extensions: Sequence[str] = (".java",)) -> ProjectSet:
    """Collect files under ``root``; every immediate subdirectory is one project."""
    root = Path(root)
    try:
        entries = sorted(os.scandir(root), key=lambda e: e.name)
    except OSError as exc:
        raise CorpusError(f"cannot read corpus root {root}: {exc}") from exc
    exts = tuple(extensions)
    projects: list[Project] = []
    warnings: list[str] = []
    for entry in entries:
        if not entry.is_dir():
            continue
        files: list[str] = []
        for dirpath, dirnames, filenames in os.walk(entry.path, onerror=lambda e: warnings.append(str(e))):
            dirnames.sort()
            for name in sorted(filenames):
                if not name.endswith(exts):
                    continue
                full = Path(dirpath) / name
                if not os.access(full, os.R_OK):
                    warnings.append(f"unreadable file skipped: {full}")
                    continue
                files.append(full.relative_to(root).as_posix())
        if files:
            projects.append(Project(entry.name, tuple(sorted(files))))
    for w in warnings:
        log.warning(w)
    return ProjectSet(root, projects, warnings)


def content_digest(data: bytes) -> str:
    """SHA-256 of the content after normalising CRLF and CR line endings to LF."""
    data = data.replace(b"\r\n", b"\n").replace(b"\r", b"\n")
    return hashlib.sha256(data).hexdigest()


def _digest_file(path: Path) -> str | None:
    try:
        return content_digest(path.read_bytes())
    except OSError as exc:
        log.warning("unreadable file skipped: %s (%s)", path, exc)
        return None


def dedup(ps: ProjectSet, jobs: int = 1) -> tuple[ProjectSet, DedupIndex]:
    """Keep one file per content digest, the lexicographically smallest path."""
    rels = ps.files()
    paths = [ps.path(r) for r in rels]
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            digests = list(pool.map(_digest_file, paths))
    else:
        digests = [_digest_file(p) for p in paths]
    canonical: dict[str, str] = {}
    for rel, digest in zip(rels, digests):
        if digest is None:
            continue
        if digest not in canonical or rel < canonical[digest]:
            canonical[digest] = rel
    keep = set(canonical.values())
    duplicates = sum(d is not None for d in digests) - len(keep)
    projects = []
    for p in ps.projects:
        files = tuple(f for f in p.files if f in keep)
        if files:
            projects.append(replace(p, files=files))
    return ProjectSet(ps.root, projects, list(ps.warnings)), DedupIndex(canonical, duplicates)


def _split_sizes(n: int, ratios: Sequence[float]) -> list[int]:
    # largest remainder, then make sure every split gets at least one project
    raw = [n * r for r in ratios]
    sizes = [math.floor(x) for x in raw]
    order = sorted(range(len(ratios)), key=lambda i: (-(raw[i] - sizes[i]), i))
    for i in order[: n - sum(sizes)]:
        sizes[i] += 1
    for i in range(len(sizes)):
        if sizes[i] == 0:
            donor = max(range(len(sizes)), key=lambda j: (sizes[j], -j))
            sizes[donor] -= 1
            sizes[i] += 1
    return sizes


def split(ps: ProjectSet, ratios: Sequence[float] = (0.70, 0.15, 0.15), seed: int = 0) -> ProjectSet:
    """Assign every project to train/validation/test by a seeded permutation."""
    if len(ratios) != 3 or any(r <= 0 for r in ratios) or abs(sum(ratios) - 1.0) > 1e-9:
        raise ValueError(f"ratios must be three positive fractions summing to 1, got {ratios}")
    n = len(ps.projects)
    if n < 3:
        raise ValueError(f"need at least 3 projects to split, got {n}")
    ids = sorted(p.id for p in ps.projects)
    keys = np.random.default_rng(seed).random(n)
    shuffled = [pid for _, pid in sorted(zip(keys.tolist(), ids))]
    assignment: dict[str, str] = {}
    start = 0
    for name, size in zip(SPLITS, _split_sizes(n, ratios)):
        for pid in shuffled[start : start + size]:
            assignment[pid] = name
        start += size
    projects = [replace(p, split=assignment[p.id]) for p in ps.projects]
    return ProjectSet(ps.root, projects, list(ps.warnings))


def format_split_manifest(ps: ProjectSet) -> str:
    lines = []
    for p in sorted(ps.projects, key=lambda p: p.id):
        if p.split is None:
            raise ValueError(f"project {p.id} has no split")
        lines.append(f"{p.split}\t{p.id}\n")
    return "".join(lines)


def write_split_manifest(ps: ProjectSet, path: str | Path) -> None:
    Path(path).write_text(format_split_manifest(ps), encoding="utf-8", newline="\n")


def read_split_manifest(path: str | Path) -> dict[str, str]:
    """project id -> split name."""
    out: dict[str, str] = {}
    for line in Path(path).read_text(encoding="utf-8").split("\n"):
        if not line:
            continue
        name, sep, pid = line.partition("\t")
        if not sep or name not in SPLITS:
            raise CorpusError(f"bad split manifest line: {line!r}")
        out[pid] = name
    return out
