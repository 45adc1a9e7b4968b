"""Batch command line: one JSON manifest per experiment.

Output layout under the manifest's output directory::

    splits.tsv  dedup.tsv  filtered.tsv  config.echo
    corpus/<split>/<project>/.../<File>.java.tok
    bpe/merges.txt  bpe/vocab.tsv
    bpe_corpus/<split>/...
    stats/<level>.csv  stats/<level>.json  growth.csv  compare.csv
    lm/<level>-model.txt  lm/<level>-<scenario>-<cache>.json
"""
from __future__ import annotations

import argparse
import json
import logging
import shutil
import sys
import time
from collections import Counter
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import bpe, corpus, ngram, stats
from .lexer import TokenKind, lex
from .pipeline import (
    ConfigError,
    FileFiltered,
    PipelineConfig,
    apply,
    filter_infrequent,
    format_words,
    parse_words,
    read_source,
)

log = logging.getLogger("codevocab")

EXIT_OK, EXIT_IO, EXIT_CONFIG = 0, 1, 2


class MissingInput(Exception):
    pass


@dataclass
class ExperimentManifest:
    corpus_root: Path
    pipeline_config: Path | None
    output_dir: Path
    bpe_merges: int = 5000
    seed: int = 0
    name: str = "experiment"
    extensions: list[str] = field(default_factory=lambda: [".java"])
    split_ratios: list[float] = field(default_factory=lambda: [0.70, 0.15, 0.15])
    ngram_order: int = 6
    cache_gamma: float = 0.1
    growth_points: list[float] = field(default_factory=lambda: [0.25, 0.5, 0.75, 1.0])

    @classmethod
    def load(cls, path: str | Path) -> "ExperimentManifest":
        path = Path(path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise MissingInput(f"cannot read manifest {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError("manifest", f"{path}: {exc}") from exc
        known = set(cls.__dataclass_fields__)
        for key in data:
            if key not in known:
                raise ConfigError(key, f"unknown manifest key in {path}")
        for key in ("corpus_root", "output_dir"):
            if key not in data:
                raise ConfigError(key, f"missing required manifest key in {path}")
        base = path.parent
        data["corpus_root"] = base / data["corpus_root"]
        data["output_dir"] = base / data["output_dir"]
        if data.get("pipeline_config"):
            data["pipeline_config"] = base / data["pipeline_config"]
        else:
            data["pipeline_config"] = None
        m = cls(**data)
        ratios = m.split_ratios
        if len(ratios) != 3 or any(r <= 0 for r in ratios) or abs(sum(ratios) - 1) > 1e-9:
            raise ConfigError("split_ratios", f"need three positive fractions summing to 1, got {ratios}")
        if m.bpe_merges < 0:
            raise ConfigError("bpe_merges", "must be >= 0")
        if m.ngram_order < 1:
            raise ConfigError("ngram_order", "must be >= 1")
        return m

    def config(self) -> PipelineConfig:
        if self.pipeline_config is None:
            return PipelineConfig()
        try:
            return PipelineConfig.load(self.pipeline_config)
        except OSError as exc:
            raise MissingInput(f"cannot read pipeline config {self.pipeline_config}: {exc}") from exc


# --- helpers -------------------------------------------------------------------

def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def _require(path: Path, what: str) -> Path:
    if not path.exists():
        raise MissingInput(f"missing {what}: expected {path}")
    return path


def _corpus_dir(m: ExperimentManifest, level: str) -> Path:
    return m.output_dir / ("corpus" if level == "word" else "bpe_corpus")


def _tok_files(root: Path, split: str | None = None) -> list[Path]:
    base = root / split if split else root
    return sorted(base.rglob("*.tok"), key=lambda p: p.relative_to(root).as_posix())


def _read_tokens(path: Path) -> list[str]:
    return list(stats.iter_corpus_tokens(path))


class _Timer:
    def __init__(self, stage: str):
        self.stage = stage

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def done(self, n_files: int) -> None:
        elapsed = max(time.perf_counter() - self.start, 1e-9)
        log.info("%s: %d files in %.2fs (%.1f files/s)", self.stage, n_files, elapsed, n_files / elapsed)

    def __exit__(self, *exc):
        return False


# --- commands --------------------------------------------------------------------

def run_ingest(m: ExperimentManifest, jobs: int = 1) -> corpus.ProjectSet:
    with _Timer("ingest") as t:
        try:
            ps = corpus.ingest(m.corpus_root, m.extensions)
        except corpus.CorpusError as exc:
            raise MissingInput(str(exc)) from exc
        ps, index = corpus.dedup(ps, jobs=jobs)
        try:
            ps = corpus.split(ps, m.split_ratios, m.seed)
        except ValueError as exc:
            raise MissingInput(f"{m.corpus_root}: {exc}") from exc
        t.done(ps.n_files)
    m.output_dir.mkdir(parents=True, exist_ok=True)
    corpus.write_split_manifest(ps, m.output_dir / "splits.tsv")
    _write(m.output_dir / "dedup.tsv", index.dumps())
    log.info("ingest: %d projects, %d files kept, %d duplicates removed", len(ps.projects), ps.n_files, index.duplicates)
    return ps


def _process_file(args: tuple[str, str]):
    path, config_text = args
    return apply(lex(read_source(path)), PipelineConfig.loads(config_text))


def run_preprocess(m: ExperimentManifest, jobs: int = 1) -> None:
    config = m.config()
    ps = run_ingest(m, jobs)
    _write(m.output_dir / "config.echo", config.dumps())
    jobs_list = [(str(ps.path(rel)), config.dumps()) for p in ps.projects for rel in p.files]
    splits = [p.split for p in ps.projects for _ in p.files]
    rels = [rel for p in ps.projects for rel in p.files]
    with _Timer("preprocess") as t:
        if jobs > 1:
            with ProcessPoolExecutor(jobs) as pool:
                results = list(pool.map(_process_file, jobs_list, chunksize=16))
        else:
            results = [_process_file(a) for a in jobs_list]
        t.done(len(results))

    if config.filters_infrequent:
        counts: Counter[str] = Counter()
        for res, split in zip(results, splits):
            if split == "train" and not isinstance(res, FileFiltered):
                counts.update(w.text for w in res if not w.is_marker)
        per_kind = {
            kind: config.min_frequency_for(kind) for kind in TokenKind if kind.value in config.min_frequency
        }
        k = config.min_frequency_for(None)
        results = [
            res if isinstance(res, FileFiltered) else filter_infrequent(res, counts, k, per_kind)
            for res in results
        ]

    out_root = m.output_dir / "corpus"
    if out_root.exists():
        shutil.rmtree(out_root)
    filtered = []
    for rel, split, res in zip(rels, splits, results):
        if isinstance(res, FileFiltered):
            filtered.append(f"{rel}\t{res.code_ratio:.6f}\t{res.code_and_strings_ratio:.6f}\n")
            continue
        _write(out_root / split / (rel + ".tok"), format_words(res))
    _write(m.output_dir / "filtered.tsv", "".join(filtered))
    log.info("preprocess: %d files written, %d filtered as non-English", len(rels) - len(filtered), len(filtered))


def run_bpe_train(m: ExperimentManifest, n_merges: int | None = None) -> bpe.BpeModel:
    root = _require(m.output_dir / "corpus" / "train", "preprocessed training corpus")
    freqs: Counter[str] = Counter()
    files = _tok_files(root)
    with _Timer("bpe-train") as t:
        for path in files:
            freqs.update(w.text for w in parse_words(path.read_text(encoding="utf-8")) if not w.is_marker)
        model = bpe.train(freqs, m.bpe_merges if n_merges is None else n_merges)
        t.done(len(files))
    _write(m.output_dir / "bpe" / "merges.txt", bpe.format_merges(model.merges))
    _write(m.output_dir / "bpe" / "vocab.tsv", bpe.format_vocab(bpe.vocab_of(model, freqs.elements())))
    log.info("bpe-train: %d merges learned, alphabet %d", len(model.merges), len(model.alphabet))
    return model


def run_bpe_apply(m: ExperimentManifest) -> None:
    src = _require(m.output_dir / "corpus", "preprocessed corpus")
    model = bpe.BpeModel.load(_require(m.output_dir / "bpe" / "merges.txt", "merges file"))
    dst = m.output_dir / "bpe_corpus"
    if dst.exists():
        shutil.rmtree(dst)
    files = _tok_files(src)
    with _Timer("bpe-apply") as t:
        parsed = [parse_words(p.read_text(encoding="utf-8")) for p in files]
        table = bpe.encode_many((w.text for ws in parsed for w in ws if not w.is_marker), model)
        for path, words in zip(files, parsed):
            _write(dst / path.relative_to(src), format_words(bpe.encode_corpus(words, model, table)))
        t.done(len(files))


def run_stats(m: ExperimentManifest, level: str = "word", exclude_markers: bool = False) -> stats.ComparisonRow:
    root = _require(_corpus_dir(m, level), f"{level}-level corpus")
    vs = stats.build_stats(_tok_files(root))
    if exclude_markers:
        vs = vs.without_markers()
    row = stats.compare_configs(vs, vs, m.name) if vs.total_tokens else stats.ComparisonRow(m.name, 0, 0.0, 0, 0.0, 1, 0.0)
    _write(m.output_dir / "stats" / f"{level}.csv", stats.report_csv([row]))
    _write(m.output_dir / "stats" / f"{level}.json", stats.report_json([row]))
    return row


def _project_dirs(root: Path) -> list[Path]:
    return sorted(
        (p for split in corpus.SPLITS if (root / split).is_dir() for p in (root / split).iterdir() if p.is_dir()),
        key=lambda p: (p.name, p.parent.name),
    )


class _ProjectWords:
    """Lazily read every word of one project's corpus files."""

    def __init__(self, directory: Path):
        self.directory = directory

    def __iter__(self):
        for path in _tok_files(self.directory):
            yield from stats.iter_corpus_tokens(path)


def run_growth(m: ExperimentManifest, level: str = "word", points: Sequence[float] | None = None) -> stats.GrowthCurve:
    root = _require(_corpus_dir(m, level), f"{level}-level corpus")
    projects = [_ProjectWords(d) for d in _project_dirs(root)]
    curve = stats.growth_curve(projects, points or m.growth_points, m.seed)
    _write(m.output_dir / "growth.csv", curve.to_csv())
    return curve


def run_compare(manifests: Sequence[ExperimentManifest], out: Path, level: str = "word") -> list[stats.ComparisonRow]:
    all_stats = []
    for man in manifests:
        root = _require(_corpus_dir(man, level), f"{level}-level corpus of {man.name}")
        all_stats.append((man.name, stats.build_stats(_tok_files(root))))
    base = all_stats[0][1]
    rows = [stats.compare_configs(base, vs, name) for name, vs in all_stats]
    _write(out / "compare.csv", stats.report_csv(rows))
    _write(out / "compare.json", stats.report_json(rows))
    return rows


def _split_files(m: ExperimentManifest, level: str, split: str) -> list[list[str]]:
    root = _require(_corpus_dir(m, level) / split, f"{level}-level {split} corpus")
    return [_read_tokens(p) for p in _tok_files(root)]


def run_lm_train(m: ExperimentManifest, level: str = "word") -> ngram.NgramModel:
    train_files = _split_files(m, level, "train")
    with _Timer("lm-train") as t:
        try:
            model = ngram.fit(train_files, m.ngram_order)
        except ValueError as exc:
            raise MissingInput(str(exc)) from exc
        t.done(len(train_files))
    _write(m.output_dir / "lm" / f"{level}-model.txt", model.dumps())
    return model


def run_lm_eval(
    m: ExperimentManifest, level: str = "word", scenario: str = "static", cache: bool = True, split: str = "test"
) -> ngram.EvalResult:
    model = ngram.NgramModel.load(_require(m.output_dir / "lm" / f"{level}-model.txt", "trained n-gram model"))
    test_files = _split_files(m, level, split)
    unit = ngram.Unit.TOKEN if level == "word" else ngram.Unit.SUBTOKEN
    with _Timer("lm-eval") as t:
        result = ngram.evaluate(
            model,
            test_files,
            ngram.Scenario(scenario),
            ngram.CacheState(m.cache_gamma) if cache else None,
            unit,
        )
        t.done(len(test_files))
    tag = "cache" if cache else "nocache"
    _write(m.output_dir / "lm" / f"{level}-{scenario}-{tag}.json", result.to_json())
    return result


# --- argument parsing ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--manifest", type=Path, required=True, help="experiment manifest (JSON)")
    common.add_argument("--seed", type=int, help="override the manifest seed")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--out", type=Path, help="override the output directory")
    level = argparse.ArgumentParser(add_help=False)
    level.add_argument("--level", choices=("word", "subword"), default="word")

    parser = argparse.ArgumentParser(prog="codevocab", description=__doc__.split("\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("ingest", parents=[common], help="enumerate, deduplicate and split projects")
    sub.add_parser("preprocess", parents=[common], help="lex and apply the pipeline configuration")
    p = sub.add_parser("bpe-train", parents=[common], help="learn BPE merges on the training split")
    p.add_argument("--merges", type=int, help="override bpe_merges (5000 and 10000 work well)")
    sub.add_parser("bpe-apply", parents=[common], help="rewrite the corpus into subwords")
    p = sub.add_parser("stats", parents=[common, level], help="vocabulary and token report")
    p.add_argument("--exclude-markers", action="store_true")
    p = sub.add_parser("growth", parents=[common, level], help="vocabulary growth curve")
    p.add_argument("--points", type=lambda s: [float(x) for x in s.split(",")])
    p = sub.add_parser("compare", parents=[common, level], help="compare experiments against the first")
    p.add_argument("others", nargs="*", type=Path, metavar="MANIFEST", help="variant manifests")
    sub.add_parser("lm-train", parents=[common, level], help="fit the n-gram model on the training split")
    p = sub.add_parser("lm-eval", parents=[common, level], help="entropy and MRR on a held-out split")
    p.add_argument("--scenario", choices=("static", "dynamic"), default="static")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--split", choices=corpus.SPLITS, default="test")
    return parser


def _manifest(path: Path, seed: int | None, out: Path | None) -> ExperimentManifest:
    m = ExperimentManifest.load(path)
    if seed is not None:
        m.seed = seed
    if out is not None:
        m.output_dir = out
    return m


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        m = _manifest(args.manifest, args.seed, args.out)
        cmd = args.command
        if cmd == "ingest":
            run_ingest(m, args.jobs)
        elif cmd == "preprocess":
            run_preprocess(m, args.jobs)
        elif cmd == "bpe-train":
            run_bpe_train(m, args.merges)
        elif cmd == "bpe-apply":
            run_bpe_apply(m)
        elif cmd == "stats":
            row = run_stats(m, args.level, args.exclude_markers)
            print(stats.report_csv([row]), end="")
        elif cmd == "growth":
            print(run_growth(m, args.level, args.points).to_csv(), end="")
        elif cmd == "compare":
            others = [_manifest(p, args.seed, None) for p in args.others]
            rows = run_compare([m, *others], m.output_dir, args.level)
            print(stats.report_csv(rows), end="")
        elif cmd == "lm-train":
            run_lm_train(m, args.level)
        elif cmd == "lm-eval":
            result = run_lm_eval(m, args.level, args.scenario, not args.no_cache, args.split)
            print(result.to_json(), end="")
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (MissingInput, OSError, stats.CorpusFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
