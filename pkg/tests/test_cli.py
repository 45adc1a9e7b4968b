from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from codevocab import cli
from codevocab.pipeline import NonEnglishPolicy, PipelineConfig, SplitPolicy, parse_words


def manifest(tmp_path: Path, corpus_root: Path, config: PipelineConfig | None = None, **extra) -> Path:
    data = {"corpus_root": str(corpus_root), "output_dir": "out", "bpe_merges": 100, **extra}
    if config is not None:
        config.save(tmp_path / "pipeline.cfg")
        data["pipeline_config"] = "pipeline.cfg"
    path = tmp_path / f"{data.get('name', 'experiment')}.json"
    path.write_text(json.dumps(data))
    return path


def small_corpus(root: Path, n_projects: int = 4) -> Path:
    for p in range(n_projects):
        d = root / f"proj{p}" / "src"
        d.mkdir(parents=True)
        (d / "Main.java").write_text(
            f"class Main{p} {{\n    int camelCaseValue = {p};\n    String s = \"hello world\";\n}}\n"
        )
    return root


def outputs(root: Path) -> dict[str, bytes]:
    return {p.relative_to(root).as_posix(): p.read_bytes() for p in sorted(root.rglob("*")) if p.is_file()}


def test_preprocess_writes_corpus_and_config_echo(tmp_path):
    m = manifest(tmp_path, small_corpus(tmp_path / "c"), PipelineConfig(split_policy=SplitPolicy.SPLIT_CASE_ENCODED))
    assert cli.main(["preprocess", "--manifest", str(m)]) == 0
    out = tmp_path / "out"
    assert PipelineConfig.loads((out / "config.echo").read_text()).split_policy is SplitPolicy.SPLIT_CASE_ENCODED
    toks = sorted((out / "corpus").rglob("*.tok"))
    assert len(toks) == 4
    text = "".join(p.read_text() for p in toks)
    assert "<w> camel <Upper> case <Upper> value </w>" in text
    splits = (out / "splits.tsv").read_text().splitlines()
    assert [line.split("\t")[1] for line in splits] == ["proj0", "proj1", "proj2", "proj3"]


def test_preprocess_twice_is_byte_identical(tmp_path, fixture_corpus):
    m = manifest(tmp_path, fixture_corpus)
    assert cli.main(["preprocess", "--manifest", str(m)]) == 0
    first = outputs(tmp_path / "out")
    assert cli.main(["preprocess", "--manifest", str(m)]) == 0
    assert outputs(tmp_path / "out") == first


def test_parallel_preprocess_matches_serial(tmp_path, fixture_corpus):
    m = manifest(tmp_path, fixture_corpus, PipelineConfig(split_policy=SplitPolicy.SPLIT_KEEP_CASE))
    assert cli.main(["preprocess", "--manifest", str(m), "--jobs", "2"]) == 0
    parallel = outputs(tmp_path / "out")
    assert cli.main(["preprocess", "--manifest", str(m), "--out", str(tmp_path / "serial")]) == 0
    assert outputs(tmp_path / "serial") == parallel


def test_seed_override_changes_split(tmp_path, fixture_corpus):
    m = manifest(tmp_path, fixture_corpus)
    assert cli.main(["ingest", "--manifest", str(m), "--seed", "1", "--out", str(tmp_path / "a")]) == 0
    assert cli.main(["ingest", "--manifest", str(m), "--seed", "2", "--out", str(tmp_path / "b")]) == 0
    assert (tmp_path / "a" / "splits.tsv").read_text() != (tmp_path / "b" / "splits.tsv").read_text()


def test_min_frequency_uses_training_counts(tmp_path):
    root = small_corpus(tmp_path / "c")
    (root / "proj0" / "src" / "Rare.java").write_text("class Rare { int onlyHereOnce; }\n")
    m = manifest(tmp_path, root, PipelineConfig(min_frequency={"Identifier": 2}))
    assert cli.main(["preprocess", "--manifest", str(m)]) == 0
    text = "".join(p.read_text() for p in sorted((tmp_path / "out" / "corpus").rglob("*.tok")))
    assert "onlyHereOnce" not in text
    assert "<unk>" in text
    # keywords keep the default threshold of 1
    assert "class" in text


def test_nonenglish_files_listed(tmp_path):
    root = small_corpus(tmp_path / "c")
    (root / "proj1" / "src" / "Fr.java").write_text("class Fr { int café; int thé; }\n")
    config = PipelineConfig(nonenglish_policy=NonEnglishPolicy.REPLACE_AND_FILTER_FILES)
    m = manifest(tmp_path, root, config)
    assert cli.main(["preprocess", "--manifest", str(m)]) == 0
    filtered = (tmp_path / "out" / "filtered.tsv").read_text().splitlines()
    assert [line.split("\t")[0] for line in filtered] == ["proj1/src/Fr.java"]
    assert not list((tmp_path / "out" / "corpus").rglob("Fr.java.tok"))


def test_full_pipeline_reports_parse(tmp_path, fixture_corpus):
    m = str(manifest(tmp_path, fixture_corpus, PipelineConfig(split_policy=SplitPolicy.SPLIT_CASE_ENCODED)))
    for argv in (
        ["preprocess"],
        ["bpe-train", "--merges", "50"],
        ["bpe-apply"],
        ["stats", "--exclude-markers"],
        ["stats", "--level", "subword"],
        ["growth", "--points", "0.5,1.0"],
        ["lm-train", "--level", "subword"],
        ["lm-eval", "--level", "subword", "--split", "validation", "--no-cache"],
    ):
        assert cli.main([argv[0], "--manifest", m, *argv[1:]]) == 0, argv
    out = tmp_path / "out"
    assert (out / "bpe" / "merges.txt").read_text().count("\n") == 51
    for line in (out / "bpe" / "vocab.tsv").read_text().splitlines():
        piece, count = line.split("\t")
        assert piece and int(count) > 0
    for level in ("word", "subword"):
        row = next(csv.DictReader(io.StringIO((out / "stats" / f"{level}.csv").read_text())))
        assert int(row["vocab"]) > 0
    without_markers = json.loads((out / "stats" / "word.json").read_text())[0]["vocab"]
    assert cli.main(["stats", "--manifest", m]) == 0
    assert json.loads((out / "stats" / "word.json").read_text())[0]["vocab"] > without_markers
    growth = list(csv.DictReader(io.StringIO((out / "growth.csv").read_text())))
    assert [int(r["n_projects"]) for r in growth] == [10, 20]
    result = json.loads((out / "lm" / "subword-static-nocache.json").read_text())
    assert result["unit"] == "subtoken"
    assert result["n_units"] > 0
    # joining subword pieces up to each end marker gives back the word-level corpus
    for word_file in sorted((out / "corpus").rglob("*.tok")):
        sub_words = parse_words((out / "bpe_corpus" / word_file.relative_to(out / "corpus")).read_text())
        rebuilt, piece = [], ""
        for w in sub_words:
            if w.text == "</t>" or (not w.is_marker and w.text.endswith("</t>")):
                rebuilt.append(piece + w.text[: -len("</t>")])
                piece = ""
            elif w.is_marker:
                rebuilt.append(w.text)
            else:
                piece += w.text
        assert rebuilt == [w.text for w in parse_words(word_file.read_text())]


def test_stats_on_empty_corpus(tmp_path):
    m = manifest(tmp_path, tmp_path)
    (tmp_path / "out" / "corpus" / "train").mkdir(parents=True)
    assert cli.main(["stats", "--manifest", str(m)]) == 0
    row = next(csv.DictReader(io.StringIO((tmp_path / "out" / "stats" / "word.csv").read_text())))
    assert (row["vocab"], row["tokens"]) == ("0", "0")


def test_compare_two_manifests(tmp_path, fixture_corpus):
    root = fixture_corpus
    base = manifest(tmp_path, root, name="base")
    (tmp_path / "split").mkdir()
    PipelineConfig(split_policy=SplitPolicy.SPLIT_CASE_ENCODED).save(tmp_path / "split" / "p.cfg")
    variant = tmp_path / "split" / "variant.json"
    variant.write_text(
        json.dumps({"name": "split", "corpus_root": str(root), "output_dir": "out", "pipeline_config": "p.cfg"})
    )
    assert cli.main(["preprocess", "--manifest", str(base)]) == 0
    assert cli.main(["preprocess", "--manifest", str(variant)]) == 0
    assert cli.main(["compare", "--manifest", str(base), str(variant)]) == 0
    rows = list(csv.DictReader(io.StringIO((tmp_path / "out" / "compare.csv").read_text())))
    assert [r["config"] for r in rows] == ["base", "split"]
    assert rows[0]["vocab_ratio"] == "1.00"
    assert float(rows[1]["vocab_ratio"]) < 1
    assert float(rows[1]["tokens_ratio"]) > 1


def test_config_error_exit_2_names_key(tmp_path, capsys):
    (tmp_path / "bad.cfg").write_text("split_policy = Sideways\n")
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"corpus_root": ".", "output_dir": "out", "pipeline_config": "bad.cfg"}))
    assert cli.main(["preprocess", "--manifest", str(m)]) == 2
    assert "split_policy" in capsys.readouterr().err


@pytest.mark.parametrize(
    "data, key",
    [
        ({"corpus_root": ".", "output_dir": "o", "colour": 1}, "colour"),
        ({"output_dir": "o"}, "corpus_root"),
        ({"corpus_root": ".", "output_dir": "o", "split_ratios": [0.5, 0.5]}, "split_ratios"),
        ({"corpus_root": ".", "output_dir": "o", "bpe_merges": -1}, "bpe_merges"),
    ],
)
def test_bad_manifest_exit_2(tmp_path, capsys, data, key):
    m = tmp_path / "m.json"
    m.write_text(json.dumps(data))
    assert cli.main(["ingest", "--manifest", str(m)]) == 2
    assert key in capsys.readouterr().err


def test_unreadable_corpus_root_exit_1(tmp_path):
    m = manifest(tmp_path, tmp_path / "missing")
    assert cli.main(["preprocess", "--manifest", str(m)]) == 1


def test_missing_manifest_exit_1(tmp_path):
    assert cli.main(["ingest", "--manifest", str(tmp_path / "nope.json")]) == 1


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["bpe-train"], "corpus/train"),
        (["bpe-apply"], "corpus"),
        (["stats", "--level", "subword"], "bpe_corpus"),
        (["lm-eval"], "word-model.txt"),
        (["lm-train"], "corpus/train"),
    ],
)
def test_missing_upstream_artifact_exit_1(tmp_path, capsys, argv, expected):
    m = manifest(tmp_path, tmp_path)
    assert cli.main([argv[0], "--manifest", str(m), *argv[1:]]) == 1
    assert expected in capsys.readouterr().err


def test_module_entry_point(tmp_path):
    m = manifest(tmp_path, small_corpus(tmp_path / "c"))
    proc = subprocess.run(
        [sys.executable, "-m", "codevocab", "ingest", "--manifest", str(m)], capture_output=True, text=True
    )
    assert proc.returncode == 0, proc.stderr
    assert "ingest" in proc.stderr
    assert (tmp_path / "out" / "splits.tsv").exists()
