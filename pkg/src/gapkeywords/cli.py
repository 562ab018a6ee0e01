"""Command-line entry point for reproducible batch runs.

Subcommands: ``extract`` (keyword partition), ``baseline`` (frequency-cutoff
candidates), ``chapters`` (chapter-distribution scores), ``stats``
(rank/frequency dump), ``eval`` (precision/recall/F1 against an annotation
file), and ``kappa`` (agreement between two label files). Every run is
deterministic given its flags and input bytes; JSON outputs embed the full
effective configuration. The seed comes from --seed, else the
GAPKEYWORDS_SEED environment variable, else 0.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict
from typing import Sequence

from . import __version__
from .chapters import chapter_table
from .corpus import (
    TokenizerConfig,
    build_document,
    default_stopwords_path,
    detect_chapters,
    load_stopwords,
    tokenize,
)
from .errors import GapKeywordsError, UnsupportedDocumentError
from .evaluation import (
    cohens_kappa,
    evaluate,
    kappa_band,
    load_annotation_json,
    load_labels_csv,
)
from .extractor import Thresholds, extract_keywords
from .gap_stats import stats_dump, write_stats_csv
from .luhn import luhn_extract
from .permutation import DEFAULT_SEED, GENERATOR_NAME

ENV_SEED = "GAPKEYWORDS_SEED"

_THRESHOLD_FLAGS = [
    ("strong_global_max", float),
    ("weak_global_max", float),
    ("local_min", float),
    ("short_global_max", float),
    ("short_local_min", float),
    ("long_text_min_tokens", int),
]


class _StageError(Exception):
    def __init__(self, stage: str, cause: Exception) -> None:
        super().__init__(f"{stage}: {cause}")
        self.stage = stage


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except (GapKeywordsError, OSError, UnicodeDecodeError, ValueError, json.JSONDecodeError) as exc:
        raise _StageError(name, exc) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gapkeywords",
        description="Keyword extraction from the response of word gap statistics to random shuffles.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_text_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="UTF-8 text file (pre-lemmatized)")
        p.add_argument(
            "--stopwords",
            default=None,
            help="stop-word file, one word per line ('#' comments); default: shipped English list",
        )
        p.add_argument("--chapter-pattern", default=None, help="regex marking chapter starts")
        p.add_argument("--min-token-length", type=int, default=1)
        p.add_argument("--seed", type=int, default=None, help=f"PRNG seed (env {ENV_SEED}, default {DEFAULT_SEED})")
        p.add_argument("--realizations", type=int, default=1, help="shuffles to average")
        p.add_argument("--format", choices=["json", "csv"], default=None)
        p.add_argument("--output", default=None, help="output file (default stdout)")
        for name, flag_type in _THRESHOLD_FLAGS:
            p.add_argument(f"--{name.replace('_', '-')}", type=flag_type, default=None)

    p_extract = sub.add_parser("extract", help="classify keywords into global/local buckets")
    add_text_flags(p_extract)
    p_extract.add_argument("--mode", choices=["auto", "long", "short"], default="auto")

    p_base = sub.add_parser("baseline", help="frequency-cutoff candidate list")
    add_text_flags(p_base)
    p_base.add_argument("--max-words", type=int, default=None)

    p_chap = sub.add_parser("chapters", help="chapter-distribution keyword scores")
    add_text_flags(p_chap)
    p_chap.add_argument("--top-n", type=int, default=36)

    p_stats = sub.add_parser("stats", help="rank/frequency statistics dump")
    add_text_flags(p_stats)

    p_eval = sub.add_parser("eval", help="precision/recall/F1 from an annotation file")
    p_eval.add_argument("--annotation", required=True, help="JSON {candidates, marked, full}")
    p_eval.add_argument("--extraction", default=None, help="report whose words replace the candidates")
    p_eval.add_argument("--protocol", choices=["short", "long"], default="short")
    p_eval.add_argument("--format", choices=["json", "csv"], default=None)
    p_eval.add_argument("--output", default=None)

    p_kappa = sub.add_parser("kappa", help="inter-annotator agreement from two word,label files")
    p_kappa.add_argument("--labels-a", required=True)
    p_kappa.add_argument("--labels-b", required=True)
    p_kappa.add_argument("--format", choices=["json", "csv"], default=None)
    p_kappa.add_argument("--output", default=None)

    return parser


def _resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    raw = os.environ.get(ENV_SEED)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_SEED} must be an integer, got {raw!r}") from exc


def _build_thresholds(args: argparse.Namespace) -> Thresholds:
    overrides = {
        name: value
        for name, _ in _THRESHOLD_FLAGS
        if (value := getattr(args, name, None)) is not None
    }
    return Thresholds(**overrides)


def _load_text_pipeline(args: argparse.Namespace):
    """Shared stages: config, ingest, tokenize (plus chapters), document."""
    stopword_path = args.stopwords or default_stopwords_path()
    stopwords = _stage("config", load_stopwords, stopword_path)
    config = _stage(
        "config",
        TokenizerConfig,
        stopword_list=stopwords,
        min_token_length=args.min_token_length,
    )
    thresholds = _stage("config", _build_thresholds, args)
    seed = _stage("config", _resolve_seed, args)

    def read() -> str:
        with open(args.input, encoding="utf-8") as fh:
            return fh.read()

    raw_text = _stage("ingest", read)
    tokens = _stage("tokenize", tokenize, raw_text, config)
    breaks: list[int] = []
    if args.chapter_pattern:
        breaks = _stage("tokenize", detect_chapters, raw_text, args.chapter_pattern, config)
    doc = _stage("document", build_document, tokens, breaks)
    provenance = {
        "command": args.command,
        "input": args.input,
        "stopwords": str(stopword_path),
        "chapter_pattern": args.chapter_pattern,
        "min_token_length": args.min_token_length,
        "seed": seed,
        "realizations": args.realizations,
        "generator_name": GENERATOR_NAME,
        "thresholds": asdict(thresholds),
    }
    return doc, config, thresholds, seed, provenance


def _emit(args: argparse.Namespace, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def _cmd_extract(args: argparse.Namespace) -> int:
    doc, _, thresholds, seed, provenance = _load_text_pipeline(args)
    provenance["mode"] = args.mode
    report = _stage(
        "classify",
        extract_keywords,
        doc,
        thresholds,
        mode=args.mode,
        seed=seed,
        realizations=args.realizations,
    )
    if (args.format or "json") == "csv":
        rows = [
            [bucket, e.word, e.score, e.rank, e.count]
            for bucket, entries in report.buckets()
            for e in entries
        ]
        text = _csv_text(["bucket", "word", "score", "rank", "count"], rows)
    else:
        payload = {"config": provenance}
        payload.update(report.to_dict())
        text = _json_text(payload)
    _stage("output", _emit, args, text)
    return 0


def _cmd_baseline(args: argparse.Namespace) -> int:
    doc, _, _, _, provenance = _load_text_pipeline(args)
    provenance["max_words"] = args.max_words
    candidates = _stage("baseline", luhn_extract, doc, args.max_words)
    if (args.format or "json") == "csv":
        rows = [["luhn", e.word, e.score, e.rank, e.count] for e in candidates]
        text = _csv_text(["bucket", "word", "score", "rank", "count"], rows)
    else:
        text = _json_text(
            {"config": provenance, "candidates": [asdict(e) for e in candidates]}
        )
    _stage("output", _emit, args, text)
    return 0


def _cmd_chapters(args: argparse.Namespace) -> int:
    doc, _, _, _, provenance = _load_text_pipeline(args)
    provenance["top_n"] = args.top_n
    if doc.N_chap < 2:
        raise _StageError(
            "chapters",
            UnsupportedDocumentError(
                "no chapters detected; pass --chapter-pattern matching the heading lines"
            ),
        )
    table = _stage("chapters", chapter_table, doc)[: max(args.top_n, 0)]
    if (args.format or "json") == "csv":
        rows = [[r.word, r.score, r.entropy_score, r.count] for r in table]
        text = _csv_text(["word", "score", "entropy_score", "count"], rows)
    else:
        text = _json_text({"config": provenance, "table": [asdict(r) for r in table]})
    _stage("output", _emit, args, text)
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    doc, _, _, seed, provenance = _load_text_pipeline(args)
    records = _stage("stats", stats_dump, doc, seed, args.realizations)
    if (args.format or "csv") == "json":
        text = _json_text({"config": provenance, "records": [asdict(r) for r in records]})
    else:
        buf = io.StringIO()
        write_stats_csv(records, buf)
        text = buf.getvalue()
    _stage("output", _emit, args, text)
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    sets = _stage("annotation", load_annotation_json, args.annotation)
    if args.extraction:
        candidates = _stage("extraction", _read_extraction_words, args.extraction)
        marked = frozenset(w for w in sets.marked if w in set(candidates))
        sets = _stage(
            "annotation",
            lambda: type(sets)(candidates=tuple(candidates), marked=marked, full=sets.full),
        )
    result = _stage("eval", evaluate, sets, args.protocol == "long")
    provenance = {
        "command": "eval",
        "annotation": args.annotation,
        "extraction": args.extraction,
        "protocol": args.protocol,
    }
    if (args.format or "json") == "csv":
        text = _csv_text(
            ["precision", "recall", "f1", "mean_letters"],
            [[result.precision, result.recall, result.f1, result.mean_letters]],
        )
    else:
        payload = {"config": provenance}
        payload.update(result.to_dict())
        text = _json_text(payload)
    _stage("output", _emit, args, text)
    return 0


def _read_extraction_words(path: str) -> list[str]:
    """Candidate words from an extract/baseline report (JSON) or a plain
    one-word-per-line file."""
    with open(path, encoding="utf-8") as fh:
        content = fh.read()
    words: list[str] = []
    if path.endswith(".json"):
        data = json.loads(content)
        if "candidates" in data:
            words = [entry["word"] for entry in data["candidates"]]
        else:
            for bucket in ("strong_global", "weak_global", "local"):
                words.extend(entry["word"] for entry in data.get(bucket, []))
    else:
        words = [line.strip() for line in content.splitlines() if line.strip()]
    seen: set[str] = set()
    return [w for w in words if not (w in seen or seen.add(w))]


def _cmd_kappa(args: argparse.Namespace) -> int:
    labels_a = _stage("annotation", load_labels_csv, args.labels_a)
    labels_b = _stage("annotation", load_labels_csv, args.labels_b)
    value = _stage("kappa", cohens_kappa, labels_a, labels_b)
    band = kappa_band(value)
    provenance = {
        "command": "kappa",
        "labels_a": args.labels_a,
        "labels_b": args.labels_b,
    }
    if (args.format or "json") == "csv":
        text = _csv_text(["kappa", "band", "items"], [[value, band, len(labels_a)]])
    else:
        text = _json_text(
            {"config": provenance, "kappa": value, "band": band, "items": len(labels_a)}
        )
    _stage("output", _emit, args, text)
    return 0


_COMMANDS = {
    "extract": _cmd_extract,
    "baseline": _cmd_baseline,
    "chapters": _cmd_chapters,
    "stats": _cmd_stats,
    "eval": _cmd_eval,
    "kappa": _cmd_kappa,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except _StageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
