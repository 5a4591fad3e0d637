"""Command-line entry point: ``classify``, ``expand-lexicon`` and ``evaluate``.

Exit codes: 0 ok, 2 missing input file, 3 malformed resource, 4 gold labels
cannot be joined with predictions.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Iterator, Optional, Sequence

from . import __version__
from .classifier import (ClassifierConfig, Label, NegationScope, classify_document,
                         summarize)
from .evaluation import EvaluationError, evaluate_run, load_gold
from .lexicon import (DEFAULT_MAX_DEPTH, Lexicon, LexiconError, RelationDictionary,
                      Resolver, expand_lexicon, format_conflicts_tsv,
                      format_lexicon_tsv, load_dictionary, load_seed)
from .tagged_input import (TaggedFormatError, fallback_tag, load_tag_lexicon,
                           read_tagged_corpus)
from .text_core import (DecodeError, Document, load_word_list, make_document,
                        read_text)

TOOL = "hindi-polarity"
DATA_DIR = Path(__file__).parent / "data"

EXIT_OK, EXIT_MISSING, EXIT_MALFORMED, EXIT_GOLD = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    command: str
    negation_window: int = 3
    negation_scope: str = "post"
    max_depth: int = DEFAULT_MAX_DEPTH
    pos_filter: str = "auto"
    level: str = "sentence"
    seed: str = "builtin:seed.tsv"
    dict: str = "builtin:dictionary.tsv"
    negators: str = "builtin:negators.txt"
    tags: Optional[str] = None
    input: Optional[str] = None
    tagged_input: Optional[str] = None
    gold: Optional[str] = None
    format: str = "json"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        fields = {k: getattr(args, k) for k in cls.__dataclass_fields__
                  if getattr(args, k, None) is not None}
        return cls(**fields)

    def classifier_config(self) -> ClassifierConfig:
        pos = {"auto": None, "on": True, "off": False}[self.pos_filter]
        return ClassifierConfig(self.negation_window, NegationScope(self.negation_scope),
                                self.max_depth, pos)

    def header(self) -> dict:
        # output paths are left out so identical runs give identical bytes
        return {"tool": TOOL, "version": __version__, "command": self.command,
                "config": {k: v for k, v in self.__dict__.items() if k != "command"}}


def _resolve_path(value: str) -> Path:
    if value.startswith("builtin:"):
        return DATA_DIR / value[len("builtin:"):]
    return Path(value)


def _require(path: str | None) -> Optional[Path]:
    if path is None:
        return None
    p = _resolve_path(path)
    if not p.is_file():
        raise CliError(f"no such file: {p}", EXIT_MISSING)
    return p


@dataclass
class Resources:
    seed: Lexicon
    dictionary: RelationDictionary
    negators: frozenset[str]
    tags: Optional[dict]


def load_resources(cfg: RunConfig) -> Resources:
    seed_p, dict_p, neg_p, tags_p = (_require(cfg.seed), _require(cfg.dict),
                                     _require(cfg.negators), _require(cfg.tags))
    try:
        return Resources(load_seed(seed_p), load_dictionary(dict_p),
                         load_word_list(neg_p),
                         load_tag_lexicon(tags_p) if tags_p else None)
    except (LexiconError, TaggedFormatError, DecodeError) as exc:
        raise CliError(str(exc), EXIT_MALFORMED) from None


def read_reviews(path: Path) -> Iterator[tuple[str, str]]:
    """Yield ``(id, text)``: JSON Lines ``{id, text}`` for ``.jsonl``, else one review per line."""
    lines = read_text(path).splitlines()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        if path.suffix == ".jsonl":
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise CliError(f"{path}:{lineno}: {exc.msg}", EXIT_MALFORMED) from None
            yield str(rec.get("id", lineno)), rec.get("text", "")
        else:
            yield str(lineno), line


def load_documents(cfg: RunConfig, res: Resources) -> list[Document]:
    try:
        if cfg.tagged_input is not None:
            path = _require(cfg.tagged_input)
            return [r.to_document(res.negators) for r in read_tagged_corpus(path)]
        path = _require(cfg.input)
        docs = [make_document(i, t, res.negators) for i, t in read_reviews(path)]
    except (TaggedFormatError, DecodeError) as exc:
        raise CliError(str(exc), EXIT_MALFORMED) from None
    if res.tags is not None:
        docs = [_tag_document(d, res.tags) for d in docs]
    return docs


def _tag_document(doc: Document, tags: dict) -> Document:
    return replace(doc, sentences=tuple(
        replace(s, tokens=tuple(fallback_tag(s.tokens, tags))) for s in doc.sentences))


def classify_records(docs: Sequence[Document], res: Resources, cfg: RunConfig) -> list[dict]:
    """One output record per unit at ``cfg.level``, in input order."""
    ccfg = cfg.classifier_config()
    resolver = Resolver(res.seed, res.dictionary, ccfg.max_depth)
    records = []
    for doc in docs:
        result = classify_document(doc, res.seed, res.dictionary, ccfg, resolver)
        if cfg.level == "document":
            records.append({"id": doc.id, "level": "document", **result.unit.as_dict()})
        else:
            for k, unit in enumerate(result.sentences, 1):
                records.append({"id": f"{doc.id}:{k}", "level": "sentence", **unit.as_dict()})
    return records


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def format_records(records: Sequence[dict], cfg: RunConfig) -> str:
    if cfg.format == "tsv":
        out = [f"# {_dump(cfg.header())}\n"]
        for r in records:
            hits = ",".join(f"{h['word']}:{h['effective']:+d}" for h in r["hits"])
            out.append(f"{r['id']}\t{r['level']}\t{r['label']}\t"
                       f"{r['positive_count']}\t{r['negative_count']}\t{hits}\n")
        return "".join(out)
    return "".join(_dump(x) + "\n" for x in [cfg.header(), *records])


def summary_line(counts: tuple[int, int, int]) -> str:
    return "positive: {} / negative: {} / neutral: {}".format(*counts)


def _write(path: str | Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def cmd_classify(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    if cfg.input is None and cfg.tagged_input is None:
        raise CliError("one of --input or --tagged-input is required", EXIT_MISSING)
    res = load_resources(cfg)
    records = classify_records(load_documents(cfg, res), res, cfg)
    if args.out:
        _write(args.out, format_records(records, cfg))
    print(summary_line(summarize(Label(r["label"]) for r in records)))
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    res = load_resources(cfg)
    exp = expand_lexicon(res.seed, res.dictionary, cfg.max_depth)
    header = f"# {_dump(cfg.header())}\n"
    _write(args.out, header + format_lexicon_tsv(exp.lexicon))
    conflicts_path = args.conflicts or str(Path(args.out).with_suffix(".conflicts.tsv"))
    _write(conflicts_path, header + format_conflicts_tsv(exp.conflicts))
    print(f"seed: {len(res.seed)} / expanded: {exp.expanded_count} / "
          f"conflicts: {len(exp.conflicts)} / unknown: {len(exp.unknown)}")
    return EXIT_OK


def cmd_evaluate(args: argparse.Namespace) -> int:
    cfg = RunConfig.from_args(args)
    gold_p = _require(cfg.gold)
    try:
        gold, texts = load_gold(gold_p)
    except EvaluationError as exc:
        raise CliError(str(exc), EXIT_GOLD) from None
    res = load_resources(cfg)
    if cfg.input is None and cfg.tagged_input is None:
        # each gold record is one instance: vote over all of its text
        cfg = RunConfig(**{**cfg.__dict__, "level": "document"})
        try:
            docs = [make_document(i, texts[i], res.negators) for i in gold if i in texts]
        except DecodeError as exc:
            raise CliError(str(exc), EXIT_MALFORMED) from None
        if res.tags is not None:
            docs = [_tag_document(d, res.tags) for d in docs]
    else:
        docs = load_documents(cfg, res)
    records = classify_records(docs, res, cfg)
    predictions = {r["id"]: Label(r["label"]) for r in records}
    try:
        report = evaluate_run(gold, predictions)
    except EvaluationError as exc:
        raise CliError(str(exc), EXIT_GOLD) from None
    sys.stdout.write(report.to_text())
    if args.out:
        _write(args.out, _dump(cfg.header()) + "\n" + _dump(report.to_json()) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", help="seed list TSV (word, polarity)")
    common.add_argument("--dict", help="relation dictionary TSV (word, synonyms, antonyms)")
    common.add_argument("--negators", help="negator word list, one per line")
    common.add_argument("--max-depth", type=int, dest="max_depth")

    run = argparse.ArgumentParser(add_help=False)
    run.add_argument("--tags", help="tag lexicon TSV for untagged input")
    src = run.add_mutually_exclusive_group()
    src.add_argument("--input", help="reviews, one per line (or .jsonl with id/text)")
    src.add_argument("--tagged-input", dest="tagged_input",
                     help="id<TAB>word_TAG ... corpus")
    run.add_argument("--level", choices=["sentence", "document"])
    run.add_argument("--negation-window", type=int, dest="negation_window")
    run.add_argument("--negation-scope", choices=[s.value for s in NegationScope],
                     dest="negation_scope")
    run.add_argument("--pos-filter", choices=["auto", "on", "off"], dest="pos_filter")

    parser = argparse.ArgumentParser(prog=TOOL, description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"{TOOL} {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common, run], help="classify reviews")
    p.add_argument("--out", help="write classifications here")
    p.add_argument("--format", choices=["json", "tsv"])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("expand-lexicon", parents=[common],
                       help="grow the seed list through the dictionary")
    p.add_argument("--out", required=True, help="expanded lexicon TSV")
    p.add_argument("--conflicts", help="conflict report TSV (default: next to --out)")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("evaluate", parents=[common, run],
                       help="score classifications against gold labels")
    p.add_argument("--gold", required=True, help="gold JSONL {id,text,gold} or TSV id<TAB>label")
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=cmd_evaluate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"{TOOL}: error: {exc}", file=sys.stderr)
        return exc.code
    except OSError as exc:
        print(f"{TOOL}: error: {exc}", file=sys.stderr)
        return EXIT_MISSING


if __name__ == "__main__":
    sys.exit(main())
