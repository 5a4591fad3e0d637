"""Confusion matrices and accuracy/precision/recall against gold labels.

Three-way labels are binarized one-vs-rest for each class. Scores are kept
as exact fractions; ``None`` marks an undefined (0/0) score.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

from .classifier import Label
from .text_core import read_text

LABEL_ORDER = (Label.POSITIVE, Label.NEGATIVE, Label.NEUTRAL)


class EvaluationError(ValueError):
    pass


class MissingPredictionError(EvaluationError):
    def __init__(self, ids: Sequence[str]):
        self.ids = list(ids)
        super().__init__("no prediction for gold ids: " + ", ".join(self.ids))


@dataclass(frozen=True)
class ConfusionMatrix:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class Metrics:
    accuracy: Optional[Fraction]
    precision: Optional[Fraction]
    recall: Optional[Fraction]

    def items(self):
        return (("accuracy", self.accuracy), ("precision", self.precision),
                ("recall", self.recall))


def _ratio(num: int, den: int) -> Optional[Fraction]:
    return Fraction(num, den) if den else None


def build_confusion(gold: Sequence[Label], pred: Sequence[Label],
                    target: Label = Label.POSITIVE) -> ConfusionMatrix:
    if len(gold) != len(pred):
        raise EvaluationError(f"length mismatch: {len(gold)} gold vs {len(pred)} predicted")
    tp = fp = fn = tn = 0
    for g, p in zip(gold, pred):
        actual, predicted = g == target, p == target
        if actual and predicted:
            tp += 1
        elif actual:
            fn += 1
        elif predicted:
            fp += 1
        else:
            tn += 1
    return ConfusionMatrix(tp, fp, fn, tn)


def compute_metrics(cm: ConfusionMatrix) -> Metrics:
    return Metrics(accuracy=_ratio(cm.tp + cm.tn, cm.total),
                   precision=_ratio(cm.tp, cm.tp + cm.fp),
                   recall=_ratio(cm.tp, cm.tp + cm.fn))


def format_score(value: Optional[Fraction], places: int = 4) -> str:
    """Decimal string rounded half-up, or ``undefined``."""
    if value is None:
        return "undefined"
    scale = 10 ** places
    q = math.floor(value * scale + Fraction(1, 2))
    sign = "-" if q < 0 else ""
    q = abs(q)
    return f"{sign}{q // scale}.{q % scale:0{places}d}"


@dataclass(frozen=True)
class ClassReport:
    label: Label
    confusion: ConfusionMatrix
    metrics: Metrics


@dataclass(frozen=True)
class EvaluationReport:
    n: int
    per_class: tuple[ClassReport, ...]
    macro: dict[str, tuple[Optional[Fraction], int]]
    exact_match_accuracy: Optional[Fraction]
    extra_predictions: int = 0

    def for_label(self, label: Label) -> ClassReport:
        return next(c for c in self.per_class if c.label == label)

    def to_text(self) -> str:
        lines = [f"instances: {self.n}"]
        if self.extra_predictions:
            lines.append(f"warning: {self.extra_predictions} predictions without gold label ignored")
        for c in self.per_class:
            cm = c.confusion
            head = f"[{c.label.value}]"
            if c.label is Label.POSITIVE:
                head += " (headline)"
            lines.append(head)
            lines.append(f"  tp={cm.tp} fp={cm.fp} fn={cm.fn} tn={cm.tn}")
            for name, v in c.metrics.items():
                lines.append(f"  {name:<9}  {format_score(v)}")
        lines.append("[macro]")
        for name, (v, k) in self.macro.items():
            lines.append(f"  {name:<9}  {format_score(v)}  (over {k} defined of {len(self.per_class)})")
        lines.append(f"exact-match accuracy (3-way): {format_score(self.exact_match_accuracy)}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        def num(v):
            return None if v is None else {"exact": str(v), "value": float(v)}
        return {
            "instances": self.n,
            "extra_predictions": self.extra_predictions,
            "per_class": [
                {"label": c.label.value,
                 "confusion": {"tp": c.confusion.tp, "fp": c.confusion.fp,
                               "fn": c.confusion.fn, "tn": c.confusion.tn},
                 "metrics": {k: num(v) for k, v in c.metrics.items()}}
                for c in self.per_class],
            "macro": {k: {"score": num(v), "defined": n} for k, (v, n) in self.macro.items()},
            "exact_match_accuracy": num(self.exact_match_accuracy),
        }


def evaluate_run(gold: Mapping[str, Label] | Iterable[tuple[str, Label]],
                 predictions: Mapping[str, Label]) -> EvaluationReport:
    """Score `predictions` against `gold`, keyed by instance id.

    Every gold id needs a prediction; extra predictions are only counted.
    """
    gold = dict(gold)
    missing = [i for i in gold if i not in predictions]
    if missing:
        raise MissingPredictionError(missing)
    ids = list(gold)
    g = [gold[i] for i in ids]
    p = [predictions[i] for i in ids]
    per_class = []
    for label in LABEL_ORDER:
        cm = build_confusion(g, p, label)
        per_class.append(ClassReport(label, cm, compute_metrics(cm)))
    macro = {}
    for name in ("accuracy", "precision", "recall"):
        values = [getattr(c.metrics, name) for c in per_class]
        defined = [v for v in values if v is not None]
        macro[name] = (sum(defined, Fraction(0)) / len(defined) if defined else None,
                       len(defined))
    exact = _ratio(sum(a == b for a, b in zip(g, p)), len(ids))
    extra = sum(1 for i in predictions if i not in gold)
    return EvaluationReport(len(ids), tuple(per_class), macro, exact, extra)


def load_gold(path: str | Path) -> tuple[dict[str, Label], dict[str, str]]:
    """Read gold labels from JSON Lines ``{id, text, gold}`` or TSV ``id<TAB>label``.

    Returns ``(labels, texts)``; `texts` is empty for TSV input. Records
    with a missing or invalid label raise :class:`EvaluationError` listing
    their ids.
    """
    labels: dict[str, Label] = {}
    texts: dict[str, str] = {}
    bad = []
    path = Path(path)
    lines = read_text(path).splitlines()
    as_json = path.suffix in (".jsonl", ".json") or \
        any(l.lstrip().startswith("{") for l in lines if l.strip())
    for lineno, line in enumerate(lines, 1):
        if not line.strip() or line.startswith("#"):
            continue
        if as_json:
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise EvaluationError(f"{path}:{lineno}: {exc.msg}") from None
            rid = str(rec.get("id", lineno))
            raw_label = rec.get("gold")
            if "text" in rec:
                texts[rid] = rec["text"]
        else:
            cols = line.split("\t")
            rid = cols[0].strip()
            raw_label = cols[1] if len(cols) > 1 else None
        try:
            labels[rid] = Label.parse(raw_label)
        except (ValueError, AttributeError):
            bad.append(rid)
    if bad:
        raise EvaluationError("missing or invalid gold label for ids: " + ", ".join(bad))
    return labels, texts
