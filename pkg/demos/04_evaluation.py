"""
Scoring against gold labels
===========================

Each label is treated one-vs-rest to fill a 2x2 confusion matrix, from which
accuracy, precision and recall are computed as exact fractions. The report
also gives plain three-way agreement.
"""

from hindi_polarity import ConfusionMatrix, compute_metrics, evaluate_run
from hindi_polarity.classifier import Label

m = compute_metrics(ConfusionMatrix(tp=21, fp=11, fn=6, tn=12))
print(m.accuracy, m.precision, m.recall)

###############################################################################
P, N, U = Label.POSITIVE, Label.NEGATIVE, Label.NEUTRAL
gold = {"a": P, "b": P, "c": N, "d": U, "e": N}
predicted = {"a": P, "b": U, "c": N, "d": N, "e": N}
report = evaluate_run(gold, predicted)
print(report.to_text())
