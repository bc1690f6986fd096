"""Max-margin list classifier trained by sequential pairwise (SMO-style)
optimization of the soft-margin dual, with a logistic map from margins to
confidences.

The calibration slope is fitted with the intercept pinned at zero so the
0.5 confidence line coincides exactly with the decision boundary; the
search threshold then acts as the single gate.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import (DimensionMismatchError, SingleClassError,
                     TooFewExamplesError)
from .features import (FeatureConfig, FeatureVector, build_vocabulary,
                       feature_dim, featurize, pipeline_fingerprint)
from .ingest import ListCandidate
from .linguistics import ImperativeLexicon

MODEL_SCHEMA_VERSION = 1
KKT_TOL = 1e-3
MAX_PASSES = 10_000


@dataclass(frozen=True)
class Kernel:
    kind: str = "poly"  # "linear" | "poly"
    degree: int = 2
    coef0: float = 1.0
    gamma: float = 1.0

    def __post_init__(self):
        if self.kind not in ("linear", "poly"):
            raise ValueError(f"unknown kernel {self.kind!r}")

    def gram(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        dots = a @ b.T
        if self.kind == "linear":
            return dots
        return (self.gamma * dots + self.coef0) ** self.degree

    def of(self, x: np.ndarray, y: np.ndarray) -> float:
        d = float(x @ y)
        if self.kind == "linear":
            return d
        return (self.gamma * d + self.coef0) ** self.degree


@dataclass
class Prediction:
    is_procedure: bool
    confidence: float
    decision_value: float


@dataclass
class SvmModel:
    kernel: Kernel
    reg_c: float
    support: list[tuple[FeatureVector, int, float]]  # (vector, label, alpha)
    bias: float
    calib: tuple[float, float]  # (slope, intercept); intercept pinned to 0
    vocab_fingerprint: str
    dim: int

    def _support_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        cached = getattr(self, "_sv_cache", None)
        if cached is None:
            mat = densify([v for v, _, _ in self.support], self.dim)
            coef = np.array([label * alpha for _, label, alpha in self.support])
            cached = (mat, coef)
            self._sv_cache = cached
        return cached

    def decision(self, x: FeatureVector) -> float:
        if x.max_index() >= self.dim:
            raise DimensionMismatchError(
                f"vector index {x.max_index()} outside model dimension {self.dim}")
        if not self.support:
            return self.bias
        mat, coef = self._support_arrays()
        xv = densify([x], self.dim)[0]
        return float(coef @ self.kernel.gram(mat, xv[None, :])[:, 0] + self.bias)

    def to_json(self) -> str:
        return json.dumps({
            "version": MODEL_SCHEMA_VERSION,
            "kernel": {"kind": self.kernel.kind, "degree": self.kernel.degree,
                       "coef0": self.kernel.coef0, "gamma": self.kernel.gamma},
            "reg_c": self.reg_c,
            "bias": self.bias,
            "calib": list(self.calib),
            "dim": self.dim,
            "support": [
                {"vector": {"entries": [[i, w] for i, w in v.entries],
                            "meta_offset": v.meta_offset},
                 "label": label, "alpha": alpha}
                for v, label, alpha in self.support
            ],
            "vocab_fingerprint": self.vocab_fingerprint,
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SvmModel":
        d = json.loads(text)
        if d.get("version") != MODEL_SCHEMA_VERSION:
            raise ValueError(f"unsupported model version {d.get('version')!r}")
        k = d["kernel"]
        return cls(
            kernel=Kernel(kind=k["kind"], degree=int(k["degree"]),
                          coef0=float(k["coef0"]), gamma=float(k["gamma"])),
            reg_c=float(d["reg_c"]),
            support=[
                (FeatureVector(entries=tuple((int(i), float(w))
                                             for i, w in sv["vector"]["entries"]),
                               meta_offset=int(sv["vector"]["meta_offset"])),
                 int(sv["label"]), float(sv["alpha"]))
                for sv in d["support"]
            ],
            bias=float(d["bias"]),
            calib=(float(d["calib"][0]), float(d["calib"][1])),
            vocab_fingerprint=d["vocab_fingerprint"],
            dim=int(d["dim"]),
        )


def densify(vectors: Sequence[FeatureVector], dim: int) -> np.ndarray:
    out = np.zeros((len(vectors), dim), dtype=np.float64)
    for r, v in enumerate(vectors):
        for i, w in v.entries:
            out[r, i] = w
    return out


def _smo(K: np.ndarray, y: np.ndarray, c: float, seed: int,
         tol: float = KKT_TOL, max_passes: int = MAX_PASSES) -> tuple[np.ndarray, float]:
    """Maximal-violating-pair dual ascent.

    Each pass optimizes the most KKT-violating feasible pair analytically;
    the run stops when the violation gap falls under ``tol``. Ties break
    on the lowest index, so the result is deterministic (the seed is
    accepted for interface stability but no randomness remains).
    """
    del seed
    n = len(y)
    alpha = np.zeros(n)
    grad = -np.ones(n)  # gradient of the dual objective, (Q @ alpha) - 1
    Q = (y[:, None] * y[None, :]) * K
    eps = 1e-12
    m = M = 0.0

    for _ in range(max_passes):
        yg = -y * grad  # equals y - f without the bias term
        up = ((y > 0) & (alpha < c - eps)) | ((y < 0) & (alpha > eps))
        low = ((y > 0) & (alpha > eps)) | ((y < 0) & (alpha < c - eps))
        if not up.any() or not low.any():
            break
        i = int(np.argmax(np.where(up, yg, -np.inf)))
        j = int(np.argmin(np.where(low, yg, np.inf)))
        m, M = yg[i], yg[j]
        if m - M <= tol:
            break
        quad = K[i, i] + K[j, j] - 2.0 * K[i, j]
        if quad <= eps:
            quad = eps
        t = (m - M) / quad
        # box limits along the feasible direction (alpha_i += y_i t,
        # alpha_j -= y_j t keeps the equality constraint exact)
        t = min(t, c - alpha[i] if y[i] > 0 else alpha[i])
        t = min(t, alpha[j] if y[j] > 0 else c - alpha[j])
        if t <= eps:
            break
        alpha[i] += y[i] * t
        alpha[j] -= y[j] * t
        grad += t * (y[i] * Q[i] - y[j] * Q[j])

    yg = -y * grad
    up = ((y > 0) & (alpha < c - eps)) | ((y < 0) & (alpha > eps))
    low = ((y > 0) & (alpha > eps)) | ((y < 0) & (alpha < c - eps))
    if up.any() and low.any():
        b = (float(np.max(yg[up])) + float(np.min(yg[low]))) / 2.0
    elif up.any():
        b = float(np.max(yg[up]))
    elif low.any():
        b = float(np.min(yg[low]))
    else:
        b = 0.0
    np.clip(alpha, 0.0, c, out=alpha)
    return alpha, b


def _fit_calibration(decisions: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Slope-only logistic fit (intercept 0) with Platt target smoothing."""
    n_pos = int(np.sum(y > 0))
    n_neg = len(y) - n_pos
    if n_pos == 0 or n_neg == 0 or np.allclose(decisions, 0.0):
        return (1.0, 0.0)
    t = np.where(y > 0, (n_pos + 1.0) / (n_pos + 2.0), 1.0 / (n_neg + 2.0))
    a = 1.0
    for _ in range(100):
        z = np.clip(a * decisions, -500, 500)
        p = 1.0 / (1.0 + np.exp(-z))
        grad = float(np.dot(p - t, decisions))
        hess = float(np.dot(p * (1.0 - p), decisions * decisions))
        if hess <= 1e-12:
            break
        step = grad / hess
        a_new = min(1e4, max(1e-4, a - step))
        if abs(a_new - a) < 1e-10:
            a = a_new
            break
        a = a_new
    if not math.isfinite(a) or a <= 0:
        return (1.0, 0.0)
    return (a, 0.0)


def train(data: Sequence[tuple[FeatureVector, int]], kernel: Kernel | None = None,
          reg_c: float = 1.0, seed: int = 0, dim: int | None = None,
          vocab_fingerprint: str = "") -> SvmModel:
    """Fit the soft-margin dual; zero-alpha vectors are dropped from the
    support set and a confidence slope is calibrated on training margins."""
    kernel = kernel or Kernel()
    labels = {label for _, label in data}
    if labels - {-1, 1}:
        raise ValueError(f"labels must be -1/+1, got {labels}")
    if len(labels) < 2:
        raise SingleClassError("training data contains a single class")
    vectors = [v for v, _ in data]
    max_idx = max(v.max_index() for v in vectors)
    if dim is None:
        dim = max_idx + 1
    elif max_idx >= dim:
        raise DimensionMismatchError(
            f"vector index {max_idx} outside feature dimension {dim}")
    X = densify(vectors, dim)
    y = np.array([label for _, label in data], dtype=np.float64)
    K = kernel.gram(X, X)
    alpha, bias = _smo(K, y, reg_c, seed)
    decisions = (alpha * y) @ K + bias
    calib = _fit_calibration(decisions, y)
    support = [(vectors[i], int(y[i]), float(alpha[i]))
               for i in range(len(y)) if alpha[i] > 1e-12]
    return SvmModel(kernel=kernel, reg_c=reg_c, support=support, bias=float(bias),
                    calib=calib, vocab_fingerprint=vocab_fingerprint, dim=dim)


def predict(model: SvmModel, x: FeatureVector) -> Prediction:
    value = model.decision(x)
    slope, intercept = model.calib
    z = max(-500.0, min(500.0, slope * value + intercept))
    confidence = 1.0 / (1.0 + math.exp(-z))
    confidence = min(1.0 - 1e-12, max(1e-12, confidence))
    return Prediction(is_procedure=value >= 0, confidence=confidence,
                      decision_value=value)


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------

@dataclass
class EvalReport:
    accuracy: float
    precision: float
    recall: float
    f1: float
    confusion: dict[str, int]
    fold_accuracies: list[float] = field(default_factory=list)

    @classmethod
    def from_pairs(cls, truth: Sequence[bool], pred: Sequence[bool],
                   fold_accuracies: Optional[list[float]] = None) -> "EvalReport":
        tp = sum(1 for t, p in zip(truth, pred) if t and p)
        tn = sum(1 for t, p in zip(truth, pred) if not t and not p)
        fp = sum(1 for t, p in zip(truth, pred) if not t and p)
        fn = sum(1 for t, p in zip(truth, pred) if t and not p)
        total = max(1, tp + tn + fp + fn)
        precision = tp / (tp + fp) if tp + fp else 0.0
        recall = tp / (tp + fn) if tp + fn else 0.0
        f1 = (2 * precision * recall / (precision + recall)
              if precision + recall else 0.0)
        return cls(accuracy=(tp + tn) / total, precision=precision,
                   recall=recall, f1=f1,
                   confusion={"tp": tp, "fp": fp, "tn": tn, "fn": fn},
                   fold_accuracies=fold_accuracies or [])


def stratified_folds(labels: Sequence[bool], folds: int, seed: int) -> list[list[int]]:
    by_class: dict[bool, list[int]] = {True: [], False: []}
    for i, lab in enumerate(labels):
        by_class[bool(lab)].append(i)
    rng = random.Random(seed)
    out: list[list[int]] = [[] for _ in range(folds)]
    for members in by_class.values():
        rng.shuffle(members)
        for pos, idx in enumerate(members):
            out[pos % folds].append(idx)
    return [sorted(f) for f in out]


def cross_validate(candidates: Sequence[ListCandidate], labels: Sequence[bool],
                   cfg: FeatureConfig, folds: int = 5, seed: int = 0,
                   kernel: Kernel | None = None, reg_c: float = 1.0,
                   wordlist: frozenset[str] | None = None,
                   lex: ImperativeLexicon | None = None) -> EvalReport:
    """Stratified k-fold; the vocabulary is rebuilt inside every fold on
    its training split only, so no term leaks from held-out data."""
    n_pos = sum(1 for b in labels if b)
    n_neg = len(labels) - n_pos
    if min(n_pos, n_neg) < folds:
        raise TooFewExamplesError(
            f"need at least {folds} examples per class, have {n_pos}/{n_neg}")
    fold_sets = stratified_folds(labels, folds, seed)
    truth: list[bool] = []
    pred: list[bool] = []
    fold_accs: list[float] = []
    for fi, test_idx in enumerate(fold_sets):
        test = set(test_idx)
        train_idx = [i for i in range(len(labels)) if i not in test]
        vocab = build_vocabulary([candidates[i] for i in train_idx], cfg, wordlist)
        fp = pipeline_fingerprint(vocab, cfg)
        dim = feature_dim(vocab, cfg)
        train_data = [(featurize(candidates[i], vocab, cfg, lex),
                       1 if labels[i] else -1) for i in train_idx]
        model = train(train_data, kernel=kernel, reg_c=reg_c, seed=seed + fi,
                      dim=dim, vocab_fingerprint=fp)
        fold_truth = []
        fold_pred = []
        for i in test_idx:
            p = predict(model, featurize(candidates[i], vocab, cfg, lex))
            fold_truth.append(bool(labels[i]))
            fold_pred.append(p.is_procedure)
        truth.extend(fold_truth)
        pred.extend(fold_pred)
        fold_accs.append(sum(1 for t, p in zip(fold_truth, fold_pred) if t == p)
                         / max(1, len(fold_truth)))
    return EvalReport.from_pairs(truth, pred, fold_accuracies=fold_accs)
