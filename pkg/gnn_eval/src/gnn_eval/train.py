"""Cross-validated training and original-vs-backbone comparison.

The protocol: stratified k-fold split over graphs, a fresh seeded model
per fold, fixed-epoch training with an adaptive optimizer, and ROC AUC
of the held-out class-1 probabilities. ``compare`` runs every model
kind on an original dataset directory and a sparsified copy and emits
the side-by-side table.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import torch
from sklearn.metrics import roc_auc_score
from sklearn.model_selection import StratifiedKFold

from .data import LoadedDataset, build_features, load_dataset, read_leader_log
from .models import MODEL_KINDS, ExperimentConfig, build_model

WITHIN_POINTS = 5.0  # comparison highlight threshold, in AUC points


@dataclass(frozen=True)
class FoldResult:
    """Held-out score and training curve for one fold."""

    fold: int
    roc_auc: float
    train_losses: tuple[float, ...]


@dataclass(frozen=True)
class CVResult:
    dataset: str
    directory: str
    config: ExperimentConfig
    feature_mode: str
    sort_k: int
    shuffled_labels: bool
    folds: tuple[FoldResult, ...]

    @property
    def mean_auc(self) -> float:
        return float(np.mean([f.roc_auc for f in self.folds]))

    @property
    def std_auc(self) -> float:
        return float(np.std([f.roc_auc for f in self.folds]))

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "directory": self.directory,
            "config": dataclasses.asdict(self.config),
            "feature_mode": self.feature_mode,
            "sort_k": self.sort_k,
            "shuffled_labels": self.shuffled_labels,
            "mean_roc_auc": self.mean_auc,
            "std_roc_auc": self.std_auc,
            "folds": [
                {
                    "fold": f.fold,
                    "roc_auc": f.roc_auc,
                    "train_losses": list(f.train_losses),
                }
                for f in self.folds
            ],
        }


def _collate(
    features: Sequence[np.ndarray],
    dataset: LoadedDataset,
    labels: np.ndarray,
    indices: Sequence[int],
) -> tuple[torch.Tensor, torch.Tensor, torch.Tensor, torch.Tensor]:
    """Pad one batch of graphs to a common node count."""
    biggest = max(dataset.records[i].num_nodes for i in indices)
    dim = features[0].shape[1]
    x = torch.zeros(len(indices), biggest, dim)
    adj = torch.zeros(len(indices), biggest, biggest)
    mask = torch.zeros(len(indices), biggest, dtype=torch.bool)
    y = torch.zeros(len(indices), dtype=torch.long)
    for row, i in enumerate(indices):
        record = dataset.records[i]
        n = record.num_nodes
        x[row, :n] = torch.from_numpy(features[i])
        for u, v in record.edges:
            adj[row, u, v] = 1.0
            adj[row, v, u] = 1.0
        mask[row, :n] = True
        y[row] = int(labels[i])
    return x, adj, mask, y


def _fold_seed(cfg: ExperimentConfig, fold: int) -> int:
    return cfg.seed * 100003 + fold


def _train_one_fold(
    dataset: LoadedDataset,
    features: Sequence[np.ndarray],
    labels: np.ndarray,
    train_idx: np.ndarray,
    test_idx: np.ndarray,
    cfg: ExperimentConfig,
    fold: int,
    sort_k: int,
) -> FoldResult:
    seed = _fold_seed(cfg, fold)
    model = build_model(cfg, features[0].shape[1], dataset.num_classes, sort_k, seed=seed)
    optim = torch.optim.Adam(model.parameters(), lr=cfg.lr, weight_decay=cfg.weight_decay)
    loss_fn = torch.nn.CrossEntropyLoss()
    rng = np.random.default_rng([seed, 1])

    losses = []
    model.train()
    for _ in range(cfg.epochs):
        order = rng.permutation(train_idx)
        epoch_losses = []
        for start in range(0, len(order), cfg.batch_size):
            batch = order[start : start + cfg.batch_size]
            x, adj, mask, y = _collate(features, dataset, labels, batch)
            optim.zero_grad()
            loss = loss_fn(model(x, adj, mask), y)
            loss.backward()
            optim.step()
            epoch_losses.append(float(loss.detach()))
        losses.append(float(np.mean(epoch_losses)))

    model.eval()
    probs = []
    with torch.no_grad():
        for start in range(0, len(test_idx), cfg.batch_size):
            batch = test_idx[start : start + cfg.batch_size]
            x, adj, mask, _ = _collate(features, dataset, labels, batch)
            probs.append(torch.softmax(model(x, adj, mask), dim=-1)[:, 1].numpy())
    score = roc_auc_score(labels[test_idx], np.concatenate(probs))
    return FoldResult(fold=fold, roc_auc=float(score), train_losses=tuple(losses))


def effective_sort_k(dataset: LoadedDataset, cfg: ExperimentConfig) -> int:
    """Requested k clipped to the smallest graph in the dataset."""
    return max(1, min(cfg.sort_k, min(r.num_nodes for r in dataset.records)))


def run_cv(
    dataset_dir: str,
    name: str,
    cfg: ExperimentConfig,
    shuffle_labels: bool = False,
    report_path: Optional[str] = "report.json",
) -> CVResult:
    """Stratified k-fold cross validation of one model on one dataset.

    Fold splits, model initialization, and batch order are all derived
    from cfg.seed, so reruns reproduce the scores exactly. Set
    shuffle_labels for the chance-level control (labels permuted before
    splitting). Writes a JSON report unless report_path is None.
    """
    dataset_dir = os.fspath(dataset_dir)
    dataset = load_dataset(dataset_dir, name)
    if dataset.num_classes != 2:
        raise ValueError("ROC AUC evaluation needs a binary dataset")
    features, feature_mode = build_features(dataset)
    sort_k = effective_sort_k(dataset, cfg)

    labels = dataset.labels
    if shuffle_labels:
        labels = np.random.default_rng(cfg.seed).permutation(labels)

    splitter = StratifiedKFold(n_splits=cfg.folds, shuffle=True, random_state=cfg.seed)
    folds = []
    for fold, (train_idx, test_idx) in enumerate(splitter.split(labels, labels)):
        folds.append(
            _train_one_fold(dataset, features, labels, train_idx, test_idx, cfg, fold, sort_k)
        )

    result = CVResult(
        dataset=name,
        directory=dataset_dir,
        config=cfg,
        feature_mode=feature_mode,
        sort_k=sort_k,
        shuffled_labels=shuffle_labels,
        folds=tuple(folds),
    )
    if report_path is not None:
        payload = result.to_dict()
        leaders = read_leader_log(dataset_dir, name)
        if leaders is not None:
            payload["mean_leader_count"] = float(np.mean([len(row) for row in leaders]))
        with open(report_path, "w", encoding="ascii") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return result


def compare(
    original_dir: str,
    backbone_dir: str,
    name: str,
    cfg: ExperimentConfig,
    kinds: Sequence[str] = MODEL_KINDS,
    out_dir: str = ".",
) -> list[dict]:
    """Original-vs-backbone table across model kinds.

    cfg supplies the shared protocol; its model_kind is overridden per
    row. Emits comparison.md and comparison.json under out_dir and
    returns the rows.
    """
    original_dir = os.fspath(original_dir)
    backbone_dir = os.fspath(backbone_dir)
    out_dir = os.fspath(out_dir)
    rows = []
    for kind in kinds:
        row_cfg = dataclasses.replace(cfg, model_kind=kind)
        original = run_cv(original_dir, name, row_cfg, report_path=None)
        backbone = run_cv(backbone_dir, name, row_cfg, report_path=None)
        delta = 100.0 * (backbone.mean_auc - original.mean_auc)
        rows.append(
            {
                "model": kind,
                "original_auc": original.mean_auc,
                "original_std": original.std_auc,
                "backbone_auc": backbone.mean_auc,
                "backbone_std": backbone.std_auc,
                "delta_points": delta,
                "within_5_points": abs(delta) <= WITHIN_POINTS,
            }
        )

    os.makedirs(out_dir, exist_ok=True)
    payload = {
        "dataset": name,
        "original_dir": original_dir,
        "backbone_dir": backbone_dir,
        "config": dataclasses.asdict(cfg),
        "rows": rows,
    }
    leaders = read_leader_log(backbone_dir, name)
    if leaders is not None:
        payload["mean_leader_count"] = float(np.mean([len(row) for row in leaders]))
    with open(os.path.join(out_dir, "comparison.json"), "w", encoding="ascii") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")

    lines = [
        f"# {name}: original vs backbone ROC AUC",
        "",
        "| model | original | backbone | delta | within 5 pts |",
        "| --- | --- | --- | --- | --- |",
    ]
    for row in rows:
        mark = "yes" if row["within_5_points"] else "no"
        lines.append(
            "| {model} | {o:.2f} | {b:.2f} | {d:+.2f} | {m} |".format(
                model=row["model"],
                o=100.0 * row["original_auc"],
                b=100.0 * row["backbone_auc"],
                d=row["delta_points"],
                m=mark,
            )
        )
    lines.append("")
    with open(os.path.join(out_dir, "comparison.md"), "w", encoding="ascii") as fh:
        fh.write("\n".join(lines))
    return rows
