"""Command line front end: run one CV experiment or a full comparison."""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .models import MODEL_KINDS, ExperimentConfig
from .train import compare, run_cv


def _add_protocol_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--name", required=True, help="dataset name prefix")
    p.add_argument("--epochs", type=int, default=100)
    p.add_argument("--folds", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lr", type=float, default=1e-4)
    p.add_argument("--weight-decay", type=float, default=5e-4)
    p.add_argument("--batch-size", type=int, default=32)


def _config(args: argparse.Namespace, kind: str) -> ExperimentConfig:
    return ExperimentConfig(
        model_kind=kind,
        epochs=args.epochs,
        folds=args.folds,
        seed=args.seed,
        lr=args.lr,
        weight_decay=args.weight_decay,
        batch_size=args.batch_size,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gnn-eval",
        description="Cross-validated GNN classification on graph datasets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="k-fold CV for one model on one dataset")
    p_run.add_argument("--input-dir", required=True)
    _add_protocol_args(p_run)
    p_run.add_argument("--model", choices=MODEL_KINDS, default="gcn")
    p_run.add_argument("--report", default="report.json", help="JSON report path")
    p_run.add_argument(
        "--shuffle-labels",
        action="store_true",
        help="chance-level control: permute labels before splitting",
    )

    p_cmp = sub.add_parser("compare", help="all models on original vs backbone")
    p_cmp.add_argument("--original-dir", required=True)
    p_cmp.add_argument("--backbone-dir", required=True)
    _add_protocol_args(p_cmp)
    p_cmp.add_argument("--models", nargs="+", choices=MODEL_KINDS, default=list(MODEL_KINDS))
    p_cmp.add_argument("--out-dir", default=".")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            result = run_cv(
                args.input_dir,
                args.name,
                _config(args, args.model),
                shuffle_labels=args.shuffle_labels,
                report_path=args.report,
            )
            print(
                f"{args.name} {args.model}: ROC AUC "
                f"{100.0 * result.mean_auc:.2f} +- {100.0 * result.std_auc:.2f} "
                f"({result.config.folds} folds)"
            )
        else:
            rows = compare(
                args.original_dir,
                args.backbone_dir,
                args.name,
                _config(args, args.models[0]),
                kinds=args.models,
                out_dir=args.out_dir,
            )
            for row in rows:
                print(
                    f"{row['model']}: {100.0 * row['original_auc']:.2f} -> "
                    f"{100.0 * row['backbone_auc']:.2f} ({row['delta_points']:+.2f})"
                )
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
