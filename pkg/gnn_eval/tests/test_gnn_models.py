"""Model construction, forward shapes, seeding, and capacity."""

import numpy as np
import pytest
import torch
from gnn_helpers import toy_ten
from sklearn.metrics import roc_auc_score

from gnn_eval import MODEL_KINDS, ExperimentConfig, build_model


def test_config_defaults_exact():
    cfg = ExperimentConfig(model_kind="gcn")
    assert cfg.hidden == 64
    assert cfg.gnn_layers == 3
    assert cfg.mlp_hidden == 32
    assert cfg.epochs == 100
    assert cfg.lr == 1e-4
    assert cfg.weight_decay == 5e-4
    assert cfg.folds == 10


def test_unknown_kind_rejected():
    with pytest.raises(ValueError, match="unknown model kind"):
        ExperimentConfig(model_kind="mlp")


def test_invalid_sizes_rejected():
    with pytest.raises(ValueError, match="positive"):
        ExperimentConfig(model_kind="gcn", epochs=0)


def _toy_tensors(n=5):
    x = torch.zeros(1, n, 4)
    x[0, :, 0] = 1.0
    adj = torch.zeros(1, n, n)
    for i in range(n - 1):
        adj[0, i, i + 1] = adj[0, i + 1, i] = 1.0
    mask = torch.ones(1, n, dtype=torch.bool)
    return x, adj, mask


@pytest.mark.parametrize("kind", MODEL_KINDS)
def test_forward_logits_shape(kind):
    cfg = ExperimentConfig(model_kind=kind)
    model = build_model(cfg, in_features=4, num_classes=2, k=5, seed=0)
    x, adj, mask = _toy_tensors()
    assert model(x, adj, mask).shape == (1, 2)


@pytest.mark.parametrize("kind", MODEL_KINDS)
def test_same_seed_same_parameters(kind):
    cfg = ExperimentConfig(model_kind=kind)
    a = build_model(cfg, 4, 2, 5, seed=3)
    b = build_model(cfg, 4, 2, 5, seed=3)
    for (name_a, pa), (name_b, pb) in zip(
        a.state_dict().items(), b.state_dict().items()
    ):
        assert name_a == name_b
        assert torch.equal(pa, pb)


def test_different_seeds_differ():
    cfg = ExperimentConfig(model_kind="gcn")
    a = build_model(cfg, 4, 2, 5, seed=0)
    b = build_model(cfg, 4, 2, 5, seed=1)
    assert any(
        not torch.equal(pa, pb)
        for pa, pb in zip(a.state_dict().values(), b.state_dict().values())
    )


@pytest.mark.parametrize("kind", MODEL_KINDS)
def test_padding_is_inert(kind):
    """A graph scores the same alone and padded inside a batch."""
    cfg = ExperimentConfig(model_kind=kind)
    model = build_model(cfg, 4, 2, 5, seed=7)
    model.eval()
    x, adj, mask = _toy_tensors(n=4)
    with torch.no_grad():
        solo = model(x, adj, mask)
        xp = torch.zeros(1, 9, 4)
        xp[:, :4] = x
        adjp = torch.zeros(1, 9, 9)
        adjp[:, :4, :4] = adj
        maskp = torch.zeros(1, 9, dtype=torch.bool)
        maskp[:, :4] = True
        padded = model(xp, adjp, maskp)
    assert torch.allclose(solo, padded, atol=1e-5)


def _dense_batch(graphs, labels):
    biggest = max(n for n, _ in graphs)
    feats = 8  # wide enough that cycle and clique degrees differ one-hot
    x = torch.zeros(len(graphs), biggest, feats)
    adj = torch.zeros(len(graphs), biggest, biggest)
    mask = torch.zeros(len(graphs), biggest, dtype=torch.bool)
    for row, (n, edges) in enumerate(graphs):
        degree = np.zeros(n, dtype=np.int64)
        for u, v in edges:
            adj[row, u, v] = adj[row, v, u] = 1.0
            degree[u] += 1
            degree[v] += 1
        for node in range(n):
            x[row, node, min(int(degree[node]), feats - 1)] = 1.0
        mask[row, :n] = True
    return x, adj, mask, torch.tensor(labels)


@pytest.mark.parametrize("kind", MODEL_KINDS)
def test_overfits_toy_set(kind):
    """Every variant drives train ROC AUC past 0.95 within 200 epochs."""
    graphs, labels = toy_ten()
    x, adj, mask, y = _dense_batch(graphs, labels)
    cfg = ExperimentConfig(model_kind=kind, lr=0.01)
    model = build_model(cfg, x.shape[-1], 2, k=8, seed=0)
    optim = torch.optim.Adam(model.parameters(), lr=cfg.lr)
    loss_fn = torch.nn.CrossEntropyLoss()

    best = 0.0
    for epoch in range(200):
        model.train()
        optim.zero_grad()
        loss = loss_fn(model(x, adj, mask), y)
        loss.backward()
        optim.step()
        if epoch % 10 == 9:
            model.eval()
            with torch.no_grad():
                probs = torch.softmax(model(x, adj, mask), dim=-1)[:, 1]
            best = max(best, roc_auc_score(y.numpy(), probs.numpy()))
            if best > 0.95:
                break
    assert best > 0.95, f"{kind} only reached train AUC {best:.3f}"
