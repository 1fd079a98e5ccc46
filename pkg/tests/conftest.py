"""Shared test helpers: graph enumeration and product-state construction."""

from __future__ import annotations

from functools import reduce

import numpy as np

from gselc import graph as gr

PLUS = np.array([1.0, 1.0]) / np.sqrt(2.0)
MINUS = np.array([1.0, -1.0]) / np.sqrt(2.0)
ZERO = np.array([1.0, 0.0])
ONE = np.array([0.0, 1.0])


def all_graphs(n: int):
    """Every simple graph on n labelled vertices."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for bits in range(1 << len(pairs)):
        yield gr.from_edges(n, (p for k, p in enumerate(pairs) if (bits >> k) & 1))


def random_graph(rng: np.random.Generator, n: int) -> gr.Graph:
    g = gr.new_empty(n)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.integers(0, 2):
                g = gr.toggle_edge(g, i, j)
    return g


def kron_state(*factors) -> np.ndarray:
    """Tensor product with factors[i] on qubit i (bit i of the index)."""
    return reduce(np.kron, reversed([np.asarray(f, dtype=complex) for f in factors]))
