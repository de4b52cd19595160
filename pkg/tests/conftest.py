import itertools

import numpy as np
import pytest

from salpha import build_graph, generate_er_connected, generate_random_tree, is_connected, make_named


def all_connected_graphs(n):
    """Every connected labeled graph on n vertices (brute force over edge subsets)."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1, 1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        if len(edges) < n - 1:
            continue
        g = build_graph(n, edges)
        if is_connected(g):
            yield g


def random_corpus(n_er=1000, n_trees=200, seed=2024):
    """Connected ER graphs (n in 4..60, q in {0.1, 0.5, 0.9}) plus Prüfer trees."""
    rng = np.random.default_rng(seed)
    graphs = []
    qs = (0.1, 0.5, 0.9)
    for i in range(n_er):
        n = int(rng.integers(4, 61))
        graphs.append(generate_er_connected(n, qs[i % 3], seed * 100_000 + i))
    for i in range(n_trees):
        n = int(rng.integers(4, 61))
        graphs.append(generate_random_tree(n, seed * 100_000 + n_er + i))
    return graphs


@pytest.fixture
def p4():
    return make_named("path", 4)


@pytest.fixture
def paw():
    return build_graph(4, [(1, 2), (1, 3), (2, 3), (3, 4)])


@pytest.fixture(scope="session")
def small_corpus():
    return random_corpus(n_er=120, n_trees=30, seed=11)


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
