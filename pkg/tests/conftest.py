"""
Shared pytest fixtures for the SeCoNet test suite.

Fixtures here are available to every test file automatically.
"""
import json
import os

import networkx as nx
import numpy as np
import pytest


# ---------------------------------------------------------------------------
# Filesystem helpers
# ---------------------------------------------------------------------------

@pytest.fixture
def tmp_dir(tmp_path):
    """Temporary directory, cleaned up by pytest."""
    yield tmp_path


@pytest.fixture
def project_root():
    """Absolute path to the project root (one level above tests/)."""
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


# ---------------------------------------------------------------------------
# Config fixtures
# ---------------------------------------------------------------------------

@pytest.fixture
def small_scenario_dict():
    """
    A scenario small enough to run end-to-end in about a second.

    N=200 with 20 joiners per step: the growing phase ends on day 10,
    and the horizon of 60 days covers two sessions.
    """
    return {
        "growth": {
            "population_size": 200,
            "initial_links": 5,
            "joins_per_step": 20,
            "links_per_join": 2,
            "horizon": 60,
        },
        "epidemic": {
            "init_prevalence_female": 0.15,
            "init_prevalence_male": 0.10,
        },
        "vaccination": {
            "session_days": [6, 13],
            "strategies": ["none", "age", "ring", "degree"],
        },
        "sweep": [{}, {"links_per_join": 3}],
        "seed": 11,
        "replicates": 2,
    }


@pytest.fixture
def small_scenario(small_scenario_dict):
    from seconet.config.schema import ScenarioConfig, load_model
    return load_model(ScenarioConfig, small_scenario_dict)


@pytest.fixture
def scenario_file(tmp_path, small_scenario_dict):
    """Write the small scenario to ``tmp_path/scenario.json`` and return its path."""
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(small_scenario_dict), encoding="utf-8")
    return str(path)


@pytest.fixture
def growth_config():
    from seconet.config.schema import GrowthConfig
    return GrowthConfig(population_size=300, initial_links=5, joins_per_step=30, horizon=40)


@pytest.fixture
def epidemic_config():
    from seconet.config.schema import EpidemicConfig
    return EpidemicConfig(init_prevalence_female=0.1, init_prevalence_male=0.05)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# ---------------------------------------------------------------------------
# Hand-built networks
# ---------------------------------------------------------------------------

def _two_colouring(n_nodes, edges):
    graph = nx.Graph()
    graph.add_nodes_from(range(n_nodes))
    graph.add_edges_from(edges)
    colour = nx.bipartite.color(graph)
    return [1 if colour[i] == 0 else -1 for i in range(n_nodes)]


@pytest.fixture
def make_network():
    """
    Factory building a ContactNetwork from an explicit edge list.

    Genders come from a two-colouring of the graph unless given. Every node
    is joined at day 0 and every link lasts 10 000 days.

    Usage:
        net = make_network(4, [(0, 1), (1, 2), (2, 3)])
    """
    from seconet.config.schema import GrowthConfig
    from seconet.core.network import ContactNetwork, LinkKind
    from seconet.core.population import Population

    def _make(n_nodes, edges, genders=None, ages=None, lsp=None, deltas=None, joined=None, day=0):
        genders = genders if genders is not None else _two_colouring(n_nodes, edges)
        ages = ages if ages is not None else [22] * n_nodes
        lsp = lsp if lsp is not None else [10] * n_nodes
        deltas = deltas if deltas is not None else [100.0] * n_nodes
        population = Population(ages, genders, deltas, lsp)
        for i in range(n_nodes) if joined is None else joined:
            population.mark_joined(i, 0)
        network = ContactNetwork(population, GrowthConfig(population_size=n_nodes))
        for u, v in edges:
            network.add_link(u, v, 0, 10_000.0, LinkKind.PRIMARY)
        network.current_day = day
        return network

    return _make


@pytest.fixture
def path4(make_network):
    """Path a-b-c-d as nodes 0-1-2-3."""
    return make_network(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def square(make_network):
    """Four-cycle 0-1-2-3-0 (complete bipartite K2,2)."""
    return make_network(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def star3(make_network):
    """Star K1,3 with centre 0."""
    return make_network(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def random_bipartite(make_network):
    """
    Factory for random bipartite networks of at most ``n`` nodes.

    Usage:
        net = random_bipartite(seed=3, n=20, p=0.2)
    """
    def _make(seed, n=20, p=0.2):
        gen = np.random.default_rng(seed)
        half = n // 2
        edges = [
            (i, j)
            for i in range(half)
            for j in range(half, n)
            if gen.random() < p
        ]
        genders = [1] * half + [-1] * (n - half)
        return make_network(n, edges, genders=genders)

    return _make
