from __future__ import annotations

import pytest

import helpers


@pytest.fixture(scope="session")
def example():
    """The canonical six-vertex worked-example graph (nine edges)."""
    return helpers.example_graph()


@pytest.fixture(scope="session")
def example_8():
    """Eight-edge variant of the worked example (edge {1,5} removed)."""
    return helpers.example_graph_8()


@pytest.fixture(scope="session")
def suite():
    """The full benchmark suite; built once per session."""
    return helpers.suite_graphs()
