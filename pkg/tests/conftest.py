import pytest

from graceful_spiders.model import Labeling, Tree
from graceful_spiders.paths import PathCache


@pytest.fixture
def mem_cache():
    """In-memory provider cache so tests never touch the user's cache file."""
    return PathCache(None)


def figure1_instance():
    """The 7-vertex tree G of Figure 1 with its graceful labeling f(u) = 3.

    Edges by vertex label: 0-6, 0-5, 5-1, 0-3, 3-4, 4-2. Vertex ids follow
    the label list order below; u is the vertex labeled 3.
    """
    labels = [0, 6, 5, 1, 3, 4, 2]
    vid = {lab: i for i, lab in enumerate(labels)}
    edges = [(vid[a], vid[b]) for a, b in [(0, 6), (0, 5), (5, 1), (0, 3), (3, 4), (4, 2)]]
    tree = Tree(7, edges)
    return tree, Labeling.from_sequence(labels), vid[3]
