"""Immutable value types: digraphs, graphs, distance tables, morphisms."""
import logging

import attrs
import networkx as nx

from common import error, format_distance, INF

logger = logging.getLogger(__name__)


def _labels(labels):
    return None if labels is None else tuple(str(l) for l in labels)


def _check_vertex_count(instance, attribute, count):
    if not isinstance(count, int) or count < 0:
        error(f'vertex_count must be a non-negative integer, got {count!r}')


class _Base:
    """Shared helpers for :class:`Digraph` and :class:`Graph`.

    Subclasses define ``directed`` and ``pairs``.
    """
    directed = None

    def __attrs_post_init__(self):
        for u, v in self.pairs:
            for x in u, v:
                if not isinstance(x, int) or not 0 <= x < self.vertex_count:
                    error(f'Vertex {x!r} out of range 0..{self.vertex_count - 1}')
            if u == v:
                error(f'Self-loop at vertex {u}')
        if self.labels is not None and len(self.labels) != self.vertex_count:
            error(f'Got {len(self.labels)} labels for {self.vertex_count} vertices')

    def label(self, v):
        """Returns vertex ``v``'s display label, defaulting to its id."""
        return self.labels[v] if self.labels else str(v)

    def vertices(self):
        return range(self.vertex_count)

    def to_networkx(self):
        """Returns an equivalent :class:`networkx.DiGraph` or :class:`networkx.Graph`."""
        nxg = nx.DiGraph() if self.directed else nx.Graph()
        nxg.add_nodes_from(self.vertices())
        nxg.add_edges_from(sorted(self.pairs))
        return nxg


@attrs.frozen
class Digraph(_Base):
    """A finite digraph with no self-loops.

    Vertices are dense ids ``0..vertex_count-1``. Both ``(u, v)`` and ``(v, u)``
    may be arcs.

    Attributes:
      vertex_count (int)
      arcs (frozenset of (int, int) tuples)
      labels (tuple of str): optional, cosmetic, ignored by equality
    """
    vertex_count: int = attrs.field(validator=_check_vertex_count)
    arcs: frozenset = attrs.field(
        default=frozenset(),
        converter=lambda arcs: frozenset((u, v) for u, v in arcs))
    labels: tuple = attrs.field(default=None, converter=_labels, eq=False)

    directed = True

    @property
    def pairs(self):
        return self.arcs


@attrs.frozen
class Graph(_Base):
    """A finite simple graph.

    Edges are stored as sorted ``(u, v)`` tuples with ``u < v``.

    Attributes:
      vertex_count (int)
      edges (frozenset of (int, int) tuples)
      labels (tuple of str): optional, cosmetic, ignored by equality
    """
    vertex_count: int = attrs.field(validator=_check_vertex_count)
    edges: frozenset = attrs.field(
        default=frozenset(),
        converter=lambda edges: frozenset(tuple(sorted(e)) for e in edges))
    labels: tuple = attrs.field(default=None, converter=_labels, eq=False)

    directed = False

    @property
    def pairs(self):
        return self.edges


@attrs.frozen
class DistanceTable:
    """Symmetrized shortest path distances, ∞ for unreachable pairs.

    Attributes:
      values (tuple of tuples): ``values[u][v]`` is an int or :data:`INF`
    """
    values: tuple = attrs.field(converter=lambda rows: tuple(tuple(r) for r in rows))

    def __getitem__(self, u):
        return self.values[u]

    def __len__(self):
        return len(self.values)

    def distinct(self):
        """Returns the sorted distinct off-diagonal distances, ∞ last."""
        return sorted({d for u, row in enumerate(self.values)
                       for v, d in enumerate(row) if u != v})

    def to_record(self):
        return [[format_distance(d) for d in row] for row in self.values]


def _vertex_map(instance, attribute, vertex_map):
    if len(vertex_map) != instance.source.vertex_count:
        error(f'vertex_map has {len(vertex_map)} entries for '
              f'{instance.source.vertex_count} source vertices')
    for v in vertex_map:
        if not isinstance(v, int) or not 0 <= v < instance.target.vertex_count:
            error(f'vertex_map target {v!r} out of range')


@attrs.frozen
class GraphMorphism:
    """A vertex map between two digraphs or two graphs.

    Arc preservation isn't validated here; see :func:`graphs.check_morphism`.

    Attributes:
      source (Digraph or Graph)
      target (Digraph or Graph)
      vertex_map (tuple of int): image of each source vertex
    """
    source: object
    target: object
    vertex_map: tuple = attrs.field(converter=tuple, validator=_vertex_map)

    def __call__(self, v):
        return self.vertex_map[v]

    def image(self, vertices):
        return tuple(self.vertex_map[v] for v in vertices)

    def is_injective(self):
        return len(set(self.vertex_map)) == len(self.vertex_map)


@attrs.frozen
class GeodesicReport:
    """How far out a morphism preserves distances.

    Attributes:
      is_morphism (bool)
      max_verified_radius_doubled (int or INF): largest n such that every pair
        at source distance <= n keeps its distance
      is_embedding (bool): every pair keeps its distance
      counterexample (tuple): ``(u, v, d_source, d_target)`` for a failing pair
        at the smallest failing source distance, or None
    """
    is_morphism: bool
    max_verified_radius_doubled: float
    is_embedding: bool
    counterexample: tuple = None

    def to_record(self):
        record = {
            'is_morphism': self.is_morphism,
            'max_verified_radius_doubled':
                format_distance(self.max_verified_radius_doubled),
            'is_embedding': self.is_embedding,
        }
        if self.counterexample:
            u, v, ds, dt = self.counterexample
            record['counterexample'] = [u, v, format_distance(ds), format_distance(dt)]
        return record
