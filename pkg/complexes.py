"""Window graphs and constraint independence complexes.

The constraint independence complex of a (di)graph at window (n, m] has a
simplex for every set of vertices whose pairwise distances all lie in the
window. That makes it the flag (clique) complex of the *window graph*, which
has an edge wherever a pair's distance is in the window, so it's stored as the
window graph plus a dimension cap, and simplices are enumerated lazily per
dimension in lexicographic order.

Ordered configurations are the same sets as tuples; permuting coordinates
acts freely on them, and forgetting the order is the quotient map.
"""
import itertools
import logging
import threading

import attrs
import cachetools
import humanize

from common import (
    error,
    INF,
    NotASimplicialMap,
    RadiusTooSmall,
    Window,
)
import config
import graphs
import linalg
from models import Graph

logger = logging.getLogger(__name__)


@attrs.frozen
class WindowGraph:
    """Pairs of vertices whose distance lies in a window.

    Attributes:
      base (Digraph or Graph)
      window (Window)
      edges (frozenset of (int, int)): sorted pairs
      neighbors (tuple of frozenset): per vertex, ignored by equality
    """
    base: object
    window: Window
    edges: frozenset
    neighbors: tuple = attrs.field(eq=False, repr=False)

    @property
    def vertex_count(self):
        return self.base.vertex_count

    def as_graph(self):
        return Graph(self.base.vertex_count, self.edges)

    def adjacent(self, u, v):
        return v in self.neighbors[u]


@cachetools.cached(cachetools.LRUCache(config.CACHE_SIZE), lock=threading.Lock())
def window_graph(g, w):
    """Builds the window graph: ``{u, v}`` is an edge iff ``n < d(u, v) <= m``.

    Args:
      g (Digraph or Graph)
      w (Window)

    Returns:
      WindowGraph
    """
    dist = graphs.distance_table(g)
    edges = frozenset((u, v) for u in g.vertices()
                      for v in range(u + 1, g.vertex_count)
                      if w.contains(dist[u][v]))
    neighbors = [set() for _ in g.vertices()]
    for u, v in edges:
        neighbors[u].add(v)
        neighbors[v].add(u)
    return WindowGraph(base=g, window=w, edges=edges,
                       neighbors=tuple(frozenset(n) for n in neighbors))


class WindowComplex:
    """The constraint independence complex Ind at one window.

    Simplices are sorted vertex tuples. They're materialized per dimension on
    demand, up to one past the cap so truncation can be detected.

    Attributes:
      window_graph (WindowGraph)
      dim_cap (int): max enumerated simplex dimension
    """

    def __init__(self, window_graph, dim_cap):
        if not isinstance(dim_cap, int) or dim_cap < 0:
            error(f'dim_cap must be an integer >= 0, got {dim_cap!r}')
        self.window_graph = window_graph
        self.dim_cap = dim_cap
        self._simplices = {}
        self._lock = threading.Lock()
        self._dist = graphs.distance_table(window_graph.base)
        # simplex => (minpd, maxpd)
        self._profile = {}

    @property
    def base(self):
        return self.window_graph.base

    @property
    def window(self):
        return self.window_graph.window

    def _level(self, dim):
        with self._lock:
            if dim in self._simplices:
                return self._simplices[dim]

        if dim == 0:
            level = tuple((v,) for v in range(self.window_graph.vertex_count))
        else:
            nbrs = self.window_graph.neighbors
            level = tuple(
                sigma + (v,)
                for sigma in self._level(dim - 1)
                for v in range(sigma[-1] + 1, self.window_graph.vertex_count)
                if all(v in nbrs[u] for u in sigma))

        if dim >= 1:
            logger.debug(f'{humanize.intcomma(len(level))} simplices of dimension {dim} at {self.window}')
        with self._lock:
            self._simplices[dim] = level
        return level

    def simplices(self, dim):
        """Returns the simplices of dimension ``dim``, lexicographically sorted.

        Raises:
          BadParams: if ``dim`` is over the cap
        """
        if dim > self.dim_cap:
            error(f'Dimension {dim} is over this complex\'s cap {self.dim_cap}')
        return self._level(dim) if dim >= 0 else ()

    def all_simplices(self):
        for dim in range(self.dim_cap + 1):
            yield from self.simplices(dim)

    @property
    def capped(self):
        """True if there are simplices past the dimension cap."""
        return bool(self._level(self.dim_cap + 1))

    @property
    def dimension(self):
        """Largest simplex dimension up to the cap, or -1 if there are no vertices."""
        return max((d for d in range(self.dim_cap + 1) if self._level(d)), default=-1)

    def counts(self):
        return [len(self.simplices(d)) for d in range(self.dimension + 1)]

    def contains(self, sigma):
        sigma = tuple(sorted(sigma))
        nbrs = self.window_graph.neighbors
        return (len(set(sigma)) == len(sigma)
                and all(0 <= v < self.window_graph.vertex_count for v in sigma)
                and all(v in nbrs[u] for u, v in itertools.combinations(sigma, 2)))

    def profile(self, sigma):
        """Returns ``(minpd, maxpd)``, the min and max pairwise distances.

        Vertices have ``(INF, 0)``.
        """
        if sigma not in self._profile:
            dists = [self._dist[u][v] for u, v in itertools.combinations(sigma, 2)]
            self._profile[sigma] = (min(dists, default=INF), max(dists, default=0))
        return self._profile[sigma]

    def to_record(self):
        return {
            'window': self.window.to_record(),
            'dims': self.counts(),
            'dimension': self.dimension,
            'capped': self.capped,
            'alpha': None if self.capped else self.dimension + 1,
        }


@cachetools.cached(cachetools.LRUCache(config.CACHE_SIZE), lock=threading.Lock())
def independence_complex(g, w, dim_cap=None):
    """Returns the constraint independence complex of ``g`` at window ``w``.

    Args:
      g (Digraph or Graph)
      w (Window)
      dim_cap (int): defaults to :data:`config.DIM_CAP`

    Returns:
      WindowComplex
    """
    return WindowComplex(window_graph(g, w),
                         config.DIM_CAP if dim_cap is None else dim_cap)


def ordered_configurations(g, w, k):
    """Generates k-tuples of distinct vertices with pairwise distances in ``w``.

    Enumerated directly by backtracking, in lexicographic order, not by
    permuting simplices.

    Yields:
      tuple of int
    """
    if not isinstance(k, int) or k < 1:
        error(f'k must be an integer >= 1, got {k!r}')
    wg = window_graph(g, w)
    nbrs = wg.neighbors

    def extend(prefix):
        if len(prefix) == k:
            yield prefix
            return
        for v in range(wg.vertex_count):
            if all(v in nbrs[u] for u in prefix):
                yield from extend(prefix + (v,))

    yield from extend(())


def simplex_of(configuration):
    """The quotient map from ordered configurations to simplices."""
    return tuple(sorted(configuration))


@attrs.frozen
class Grid:
    """Threshold values for the double filtration.

    Attributes:
      n_values (tuple of int): 1 and every finite distance, ascending
      m_values (tuple): every finite distance >= 2, ascending, then ∞
    """
    n_values: tuple
    m_values: tuple

    def windows(self):
        return [Window(n, m) for n in self.n_values for m in self.m_values if n < m]


def grid(g):
    """Returns the double filtration's thresholds for ``g``.

    Ind only changes when a threshold crosses a distance value, so these are
    the only thresholds that matter.
    """
    finite = [d for d in graphs.distance_table(g).distinct() if d != INF]
    return Grid(n_values=tuple(sorted({1, *finite})),
                m_values=tuple(sorted({d for d in finite if d >= 2})) + (INF,))


class FiltrationIndex:
    """Where each simplex is alive in the double filtration.

    Every complex in the filtration is a subcomplex of Ind at (1, ∞), so its
    simplices are the universe here. A simplex is alive at (n, m] iff
    ``n < minpd`` and ``maxpd <= m``, a down-set in n and an up-set in m.

    Attributes:
      complex (WindowComplex): Ind at (1, ∞)
      grid (Grid)
    """

    def __init__(self, g, dim_cap=None):
        self.complex = independence_complex(g, Window(1, INF), dim_cap)
        self.grid = grid(g)

    def profile(self, sigma):
        return self.complex.profile(sigma)

    def alive(self, sigma, w):
        minpd, maxpd = self.profile(sigma)
        return w.n < minpd and maxpd <= w.m

    def region(self, sigma):
        """Returns the grid windows where ``sigma`` is alive."""
        return [w for w in self.grid.windows() if self.alive(sigma, w)]

    def complex_at(self, w):
        """Returns the set of simplices alive at ``w``."""
        return {s for s in self.complex.all_simplices() if self.alive(s, w)}


def double_filtration(g, dim_cap=None):
    """Returns the :class:`FiltrationIndex` for ``g``."""
    return FiltrationIndex(g, dim_cap)


class SimplicialMap:
    """A vertex map between two window complexes.

    Attributes:
      source (WindowComplex)
      target (WindowComplex)
      vertex_map (tuple of int)
    """

    def __init__(self, source, target, vertex_map):
        self.source = source
        self.target = target
        self.vertex_map = tuple(vertex_map)

    def image(self, sigma):
        return tuple(sorted(self.vertex_map[v] for v in sigma))

    def validate(self):
        """Checks that simplices map to simplices of the same dimension.

        Raises:
          NotASimplicialMap
        """
        for sigma in self.source.all_simplices():
            image = self.image(sigma)
            if len(set(image)) != len(sigma) or not self.target.contains(image):
                error(f'{sigma} maps to {image}, not a simplex of the same dimension',
                      cls=NotASimplicialMap)
        return self

    def is_injective(self):
        images = [self.image(s) for s in self.source.all_simplices()]
        return len(set(images)) == len(images)

    def is_identity(self):
        """True if this is the identity map of one complex."""
        return (self.vertex_map == tuple(range(len(self.vertex_map)))
                and all(set(self.source.simplices(d)) == set(self.target.simplices(d))
                        for d in range(min(self.source.dim_cap, self.target.dim_cap) + 1)))


def embed_i(g, n_values=None, dim_cap=None):
    """Vertex identity maps Ind(und(g), n, ∞) -> Ind(g, n, ∞).

    Identities at n = 1 and inclusions beyond.

    Args:
      g (Digraph)
      n_values (sequence of int): defaults to the grid's

    Returns:
      list of validated :class:`SimplicialMap`
    """
    under = graphs.underlying_graph(g)
    if n_values is None:
        n_values = grid(g).n_values
    identity = tuple(g.vertices())
    return [SimplicialMap(independence_complex(under, Window(n, INF), dim_cap),
                          independence_complex(g, Window(n, INF), dim_cap),
                          identity).validate()
            for n in n_values]


def embed_j(g, m_values=None, dim_cap=None):
    """Vertex identity maps Ind(g, 1, m) -> Ind(und(g), 1, m).

    Args:
      g (Digraph)
      m_values (sequence): thresholds >= 2 or ∞, defaults to the grid's

    Returns:
      list of validated :class:`SimplicialMap`
    """
    under = graphs.underlying_graph(g)
    if m_values is None:
        m_values = grid(g).m_values
    identity = tuple(g.vertices())
    return [SimplicialMap(independence_complex(g, Window(1, m), dim_cap),
                          independence_complex(under, Window(1, m), dim_cap),
                          identity).validate()
            for m in m_values]


def induced_complex_map(morphism, w, dim_cap=None, report=None):
    """The simplicial map a geodesic morphism induces at one window.

    Args:
      morphism (GraphMorphism)
      w (Window)
      report (GeodesicReport): computed if not provided

    Returns:
      validated :class:`SimplicialMap`

    Raises:
      RadiusTooSmall: if the morphism isn't geodesic out to ``w.m``
    """
    if report is None:
        report = graphs.geodesic_report(morphism)
    if w.m == INF:
        ok = report.is_embedding
    else:
        ok = report.max_verified_radius_doubled >= w.m
    if not ok:
        error(f'Morphism is only verified geodesic out to doubled radius '
              f'{report.max_verified_radius_doubled}, window {w} needs {w.m}',
              cls=RadiusTooSmall)

    return SimplicialMap(independence_complex(morphism.source, w, dim_cap),
                         independence_complex(morphism.target, w, dim_cap),
                         morphism.vertex_map).validate()


def automorphism_action(complex, perm):
    """Returns the simplicial map a vertex permutation induces on ``complex``.

    Raises:
      NotASimplicialMap: if ``perm`` doesn't preserve the complex
    """
    return SimplicialMap(complex, complex, perm).validate()


def complex_automorphisms(complex, cap=None):
    """Returns the base (di)graph's automorphisms, as simplicial automorphisms.

    These are the symmetries the complex inherits from its graph. The window
    graph can have more, eg a directed cycle's window graph is undirected.
    """
    perms = graphs.automorphisms(complex.base, cap=cap)
    for perm in perms:
        automorphism_action(complex, perm)
    return perms


@attrs.frozen
class RegularityReport:
    """Result of an affine regularity check.

    Attributes:
      ok (bool)
      k (int)
      checked (int): simplices checked
      violation (tuple): first simplex whose image isn't affinely independent
      hint (str): set when the coordinate dimension is too small for any
        k points to be affinely independent
    """
    ok: bool
    k: int
    checked: int
    violation: tuple = None
    hint: str = None

    def to_record(self):
        return attrs.asdict(self)


def check_affine_regularity(g, w, k, coords):
    """Checks that every k-vertex simplex maps to affinely independent points.

    Ranks are exact, over ℚ.

    Args:
      g (Digraph or Graph)
      w (Window)
      k (int): simplex vertex count
      coords (dict): vertex => tuple of rationals, all the same length

    Returns:
      RegularityReport
    """
    if not isinstance(k, int) or k < 1:
        error(f'k must be an integer >= 1, got {k!r}')
    complex = independence_complex(g, w, dim_cap=k - 1)
    simplices = complex.simplices(k - 1)
    dim = len(next(iter(coords.values()))) if coords else 0

    if simplices and dim < k - 1:
        return RegularityReport(
            ok=False, k=k, checked=0, violation=simplices[0],
            hint=f'dimension too small: {k} points need dimension at least {k - 1}, got {dim}')

    for i, sigma in enumerate(simplices):
        origin = coords[sigma[0]]
        diffs = [{j: x - o for j, (x, o) in enumerate(zip(coords[v], origin)) if x != o}
                 for v in sigma[1:]]
        if linalg.matrix_rank(diffs) != k - 1:
            logger.info(f'{sigma} is not affinely independent')
            return RegularityReport(ok=False, k=k, checked=i + 1, violation=sigma)

    return RegularityReport(ok=True, k=k, checked=len(simplices))
