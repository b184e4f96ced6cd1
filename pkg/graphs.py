"""Distances, morphisms, geodesic checks, and automorphisms of (di)graphs."""
from collections import deque
import logging
import threading

import cachetools
from cachetools.keys import hashkey

from common import error, INF, NotAMorphism, run_jobs, TooLarge
import config
from models import Digraph, DistanceTable, GeodesicReport, Graph, GraphMorphism

logger = logging.getLogger(__name__)


def underlying_graph(g):
    """Forgets arc directions.

    Args:
      g (Digraph)

    Returns:
      Graph: same vertices and labels, an edge wherever either arc exists
    """
    return Graph(g.vertex_count, g.arcs, labels=g.labels)


def full_preimage(g):
    """Returns the digraph with both arcs for every edge of ``g``."""
    return Digraph(g.vertex_count,
                   [(u, v) for u, v in g.edges] + [(v, u) for u, v in g.edges],
                   labels=g.labels)


def adjacency(g, reverse=False):
    """Returns out-neighbor lists, or in-neighbor lists if ``reverse``.

    Graph edges count in both directions.
    """
    adj = [[] for _ in g.vertices()]
    for u, v in g.pairs:
        if reverse and g.directed:
            u, v = v, u
        adj[u].append(v)
        if not g.directed:
            adj[v].append(u)
    return [sorted(nbrs) for nbrs in adj]


def bfs(adj, source):
    """Unweighted single source shortest paths.

    Returns:
      list: distance from ``source`` to each vertex, :data:`INF` if unreachable
    """
    dist = [INF] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if dist[v] == INF:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


@cachetools.cached(cachetools.LRUCache(config.CACHE_SIZE),
                   key=lambda g, jobs=1: hashkey(g), lock=threading.Lock())
def one_way_distances(g, jobs=1):
    """Directed shortest path lengths ``u -> v``. Not symmetrized.

    For graphs, same as :func:`distance_table`.

    Returns:
      tuple of tuples
    """
    adj = adjacency(g)
    return tuple(tuple(row) for row in
                 run_jobs(lambda u: bfs(adj, u), g.vertices(), jobs=jobs))


@cachetools.cached(cachetools.LRUCache(config.CACHE_SIZE),
                   key=lambda g, jobs=1: hashkey(g), lock=threading.Lock())
def distance_table(g, jobs=1):
    """Symmetrized shortest path distances.

    For a digraph, ``d(u, v)`` is the smaller of the directed distances
    ``u -> v`` and ``v -> u``, from one forward and one reverse BFS per source.
    That's not BFS on the underlying graph, which would allow paths that
    change direction partway.

    Args:
      g (Digraph or Graph)
      jobs (int): sources to process in parallel

    Returns:
      DistanceTable
    """
    logger.debug(f'Computing distances for {g.vertex_count} vertices, {len(g.pairs)} pairs')
    forward = one_way_distances(g, jobs=jobs)
    if not g.directed:
        return DistanceTable(forward)

    radj = adjacency(g, reverse=True)
    backward = run_jobs(lambda u: bfs(radj, u), g.vertices(), jobs=jobs)
    return DistanceTable(
        [min(f, b) for f, b in zip(frow, brow)]
        for frow, brow in zip(forward, backward))


def radius_doubled(g):
    """Returns twice the radius of ``g``: the sup of ``d`` over distinct pairs.

    :data:`INF` if any pair is unreachable in both directions, 0 if there's at
    most one vertex.
    """
    dist = distance_table(g)
    return max((dist[u][v] for u in g.vertices() for v in g.vertices() if u != v),
               default=0)


def check_morphism(m):
    """Returns True if every arc (or edge) maps to an arc or collapses.

    Args:
      m (GraphMorphism)
    """
    if m.source.directed != m.target.directed:
        return False
    pairs = m.target.pairs
    for u, v in m.source.pairs:
        fu, fv = m(u), m(v)
        if fu == fv:
            continue
        if not m.target.directed:
            fu, fv = min(fu, fv), max(fu, fv)
        if (fu, fv) not in pairs:
            return False
    return True


def geodesic_report(m):
    """Measures how far out a morphism preserves distances.

    A morphism never increases distance, so a pair fails exactly when its
    image is closer. The verified radius is one less than the smallest source
    distance of a failing pair, or ∞ when only unreachable pairs fail.

    Args:
      m (GraphMorphism)

    Returns:
      GeodesicReport

    Raises:
      NotAMorphism
    """
    if not check_morphism(m):
        error(f'Vertex map {m.vertex_map} is not a morphism', cls=NotAMorphism)

    ds = distance_table(m.source)
    dt = distance_table(m.target)
    worst = None
    any_failure = False
    for u in m.source.vertices():
        for v in range(u + 1, m.source.vertex_count):
            d_source, d_target = ds[u][v], dt[m(u)][m(v)]
            assert d_source >= d_target, (u, v, d_source, d_target)
            if d_source != d_target:
                any_failure = True
                if worst is None or d_source < worst[2]:
                    worst = (u, v, d_source, d_target)

    radius = INF if worst is None or worst[2] == INF else worst[2] - 1
    return GeodesicReport(is_morphism=True, max_verified_radius_doubled=radius,
                          is_embedding=not any_failure, counterexample=worst)


def identity_morphism(g):
    return GraphMorphism(g, g, tuple(g.vertices()))


def compose(first, second):
    """Returns ``second ∘ first``.

    Raises:
      BadParams: if ``first.target`` isn't ``second.source``
    """
    if first.target != second.source:
        error("Can't compose: first morphism's target isn't second's source")
    return GraphMorphism(first.source, second.target,
                         tuple(second(first(v)) for v in first.source.vertices()))


def _signature(g, adj, radj):
    if g.directed:
        return [(len(adj[v]), len(radj[v])) for v in g.vertices()]
    return [len(adj[v]) for v in g.vertices()]


def automorphisms(g, cap=None):
    """Enumerates every automorphism by backtracking.

    Candidates for each vertex are restricted to vertices with the same
    degree signature, and each partial assignment must agree on adjacency,
    in both directions, with every vertex already placed.

    Args:
      g (Digraph or Graph)
      cap (int): max vertex count, defaults to
        :data:`config.AUTOMORPHISM_VERTEX_CAP`

    Returns:
      list of tuple: vertex permutations, lexicographically sorted, so the
      identity comes first

    Raises:
      TooLarge
    """
    if cap is None:
        cap = config.AUTOMORPHISM_VERTEX_CAP
    if g.vertex_count > cap:
        error(f'{g.vertex_count} vertices is over the automorphism cap of {cap}',
              cls=TooLarge)

    count = g.vertex_count
    adj = adjacency(g)
    radj = adjacency(g, reverse=True)
    sig = _signature(g, adj, radj)
    arcs = {(u, v) for u in g.vertices() for v in adj[u]}

    found = []
    image = [None] * count
    used = [False] * count

    def extend(v):
        if v == count:
            found.append(tuple(image))
            return
        for w in range(count):
            if used[w] or sig[w] != sig[v]:
                continue
            if all(((u, v) in arcs) == ((image[u], w) in arcs)
                   and ((v, u) in arcs) == ((w, image[u]) in arcs)
                   for u in range(v)):
                image[v] = w
                used[w] = True
                extend(v + 1)
                used[w] = False
        image[v] = None

    extend(0)
    logger.debug(f'Found {len(found)} automorphisms of {count} vertices')
    return found
