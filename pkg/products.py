"""Strong products and powers of graphs and digraphs.

Product vertices are dense mixed-radix ids over the factor sizes, first factor
most significant, so ``(a ⊠ b) ⊠ c`` and ``a ⊠ (b ⊠ c)`` number their
vertices identically.
"""
import itertools
import logging
import math

import attrs
import humanize

from common import BadParams, error, SizeOverflow
import config
from graphs import adjacency, distance_table, one_way_distances
from models import Digraph, Graph, GraphMorphism

logger = logging.getLogger(__name__)


def encode(coords, sizes):
    """Mixed-radix encodes factor vertex ids.

    Args:
      coords (sequence of int): one vertex id per factor
      sizes (sequence of int): factor vertex counts

    Returns:
      int
    """
    assert len(coords) == len(sizes)
    index = 0
    for coord, size in zip(coords, sizes):
        assert 0 <= coord < size, (coord, size)
        index = index * size + coord
    return index


def decode(index, sizes):
    """Inverse of :func:`encode`. Returns a tuple of factor vertex ids."""
    coords = []
    for size in reversed(sizes):
        index, coord = divmod(index, size)
        coords.append(coord)
    assert index == 0
    return tuple(reversed(coords))


def _check_size(sizes, cap):
    if cap is None:
        cap = config.PRODUCT_CAP
    total = math.prod(sizes)
    if total > cap:
        error(f'Product would have {humanize.intcomma(total)} vertices, over the cap of {humanize.intcomma(cap)}',
              cls=SizeOverflow)
    return total


def _closed_out(g):
    return [set(nbrs) | {v} for v, nbrs in enumerate(adjacency(g))]


def strong_product(a, b, cap=None):
    """Builds ``a ⊠ b``.

    ``(u, v) -> (u', v')`` is an arc when each coordinate either stays put or
    follows an arc, and not both stay put. Graphs use edges the same way.

    Args:
      a, b (Digraph or Graph): same kind
      cap (int): max product vertices, defaults to :data:`config.PRODUCT_CAP`

    Returns:
      Digraph or Graph

    Raises:
      BadParams: if one factor is directed and the other isn't
      SizeOverflow
    """
    if a.directed != b.directed:
        error("Can't take the strong product of a graph and a digraph")
    sizes = (a.vertex_count, b.vertex_count)
    total = _check_size(sizes, cap)

    out_a, out_b = _closed_out(a), _closed_out(b)
    pairs = set()
    for u, v in itertools.product(a.vertices(), b.vertices()):
        source = encode((u, v), sizes)
        for u2, v2 in itertools.product(sorted(out_a[u]), sorted(out_b[v])):
            target = encode((u2, v2), sizes)
            if target != source:
                pairs.add((source, target))

    labels = [f'({a.label(u)},{b.label(v)})'
              for u, v in itertools.product(a.vertices(), b.vertices())]
    logger.debug(f'Strong product has {humanize.intcomma(total)} vertices, {humanize.intcomma(len(pairs))} arcs')
    cls = Digraph if a.directed else Graph
    return cls(total, pairs, labels=labels)


def strong_power(g, p, cap=None):
    """Builds the p-fold strong power ``g ⊠ ... ⊠ g``.

    Raises:
      BadParams: if ``p < 1``
      SizeOverflow: checked up front, before building anything
    """
    if not isinstance(p, int) or p < 1:
        error(f'Power must be an integer >= 1, got {p!r}')
    sizes = (g.vertex_count,) * p
    _check_size(sizes, cap)

    power = g
    for _ in range(p - 1):
        power = strong_product(power, g, cap=cap)

    labels = ['(' + ','.join(g.label(c) for c in decode(i, sizes)) + ')'
              for i in range(power.vertex_count)] if p > 1 else g.labels
    return attrs.evolve(power, labels=labels)


def product_morphism(f, g, cap=None):
    """Returns ``f ⊠ g``, acting coordinatewise on the product vertices."""
    source = strong_product(f.source, g.source, cap=cap)
    target = strong_product(f.target, g.target, cap=cap)
    src_sizes = (f.source.vertex_count, g.source.vertex_count)
    tgt_sizes = (f.target.vertex_count, g.target.vertex_count)
    return GraphMorphism(source, target, tuple(
        encode((f(u), g(v)), tgt_sizes)
        for u, v in (decode(i, src_sizes) for i in source.vertices())))


def power_morphism(f, p, cap=None):
    """Returns ``f ⊠ ... ⊠ f`` on the p-fold strong powers."""
    source = strong_power(f.source, p, cap=cap)
    target = strong_power(f.target, p, cap=cap)
    src_sizes = (f.source.vertex_count,) * p
    tgt_sizes = (f.target.vertex_count,) * p
    return GraphMorphism(source, target, tuple(
        encode(f.image(decode(i, src_sizes)), tgt_sizes)
        for i in source.vertices()))


@attrs.frozen
class MaxMetricReport:
    """Product distances against the coordinatewise max of factor distances.

    Attributes:
      pairs (int): unordered product vertex pairs compared
      max_mismatches (int): pairs where the product distance isn't the max of
        the symmetrized factor distances. Always 0 for graphs.
      example (tuple): one mismatching pair of coordinate tuples, or None
      directional_holds (bool): every pair matched the smaller of the forward
        and backward coordinatewise max of one-way factor distances
      lower_bound_holds (bool): the product distance was never below the max
    """
    pairs: int
    max_mismatches: int
    example: tuple
    directional_holds: bool
    lower_bound_holds: bool


def max_metric_report(*factors, cap=None):
    """Checks product distances against factor distances, pair by pair.

    The product's distances come from BFS on the constructed product. In a
    strong product you can always move in every coordinate at once or wait in
    any of them, so one-way distances are exactly the coordinatewise max of
    one-way factor distances. Symmetrizing afterward gives the directional
    identity. For graphs that's the plain max of factor distances; for
    digraphs the plain max can undercount, eg for an arc and its reverse
    arc's coordinates.

    Args:
      factors (Digraph or Graph): all the same kind

    Returns:
      MaxMetricReport
    """
    if not factors:
        error('Need at least one factor', cls=BadParams)
    product = factors[0]
    for factor in factors[1:]:
        product = strong_product(product, factor, cap=cap)

    sizes = tuple(f.vertex_count for f in factors)
    dist = distance_table(product)
    factor_dist = [distance_table(f) for f in factors]
    factor_one_way = [one_way_distances(f) for f in factors]

    pairs = mismatches = 0
    example = None
    directional = lower_bound = True
    coords = [decode(i, sizes) for i in product.vertices()]
    for x in product.vertices():
        for y in range(x + 1, product.vertex_count):
            cx, cy = coords[x], coords[y]
            actual = dist[x][y]
            plain = max(d[u][v] for d, u, v in zip(factor_dist, cx, cy))
            forward = max(d[u][v] for d, u, v in zip(factor_one_way, cx, cy))
            backward = max(d[v][u] for d, u, v in zip(factor_one_way, cx, cy))
            pairs += 1
            if actual != plain:
                mismatches += 1
                if example is None:
                    example = (cx, cy)
            directional &= actual == min(forward, backward)
            lower_bound &= actual >= plain

    return MaxMetricReport(pairs=pairs, max_mismatches=mismatches,
                           example=example, directional_holds=directional,
                           lower_bound_holds=lower_bound)


def is_subgraph(small, big):
    """Returns True if every edge of ``small`` is an edge of ``big``, same vertices."""
    return small.vertex_count == big.vertex_count and small.edges <= big.edges
