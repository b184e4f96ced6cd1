"""Finite windows of the example (di)graph families, plus random instances.

Vertex numbering:

* line, cycle, zigzag: vertex ``k`` is ``v_k`` (``u_[k]`` for cycles)
* lattice: coordinate tuples ``z``, mixed-radix encoded with the first
  coordinate most significant, see :func:`products.encode`

Closed-form distance claims for infinite families only survive windowing for
pairs inside the window. For the line digraph that's every pair, since
shortest paths between window vertices stay inside the window. Directed
lattices only connect componentwise comparable coordinate tuples; other pairs
are at distance ∞.
"""
import itertools
import logging
import random

from common import BadParams, error
from models import Digraph, Graph, GraphMorphism
from products import decode, encode

logger = logging.getLogger(__name__)

KINDS = (
    'complete_graph',
    'cycle_digraph',
    'cycle_graph',
    'edgeless_digraph',
    'edgeless_graph',
    'lattice_digraph',
    'lattice_graph',
    'line_digraph',
    'line_graph',
    'random_digraph',
    'random_graph',
    'segment',
    'zigzag',
)

# param name => converter
PARAMS = {
    'n': int,
    'r': int,
    'dim': int,
    'size': int,
    'density': float,
    'seed': int,
}


def _positive(name, val, minimum=1):
    if not isinstance(val, int) or val < minimum:
        error(f'{name} must be an integer >= {minimum}, got {val!r}')
    return val


def line(n, directed=True):
    """The line ``v_0 -> v_1 -> ... -> v_{n-1}``."""
    _positive('n', n)
    cls = Digraph if directed else Graph
    return cls(n, [(k, k + 1) for k in range(n - 1)],
               labels=[f'v{k}' for k in range(n)])


def cycle(r, directed=True):
    """The cycle ``u_[0] -> u_[1] -> ... -> u_[r-1] -> u_[0]``."""
    _positive('r', r)
    arcs = [(k, (k + 1) % r) for k in range(r)] if r > 1 else []
    cls = Digraph if directed else Graph
    return cls(r, arcs, labels=[f'u[{k}]' for k in range(r)])


def zigzag(n):
    """The zigzag digraph: arcs from each even vertex to its odd neighbors.

    Every vertex is a source or a sink, so there are no directed paths longer
    than one arc.
    """
    _positive('n', n)
    arcs = []
    for k in range(0, n, 2):
        arcs += [(k, j) for j in (k - 1, k + 1) if 0 <= j < n]
    return Digraph(n, arcs, labels=[f'v{k}' for k in range(n)])


def segment():
    """The directed segment: two vertices, one arc."""
    return Digraph(2, [(0, 1)], labels=['0', '1'])


def lattice(dim, size, directed=True):
    """The ``size^dim`` window of the integer lattice.

    Arcs increase one coordinate by one.
    """
    _positive('dim', dim)
    _positive('size', size)
    sizes = (size,) * dim
    count = size ** dim
    arcs = []
    for i in range(count):
        z = decode(i, sizes)
        for axis in range(dim):
            if z[axis] + 1 < size:
                z2 = z[:axis] + (z[axis] + 1,) + z[axis + 1:]
                arcs.append((i, encode(z2, sizes)))
    cls = Digraph if directed else Graph
    return cls(count, arcs,
               labels=['(' + ','.join(str(c) for c in decode(i, sizes)) + ')'
                       for i in range(count)])


def complete_graph(n):
    _positive('n', n)
    return Graph(n, itertools.combinations(range(n), 2))


def random_pairs(n, density, seed, directed):
    """Random arcs (or edges), each present independently with ``density``."""
    _positive('n', n)
    if not 0 <= density <= 1:
        error(f'density must be in [0, 1], got {density}')
    rng = random.Random(seed)
    candidates = (itertools.permutations(range(n), 2) if directed
                  else itertools.combinations(range(n), 2))
    pairs = [pair for pair in candidates if rng.random() < density]
    return (Digraph if directed else Graph)(n, pairs)


def generate(kind, **params):
    """Builds a member of a named family.

    Args:
      kind (str): one of :data:`KINDS`
      params: family parameters, eg ``n``, ``r``, ``dim``, ``size``,
        ``density``, ``seed``

    Returns:
      Digraph or Graph

    Raises:
      BadParams
    """
    try:
        match kind:
            case 'line_digraph' | 'line_graph':
                return line(params.pop('n'), directed=kind == 'line_digraph')
            case 'cycle_digraph' | 'cycle_graph':
                return cycle(params.pop('r'), directed=kind == 'cycle_digraph')
            case 'zigzag':
                return zigzag(params.pop('n'))
            case 'segment':
                return segment()
            case 'lattice_digraph' | 'lattice_graph':
                return lattice(params.pop('dim'), params.pop('size'),
                               directed=kind == 'lattice_digraph')
            case 'complete_graph':
                return complete_graph(params.pop('n'))
            case 'edgeless_digraph':
                return Digraph(_positive('n', params.pop('n'), minimum=0))
            case 'edgeless_graph':
                return Graph(_positive('n', params.pop('n'), minimum=0))
            case 'random_digraph' | 'random_graph':
                return random_pairs(params.pop('n'), params.pop('density', .3),
                                    params.pop('seed', 0),
                                    directed=kind == 'random_digraph')
            case _:
                error(f'Unknown family {kind!r}, expected one of {", ".join(KINDS)}')
    except KeyError as e:
        error(f'{kind} needs parameter {e.args[0]}')
    finally:
        if params:
            logger.warning(f'Ignoring unused {kind} params {sorted(params)}')


def parse_spec(text):
    """Parses a generator spec into a family name and params.

    Accepts ``gen:kind,key=value,...``, ``gen:kind:key=value,...``, and
    ``kind:key=value,...``.

    Returns:
      (str kind, dict params) tuple

    Raises:
      BadParams
    """
    text = text.strip().removeprefix('gen:')
    kind, _, rest = text.replace(':', ',', 1).partition(',')
    params = {}
    for item in filter(None, rest.split(',')):
        key, eq, val = item.partition('=')
        key = key.strip()
        if not eq or key not in PARAMS:
            error(f'Bad generator param {item!r} in {text!r}')
        try:
            params[key] = PARAMS[key](val.strip())
        except ValueError:
            error(f'Bad value for {key}: {val!r}')
    return kind.strip(), params


def from_spec(text):
    """Generates a (di)graph from a spec string. See :func:`parse_spec`."""
    kind, params = parse_spec(text)
    return generate(kind, **params)


def line_to_cycle(r, n=None, directed=True):
    """The canonical map from a line window onto the cycle, ``v_k -> u_[k mod r]``.

    Args:
      r (int): cycle size
      n (int): line window size, defaults to ``r`` so the map is injective
      directed (bool): False for the path graph onto the cycle graph
    """
    source = line(r if n is None else n, directed=directed)
    return GraphMorphism(source, cycle(r, directed=directed), [k % r for k in source.vertices()])


def zigzag_parity(n):
    """Maps the zigzag onto the segment by parity: even to 0, odd to 1."""
    source = zigzag(n)
    return GraphMorphism(source, segment(), [k % 2 for k in source.vertices()])


def lattice_inclusion(dim, size, directed=True):
    """Inserts a zero last coordinate: the ``dim`` lattice into the ``dim + 1`` one."""
    source = lattice(dim, size, directed=directed)
    target = lattice(dim + 1, size, directed=directed)
    sizes = (size,) * dim
    return GraphMorphism(source, target, [
        encode(decode(i, sizes) + (0,), sizes + (size,))
        for i in source.vertices()])


# name => builder
MORPHISMS = {
    'lattice_inclusion': lattice_inclusion,
    'line_to_cycle': line_to_cycle,
    'zigzag_parity': zigzag_parity,
}


def morphism_from_spec(text):
    """Builds a canonical morphism from a spec like ``line_to_cycle:r=6``.

    Same syntax as :func:`parse_spec`.

    Returns:
      GraphMorphism

    Raises:
      BadParams
    """
    kind, params = parse_spec(text)
    builder = MORPHISMS.get(kind)
    if not builder:
        error(f'Unknown morphism {kind!r}, expected one of {", ".join(MORPHISMS)}')
    try:
        return builder(**params)
    except TypeError as e:
        error(f'Bad params for {kind}: {e}')
