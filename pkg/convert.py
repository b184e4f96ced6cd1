"""Edge list text format, coordinate files, and structured output records.

Edge lists look like::

  # a comment
  digraph 3
  0 1
  1 2   # trailing comments are fine too

The header is ``digraph <n>`` or ``graph <n>``. Each following line is one arc
(or edge) as two vertex ids.

Records are JSON objects, one per line, with stable ``schema`` and ``kind``
fields. ∞ is the string ``"inf"``.
"""
from fractions import Fraction
import logging
import math
from pathlib import Path
import re

import jsonschema
import ujson

from common import error, INF
import config
import families
from models import Digraph, Graph

logger = logging.getLogger(__name__)

RECORD_SCHEMA = {
    'type': 'object',
    'required': ['schema', 'kind'],
    'properties': {
        'schema': {'const': config.RECORD_SCHEMA_VERSION},
        'kind': {'type': 'string'},
        'window': {
            'type': 'object',
            'required': ['n', 'm'],
            'properties': {
                'n': {'type': 'integer', 'minimum': 1},
                'm': {'anyOf': [{'type': 'integer'}, {'const': 'inf'}]},
            },
        },
    },
}

RATIONAL = {'anyOf': [
    {'type': 'integer'},
    {'type': 'string', 'pattern': r'^-?\d+(/\d+)?$'},
]}

COORDS_SCHEMA = {
    'type': 'object',
    'patternProperties': {
        r'^\d+$': {'type': 'array', 'items': RATIONAL, 'minItems': 1},
    },
    'additionalProperties': False,
}


def parse_edge_list(text):
    """Parses the edge list text format.

    Args:
      text (str)

    Returns:
      Digraph or Graph

    Raises:
      BadParams
    """
    header = None
    pairs = []
    for num, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2 or fields[0] not in ('digraph', 'graph'):
                error(f'Line {num}: expected "digraph <n>" or "graph <n>", got {line!r}')
            header = fields[0], _int(fields[1], num)
            continue
        if len(fields) != 2:
            error(f'Line {num}: expected "u v", got {line!r}')
        pairs.append((_int(fields[0], num), _int(fields[1], num)))

    if header is None:
        error('Edge list has no header')
    kind, count = header
    return (Digraph if kind == 'digraph' else Graph)(count, pairs)


def _int(val, num):
    try:
        return int(val)
    except ValueError:
        error(f'Line {num}: expected an integer, got {val!r}')


def format_edge_list(g):
    """Inverse of :func:`parse_edge_list`. Pairs are sorted."""
    kind = 'digraph' if g.directed else 'graph'
    lines = [f'{kind} {g.vertex_count}']
    lines += [f'{u} {v}' for u, v in sorted(g.pairs)]
    return '\n'.join(lines) + '\n'


def read_graph(source):
    """Loads a (di)graph from a generator spec or a file path.

    Generator specs are ``gen:kind,...``, or ``kind:key=value,...`` when no
    file of that name exists.

    Raises:
      BadParams
    """
    if source.startswith('gen:'):
        return families.from_spec(source)

    path = Path(source)
    if not path.is_file():
        kind = re.split(r'[:,]', source, maxsplit=1)[0].strip()
        if kind in families.KINDS:
            return families.from_spec(source)
        error(f'No such file: {source}')
    logger.debug(f'Reading edge list from {path}')
    return parse_edge_list(path.read_text())


def parse_coords(text, vertex_count):
    """Parses and validates a coordinates file for affine regularity checks.

    The file is a JSON object mapping vertex ids to equal-length lists of
    rationals, given as ints or ``"p/q"`` strings.

    Returns:
      dict: int vertex id => tuple of :class:`fractions.Fraction`

    Raises:
      BadParams
    """
    try:
        data = ujson.loads(text)
    except ValueError as e:
        error(f"Couldn't parse coordinates JSON: {e}")
    try:
        jsonschema.validate(data, COORDS_SCHEMA)
    except jsonschema.ValidationError as e:
        error(f'Invalid coordinates: {e.message}')

    coords = {int(v): tuple(Fraction(x) for x in point) for v, point in data.items()}
    missing = set(range(vertex_count)) - coords.keys()
    if missing:
        error(f'Coordinates missing for vertices {sorted(missing)}')
    if len({len(point) for point in coords.values()}) > 1:
        error('Coordinates have mixed dimensions')
    return coords


def to_json(val):
    """Converts a value to plain JSON types for records.

    ∞ becomes ``"inf"``, fractions and other exact numbers become strings,
    tuples become lists, dict keys become strings.
    """
    if isinstance(val, bool) or val is None or isinstance(val, (int, str)):
        return val
    if isinstance(val, float):
        return 'inf' if val == INF else val if math.isfinite(val) else str(val)
    if isinstance(val, dict):
        return {str(k): to_json(v) for k, v in val.items()}
    if isinstance(val, (list, tuple, set, frozenset)):
        vals = sorted(val) if isinstance(val, (set, frozenset)) else val
        return [to_json(v) for v in vals]
    if hasattr(val, 'to_record'):
        return to_json(val.to_record())
    return str(val)


def record(kind, **fields):
    """Builds a record dict with the schema version and kind."""
    return {'schema': config.RECORD_SCHEMA_VERSION, 'kind': kind,
            **{k: to_json(v) for k, v in fields.items()}}


def dumps(rec):
    """Serializes one record as a line of JSON, keys sorted.

    Raises:
      jsonschema.ValidationError: if the record doesn't match
        :data:`RECORD_SCHEMA`
    """
    jsonschema.validate(rec, RECORD_SCHEMA)
    return ujson.dumps(rec, sort_keys=True, ensure_ascii=False)
