"""Exact linear algebra over ℚ and prime fields, on sparse vectors.

A vector is a dict mapping basis keys to nonzero scalars. Keys within one
vector space must be mutually comparable, eg tuples of vertex ids of one
length. A matrix is a list of column vectors.

Elimination always pivots on a column's largest key, its *low* entry, and
processes columns in order, so results are deterministic.
"""
from fractions import Fraction
import logging

import attrs
import sympy

from common import error, FieldMismatch
import config

logger = logging.getLogger(__name__)


@attrs.frozen
class Rationals:
    """The field ℚ, as :class:`fractions.Fraction`."""
    name = 'q'

    def coerce(self, x):
        return Fraction(x)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        return 1 / Fraction(a)

    def neg(self, a):
        return -a


def _check_prime(instance, attribute, p):
    if not sympy.isprime(p):
        error(f'Coefficient field needs a prime, got {p}')


@attrs.frozen
class PrimeField:
    """The field GF(p), as least non-negative residues.

    Attributes:
      p (int): prime
    """
    p: int = attrs.field(validator=_check_prime)

    @property
    def name(self):
        return f'gf{self.p}'

    def coerce(self, x):
        x = Fraction(x)
        if x.denominator % self.p == 0:
            error(f'{x} has no image in {self.name}', cls=FieldMismatch)
        return x.numerator * pow(x.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return pow(a, -1, self.p)

    def neg(self, a):
        return -a % self.p


QQ = Rationals()


def field(name):
    """Returns the field for a name: ``q``, ``gf2``, ``gf<p>``.

    Raises:
      BadParams
    """
    name = name.strip().lower()
    if name == 'q':
        return QQ
    if name.startswith('gf') and name[2:].isdigit():
        return PrimeField(int(name[2:]))
    error(f'Unknown coefficient field {name!r}, expected q, gf2, or gf<p>')


def add_scaled(field, target, source, scale):
    """``target += scale * source``, in place, dropping zeros."""
    for key, val in source.items():
        new = field.add(target.get(key, 0), field.mul(scale, val))
        if new:
            target[key] = new
        else:
            target.pop(key, None)


def scaled(field, vec, scale):
    return {k: v for k, v in ((k, field.mul(scale, v)) for k, v in vec.items()) if v}


class Reducer:
    """Incremental echelon basis over a field.

    Each stored row is normalized so its low entry is 1, and remembers how
    it combines the vectors originally added, as a *tag*: a dict from
    caller-chosen ids to scalars.
    """

    def __init__(self, field):
        self.field = field
        # low key => (vector, tag)
        self.pivots = {}

    def __len__(self):
        return len(self.pivots)

    def reduce(self, vec, tag=None):
        """Reduces ``vec`` by low pivots until its low entry is new or it's zero.

        Returns:
          (dict residual, dict tag) tuple; the residual equals ``vec`` minus
          the combination of added vectors recorded in the returned tag,
          starting from ``tag``
        """
        field = self.field
        vec = dict(vec)
        tag = dict(tag or {})
        while vec:
            low = max(vec)
            if low not in self.pivots:
                break
            row, row_tag = self.pivots[low]
            scale = field.neg(vec[low])
            add_scaled(field, vec, row, scale)
            add_scaled(field, tag, row_tag, scale)
        return vec, tag

    def add(self, vec, id=None):
        """Adds a vector.

        Args:
          vec (dict)
          id: tag id for ``vec``, used in kernel and coordinate results

        Returns:
          dict: the kernel relation as a tag if ``vec`` was dependent,
          otherwise None
        """
        field = self.field
        residual, tag = self.reduce(vec, {} if id is None else {id: field.coerce(1)})
        if not residual:
            return tag

        inv = field.inv(residual[max(residual)])
        self.pivots[max(residual)] = (scaled(field, residual, inv), scaled(field, tag, inv))
        return None

    def coordinates(self, vec):
        """Expresses ``vec`` as a combination of added vectors.

        Returns:
          dict: id => scalar, or None if ``vec`` isn't in the span
        """
        field = self.field
        vec = dict(vec)
        coords = {}
        while vec:
            low = max(vec)
            if low not in self.pivots:
                return None
            row, row_tag = self.pivots[low]
            scale = vec[low]
            add_scaled(field, vec, row, field.neg(scale))
            add_scaled(field, coords, row_tag, scale)
        return coords

    def contains(self, vec):
        return not self.reduce(vec)[0]


def matrix_rank(columns, field=QQ):
    """Returns the rank of a list of sparse column vectors."""
    reducer = Reducer(field)
    for col in columns:
        reducer.add(col)
    return len(reducer)


def kernel_basis(columns, field=QQ):
    """Returns a basis of the null space.

    Returns:
      list of dict: column index => scalar, one relation per dependent
      column, in column order
    """
    reducer = Reducer(field)
    relations = []
    for i, col in enumerate(columns):
        relation = reducer.add(col, id=i)
        if relation is not None:
            relations.append(relation)
    return relations


def image_basis(columns, field=QQ):
    """Returns the indices of the pivot columns, the first independent ones in order."""
    reducer = Reducer(field)
    return [i for i, col in enumerate(columns) if reducer.add(col) is None]


def from_rows(rows, field=QQ):
    """Converts a dense list of rows to sparse columns keyed by row index."""
    width = len(rows[0]) if rows else 0
    columns = []
    for j in range(width):
        col = {}
        for i, row in enumerate(rows):
            val = field.coerce(row[j])
            if val:
                col[i] = val
        columns.append(col)
    return columns


def combine(field, vectors, coeffs):
    """Returns ``Σ coeffs[i] * vectors[i]`` for a sparse coefficient dict."""
    out = {}
    for i, c in coeffs.items():
        add_scaled(field, out, vectors[i], c)
    return out


@attrs.frozen
class RankCheck:
    """Rank over ℚ, checked against the rank over a large prime field.

    Attributes:
      rank (int): over ℚ
      prime (int)
      modular_rank (int): over GF(prime), or None if an entry's denominator
        is divisible by ``prime``
      recomputed_rank (int): an independent ℚ rank from sympy, only computed
        when the two ranks disagree
    """
    rank: int
    prime: int
    modular_rank: int
    recomputed_rank: int = None

    @property
    def agreed(self):
        return self.rank == self.modular_rank

    @property
    def confirmed(self):
        return self.agreed or self.recomputed_rank == self.rank


def _sympy_rank(columns):
    keys = sorted(set().union(*columns)) if columns else []
    if not keys:
        return 0

    def entry(i, j):
        q = Fraction(columns[j].get(keys[i], 0))
        return sympy.Rational(q.numerator, q.denominator)

    return sympy.Matrix(len(keys), len(columns), entry).rank()


def cross_checked_rank(columns, prime=None):
    """Computes a rank over ℚ and over GF(p), and rechecks if they differ.

    The modular rank can only be lower, when ``p`` divides the relevant
    minors. On disagreement the ℚ rank is recomputed with sympy's dense
    elimination, independently of :class:`Reducer`.

    Args:
      columns (list of dict): sparse columns with rational entries
      prime (int): defaults to the largest of :data:`config.PROBE_PRIMES`

    Returns:
      RankCheck
    """
    prime = prime or max(config.PROBE_PRIMES)
    rank = matrix_rank(columns, QQ)

    gf = PrimeField(prime)
    try:
        modular = matrix_rank([{k: v for k, v in ((k, gf.coerce(v)) for k, v in col.items())
                                if v}
                               for col in columns], gf)
    except FieldMismatch:
        modular = None

    if modular == rank:
        return RankCheck(rank=rank, prime=prime, modular_rank=modular)

    recomputed = _sympy_rank(columns)
    logger.warning(f'Rank {rank} over q but {modular} over {gf.name}; sympy says {recomputed}')
    return RankCheck(rank=rank, prime=prime, modular_rank=modular,
                     recomputed_rank=recomputed)
