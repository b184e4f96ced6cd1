"""Homology, persistence barcodes, and rank invariants over exact fields.

Chain complexes are anything that subclasses :class:`Chains`: per degree, a
basis of vectors in some ambient space, plus the ambient boundary operator.
Simplicial chains of window complexes and Inf/Sup path chains both work this
way, so homology, cycle and boundary spaces, and ranks of induced maps are
computed the same way for both.
"""
import itertools
import logging

import attrs
import humanize

from common import error, FieldMismatch, format_distance, INF, run_jobs, Window
import complexes
import config
import linalg
from linalg import QQ, Reducer

logger = logging.getLogger(__name__)

M_INCREASING = 'm-increasing'
N_DECREASING = 'n-decreasing'


class Chains:
    """A chain complex given by bases inside an ambient space.

    Subclasses set :attr:`field`, :attr:`top`, and :attr:`truncated`, and
    implement :meth:`basis` and :meth:`boundary`.

    Attributes:
      field: :class:`linalg.Rationals` or :class:`linalg.PrimeField`
      top (int): highest degree reported
      truncated (set of int): degrees whose homology isn't exact, since the
        next degree up wasn't built
    """
    field = QQ
    top = 0
    truncated = frozenset()

    def basis(self, degree):
        """Returns a list of independent vectors spanning this degree.

        Must work for every degree up to ``top + 1``.
        """
        raise NotImplementedError()

    def boundary(self, vec):
        raise NotImplementedError()

    def boundary_rank(self, degree):
        if degree <= 0:
            return 0
        return linalg.matrix_rank([self.boundary(b) for b in self.basis(degree)],
                                  self.field)

    def cycles(self, degree):
        """Returns a basis of the cycles in ``degree``, as ambient vectors."""
        basis = self.basis(degree)
        if degree <= 0:
            return list(basis)
        relations = linalg.kernel_basis([self.boundary(b) for b in basis], self.field)
        return [linalg.combine(self.field, basis, rel) for rel in relations]

    def boundaries(self, degree):
        """Returns a basis of the boundaries in ``degree``, as ambient vectors."""
        images = [self.boundary(b) for b in self.basis(degree + 1)]
        return [images[i] for i in linalg.image_basis(images, self.field)]


@attrs.frozen
class BettiTable:
    """Betti numbers by degree.

    Attributes:
      field (str): coefficient field name
      betti (tuple of int): degrees ``0..top``
      chain_dims (tuple of int): chain group dimensions, degrees ``0..top``
      truncated (tuple of int): degrees whose value is only the truncated
        complex's homology
    """
    field: str
    betti: tuple
    chain_dims: tuple
    truncated: tuple = ()

    def exact(self):
        """Returns the Betti numbers of degrees that aren't truncated."""
        return tuple(b for d, b in enumerate(self.betti) if d not in self.truncated)

    def to_record(self):
        return attrs.asdict(self)


def betti_table(chains):
    """Computes Betti numbers from boundary ranks.

    Checks that the boundary squares to zero on every basis vector.

    Returns:
      BettiTable
    """
    field = chains.field
    for degree in range(2, chains.top + 2):
        for b in chains.basis(degree):
            assert not chains.boundary(chains.boundary(b)), f'∂² != 0 in degree {degree}'

    dims = [len(chains.basis(d)) for d in range(chains.top + 1)]
    ranks = [chains.boundary_rank(d) for d in range(chains.top + 2)]
    betti = [dims[d] - ranks[d] - ranks[d + 1] for d in range(chains.top + 1)]
    assert all(b >= 0 for b in betti), betti

    return BettiTable(field=field.name, betti=tuple(betti), chain_dims=tuple(dims),
                      truncated=tuple(sorted(chains.truncated)))


def _unit(key, field):
    return {key: field.coerce(1)}


class SimplicialChains(Chains):
    """Simplicial chains of a :class:`complexes.WindowComplex`.

    Ambient keys are simplices, as sorted vertex tuples.
    """

    def __init__(self, complex, field=QQ, degree_cap=None):
        self.complex = complex
        self.field = field
        if degree_cap is None:
            degree_cap = complex.dim_cap
        self.top = max(min(degree_cap, complex.dim_cap), 0)
        self.truncated = (frozenset([self.top])
                          if self.top == complex.dim_cap and complex.capped
                          else frozenset())

    def basis(self, degree):
        if degree < 0 or degree > self.complex.dim_cap:
            return []
        return [_unit(s, self.field) for s in self.complex.simplices(degree)]

    def boundary(self, vec):
        field = self.field
        out = {}
        for sigma, coeff in vec.items():
            if len(sigma) < 2:
                continue
            for i in range(len(sigma)):
                face = sigma[:i] + sigma[i + 1:]
                c = coeff if i % 2 == 0 else field.neg(coeff)
                new = field.add(out.get(face, 0), c)
                if new:
                    out[face] = new
                else:
                    out.pop(face, None)
        return out


def check_euler(table, counts):
    """Checks the alternating Betti sum against enumerated simplex counts.

    Only applies when ``table`` covers every dimension in ``counts``.

    Raises:
      AssertionError
    """
    if len(counts) > len(table.betti):
        return
    chi = sum((-1) ** d * c for d, c in enumerate(counts))
    got = sum((-1) ** d * b for d, b in enumerate(table.betti))
    assert chi == got, f'Euler characteristic {chi} != {got} from {table.betti}'


def simplicial_homology(complex, degree_cap=None, field=QQ):
    """Betti numbers of a window complex.

    Degrees run up to ``min(degree_cap, complex.dim_cap)``. The top degree is
    marked truncated if it's the complex's cap and there are simplices past it.

    Returns:
      BettiTable
    """
    table = betti_table(SimplicialChains(complex, field=field, degree_cap=degree_cap))
    check_euler(table, complex.counts())
    return table


def betti_over_primes(complex, primes=None, degree_cap=None):
    """Betti numbers over ℚ and each probe prime.

    Returns:
      dict: field name => tuple of Betti numbers. Differences mean torsion,
      and are logged, not raised.
    """
    if primes is None:
        primes = config.PROBE_PRIMES
    fields = [QQ] + [linalg.PrimeField(p) for p in primes]
    result = {f.name: simplicial_homology(complex, degree_cap, f).betti for f in fields}
    if len(set(result.values())) > 1:
        logger.warning(f'Betti numbers depend on the field at {complex.window}: {result}')
    return result


@attrs.frozen
class Bar:
    """One persistence interval.

    Attributes:
      degree (int)
      birth_index (int): position in the slice's threshold order
      death_index (int): or None if the class never dies
      birth: threshold value
      death: threshold value, or None
    """
    degree: int
    birth_index: int
    death_index: int
    birth: object
    death: object

    def alive_at(self, index):
        return self.birth_index <= index and (self.death_index is None
                                              or index < self.death_index)


@attrs.frozen
class Barcode:
    """Bars of a one-parameter slice of the double filtration.

    Attributes:
      direction (str): :data:`M_INCREASING` or :data:`N_DECREASING`
      fixed: the other threshold, held constant
      thresholds (tuple): filtration order; m ascending, or n descending
      bars (tuple of Bar)
      degree_cap (int)
    """
    direction: str
    fixed: object
    thresholds: tuple
    bars: tuple
    degree_cap: int

    def window(self, index):
        t = self.thresholds[index]
        return (Window(self.fixed, t) if self.direction == M_INCREASING
                else Window(t, self.fixed))

    def alive(self, index, degree):
        """Returns the number of bars alive at a threshold index."""
        return sum(1 for bar in self.bars if bar.degree == degree and bar.alive_at(index))

    def to_records(self):
        for bar in self.bars:
            yield {
                'degree': bar.degree,
                'birth': format_distance(bar.birth),
                'death': 'inf' if bar.death is None else format_distance(bar.death),
                'direction': self.direction,
            }


def persistence_slice(g, axis, fixed=None, degree_cap=None, field=QQ):
    """Barcode of a one-parameter slice of the double filtration.

    The m slice holds n fixed (default 1) and grows m; each simplex enters at
    the first threshold at or above its max pairwise distance. The n slice
    holds m fixed (default ∞) and shrinks n, which grows the complex; the
    thresholds run in decreasing n and each simplex enters at the first one
    below its min pairwise distance. Either way it's standard column
    reduction over the filtration order.

    Args:
      g (Digraph or Graph)
      axis (str): ``'m'`` or ``'n'``
      fixed: the other threshold
      degree_cap (int): highest homology degree, defaults to
        :data:`config.DIM_CAP` minus one

    Returns:
      Barcode
    """
    if degree_cap is None:
        degree_cap = max(config.DIM_CAP - 1, 0)
    grid = complexes.grid(g)

    if axis == 'm':
        n = 1 if fixed is None else fixed
        universe = complexes.independence_complex(g, Window(n, INF), degree_cap + 1)
        thresholds = tuple(m for m in grid.m_values if m > n)
        direction = M_INCREASING

        def index(sigma):
            maxpd = universe.profile(sigma)[1]
            return next(i for i, m in enumerate(thresholds) if maxpd <= m)

    elif axis == 'n':
        m = INF if fixed is None else fixed
        universe = complexes.independence_complex(g, Window(1, m), degree_cap + 1)
        thresholds = tuple(sorted((n for n in grid.n_values if n < m), reverse=True))
        direction = N_DECREASING

        def index(sigma):
            minpd = universe.profile(sigma)[0]
            return next(i for i, n in enumerate(thresholds) if n < minpd)

    else:
        error(f"Slice axis must be 'n' or 'm', got {axis!r}")

    order = sorted(((index(s), len(s) - 1, s) for s in universe.all_simplices()))
    position = {s: pos for pos, (_, _, s) in enumerate(order)}
    logger.debug(f'Reducing {humanize.intcomma(len(order))} simplices over {len(thresholds)} thresholds')

    # low position => reduced column
    pivots = {}
    paired = {}
    for j, (_, dim, sigma) in enumerate(order):
        col = {}
        for i in (range(len(sigma)) if dim > 0 else ()):
            face = position[sigma[:i] + sigma[i + 1:]]
            col[face] = field.coerce(1) if i % 2 == 0 else field.neg(field.coerce(1))
        while col:
            low = max(col)
            if low not in pivots:
                break
            pivot = pivots[low]
            linalg.add_scaled(field, col, pivot,
                              field.neg(field.mul(col[low], field.inv(pivot[low]))))
        if col:
            pivots[max(col)] = col
            paired[max(col)] = j

    bars = []
    killers = set(paired.values())
    for i, (birth_index, dim, _) in enumerate(order):
        if dim > degree_cap or i in killers:
            continue
        j = paired.get(i)
        death_index = None if j is None else order[j][0]
        if death_index == birth_index:
            continue
        bars.append(Bar(degree=dim, birth_index=birth_index, death_index=death_index,
                        birth=thresholds[birth_index],
                        death=None if death_index is None else thresholds[death_index]))

    return Barcode(direction=direction,
                   fixed=universe.window.n if axis == 'm' else universe.window.m,
                   thresholds=thresholds, bars=tuple(bars), degree_cap=degree_cap)


def leq(a, b):
    """True if Ind at window ``a`` is a subcomplex of Ind at window ``b``."""
    return b.n <= a.n and a.m <= b.m


@attrs.frozen
class RankInvariant:
    """Ranks of homology maps between comparable grid windows.

    Attributes:
      points (tuple of Window)
      betti (dict): (window, degree) => Betti number
      ranks (dict): (smaller window, larger window, degree) => rank
    """
    points: tuple
    betti: dict
    ranks: dict

    def rank(self, a, b, degree):
        return self.ranks[(a, b, degree)]

    def to_records(self):
        for (a, b, degree), rank in sorted(self.ranks.items()):
            yield {'from': a.to_record(), 'to': b.to_record(), 'degree': degree,
                   'rank': rank}


def _cycles_and_boundaries(g, w, degree_cap, field):
    chains = SimplicialChains(complexes.independence_complex(g, w, degree_cap + 1),
                              field=field, degree_cap=degree_cap)
    return ([chains.cycles(d) for d in range(degree_cap + 1)],
            [chains.boundaries(d) for d in range(degree_cap + 1)])


def map_rank(images, target_boundaries, field):
    """Rank of a map on homology: ``dim(images + boundaries) - dim(boundaries)``."""
    reducer = Reducer(field)
    for b in target_boundaries:
        reducer.add(b)
    base = len(reducer)
    for vec in images:
        reducer.add(vec)
    return len(reducer) - base


def rank_invariant(g, degree_cap=None, field=QQ, points=None, jobs=1):
    """Ranks of the maps induced by every inclusion between grid windows.

    Cycles of the smaller complex are already chains of the larger one, so
    each rank comes from reducing them against the larger one's boundaries.

    Args:
      g (Digraph or Graph)
      degree_cap (int)
      points (sequence of Window): defaults to every grid window
      jobs (int)

    Returns:
      RankInvariant
    """
    if degree_cap is None:
        degree_cap = max(config.DIM_CAP - 1, 0)
    if points is None:
        points = complexes.grid(g).windows()
    points = tuple(points)

    spaces = dict(zip(points, run_jobs(
        lambda w: _cycles_and_boundaries(g, w, degree_cap, field), points, jobs=jobs)))
    betti = {(w, d): len(spaces[w][0][d]) - len(spaces[w][1][d])
             for w in points for d in range(degree_cap + 1)}

    keys = [(a, b, d) for a, b in itertools.product(points, points) if leq(a, b)
            for d in range(degree_cap + 1)]
    ranks = run_jobs(lambda key: map_rank(spaces[key[0]][0][key[2]],
                                          spaces[key[1]][1][key[2]], field),
                     keys, jobs=jobs)
    logger.info(f'Computed {humanize.intcomma(len(keys))} ranks over {len(points)} windows')
    return RankInvariant(points=points, betti=betti, ranks=dict(zip(keys, ranks)))


def induced_homology_rank(source, target, chain_map, degrees=None):
    """Ranks of the map a chain map induces on homology.

    Args:
      source, target (Chains)
      chain_map (callable): ambient source vector => ambient target vector
      degrees (iterable of int): defaults to every degree both report

    Returns:
      dict: degree => rank

    Raises:
      FieldMismatch
    """
    if source.field != target.field:
        error(f'Source is over {source.field.name}, target over {target.field.name}',
              cls=FieldMismatch)
    if degrees is None:
        degrees = range(min(source.top, target.top) + 1)
    return {d: map_rank([chain_map(z) for z in source.cycles(d)],
                        target.boundaries(d), source.field)
            for d in degrees}


def simplicial_chain_map(smap, field=QQ):
    """The chain map of a :class:`complexes.SimplicialMap`.

    Degenerate images go to zero; the rest pick up the sign of sorting the
    image's vertices.
    """
    def apply(vec):
        out = {}
        for sigma, coeff in vec.items():
            image = [smap.vertex_map[v] for v in sigma]
            if len(set(image)) != len(image):
                continue
            inversions = sum(1 for a, b in itertools.combinations(image, 2) if a > b)
            c = coeff if inversions % 2 == 0 else field.neg(coeff)
            linalg.add_scaled(field, out, {tuple(sorted(image)): c}, field.coerce(1))
        return out

    return apply
