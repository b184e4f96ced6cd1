"""Independent elementary paths and their Inf/Sup path homology.

An independent elementary path at window (n, m] is a vertex sequence whose
consecutive distances all lie in the window, ie a walk in the window graph.
Paths with k vertices live in degree k - 1. D_ℓ is the span of the degree ℓ
paths inside the regular path module, whose boundary is the alternating face
sum with non-regular faces, those with two equal consecutive vertices,
dropped.

D isn't closed under the boundary, so homology uses two chain complexes:

* Inf_ℓ: elements of D_ℓ whose boundary lands in D_{ℓ-1}, the largest chain
  complex inside D
* Sup_ℓ: D_ℓ plus the boundaries of D_{ℓ+1}, the smallest one containing D

Their homologies agree. Homology in the top degree isn't reported exactly,
since Sup there needs paths one degree higher than were built.
"""
import logging
import threading

import attrs
import cachetools
import humanize

from common import error, FieldMismatch, INF, NotAChainMap, RadiusTooSmall, Window
import complexes
import config
import graphs
import linalg
from linalg import QQ, Reducer
import persistence

logger = logging.getLogger(__name__)


@attrs.frozen
class PathBasis:
    """All independent elementary paths of one length, lexicographically sorted.

    Attributes:
      window (Window)
      length (int): number of steps; each path has ``length + 1`` vertices
      paths (tuple of tuple)
    """
    window: Window
    length: int
    paths: tuple


@cachetools.cached(cachetools.LRUCache(config.CACHE_SIZE), lock=threading.Lock())
def path_basis(g, w, length):
    """Enumerates the walks of ``length`` steps in the window graph.

    Returns:
      PathBasis
    """
    if not isinstance(length, int) or length < 0:
        error(f'Path length must be an integer >= 0, got {length!r}')
    nbrs = complexes.window_graph(g, w).neighbors
    paths = [(v,) for v in g.vertices()]
    for _ in range(length):
        paths = [p + (v,) for p in paths for v in sorted(nbrs[p[-1]])]
    logger.debug(f'{humanize.intcomma(len(paths))} paths of length {length} at {w}')
    return PathBasis(window=w, length=length, paths=tuple(paths))


def is_regular(path):
    return all(a != b for a, b in zip(path, path[1:]))


def regular_boundary(chain, field=QQ, regular=True):
    """Alternating face sum of a chain vector.

    Args:
      chain (dict): path => scalar, all paths one length
      regular (bool): drop faces with equal consecutive vertices. If False,
        computes the boundary in the full path module instead.

    Returns:
      dict
    """
    out = {}
    for path, coeff in chain.items():
        if len(path) < 2:
            continue
        for i in range(len(path)):
            face = path[:i] + path[i + 1:]
            if regular and 0 < i < len(path) - 1 and path[i - 1] == path[i + 1]:
                continue
            c = coeff if i % 2 == 0 else field.neg(coeff)
            linalg.add_scaled(field, out, {face: c}, field.coerce(1))
    return out


def reverse(path):
    return tuple(reversed(path))


def z2_action(x):
    """Reverses a path, or every path in a chain vector. An involution."""
    if isinstance(x, dict):
        return {reverse(path): c for path, c in x.items()}
    return reverse(x)


def reversal_orbits(basis):
    """Groups a path basis into orbits of reversal.

    Returns:
      list of tuple: one or two paths each; singletons are palindromes
    """
    seen = set()
    orbits = []
    for path in basis.paths:
        if path in seen:
            continue
        orbit = tuple(sorted({path, reverse(path)}))
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


class PathChains(persistence.Chains):
    """Inf or Sup of a :class:`ChainSlice`, as a :class:`persistence.Chains`."""

    def __init__(self, slice, kind):
        self.slice = slice
        self.kind = kind
        self.field = slice.field
        self.top = slice.max_length
        self.truncated = frozenset([slice.max_length])

    def basis(self, degree):
        if degree < 0 or degree > self.top:
            return []
        return self.slice.bases[self.kind][degree]

    def boundary(self, vec):
        return regular_boundary(vec, self.field, regular=self.slice.regular)


class ChainSlice:
    """Inf and Sup path chains of one (di)graph at one window.

    Attributes:
      graph (Digraph or Graph)
      window (Window)
      max_length (int)
      field
      regular (bool): ambient module is the regular path module
      d_bases (list of PathBasis): degrees ``0..max_length + 1``
      bases (dict): ``'inf'`` and ``'sup'`` => per degree list of vectors
    """

    def __init__(self, g, w, max_length, field=QQ, regular=True):
        if not isinstance(max_length, int) or max_length < 0:
            error(f'max_length must be an integer >= 0, got {max_length!r}')
        self.graph = g
        self.window = w
        self.max_length = max_length
        self.field = field
        self.regular = regular
        self.d_bases = [path_basis(g, w, l) for l in range(max_length + 2)]
        self.bases = {
            'inf': [self._inf(l) for l in range(max_length + 1)],
            'sup': [self._sup(l) for l in range(max_length + 1)],
        }

    def units(self, length):
        one = self.field.coerce(1)
        return [{p: one} for p in self.d_bases[length].paths]

    def _inf(self, length):
        units = self.units(length)
        if length == 0:
            return units
        lower = set(self.d_bases[length - 1].paths)
        projected = [{face: c for face, c in self.boundary(u).items() if face not in lower}
                     for u in units]
        return [linalg.combine(self.field, units, rel)
                for rel in linalg.kernel_basis(projected, self.field)]

    def _sup(self, length):
        reducer = Reducer(self.field)
        basis = self.units(length)
        for u in basis:
            reducer.add(u)
        for u in self.units(length + 1):
            image = self.boundary(u)
            if reducer.add(image) is None:
                basis.append(image)
        return basis

    def boundary(self, vec):
        return regular_boundary(vec, self.field, regular=self.regular)

    def chains(self, kind):
        """Returns ``'inf'`` or ``'sup'`` as :class:`persistence.Chains`."""
        return PathChains(self, kind)

    def dims(self, kind):
        return [len(b) for b in self.bases[kind]]

    def betti(self, kind):
        return persistence.betti_table(self.chains(kind))

    def validate(self):
        """Checks ∂² = 0 and Inf_ℓ ⊆ D_ℓ ⊆ Sup_ℓ in every degree.

        Raises:
          AssertionError
        """
        for kind in 'inf', 'sup':
            for degree in range(2, self.max_length + 1):
                for vec in self.bases[kind][degree]:
                    assert not self.boundary(self.boundary(vec)), (kind, degree)

        for length in range(self.max_length + 1):
            sup = Reducer(self.field)
            for vec in self.bases['sup'][length]:
                sup.add(vec)
            d_paths = set(self.d_bases[length].paths)
            for vec in self.bases['inf'][length]:
                assert set(vec) <= d_paths, f'Inf_{length} leaves D_{length}'
            for unit in self.units(length):
                assert sup.contains(unit), f'D_{length} not in Sup_{length}'
        return self

    def to_record(self):
        inf, sup = self.betti('inf'), self.betti('sup')
        return {
            'window': self.window.to_record(),
            'field': self.field.name,
            'd': [len(b.paths) for b in self.d_bases[:self.max_length + 1]],
            'inf': self.dims('inf'),
            'sup': self.dims('sup'),
            'betti_inf': list(inf.betti),
            'betti_sup': list(sup.betti),
            'truncated': [self.max_length],
        }


@cachetools.cached(cachetools.LRUCache(config.CACHE_SIZE), lock=threading.Lock())
def chain_slice(g, w, max_length=None, field=QQ, regular=True):
    """Returns the :class:`ChainSlice` of ``g`` at ``w``, cached."""
    return ChainSlice(g, w, config.MAX_LEN if max_length is None else max_length,
                      field=field, regular=regular)


def inf_complex(g, w, max_length=None, field=QQ):
    """Returns Inf of ``g`` at ``w`` as :class:`persistence.Chains`."""
    return chain_slice(g, w, max_length, field).chains('inf')


def sup_complex(g, w, max_length=None, field=QQ):
    """Returns Sup of ``g`` at ``w`` as :class:`persistence.Chains`."""
    return chain_slice(g, w, max_length, field).chains('sup')


def span_is_reversal_invariant(vectors, field=QQ):
    """True if reversing every path maps the span of ``vectors`` into itself."""
    reducer = Reducer(field)
    for vec in vectors:
        reducer.add(vec)
    return all(reducer.contains(z2_action(vec)) for vec in vectors)


class ChainMap:
    """The chain map a vertex map induces between two chain slices.

    A path maps to its image path, or to zero if the image isn't regular.

    Attributes:
      source (ChainSlice)
      target (ChainSlice)
      vertex_map (tuple of int)
    """

    def __init__(self, source, target, vertex_map):
        if source.field != target.field:
            error(f'Source is over {source.field.name}, target over {target.field.name}',
                  cls=FieldMismatch)
        self.source = source
        self.target = target
        self.vertex_map = tuple(vertex_map)

    def __call__(self, vec):
        field = self.source.field
        out = {}
        for path, coeff in vec.items():
            image = tuple(self.vertex_map[v] for v in path)
            if is_regular(image):
                linalg.add_scaled(field, out, {image: coeff}, field.coerce(1))
        return out

    def validate(self):
        """Checks D maps into D', the square with ∂ commutes, and Inf, Sup map in.

        Raises:
          NotAChainMap
        """
        for length in range(self.source.max_length + 2):
            target_paths = set(self.target.d_bases[length].paths)
            for path in self.source.d_bases[length].paths:
                image = tuple(self.vertex_map[v] for v in path)
                if is_regular(image) and image not in target_paths:
                    error(f'{path} maps to {image}, outside the target window span',
                          cls=NotAChainMap)

        for length in range(1, self.source.max_length + 1):
            for unit in self.source.units(length):
                if self(self.source.boundary(unit)) != self.target.boundary(self(unit)):
                    error(f"Map doesn't commute with ∂ on {next(iter(unit))}",
                          cls=NotAChainMap)

        for kind in 'inf', 'sup':
            for length in range(self.source.max_length + 1):
                reducer = Reducer(self.target.field)
                for vec in self.target.bases[kind][length]:
                    reducer.add(vec)
                for vec in self.source.bases[kind][length]:
                    if not reducer.contains(self(vec)):
                        error(f'{kind}_{length} image leaves the target {kind}',
                              cls=NotAChainMap)
        return self

    def matrix(self, kind, degree):
        """The map from ``degree`` of the source to the target, in basis coordinates.

        Returns:
          list of dict: one column per source basis vector, keyed by target
          basis index
        """
        reducer = Reducer(self.target.field)
        for i, vec in enumerate(self.target.bases[kind][degree]):
            reducer.add(vec, id=i)
        columns = []
        for vec in self.source.bases[kind][degree]:
            coords = reducer.coordinates(self(vec))
            if coords is None:
                error(f'{kind}_{degree} image leaves the target', cls=NotAChainMap)
            columns.append(coords)
        return columns

    def homology_ranks(self, kind):
        """Ranks of the induced maps on homology, degrees below the top."""
        return persistence.induced_homology_rank(
            self.source.chains(kind), self.target.chains(kind), self,
            degrees=range(self.source.max_length))


def induced_chain_map(morphism, w, max_length=None, field=QQ, report=None):
    """The chain map a geodesic morphism induces at one window.

    Args:
      morphism (GraphMorphism)
      w (Window)
      report (GeodesicReport): computed if not provided

    Returns:
      validated :class:`ChainMap`

    Raises:
      RadiusTooSmall
    """
    if report is None:
        report = graphs.geodesic_report(morphism)
    ok = (report.is_embedding if w.m == INF
          else report.max_verified_radius_doubled >= w.m)
    if not ok:
        error(f'Morphism is only verified geodesic out to doubled radius '
              f'{report.max_verified_radius_doubled}, window {w} needs {w.m}',
              cls=RadiusTooSmall)
    return ChainMap(chain_slice(morphism.source, w, max_length, field),
                    chain_slice(morphism.target, w, max_length, field),
                    morphism.vertex_map).validate()


def identity_chain_map(g, w, kind, max_length=None, field=QQ):
    """Vertex identity chain maps between a digraph and its underlying graph.

    Args:
      g (Digraph)
      w (Window): must have m = ∞ for ``'i'``, n = 1 for ``'j'``
      kind (str): ``'i'`` maps the underlying graph's chains into the
        digraph's, ``'j'`` maps the digraph's into the underlying graph's

    Returns:
      validated :class:`ChainMap`
    """
    under = graphs.underlying_graph(g)
    identity = tuple(g.vertices())
    if kind == 'i':
        if w.m != INF:
            error(f'The i maps need m = ∞, got {w}')
        source, target = under, g
    elif kind == 'j':
        if w.n != 1:
            error(f'The j maps need n = 1, got {w}')
        source, target = g, under
    else:
        error(f"kind must be 'i' or 'j', got {kind!r}")
    return ChainMap(chain_slice(source, w, max_length, field),
                    chain_slice(target, w, max_length, field),
                    identity).validate()


def compose_chain_maps(first, second):
    """Returns the chain map of ``second ∘ first``'s vertex map."""
    if first.target is not second.source:
        error("Can't compose: first chain map's target isn't second's source")
    return ChainMap(first.source, second.target,
                    tuple(second.vertex_map[v] for v in first.vertex_map))
