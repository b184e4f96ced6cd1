"""Property suites: runnable checks of the structural claims pindy relies on.

Each suite is a generator of :class:`ClaimResult`, registered by name in
:data:`SUITES`. Every suite checks exactly one statement, keyed in
:data:`THEOREMS`, and each of its results carries that key. Claims that hold in general are *asserted*: a failure fails
the run. Claims that only hold for graphs, or only at some parameters, are
*measured*: they're reported but never fail the run.

Suites run on built-in golden examples plus seeded random instances, or on a
single user supplied (di)graph.
"""
import itertools
import logging
import math
import random

import attrs
import humanfriendly
import networkx as nx
import sympy

import capacity
from common import AlphaTimeout, CLASSICAL, Error, error, INF, RadiusTooSmall, Window
import complexes
import config
import families
import graphs
import linalg
from linalg import PrimeField, QQ
import paths
import persistence
import products

logger = logging.getLogger(__name__)

DENSITIES = (.1, .2, .3, .4, .5)

# name => Suite
SUITES = {}

# statement key => suite name
THEOREMS = {}


@attrs.frozen
class Suite:
    """A registered suite.

    Attributes:
      name (str)
      theorem (str): key of the one statement this suite checks
      description (str)
      fn: generator function taking :class:`SuiteParams`
      instances (int): default random instance count
      max_vertices (int): default size bound for random instances
    """
    name: str
    theorem: str
    description: str
    fn: object
    instances: int = 20
    max_vertices: int = 7


def suite(name, theorem, description, instances=20, max_vertices=7):
    """Registers a suite function under ``name``, checking statement ``theorem``."""
    def decorator(fn):
        assert theorem not in THEOREMS, theorem
        SUITES[name] = Suite(name=name, theorem=theorem, description=description,
                             fn=fn, instances=instances, max_vertices=max_vertices)
        THEOREMS[theorem] = name
        return fn
    return decorator


@attrs.frozen
class ClaimResult:
    """Outcome of one claim.

    Attributes:
      suite (str)
      claim (str): the claim, in words
      passed (bool)
      detail (str): instance count, or the first counterexample
      asserted (bool): False if the claim is measured only
      theorem (str): key of the statement the claim belongs to, see
        :data:`THEOREMS`
    """
    suite: str
    claim: str
    passed: bool
    detail: str = ''
    asserted: bool = True
    theorem: str = None

    def to_record(self):
        return attrs.asdict(self)


@attrs.define
class SuiteParams:
    """Knobs shared by every suite.

    Attributes:
      graph (Digraph or Graph): if set, suites run on it instead of random
        instances
      instances (int): random instances per claim family, defaults to the
        suite's own count
      seed (int)
      max_vertices (int): upper bound for random instances, defaults to the
        suite's own bound; some claims use smaller ones
    """
    graph: object = None
    instances: int = None
    seed: int = 0
    max_vertices: int = None
    dim_cap: int = attrs.Factory(lambda: config.DIM_CAP)
    max_len: int = attrs.Factory(lambda: config.MAX_LEN)
    p_max: int = attrs.Factory(lambda: config.PMAX)
    field: object = QQ
    budget: int = None


class Tally:
    """Accumulates one claim over many instances, keeping the first failure."""

    def __init__(self, claim, asserted=True):
        self.claim = claim
        self.asserted = asserted
        self.checked = 0
        self.failure = None

    def add(self, ok, detail=''):
        self.checked += 1
        if not ok and self.failure is None:
            self.failure = detail or 'failed'
        return ok

    def result(self, suite_name):
        return ClaimResult(suite=suite_name, claim=self.claim,
                           passed=self.failure is None,
                           detail=self.failure or f'{self.checked} checked',
                           asserted=self.asserted)


def _describe(g):
    kind = 'digraph' if g.directed else 'graph'
    return f'{kind} on {g.vertex_count} vertices with {sorted(g.pairs)}'


def random_instances(params, max_vertices=None, directed=True, count=None):
    """Returns ``params.graph``, or seeded random instances.

    A supplied graph is used as is, except that suites which need a digraph
    get its full preimage. ``count`` overrides ``params.instances``.
    """
    if params.graph is not None:
        g = params.graph
        if directed and not g.directed:
            g = graphs.full_preimage(g)
        elif not directed and g.directed:
            g = graphs.underlying_graph(g)
        return [g]

    top = params.max_vertices or 7
    cap = min(max_vertices or top, top)
    rng = random.Random(params.seed)
    return [families.random_pairs(rng.randint(1, cap), rng.choice(DENSITIES),
                                  rng.randrange(2 ** 32), directed)
            for _ in range(count or params.instances or 20)]


def networkx_distances(g):
    """Symmetrized distances from networkx's BFS, as an independent oracle."""
    lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
    return tuple(tuple(min(lengths[u].get(v, INF), lengths[v].get(u, INF))
                       for v in g.vertices())
                 for u in g.vertices())


def _lattice_formula(sizes):
    def distance(i, j):
        a, b = products.decode(i, sizes), products.decode(j, sizes)
        if all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b)):
            return sum(abs(x - y) for x, y in zip(a, b))
        return INF
    return distance


@suite('distances', 'closed-form-distances',
       'distance tables match closed forms and a BFS oracle', instances=100)
def check_distances(params):
    cases = [('line digraph on 12 vertices', families.line(12),
              lambda i, j: abs(i - j))]
    for r in 5, 6, 7, 12:
        cases.append((f'directed cycle of size {r}', families.cycle(r),
                      lambda i, j, r=r: min(abs(i - j), r - abs(i - j))))
    cases += [
        ('zigzag on 10 vertices', families.zigzag(10),
         lambda i, j: 1 if abs(i - j) == 1 else INF),
        ('directed lattice 4x4', families.lattice(2, 4), _lattice_formula((4, 4))),
    ]

    for name, g, formula in cases:
        dist = graphs.distance_table(g)
        bad = next(((i, j, dist[i][j]) for i, j in itertools.permutations(g.vertices(), 2)
                    if dist[i][j] != formula(i, j)), None)
        yield ClaimResult(suite='distances', claim=f'{name}: distances match the closed form',
                          passed=bad is None, detail=f'pair {bad}' if bad else '')

    oracle = Tally('distances match networkx BFS')
    for g in random_instances(params):
        oracle.add(graphs.distance_table(g).values == networkx_distances(g), _describe(g))
    yield oracle.result('distances')


@suite('domination', 'distance-domination',
       'digraph distances dominate underlying graph distances',
       instances=200, max_vertices=8)
def check_domination(params):
    dominates = Tally('d(digraph) >= d(underlying graph) pointwise')
    preimage = Tally('the full preimage of a graph has the same distances')
    for g in random_instances(params):
        under = graphs.underlying_graph(g)
        dg, du = graphs.distance_table(g), graphs.distance_table(under)
        dominates.add(all(dg[u][v] >= du[u][v]
                          for u, v in itertools.product(g.vertices(), repeat=2)),
                      _describe(g))
        preimage.add(graphs.distance_table(graphs.full_preimage(under)) == du,
                     _describe(under))

    yield dominates.result('domination')
    yield preimage.result('domination')


@suite('max-metric', 'max-metric', 'strong product distances against factor distances',
       instances=100, max_vertices=5)
def check_max_metric(params):
    directional = Tally('digraph products: d is the smaller of the forward and '
                        'backward coordinate max of one-way distances')
    lower = Tally('digraph products: d >= coordinate max')
    plain = Tally('digraph products: d = coordinate max', asserted=False)
    undirected = Tally('graph products: d = coordinate max')

    # two factors per pair
    factors = random_instances(params, max_vertices=5, count=2 * (params.instances or 100))
    pairs = (zip(factors[::2], factors[1::2]) if params.graph is None
             else [(factors[0], factors[0])])
    for a, b in pairs:
        detail = f'{_describe(a)} and {_describe(b)}'
        report = products.max_metric_report(a, b)
        directional.add(report.directional_holds, detail)
        lower.add(report.lower_bound_holds, detail)
        plain.add(report.max_mismatches == 0, f'{detail}, eg {report.example}')

        report = products.max_metric_report(graphs.underlying_graph(a),
                                            graphs.underlying_graph(b))
        undirected.add(report.max_mismatches == 0, f'{detail}, eg {report.example}')

    for tally in directional, lower, plain, undirected:
        yield tally.result('max-metric')


@suite('cyclic-dimensions', 'cyclic-dimensions',
       'Ind dimensions of directed cycles at windows (n, n+1]')
def check_cyclic_dimensions(params):
    dim_cap = max(params.dim_cap, 3)
    for n in 1, 2, 3:
        w = Window(n, n + 1)
        dims = {r: complexes.independence_complex(families.cycle(r), w, dim_cap).dimension
                for r in range(n + 2, 4 * (n + 1) + 1)}

        yield ClaimResult(suite='cyclic-dimensions',
                          claim=f'window {w}: dimension 1 at r = {2 * (n + 1)}',
                          passed=dims[2 * (n + 1)] == 1,
                          detail=f'dimension {dims[2 * (n + 1)]}')
        yield ClaimResult(suite='cyclic-dimensions',
                          claim=f'window {w}: dimension 2 at r = {3 * (n + 1)}',
                          passed=dims[3 * (n + 1)] == 2,
                          detail=f'dimension {dims[3 * (n + 1)]}')

        twos = sorted(r for r, d in dims.items() if d == 2)
        yield ClaimResult(suite='cyclic-dimensions',
                          claim=f'window {w}: dimension 2 only at r = {3 * (n + 1)}',
                          passed=twos == [3 * (n + 1)], detail=f'r = {twos}')

        ones = sorted(r for r, d in dims.items() if d == 1)
        yield ClaimResult(suite='cyclic-dimensions',
                          claim=f'window {w}: dimension 1 only at r = {2 * (n + 1)}',
                          passed=ones == [2 * (n + 1)], detail=f'r = {ones}',
                          asserted=False)


@suite('vertex-identity-maps', 'persistent-simplicial-embedding',
       'vertex identities between a digraph and its underlying graph are simplicial and chain maps',
       instances=100, max_vertices=8)
def check_vertex_identity_maps(params):
    equal = Tally('Ind(und(g), 1, ∞) = Ind(g, 1, ∞)')
    upper = Tally('Ind(und(g), n, ∞) ⊆ Ind(g, n, ∞) for n = 2, 3, 4')
    lower = Tally('Ind(g, 1, m) ⊆ Ind(und(g), 1, m) for m = 2, 3')
    chains = Tally('vertex identities are chain maps of Inf and Sup at (2, ∞) and (1, 2]')
    max_length = min(params.max_len, 2)

    for g in random_instances(params):
        detail = _describe(g)
        under = graphs.underlying_graph(g)
        a = complexes.independence_complex(under, CLASSICAL, params.dim_cap)
        b = complexes.independence_complex(g, CLASSICAL, params.dim_cap)
        equal.add(all(set(a.simplices(d)) == set(b.simplices(d))
                      for d in range(params.dim_cap + 1)), detail)

        for tally, fn, kwarg, values in ((upper, complexes.embed_i, 'n_values', (2, 3, 4)),
                                         (lower, complexes.embed_j, 'm_values', (2, 3))):
            try:
                fn(g, dim_cap=params.dim_cap, **{kwarg: values})
                tally.add(True)
            except Error as e:
                tally.add(False, f'{detail}: {e}')

        try:
            paths.identity_chain_map(g, Window(2, INF), 'i', max_length, params.field)
            paths.identity_chain_map(g, Window(1, 2), 'j', max_length, params.field)
            chains.add(True)
        except Error as e:
            chains.add(False, f'{detail}: {e}')

    for tally in equal, upper, lower, chains:
        yield tally.result('vertex-identity-maps')


@suite('geodesic-maps', 'double-persistent-embedding',
       'geodesic morphisms induce injective simplicial and chain maps')
def check_geodesic_maps(params):
    name = 'geodesic-maps'
    for r in 6, 8:
        morphism = families.line_to_cycle(r)
        report = graphs.geodesic_report(morphism)
        yield ClaimResult(suite=name, claim=f'line into cycle of size {r} is geodesic to {r // 2}',
                          passed=report.max_verified_radius_doubled == r // 2,
                          detail=str(report.to_record()))

        injective = Tally(f'line into cycle of size {r}: injective induced maps for m <= {r}/2')
        for w in complexes.grid(morphism.source).windows():
            if w.m <= r / 2:
                smap = complexes.induced_complex_map(morphism, w, params.dim_cap, report)
                injective.add(smap.is_injective(), f'window {w}')
        yield injective.result(name)

        try:
            complexes.induced_complex_map(morphism, Window(1, r // 2 + 1), params.dim_cap,
                                          report)
            raised = False
        except RadiusTooSmall:
            raised = True
        yield ClaimResult(suite=name,
                          claim=f'line into cycle of size {r}: window (1, {r // 2 + 1}] '
                                f'is past the verified radius',
                          passed=raised)

    max_length = min(params.max_len, 2)
    for dim, size in (1, 4), (2, 2):
        morphism = families.lattice_inclusion(dim, size)
        report = graphs.geodesic_report(morphism)
        yield ClaimResult(suite=name, claim=f'lattice inclusion {size}^{dim}: is an embedding',
                          passed=report.is_embedding)

        injective = Tally(f'lattice inclusion {size}^{dim}: injective induced maps everywhere')
        for w in complexes.grid(morphism.source).windows():
            smap = complexes.induced_complex_map(morphism, w, params.dim_cap, report)
            injective.add(smap.is_injective(), f'window {w}')
        yield injective.result(name)

        on_paths = Tally(f'lattice inclusion {size}^{dim}: injective chain maps on path bases')
        for w in CLASSICAL, Window(1, 2), Window(2, INF):
            try:
                cmap = paths.induced_chain_map(morphism, w, max_length, params.field, report)
            except Error as e:
                on_paths.add(False, f'window {w}: {e}')
                continue
            for basis in cmap.source.d_bases:
                images = {morphism.image(p) for p in basis.paths}
                on_paths.add(len(images) == len(basis.paths), f'window {w}')
        yield on_paths.result(name)

    parity = graphs.geodesic_report(families.zigzag_parity(8))
    yield ClaimResult(suite=name, claim='zigzag parity map: geodesic at every radius, '
                                        'not an embedding',
                      passed=(parity.max_verified_radius_doubled == INF
                              and not parity.is_embedding),
                      detail=str(parity.to_record()))

    products_tally = Tally('products of geodesic graph maps are geodesic to the smaller radius')
    path_on_cycle = families.line_to_cycle(6, directed=False)
    for f, g in ((path_on_cycle, families.lattice_inclusion(1, 2, directed=False)),
                 (families.lattice_inclusion(1, 2, directed=False),
                  families.lattice_inclusion(1, 3, directed=False))):
        expected = min(graphs.geodesic_report(f).max_verified_radius_doubled,
                       graphs.geodesic_report(g).max_verified_radius_doubled)
        report = graphs.geodesic_report(products.product_morphism(f, g))
        products_tally.add(report.max_verified_radius_doubled == expected,
                           f'expected {expected}, got {report.to_record()}')
    yield products_tally.result(name)

    first, second = families.lattice_inclusion(1, 2), families.lattice_inclusion(2, 2)
    composite = graphs.compose(first, second)
    functorial = Tally('induced chain maps respect composition')
    for w in CLASSICAL, Window(1, 2):
        direct = paths.induced_chain_map(composite, w, max_length, params.field)
        composed = paths.compose_chain_maps(
            paths.induced_chain_map(first, w, max_length, params.field),
            paths.induced_chain_map(second, w, max_length, params.field))
        for unit in itertools.chain.from_iterable(
                direct.source.units(l) for l in range(max_length + 1)):
            functorial.add(direct(unit) == composed(unit), f'window {w}, {unit}')
    yield functorial.result(name)


@suite('inf-sup', 'inf-sup-quasi-isomorphism', 'Inf and Sup path homology agree',
       instances=150)
def check_inf_sup(params):
    rng = random.Random(params.seed)
    fields = [QQ, PrimeField(2)]
    agree = {f: Tally(f'Inf and Sup Betti numbers agree over {f.name}') for f in fields}
    valid = Tally('∂² = 0 and Inf ⊆ D ⊆ Sup')
    ambient = Tally('full and regular path modules give the same Inf homology',
                    asserted=False)
    ranks = Tally(f'boundary ranks over q agree with GF({max(config.PROBE_PRIMES)}) '
                  'or an independent recheck')
    top = params.max_len

    for g in random_instances(params):
        w = rng.choice(complexes.grid(g).windows() or [CLASSICAL])
        detail = f'{_describe(g)} at {w}'
        for f in fields:
            try:
                slice = paths.chain_slice(g, w, top, f).validate()
            except AssertionError as e:
                valid.add(False, f'{detail}: {e}')
                continue
            valid.add(True)
            inf, sup = slice.betti('inf'), slice.betti('sup')
            agree[f].add(inf.betti[:top] == sup.betti[:top],
                         f'{detail}: {inf.betti} vs {sup.betti}')

        rational = paths.chain_slice(g, w, top, QQ)
        for kind in 'inf', 'sup':
            chains = rational.chains(kind)
            for degree in range(1, top + 1):
                columns = [chains.boundary(b) for b in chains.basis(degree)]
                ranks.add(linalg.cross_checked_rank(columns).confirmed,
                          f'{detail}: {kind} degree {degree}')

        regular = rational.betti('inf')
        full = paths.chain_slice(g, w, top, QQ, regular=False).betti('inf')
        ambient.add(regular.betti[:top] == full.betti[:top],
                    f'{detail}: {regular.betti} vs {full.betti}')

    for tally in [*agree.values(), valid, ranks, ambient]:
        yield tally.result('inf-sup')


@suite('persistence', 'persistence-consistency',
       'barcodes and rank invariants agree with direct homology', instances=50)
def check_persistence(params):
    degree_cap = max(min(params.dim_cap - 1, 2), 0)
    alive = Tally('bars alive at each threshold = Betti numbers of that window')
    diagonal = Tally('rank from a window to itself = its Betti number')
    composition = Tally('rank(a -> c) <= rank(a -> b), rank(b -> c) for a <= b <= c')

    for g in random_instances(params, directed=False):
        detail = _describe(g)
        for axis in 'm', 'n':
            barcode = persistence.persistence_slice(g, axis, degree_cap=degree_cap,
                                                    field=params.field)
            for i in range(len(barcode.thresholds)):
                w = barcode.window(i)
                complex = complexes.independence_complex(g, w, degree_cap + 1)
                betti = persistence.simplicial_homology(complex, degree_cap,
                                                        params.field).betti
                alive.add(all(barcode.alive(i, d) == b for d, b in enumerate(betti)),
                          f'{detail}, {axis} slice at {w}')

        rank_degree_cap = min(degree_cap, 1)
        invariant = persistence.rank_invariant(g, degree_cap=rank_degree_cap,
                                               field=params.field)
        points = invariant.points
        for w in points:
            for d in range(rank_degree_cap + 1):
                diagonal.add(invariant.rank(w, w, d) == invariant.betti[(w, d)],
                             f'{detail} at {w}')
        for a, b, c in itertools.product(points, repeat=3):
            if persistence.leq(a, b) and persistence.leq(b, c):
                for d in range(rank_degree_cap + 1):
                    ac = invariant.rank(a, c, d)
                    composition.add(ac <= invariant.rank(a, b, d)
                                    and ac <= invariant.rank(b, c, d),
                                    f'{detail}: {a} <= {b} <= {c}, degree {d}')

    for tally in alive, diagonal, composition:
        yield tally.result('persistence')


@suite('capacity', 'capacity-inequalities',
       'independence numbers of strong powers and capacity bounds', instances=50)
def check_capacity(params):
    name = 'capacity'
    c5 = families.cycle(5, directed=False)
    square = products.strong_power(c5, 2)
    values = (capacity.alpha(c5, CLASSICAL, params.budget),
              capacity.alpha(square, CLASSICAL, params.budget))
    yield ClaimResult(suite=name, claim='α(C5) = 2 and α(C5 ⊠ C5) = 5',
                      passed=values == (2, 5), detail=f'{values}')
    yield ClaimResult(suite=name, claim='branch and bound matches exhaustive search on C5 ⊠ C5',
                      passed=capacity.alpha_exhaustive(square, CLASSICAL) == values[1])
    estimate = capacity.capacity_bound(c5, CLASSICAL, p_max=2, budget=params.budget)
    yield ClaimResult(suite=name, claim='C5 capacity bound at p = 2 is sqrt(5)',
                      passed=estimate.best_bound == sympy.sqrt(5),
                      detail=str(estimate.best_bound))

    exact = Tally('branch and bound matches the networkx clique oracle')
    supermult = Tally('α(G^(p+q)) >= α(G^p) α(G^q) at (1, ∞)')
    chain = Tally('asserted α inequalities between a digraph, its underlying graph, and powers')
    measured = Tally('measured α inequalities between a digraph, its underlying graph, and powers',
                     asserted=False)
    rng = random.Random(params.seed)

    for g in random_instances(params, max_vertices=5):
        detail = _describe(g)
        w = rng.choice(complexes.grid(g).windows() or [CLASSICAL])
        exact.add(capacity.alpha(g, w, params.budget) == capacity.alpha_networkx(g, w),
                  f'{detail} at {w}')

        estimate = capacity.capacity_bound(g, CLASSICAL, p_max=params.p_max,
                                           budget=params.budget)
        supermult.add(all(holds for _, _, holds in estimate.supermultiplicativity), detail)

        for check in capacity.verify_capacity_inequalities(g, p_max=params.p_max,
                                                           budget=params.budget):
            tally = chain if check.asserted else measured
            tally.add(check.holds is not False,
                      f'{detail}: {check.claim} at p={check.p}, {check.window}, {check.values}')

    monotone = Tally('α(source^p) <= α(target^p) for geodesic maps where the premise holds')
    for morphism, windows in ((families.line_to_cycle(6), [Window(1, 2), Window(1, 3)]),
                              (families.lattice_inclusion(1, 3), [CLASSICAL, Window(1, 2)])):
        for check in capacity.verify_capacity_inequalities(
                morphism.source, p_max=params.p_max, n_values=(), m_values=(),
                morphism=morphism, windows=windows, budget=params.budget):
            monotone.add(check.holds is not False,
                         f'{check.claim} at p={check.p}, {check.window}, {check.values}')

    for tally in exact, supermult, chain, measured, monotone:
        yield tally.result(name)


def _golden_examples():
    return [
        (families.cycle(6), Window(2, 3)),
        (families.cycle(5), CLASSICAL),
        (families.cycle(5, directed=False), CLASSICAL),
        (families.zigzag(6), CLASSICAL),
        (families.generate('edgeless_digraph', n=3), CLASSICAL),
    ]


@suite('equivariance', 'equivariance',
       'symmetric group, reversal, and automorphism actions')
def check_equivariance(params):
    name = 'equivariance'
    examples = _golden_examples()
    if params.graph is not None:
        examples.append((params.graph, CLASSICAL))

    fibers = Tally('ordered configurations have k! per simplex, k <= 5')
    for g, w in examples:
        for k in range(1, 6):
            complex = complexes.independence_complex(g, w, dim_cap=k - 1)
            counts = {}
            for conf in complexes.ordered_configurations(g, w, k):
                sigma = complexes.simplex_of(conf)
                counts[sigma] = counts.get(sigma, 0) + 1
            fibers.add(set(counts) == set(complex.simplices(k - 1))
                       and all(c == math.factorial(k) for c in counts.values()),
                       f'{_describe(g)} at {w}, k={k}')
    yield fibers.result(name)

    max_length = min(params.max_len, 2)
    reversal = Tally('path bases, Inf, and Sup are closed under reversal')
    for g, w in examples:
        slice = paths.chain_slice(g, w, max_length, params.field)
        for basis in slice.d_bases:
            reversal.add({paths.reverse(p) for p in basis.paths} == set(basis.paths),
                         f'{_describe(g)} at {w}')
        for kind in 'inf', 'sup':
            for degree, vectors in enumerate(slice.bases[kind]):
                reversal.add(paths.span_is_reversal_invariant(vectors, params.field),
                             f'{_describe(g)} at {w}, {kind} degree {degree}')
    yield reversal.result(name)

    for g, expected in (families.cycle(5), 5), (families.cycle(5, directed=False), 10):
        found = len(graphs.automorphisms(g))
        yield ClaimResult(suite=name, claim=f'{_describe(g)} has {expected} automorphisms',
                          passed=found == expected, detail=f'found {found}')

    actions = Tally('automorphisms act invertibly on Ind and on Inf path homology')
    for g, w in examples:
        if g.vertex_count > config.AUTOMORPHISM_VERTEX_CAP:
            continue
        complex = complexes.independence_complex(g, w, params.dim_cap)
        slice = paths.chain_slice(g, w, max_length, params.field)
        betti = slice.betti('inf').betti
        for perm in graphs.automorphisms(g):
            detail = f'{_describe(g)} at {w}, {perm}'
            try:
                ok = complexes.automorphism_action(complex, perm).is_injective()
                ranks = paths.ChainMap(slice, slice, perm).validate().homology_ranks('inf')
                ok &= all(ranks[d] == betti[d] for d in ranks)
            except Error as e:
                ok, detail = False, f'{detail}: {e}'
            actions.add(ok, detail)
    yield actions.result(name)


def run_suites(names=None, params=None):
    """Runs suites by name, in order.

    Args:
      names (sequence of str): defaults to every suite
      params (SuiteParams)

    Returns:
      list of ClaimResult

    Raises:
      BadParams: unknown suite name
      AlphaTimeout: from the capacity suite
    """
    if params is None:
        params = SuiteParams()
    if names is None:
        names = list(SUITES)

    unknown = [n for n in names if n not in SUITES]
    if unknown:
        error(f'Unknown suite {unknown[0]!r}, expected one of {", ".join(SUITES)}')

    results = []
    for name in names:
        timer = humanfriendly.Timer()
        entry = SUITES[name]
        suite_params = attrs.evolve(params,
                                    instances=params.instances or entry.instances,
                                    max_vertices=params.max_vertices or entry.max_vertices)
        try:
            found = [attrs.evolve(r, theorem=entry.theorem)
                     for r in entry.fn(suite_params)]
        except AlphaTimeout:
            logger.warning(f'{name} timed out after {timer}')
            raise
        failed = sum(1 for r in found if r.asserted and not r.passed)
        logger.info(f'{name}: {len(found)} claims, {failed} failed, in {timer}')
        results += found
    return results


def theorem_suites(keys):
    """Returns the suite names that check the given statement keys, in order.

    Raises:
      BadParams: unknown key
    """
    unknown = [k for k in keys if k not in THEOREMS]
    if unknown:
        error(f'Unknown statement {unknown[0]!r}, expected one of {", ".join(THEOREMS)}')
    return [THEOREMS[k] for k in keys]


def all_passed(results):
    """True if every asserted claim passed. Measured claims never fail a run."""
    return all(r.passed for r in results if r.asserted)
