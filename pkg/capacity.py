"""Independence numbers of windowed strong powers and capacity lower bounds.

α at a window is the size of the largest simplex of Ind plus one, ie the
clique number of the window graph. At window (1, ∞) that's the classical
independence number, so one max clique solver serves every window.

Capacity is a limit over all powers; only the finite-p lower bounds
``max α(G^p)^(1/p)`` are ever reported.
"""
import logging

import attrs
import humanize
import networkx as nx
import sympy

from common import AlphaTimeout, error, INF, run_jobs, TooLarge, Window
import complexes
import config
import graphs
import products

logger = logging.getLogger(__name__)


def _color_sort(candidates, nbrs):
    """Greedy sequential coloring.

    Returns:
      (list of vertices, list of int color bounds) tuple, ordered by color
    """
    classes = []
    for v in candidates:
        for cls in classes:
            if not any(u in nbrs[v] for u in cls):
                cls.append(v)
                break
        else:
            classes.append([v])

    order, bounds = [], []
    for color, cls in enumerate(classes, start=1):
        order += cls
        bounds += [color] * len(cls)
    return order, bounds


def root_color_bound(wg):
    """Upper bound on α: the number of colors in a greedy coloring."""
    if not wg.vertex_count:
        return 0
    coloring = nx.coloring.greedy_color(wg.as_graph().to_networkx(),
                                        strategy='largest_first')
    return max(coloring.values()) + 1


def max_clique(wg, budget=None):
    """Branch and bound maximum clique, bounded by greedy coloring.

    Args:
      wg (complexes.WindowGraph)
      budget (int): max search nodes, defaults to :data:`config.NODE_BUDGET`

    Returns:
      tuple: a maximum clique, sorted

    Raises:
      AlphaTimeout
    """
    if budget is None:
        budget = config.NODE_BUDGET
    nbrs = wg.neighbors
    best = []
    nodes = 0

    def expand(clique, candidates):
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            upper = root_color_bound(wg)
            logger.warning(f'Out of budget after {humanize.intcomma(budget)} nodes, '
                           f'alpha is in [{len(best)}, {upper}]')
            raise AlphaTimeout(f'alpha search exceeded {budget} nodes',
                               lower=len(best), upper=upper)

        order, bounds = _color_sort(candidates, nbrs)
        for i in range(len(order) - 1, -1, -1):
            if len(clique) + bounds[i] <= len(best):
                return
            v = order[i]
            grown = clique + [v]
            rest = [u for u in order[:i] if u in nbrs[v]]
            if rest:
                expand(grown, rest)
            elif len(grown) > len(best):
                best = grown

    start = sorted(range(wg.vertex_count), key=lambda v: (-len(nbrs[v]), v))
    if start:
        expand([], start)
    logger.debug(f'Max clique {len(best)} after {humanize.intcomma(nodes)} nodes')
    return tuple(sorted(best))


def alpha(g, w, budget=None):
    """Exact α of ``g`` at window ``w``.

    Raises:
      AlphaTimeout
    """
    return len(max_clique(complexes.window_graph(g, w), budget=budget))


def alpha_exhaustive(g, w, cap=None):
    """α by enumerating every clique of the window graph, no pruning.

    Raises:
      TooLarge: over :data:`config.EXHAUSTIVE_VERTEX_CAP` vertices
    """
    if cap is None:
        cap = config.EXHAUSTIVE_VERTEX_CAP
    if g.vertex_count > cap:
        error(f'{g.vertex_count} vertices is over the exhaustive search cap of {cap}',
              cls=TooLarge)

    wg = complexes.window_graph(g, w)
    masks = [sum(1 << u for u in wg.neighbors[v]) for v in range(wg.vertex_count)]
    best = 0

    def extend(size, allowed):
        nonlocal best
        best = max(best, size)
        while allowed:
            v = allowed.bit_length() - 1
            allowed &= ~(1 << v)
            extend(size + 1, allowed & masks[v])

    extend(0, (1 << wg.vertex_count) - 1)
    return best


def alpha_networkx(g, w):
    """α via :func:`networkx.find_cliques`, as an independent oracle."""
    nxg = complexes.window_graph(g, w).as_graph().to_networkx()
    return max((len(c) for c in nx.find_cliques(nxg)), default=0)


def root_bound(a, p):
    """Returns ``a^(1/p)`` as an exact sympy number."""
    return sympy.root(sympy.Integer(a), p)


@attrs.frozen
class CapacityEstimate:
    """Finite-power lower bound on the capacity at a window.

    Attributes:
      window (Window)
      alphas (tuple of int): α of powers ``1..p_max``
      p_max (int)
      best_power (int): smallest p achieving the bound
      best_bound (sympy.Expr): ``max α_p^(1/p)``, exact
      supermultiplicativity (tuple): ``(p, q, holds)`` for each computed
        pair, where ``holds`` is ``α_{p+q} >= α_p * α_q``
    """
    window: Window
    alphas: tuple
    p_max: int
    best_power: int
    best_bound: object
    supermultiplicativity: tuple

    def to_record(self):
        return {
            'window': self.window.to_record(),
            'p_max': self.p_max,
            'alphas': list(self.alphas),
            'best_power': self.best_power,
            'bound': str(self.best_bound),
            'approx': float(self.best_bound),
            'supermultiplicative': [list(s) for s in self.supermultiplicativity],
        }


def capacity_bound(g, w, p_max=None, budget=None, cap=None, jobs=1):
    """Computes α of each strong power up to ``p_max`` and the best root.

    Roots are compared exactly: ``a^(1/p) > b^(1/q)`` iff ``a^q > b^p``.

    Args:
      g (Digraph or Graph)
      w (Window)
      p_max (int)
      budget (int): node budget per α
      cap (int): product size cap
      jobs (int): powers to solve in parallel

    Returns:
      CapacityEstimate

    Raises:
      SizeOverflow, checked before any α is computed
      AlphaTimeout
    """
    if p_max is None:
        p_max = config.PMAX
    powers = [products.strong_power(g, p, cap=cap) for p in range(1, p_max + 1)]
    alphas = run_jobs(lambda power: alpha(power, w, budget=budget), powers, jobs=jobs)

    best_power = 1
    for p, a in enumerate(alphas, start=1):
        b = alphas[best_power - 1]
        if a ** best_power > b ** p:
            best_power = p

    supermult = tuple((p, q, alphas[p + q - 1] >= alphas[p - 1] * alphas[q - 1])
                      for p in range(1, p_max + 1) for q in range(p, p_max + 1 - p))
    for p, q, holds in supermult:
        if not holds:
            logger.info(f'alpha not supermultiplicative at {w} for p={p}, q={q}')

    return CapacityEstimate(window=w, alphas=tuple(alphas), p_max=p_max,
                            best_power=best_power,
                            best_bound=root_bound(alphas[best_power - 1], best_power),
                            supermultiplicativity=supermult)


@attrs.frozen
class CapacityCheck:
    """One inequality between α values.

    Attributes:
      claim (str)
      p (int)
      window (Window)
      values (tuple of int): left side, right side
      holds (bool): None when a premise failed and nothing was compared
      asserted (bool): False for inequalities that are only measured
    """
    claim: str
    p: int
    window: Window
    values: tuple
    holds: bool
    asserted: bool = True

    def to_record(self):
        return {'claim': self.claim, 'p': self.p, 'window': self.window.to_record(),
                'values': list(self.values), 'holds': self.holds,
                'asserted': self.asserted}


def verify_capacity_inequalities(g, p_max=None, n_values=(1, 2, 3), m_values=(2, 3),
                                 morphism=None, windows=None, budget=None, cap=None):
    """Checks α inequalities across a digraph, its underlying graph, and powers.

    With m = ∞, passing from the underlying graph's power to the power's
    underlying graph to the digraph's power only grows distances, so α can
    only grow. With n = 1 the digraph's power embeds in its underlying graph,
    so that step is checked too; the others are measured but not asserted,
    since the digraph power's underlying graph can have more room than the
    underlying graph's power.

    Given a morphism, its powers are checked for geodesic radius first, and
    α(source^p) <= α(target^p) is only asserted where that premise holds.

    Args:
      g (Digraph)
      p_max (int)
      n_values (sequence of int): for windows (n, ∞)
      m_values (sequence): for windows (1, m)
      morphism (GraphMorphism): optional
      windows (sequence of Window): for the morphism, defaults to
        ``(1, m)`` for each of ``m_values``

    Returns:
      list of CapacityCheck
    """
    if p_max is None:
        p_max = config.PMAX
    under = graphs.underlying_graph(g)
    checks = []

    for p in range(1, p_max + 1):
        power = products.strong_power(g, p, cap=cap)
        power_under = graphs.underlying_graph(power)
        under_power = products.strong_power(under, p, cap=cap)

        def check(claim, w, small, big, asserted=True):
            values = (alpha(small, w, budget), alpha(big, w, budget))
            checks.append(CapacityCheck(claim=claim, p=p, window=w, values=values,
                                        holds=values[0] <= values[1], asserted=asserted))

        for n in n_values:
            w = Window(n, INF)
            check('α(und(G)^p) <= α(und(G^p))', w, under_power, power_under)
            check('α(und(G^p)) <= α(G^p)', w, power_under, power)

        for m in m_values:
            w = Window(1, m)
            check('α(G^p) <= α(und(G^p))', w, power, power_under)
            check('α(und(G^p)) <= α(und(G)^p)', w, power_under, under_power, asserted=False)
            check('α(G^p) <= α(und(G)^p)', w, power, under_power, asserted=False)

        if morphism is not None:
            mp = products.power_morphism(morphism, p, cap=cap)
            report = graphs.geodesic_report(mp)
            for w in windows or [Window(1, m) for m in m_values]:
                premise = (report.is_embedding if w.m == INF
                           else report.max_verified_radius_doubled >= w.m)
                claim = 'α(source^p) <= α(target^p)'
                if premise:
                    check(claim, w, mp.source, mp.target)
                else:
                    checks.append(CapacityCheck(claim=claim + ', premise fails', p=p,
                                                window=w, values=(), holds=None))

    return checks
