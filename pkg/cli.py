"""Command line front end.

Run with ``python3 cli.py <verb> --input <source> ...``. Inputs are edge list
files or generator specs like ``gen:cycle_digraph,r=6``. Output is human
readable tables by default, or one JSON record per line with
``--format records``, or ``PINDY_FORMAT=records``. Command options can also be
set from the environment, eg ``PINDY_CAPACITY_PMAX=3``.

Exit status is 0 on success, 1 if a requested check fails, 2 for usage and
size errors, and 3 if an independence number search runs out of budget.
"""
import functools
import itertools
import logging
from pathlib import Path

import attrs
import click
from humanfriendly.tables import format_pretty_table

import capacity
from common import (
    AlphaTimeout,
    BadParams,
    error,
    Error,
    format_distance,
    parse_distance,
    RadiusTooSmall,
    Window,
)
import complexes
import config
import convert
import families
import graphs
import linalg
from models import GraphMorphism
import paths
import persistence
import products
import verify

logger = logging.getLogger(__name__)


class WindowType(click.ParamType):
    name = 'window'

    def convert(self, value, param, ctx):
        if isinstance(value, Window):
            return value
        try:
            return Window.parse(value)
        except BadParams as e:
            self.fail(str(e), param, ctx)


class GraphType(click.ParamType):
    name = 'graph'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return convert.read_graph(value)
        except BadParams as e:
            self.fail(str(e), param, ctx)


class FieldType(click.ParamType):
    name = 'coeff'

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return value
        try:
            return linalg.field(value)
        except BadParams as e:
            self.fail(str(e), param, ctx)


WINDOW = WindowType()
GRAPH = GraphType()
FIELD = FieldType()


def input_option(required=True):
    return click.option('--input', 'g', type=GRAPH, required=required,
                        help='Edge list file or generator spec, eg gen:cycle_digraph,r=6')


window_option = click.option('--window', type=WINDOW, default='1:inf', show_default=True,
                             help='Window n:m, m may be inf')
dim_cap_option = click.option('--dim-cap', type=click.IntRange(min=0),
                              default=config.DIM_CAP, show_default=True,
                              help='Max simplex dimension to enumerate')
max_len_option = click.option('--max-len', type=click.IntRange(min=0),
                              default=config.MAX_LEN, show_default=True,
                              help='Max path length for path homology')
pmax_option = click.option('--pmax', type=click.IntRange(min=1),
                           default=config.PMAX, show_default=True,
                           help='Max strong power')
coeff_option = click.option('--coeff', type=FIELD, default=config.COEFF,
                            show_default=True, help='Coefficient field: q, gf2, gf<p>')
budget_option = click.option('--budget', type=click.IntRange(min=1),
                             default=config.NODE_BUDGET, show_default=True,
                             help='Branch and bound nodes per independence number')


def handle_errors(fn):
    """Maps :class:`common.Error` to its exit status, with the message on stderr."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return fn(*args, **kwargs)
        except AlphaTimeout as e:
            emit([convert.record('timeout', message=str(e), lower=e.lower, upper=e.upper)],
                 lines=[f'Timed out: alpha is between {e.lower} and {e.upper}'])
            click.echo(f'Error: {e}', err=True)
            ctx.exit(e.status)
        except Error as e:
            click.echo(f'Error: {e}', err=True)
            ctx.exit(e.status)
    return wrapper


def emit(records, tables=(), lines=()):
    """Writes records, or their human readable rendering.

    Args:
      records (sequence of dict): from :func:`convert.record`
      tables (sequence): ``(column names, rows)`` tuples for human output
      lines (sequence of str): extra human output after the tables
    """
    if click.get_current_context().obj['format'] == 'records':
        for rec in records:
            click.echo(convert.dumps(rec))
        return

    for columns, rows in tables:
        click.echo(format_pretty_table([[str(val) for val in row] for row in rows],
                                       column_names=columns))
    for line in lines:
        click.echo(line)


def fail(msg, status=1):
    click.echo(f'Error: {msg}', err=True)
    click.get_current_context().exit(status)


@click.group(context_settings={'auto_envvar_prefix': 'PINDY',
                               'help_option_names': ['-h', '--help']})
@click.option('--format', 'fmt', type=click.Choice(['human', 'records']),
              default='human', show_default=True, envvar='PINDY_FORMAT')
@click.option('--jobs', type=click.IntRange(min=1), default=config.JOBS, show_default=True,
              help='Worker threads for independent computations')
@click.option('-v', '--verbose', is_flag=True, help='Debug logging on stderr')
@click.pass_context
def cli(ctx, fmt, jobs, verbose):
    """Constraint independence complexes, path homology, and capacity bounds."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    ctx.ensure_object(dict)
    ctx.obj.update(format=fmt, jobs=jobs)


@cli.command()
@input_option()
@click.pass_obj
@handle_errors
def dist(obj, g):
    """Symmetrized distance table."""
    table = graphs.distance_table(g, jobs=obj['jobs'])
    records = [convert.record('distance', u=u, v=v, d=format_distance(table[u][v]))
               for u, v in itertools.product(g.vertices(), repeat=2)]
    labels = [g.label(v) for v in g.vertices()]
    rows = [[labels[u]] + [format_distance(d) for d in table[u]] for u in g.vertices()]
    emit(records, tables=[([''] + labels, rows)])


@cli.command()
@input_option()
@window_option
@dim_cap_option
@click.option('--list', 'list_simplices', is_flag=True, help='Also list every simplex')
@handle_errors
def ind(g, window, dim_cap, list_simplices):
    """Constraint independence complex at one window."""
    complex = complexes.independence_complex(g, window, dim_cap)
    summary = complex.to_record()
    records = [convert.record('complex', **summary)]
    tables = [(['dimension', 'simplices'], list(enumerate(complex.counts())))]
    if list_simplices:
        simplices = list(complex.all_simplices())
        records += [convert.record('simplex', window=window, dim=len(s) - 1, vertices=s)
                    for s in simplices]
        tables.append((['simplex'], [[' '.join(g.label(v) for v in s)] for s in simplices]))

    alpha = summary['alpha'] if summary['alpha'] is not None else f'> {dim_cap + 1}, capped'
    emit(records, tables=tables,
         lines=[f'Ind at {window.label()}: dimension {complex.dimension}, alpha {alpha}'])


@cli.command('path-homology')
@input_option()
@window_option
@max_len_option
@coeff_option
@handle_errors
def path_homology(g, window, max_len, coeff):
    """Inf and Sup path homology at one window."""
    slice = paths.chain_slice(g, window, max_len, coeff).validate()
    rec = slice.to_record()
    rows = [[d, rec['d'][d], rec['inf'][d], rec['sup'][d], rec['betti_inf'][d],
             rec['betti_sup'][d], 'no' if d in rec['truncated'] else 'yes']
            for d in range(max_len + 1)]
    emit([convert.record('path_homology', **rec)],
         tables=[(['degree', 'D', 'Inf', 'Sup', 'betti Inf', 'betti Sup', 'exact'], rows)])


@cli.command()
@input_option()
@click.option('--slice', 'axis', type=click.Choice(['n', 'm']), required=True,
              help='Which threshold varies')
@click.option('--fixed', default=None, help='The other threshold; n defaults to 1, m to inf')
@dim_cap_option
@coeff_option
@handle_errors
def persist(g, axis, fixed, dim_cap, coeff):
    """Barcode of one slice of the double filtration."""
    barcode = persistence.persistence_slice(
        g, axis, fixed=None if fixed is None else parse_distance(fixed),
        degree_cap=max(dim_cap - 1, 0), field=coeff)
    records = [convert.record('bar', fixed=format_distance(barcode.fixed), **rec)
               for rec in barcode.to_records()]
    rows = [[r['degree'], r['birth'], r['death']] for r in barcode.to_records()]
    emit(records, tables=[(['degree', 'birth', 'death'], rows)],
         lines=[f'{barcode.direction} slice, {len(rows)} bars'])


def _parse_points(text):
    if text == 'auto':
        return None
    return [Window.parse(w) for w in text.split(',')]


@cli.command('rank-invariant')
@input_option()
@click.option('--grid', 'points', default='auto', show_default=True,
              help='auto for every grid window, or windows like 1:2,1:inf')
@dim_cap_option
@coeff_option
@click.pass_obj
@handle_errors
def rank_invariant(obj, g, points, dim_cap, coeff):
    """Ranks of homology maps between comparable windows."""
    invariant = persistence.rank_invariant(g, degree_cap=max(dim_cap - 1, 0), field=coeff,
                                           points=_parse_points(points), jobs=obj['jobs'])
    records = [convert.record('rank', **rec) for rec in invariant.to_records()]
    rows = [[Window(**r['from']), Window(**r['to']), r['degree'], r['rank']]
            for r in invariant.to_records()]
    emit(records, tables=[(['from', 'to', 'degree', 'rank'], rows)])


@cli.command('capacity')
@input_option()
@window_option
@pmax_option
@budget_option
@click.option('--product-cap', type=click.IntRange(min=1), default=config.PRODUCT_CAP,
              show_default=True, help='Max vertices in a strong power')
@click.pass_obj
@handle_errors
def capacity_command(obj, g, window, pmax, budget, product_cap):
    """Independence numbers of strong powers and the capacity lower bound."""
    estimate = capacity.capacity_bound(g, window, p_max=pmax, budget=budget,
                                       cap=product_cap, jobs=obj['jobs'])
    roots = [capacity.root_bound(a, p) for p, a in enumerate(estimate.alphas, start=1)]
    records = [convert.record('power', window=window, p=p, alpha=a, root=str(root),
                              approx=float(root))
               for p, (a, root) in enumerate(zip(estimate.alphas, roots), start=1)]
    records.append(convert.record('capacity', **estimate.to_record()))

    rows = [[p, a, root, f'{float(root):.6f}']
            for p, (a, root) in enumerate(zip(estimate.alphas, roots), start=1)]
    emit(records, tables=[(['p', 'alpha', 'alpha^(1/p)', 'approx'], rows)],
         lines=[f'Capacity at {window.label()} >= {estimate.best_bound} '
                f'≈ {float(estimate.best_bound):.6f}, from p = {estimate.best_power}'])


@cli.command()
@input_option()
@click.option('--with', 'other', type=GRAPH, help='Second factor')
@click.option('--power', type=click.IntRange(min=1), help='Strong power of the input')
@click.option('--check-metric', is_flag=True,
              help='Compare product distances with factor distances')
@click.option('--product-cap', type=click.IntRange(min=1), default=config.PRODUCT_CAP,
              show_default=True)
@handle_errors
def product(g, other, power, check_metric, product_cap):
    """Strong product with another (di)graph, or a strong power."""
    if (other is None) == (power is None):
        error('Pass exactly one of --with and --power')
    if other is not None:
        factors = (g, other)
        result = products.strong_product(g, other, cap=product_cap)
    else:
        factors = (g,) * power
        result = products.strong_power(g, power, cap=product_cap)

    records = [convert.record('product', directed=result.directed,
                              vertex_count=result.vertex_count, pairs=len(result.pairs))]
    lines = [convert.format_edge_list(result).rstrip('\n')]
    ok = True
    if check_metric:
        report = products.max_metric_report(*factors, cap=product_cap)
        records.append(convert.record('max_metric', **attrs.asdict(report)))
        lines.append(f'# {report.pairs} pairs, {report.max_mismatches} differ from the '
                     f'coordinate max, directional identity '
                     f'{"holds" if report.directional_holds else "FAILS"}')
        ok = (report.directional_holds and report.lower_bound_holds
              and (result.directed or report.max_mismatches == 0))

    emit(records, lines=lines)
    if not ok:
        fail('product distances disagree with factor distances')


@cli.command('check-geodesic')
@click.option('--map', 'map_spec',
              help='Canonical morphism, eg line_to_cycle:r=6, zigzag_parity:n=8, '
                   'lattice_inclusion:dim=1,size=3')
@input_option(required=False)
@click.option('--target', type=GRAPH, help='Target (di)graph, with --input')
@click.option('--vertex-map', help='Comma separated image of each input vertex')
@click.option('--window', type=WINDOW, default=None,
              help='Also build the induced simplicial map at this window')
@dim_cap_option
@handle_errors
def check_geodesic(map_spec, g, target, vertex_map, window, dim_cap):
    """How far out a morphism preserves distances."""
    if map_spec:
        morphism = families.morphism_from_spec(map_spec)
    elif g is not None and target is not None and vertex_map:
        try:
            images = [int(v) for v in vertex_map.split(',')]
        except ValueError:
            error(f'Bad vertex map {vertex_map!r}')
        morphism = GraphMorphism(g, target, images)
    else:
        error('Pass --map, or all of --input, --target, and --vertex-map')

    report = graphs.geodesic_report(morphism)
    records = [convert.record('geodesic', **report.to_record())]
    radius = format_distance(report.max_verified_radius_doubled)
    lines = [f'Verified doubled radius {radius}, '
             f'{"an embedding" if report.is_embedding else "not an embedding"}']

    failure = None
    if window is not None:
        try:
            smap = complexes.induced_complex_map(morphism, window, dim_cap, report)
            records.append(convert.record('induced_map', window=window,
                                          injective=smap.is_injective()))
            lines.append(f'Induced map at {window.label()}: '
                         f'{"injective" if smap.is_injective() else "not injective"}')
        except RadiusTooSmall as e:
            failure = str(e)

    emit(records, lines=lines)
    if failure:
        fail(failure)


@cli.command('check-automorphisms')
@input_option()
@click.option('--window', type=WINDOW, default=None,
              help='Also check that each automorphism acts on Ind at this window')
@click.option('--cap', type=click.IntRange(min=1), default=config.AUTOMORPHISM_VERTEX_CAP,
              show_default=True, help='Max vertices')
@dim_cap_option
@handle_errors
def check_automorphisms(g, window, cap, dim_cap):
    """Enumerates automorphisms, optionally checking their action on Ind."""
    if window is None:
        perms = graphs.automorphisms(g, cap=cap)
    else:
        complex = complexes.independence_complex(g, window, dim_cap)
        perms = complexes.complex_automorphisms(complex, cap=cap)

    fields = {'count': len(perms), 'permutations': perms}
    if window is not None:
        fields['window'] = window
    emit([convert.record('automorphisms', **fields)],
         tables=[(['automorphism'], [[' '.join(map(str, p))] for p in perms])],
         lines=[f'{len(perms)} automorphisms'])


@cli.command('check-regular')
@input_option()
@window_option
@click.option('-k', type=click.IntRange(min=1), required=True, help='Simplex vertex count')
@click.option('--coords', type=click.Path(exists=True, dir_okay=False), required=True,
              help='JSON object mapping vertex ids to lists of rationals')
@handle_errors
def check_regular(g, window, k, coords):
    """Checks that simplices map to affinely independent points."""
    points = convert.parse_coords(Path(coords).read_text(), g.vertex_count)
    report = complexes.check_affine_regularity(g, window, k, points)
    emit([convert.record('regularity', window=window, **report.to_record())],
         lines=[f'{"regular" if report.ok else "NOT regular"}, '
                f'{report.checked} simplices checked'])
    if not report.ok:
        fail(report.hint or f'{report.violation} is not affinely independent')


@cli.command('verify')
@click.option('--suite', 'suites', multiple=True, type=click.Choice(list(verify.SUITES)),
              help='Suite to run, repeatable')
@click.option('--theorem', 'theorems', multiple=True,
              type=click.Choice(list(verify.THEOREMS)),
              help='Run the suite that checks this statement, repeatable')
@input_option(required=False)
@click.option('--instances', type=click.IntRange(min=1), default=None,
              help="Random instances per suite; defaults to each suite's own count")
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--max-vertices', type=click.IntRange(min=1), default=None,
              help='Max vertices of random instances; defaults per suite')
@dim_cap_option
@max_len_option
@pmax_option
@coeff_option
@budget_option
@handle_errors
def verify_command(suites, theorems, g, instances, seed, max_vertices, dim_cap, max_len,
                   pmax, coeff, budget):
    """Runs property suites and reports pass or fail per claim.

    With no --suite or --theorem, runs every suite.
    """
    params = verify.SuiteParams(graph=g, instances=instances, seed=seed,
                                max_vertices=max_vertices, dim_cap=dim_cap,
                                max_len=max_len, p_max=pmax, field=coeff, budget=budget)
    names = list(dict.fromkeys([*suites, *verify.theorem_suites(theorems)]))
    results = verify.run_suites(names or None, params)

    records = [convert.record('claim', **r.to_record()) for r in results]
    rows = [[r.theorem, r.claim, 'pass' if r.passed else 'FAIL',
             'asserted' if r.asserted else 'measured', r.detail] for r in results]
    failed = sum(1 for r in results if r.asserted and not r.passed)
    emit(records, tables=[(['statement', 'claim', 'result', 'kind', 'detail'], rows)],
         lines=[f'{len(results)} claims, {failed} failed'])
    if not verify.all_passed(results):
        fail(f'{failed} asserted claims failed')


if __name__ == '__main__':
    cli()
