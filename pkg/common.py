"""Misc common utilities: distances, windows, errors, and the job runner."""
from concurrent.futures import ThreadPoolExecutor
import logging
import math
import numbers
import re

import attrs

logger = logging.getLogger(__name__)

INF = math.inf

WINDOW_RE = re.compile(r'^\s*(\d+)\s*:\s*(\d+|inf)\s*$')


class Error(Exception):
    """Base class for all pindy errors.

    Attributes:
      status (int): process exit code when this error ends a CLI run
    """
    status = 1


class BadParams(Error):
    """Malformed window, generator spec, edge list, or cap."""
    status = 2


class TooLarge(Error):
    """Input exceeds a vertex cap, eg for automorphism enumeration."""
    status = 2


class SizeOverflow(Error):
    """A strong product or power would exceed the product size cap."""
    status = 2


class NotAMorphism(Error):
    pass


class NotASimplicialMap(Error):
    pass


class NotAChainMap(Error):
    pass


class RadiusTooSmall(Error):
    """A morphism isn't geodesic far enough out for the requested window."""
    pass


class FieldMismatch(Error):
    pass


class AlphaTimeout(Error):
    """Branch and bound ran out of node budget.

    Attributes:
      lower (int): size of the largest clique found so far
      upper (int): root coloring bound
    """
    status = 3

    def __init__(self, msg, lower=0, upper=0):
        super().__init__(msg)
        self.lower = lower
        self.upper = upper


def error(msg, cls=BadParams, exc_info=None, **kwargs):
    """Logs and raises an :class:`Error`.

    Args:
      msg (str)
      cls (type): :class:`Error` subclass to raise
      exc_info: passed through to :meth:`logging.Logger.info`
      kwargs: passed through to ``cls``'s constructor
    """
    logger.info(f'{cls.__name__}: {msg}', exc_info=exc_info)
    raise cls(msg, **kwargs)


def format_distance(d):
    """Returns ``d`` as an int, or the string ``'inf'`` for ∞."""
    return 'inf' if d == INF else int(d)


def parse_distance(val):
    """Inverse of :func:`format_distance`. Accepts ints and int strings too.

    Bools and non-integral numbers are rejected rather than truncated.
    """
    if isinstance(val, str):
        val = val.strip()
    if val in ('inf', INF):
        return INF

    d = None
    if isinstance(val, str) and re.fullmatch(r'[-+]?\d+', val):
        d = int(val)
    elif isinstance(val, numbers.Integral) and not isinstance(val, bool):
        d = int(val)
    elif isinstance(val, float) and val.is_integer():
        d = int(val)
    if d is None or d < 0:
        error(f'Expected a non-negative integer or inf, got {val!r}')
    return d


def _check_n(instance, attribute, n):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        error(f'Window lower threshold must be an integer >= 1, got {n!r}')


def _check_m(instance, attribute, m):
    if m != INF and (not isinstance(m, int) or isinstance(m, bool)):
        error(f'Window upper threshold must be an integer or inf, got {m!r}')
    if not instance.n < m:
        error(f'Window needs n < m, got {instance.n}:{format_distance(m)}')


@attrs.frozen(order=True)
class Window:
    """The constraint interval (n, m].

    A pair of vertices is admissible when ``n < d <= m``. Thresholds are
    integers, or ∞ for ``m``. Displayed with halved labels, eg ``(1/2, ∞]``,
    since the halves are the radii of the constraint.

    Attributes:
      n (int): exclusive lower threshold, >= 1
      m (int or INF): inclusive upper threshold
    """
    n: int = attrs.field(validator=_check_n)
    m: float = attrs.field(default=INF, converter=parse_distance,
                           validator=_check_m)

    def contains(self, d):
        return self.n < d <= self.m

    @classmethod
    def parse(cls, text):
        """Parses ``n:m``, eg ``2:5`` or ``1:inf``.

        Raises:
          BadParams
        """
        match = WINDOW_RE.match(text or '')
        if not match:
            error(f'Expected window as n:m, eg 1:inf, got {text!r}')
        n, m = match.groups()
        return cls(int(n), m)

    def label(self):
        m = '∞' if self.m == INF else f'{self.m}/2'
        return f'({self.n}/2, {m}]'

    def to_record(self):
        return {'n': self.n, 'm': format_distance(self.m)}

    def __str__(self):
        return f'{self.n}:{format_distance(self.m)}'


CLASSICAL = Window(1, INF)


def run_jobs(fn, items, jobs=1):
    """Maps ``fn`` over ``items``, optionally on a thread pool.

    Results come back in input order either way.

    Args:
      fn (callable)
      items (iterable)
      jobs (int): worker count; 1 or less runs inline

    Returns:
      list
    """
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]

    logger.debug(f'Running {len(items)} jobs on {jobs} workers')
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))
