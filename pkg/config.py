"""Computation caps, coefficient defaults, and env var overrides.

Every setting here can be overridden with a ``PINDY_<NAME>`` environment
variable, read once at import time. The CLI's flags default to these values.
"""
import os

os.environ.setdefault('PINDY_DIM_CAP', '3')
os.environ.setdefault('PINDY_MAX_LEN', '3')
os.environ.setdefault('PINDY_PMAX', '2')
os.environ.setdefault('PINDY_AUTOMORPHISM_VERTEX_CAP', '12')
os.environ.setdefault('PINDY_PRODUCT_CAP', '20000')
os.environ.setdefault('PINDY_NODE_BUDGET', '10000000')
os.environ.setdefault('PINDY_EXHAUSTIVE_VERTEX_CAP', '30')
os.environ.setdefault('PINDY_COEFF', 'q')
os.environ.setdefault('PINDY_PROBE_PRIMES', '2,3,1000003')
os.environ.setdefault('PINDY_JOBS', '1')
os.environ.setdefault('PINDY_CACHE_SIZE', '256')

# maximum simplex dimension enumerated in independence complexes
DIM_CAP = int(os.environ['PINDY_DIM_CAP'])
# maximum path length for Inf/Sup path homology
MAX_LEN = int(os.environ['PINDY_MAX_LEN'])
# maximum strong power for capacity bounds
PMAX = int(os.environ['PINDY_PMAX'])

AUTOMORPHISM_VERTEX_CAP = int(os.environ['PINDY_AUTOMORPHISM_VERTEX_CAP'])
# vertices in a strong product or power
PRODUCT_CAP = int(os.environ['PINDY_PRODUCT_CAP'])
# branch and bound nodes per alpha call
NODE_BUDGET = int(os.environ['PINDY_NODE_BUDGET'])
EXHAUSTIVE_VERTEX_CAP = int(os.environ['PINDY_EXHAUSTIVE_VERTEX_CAP'])

# q, gf2, or gf<p>
COEFF = os.environ['PINDY_COEFF']
PROBE_PRIMES = tuple(int(p) for p in os.environ['PINDY_PROBE_PRIMES'].split(','))

JOBS = int(os.environ['PINDY_JOBS'])
CACHE_SIZE = int(os.environ['PINDY_CACHE_SIZE'])

RECORD_SCHEMA_VERSION = 1
