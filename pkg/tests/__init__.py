# configure logging
import logging
import os

logging.basicConfig()
if os.environ.get('logging'):
    logging.getLogger().setLevel(logging.DEBUG)
else:
    logging.disable(logging.CRITICAL + 1)
