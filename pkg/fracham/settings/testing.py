"""
Settings used by the test suite.
"""

from .base import *

# The package __init__ pulls in development settings first; undo the file logging.
LOGGING['handlers'].pop('file', None)
for _name, _logger in LOGGING['loggers'].items():
    _logger['handlers'] = ['console']
    _logger['level'] = 'INFO'
LOGGING['handlers']['console']['level'] = 'ERROR'

# Floor of the sample precision; runs raise it as their grids demand.
HAM_SETTINGS['FIELD_PRECISION'] = 40
HAM_SETTINGS['SWEEP_WORKERS'] = 2
