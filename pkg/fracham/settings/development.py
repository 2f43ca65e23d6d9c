"""
Development settings for the fracham project.
"""

import os

from .base import *

DEBUG = True

# Create logs directory if it doesn't exist
os.makedirs(BASE_DIR / 'logs', exist_ok=True)

# Full trace of every deformation step in development
LOG_FILE_HANDLER = {
    'level': 'DEBUG',
    'class': 'logging.handlers.RotatingFileHandler',
    'filename': BASE_DIR / 'logs' / 'fracham.log',
    'maxBytes': 1024*1024*10,  # 10 MB
    'backupCount': 5,
    'formatter': 'verbose',
}

LOGGING['handlers']['file'] = LOG_FILE_HANDLER

for _logger in ('ham', 'problems', 'experiments'):
    LOGGING['loggers'][_logger]['handlers'].append('file')
    LOGGING['loggers'][_logger]['level'] = 'DEBUG'
