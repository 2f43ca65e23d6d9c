"""
Base settings for the fracham project.
This file contains settings shared by every environment.
"""

from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

SECRET_KEY = config('SECRET_KEY', default='fracham-local-key')

DEBUG = config('DEBUG', default=False, cast=bool)

# Application definition
THIRD_PARTY_APPS = [
    'rest_framework',
]

LOCAL_APPS = [
    'special',
    'fracseries',
    'ham',
    'problems',
    'experiments',
]

INSTALLED_APPS = THIRD_PARTY_APPS + LOCAL_APPS

# The solver keeps no persistent state.
DATABASES = {}

# Solver Settings
HAM_SETTINGS = {
    'DEFAULT_HBAR': config('HAM_DEFAULT_HBAR', default=-1.0, cast=float),
    'DEFAULT_TERMS': config('HAM_DEFAULT_TERMS', default=3, cast=int),
    'DEFAULT_N_POINTS': config('HAM_DEFAULT_N_POINTS', default=401, cast=int),
    'ALPHA_NEAR_ONE': config('HAM_ALPHA_NEAR_ONE', default=0.999, cast=float),
    'ML_TAIL_TOL': config('HAM_ML_TAIL_TOL', default=1e-14, cast=float),
    'ML_MAX_TERMS': config('HAM_ML_MAX_TERMS', default=200, cast=int),
    'FIELD_PRECISION': config('HAM_FIELD_PRECISION', default=80, cast=int),  # decimal digits
    'LATTICE_HEADROOM': config('HAM_LATTICE_HEADROOM', default=2, cast=int),
    'SWEEP_WORKERS': config('HAM_SWEEP_WORKERS', default=4, cast=int),
    'T_SAMPLES': config('HAM_T_SAMPLES', default=31, cast=int),
}

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'level': 'WARNING',
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'fracham': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
        'special': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
        'fracseries': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
        'ham': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
        'problems': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
        'experiments': {
            'handlers': ['console'],
            'level': 'INFO',
            'propagate': True,
        },
    },
}
