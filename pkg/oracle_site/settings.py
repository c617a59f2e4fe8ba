"""
Django settings for the oracle_site project.

The project hosts one application, ``oracle_app``, which compiles phase oracles
into coupling sets and runs the desk-scale algorithm pipelines. It is driven
mainly through management commands; the JSON API in ``oracle_app.urls`` is a
thin read-only mirror of the same runs.

See https://docs.djangoproject.com/en/5.2/ref/settings/ for the Django keys.
"""
import os

from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# No secrets are stored or checked by this project; the key only satisfies Django.
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'oracle-site-local-only-key')

DEBUG = os.environ.get('DJANGO_DEBUG', 'false').lower() == 'true'

ALLOWED_HOSTS = ['localhost', '127.0.0.1', 'testserver']


# Application definition

INSTALLED_APPS = [
    'oracle_app',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'oracle_site.urls'

WSGI_APPLICATION = 'oracle_site.wsgi.application'

# Nothing is persisted: runs are pure computations over their inputs.
DATABASES = {}


# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True


# ----------------------------
# Oracle compiler / simulator limits
# ----------------------------
ORACLE = {
    # dense 2^n storage; values above 24 are clamped down by oracle_app.conf
    'MAX_WIDTH': 24,
    # soft guard for CLI and API inputs, lifted up to MAX_WIDTH with --force
    'GUARD_WIDTH': int(os.environ.get('ORACLE_GUARD_WIDTH', 20)),
    'TOL': float(os.environ.get('ORACLE_TOL', 1e-9)),
    'ZERO_THRESHOLD': 1e-12,
    'JSON_EPS': 1e-15,
    'SHOR_MAX_N': 21,
    'QFT_MAX_WIDTH': 20,
    'SCHEDULE_MAX_WIDTH': 12,
    'NAIVE_MAX_WIDTH': 12,
    'GROVER_MAX_WIDTH': 20,
    'SIMON_SAMPLES_PER_BIT': 50,
}


# Logging
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'oracle_app': {
            'handlers': ['console'],
            'level': os.environ.get('ORACLE_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
