"""
Django settings for splicekit project.

O projeto não expõe páginas web nem banco de dados: ele hospeda a aplicação
``app``, cujos comandos de gerenciamento formam a ferramenta de linha de comando
(``python manage.py decide ...``).

For more information on this file, see
https://docs.djangoproject.com/en/5.0/topics/settings/
"""

import environ
import os
import secrets
from pathlib import Path

env = environ.Env(
    # set casting, default value
    DEBUG=(bool, False),
    SPLICEKIT_CANDIDATE_LIMIT=(int, 10_000_000),
    SPLICEKIT_THREADS=(int, 1),
    SPLICEKIT_ASSOCIATIVITY_LIMIT=(int, 64),
    SPLICEKIT_ASSOCIATIVITY_SAMPLES=(int, 4096),
    SPLICEKIT_LOG_LEVEL=(str, 'WARNING'),
)

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Take environment variables from .env file
environ.Env.read_env(os.path.join(BASE_DIR, '.env'))


# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get(
    "DJANGO_SECRET_KEY",
    default=secrets.token_urlsafe(nbytes=64),
)

DEBUG = env('DEBUG')

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'app',
]

# Nenhuma persistência: os testes usam SimpleTestCase.
DATABASES = {}


# Splicing toolkit

# Limite de regras candidatas enumeradas por canonical_system.
SPLICEKIT_CANDIDATE_LIMIT = env('SPLICEKIT_CANDIDATE_LIMIT')

# Número padrão de threads para filtrar regras (--threads sobrescreve).
SPLICEKIT_THREADS = env('SPLICEKIT_THREADS')

# Monoides até este tamanho têm a associatividade verificada por completo;
# acima disso, SPLICEKIT_ASSOCIATIVITY_SAMPLES triplas aleatórias.
SPLICEKIT_ASSOCIATIVITY_LIMIT = env('SPLICEKIT_ASSOCIATIVITY_LIMIT')
SPLICEKIT_ASSOCIATIVITY_SAMPLES = env('SPLICEKIT_ASSOCIATIVITY_SAMPLES')

SPLICEKIT_LOG_LEVEL = env('SPLICEKIT_LOG_LEVEL')


# Logging
# https://docs.djangoproject.com/en/5.0/topics/logging/

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '{levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'simple',
        },
    },
    'loggers': {
        'app': {
            'handlers': ['stderr'],
            'level': SPLICEKIT_LOG_LEVEL,
            'propagate': False,
        },
    },
}


# Internationalization
# https://docs.djangoproject.com/en/5.0/topics/i18n/

LANGUAGE_CODE = 'pt-br'

TIME_ZONE = 'America/Sao_Paulo'

USE_I18N = True

USE_TZ = True


# Default primary key field type
# https://docs.djangoproject.com/en/5.0/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
