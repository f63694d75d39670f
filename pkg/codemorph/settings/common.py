import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

BASE_DIR = Path(__file__).parent.parent.absolute()
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'codemorph-local-only')

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'codemorph.apps.base',
    'codemorph.apps.extractor',
    'codemorph.apps.strategies',
    'codemorph.apps.prompts',
    'codemorph.apps.gateway',
    'codemorph.apps.merger',
    'codemorph.apps.variants',
    'codemorph.apps.metrics',
]

# no persistence layer: records, checkpoints and state are workspace files
DATABASES = {}

USE_TZ = True
TIME_ZONE = 'UTC'

PROJECT_ROOT = BASE_DIR.parent

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'jsonl': {
            '()': 'codemorph.apps.base.logging.JsonLinesFormatter',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'formatter': 'jsonl',
        },
    },
    'root': {
        'handlers': ['stderr'],
        'level': 'INFO',
    },
}

# chat-completion endpoint used by the gateway
CODEMORPH_ENDPOINT = os.getenv('CODEMORPH_ENDPOINT', 'http://localhost:11434/api/chat')
CODEMORPH_MODEL = os.getenv('CODEMORPH_MODEL', 'codestral:22b')

CODEMORPH_GENERATION = {
    'temperature': 0.8,
    'top_k': 40,
    'top_p': 0.9,
    'seed': 0,
    'max_retries': 5,
    # local inference on large functions is slow
    'timeout_s': 300.0,
}

# tokens, checked against PromptBundle.token_estimate
CODEMORPH_CONTEXT_WINDOW = int(os.getenv('CODEMORPH_CONTEXT_WINDOW', 32768))
CODEMORPH_BATCH_SIZE = int(os.getenv('CODEMORPH_BATCH_SIZE', 1))
CODEMORPH_BUILD_TIMEOUT = float(os.getenv('CODEMORPH_BUILD_TIMEOUT', 900))

CODEMORPH_PRESERVATION_DELTA = 0.96
CODEMORPH_RUNS_PER_VARIANT = 3

# user-defined strategies: `[strategies.custom]` table of the CODEMORPH_CONFIG file
CODEMORPH_CUSTOM_STRATEGIES = {}
CODEMORPH_CONFIG = os.getenv('CODEMORPH_CONFIG')
if CODEMORPH_CONFIG:
    with open(CODEMORPH_CONFIG, 'rb') as config_file:
        _config = tomllib.load(config_file)
    CODEMORPH_CUSTOM_STRATEGIES = dict(_config.get('strategies', {}).get('custom', {}))
