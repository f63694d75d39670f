from .common import *
DEBUG = True
LOGGING['root']['level'] = os.getenv('CODEMORPH_LOG_LEVEL', 'INFO')
