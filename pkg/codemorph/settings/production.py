from .common import *
DEBUG = False
SECRET_KEY = os.environ['DJANGO_SECRET_KEY']
LOGGING['root']['level'] = os.getenv('CODEMORPH_LOG_LEVEL', 'WARNING')
