import os

if os.getenv('CODEMORPH_PROD', False):
    from .production import *
else:
    from .development import *
