"""
WSGI entry point for oracle_site; serves the read-only JSON run API.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'oracle_site.settings')

application = get_wsgi_application()
