"""
ASGI entry point for oracle_site; serves the read-only JSON run API.
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'oracle_site.settings')

application = get_asgi_application()
