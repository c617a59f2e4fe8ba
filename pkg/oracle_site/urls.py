"""
URL configuration for oracle_site.

Everything is served by oracle_app; see ``oracle_app/urls.py`` for the routes.
"""
from django.urls import path, include


urlpatterns = [
    path('', include('oracle_app.urls')),
]
