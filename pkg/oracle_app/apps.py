from django.apps import AppConfig


class OracleAppConfig(AppConfig):
    name = 'oracle_app'
    verbose_name = 'Concurrent phase oracles'
