from django.apps import AppConfig


class MetricsConfig(AppConfig):
    name = 'codemorph.apps.metrics'
