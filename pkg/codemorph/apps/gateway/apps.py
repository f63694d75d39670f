from django.apps import AppConfig


class GatewayConfig(AppConfig):
    name = 'codemorph.apps.gateway'
