from django.apps import AppConfig


class BaseConfig(AppConfig):
    name = 'codemorph.apps.base'
