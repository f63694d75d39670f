from django.apps import AppConfig


class MergerConfig(AppConfig):
    name = 'codemorph.apps.merger'
