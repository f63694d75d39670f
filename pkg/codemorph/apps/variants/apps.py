from django.apps import AppConfig


class VariantsConfig(AppConfig):
    name = 'codemorph.apps.variants'
    verbose_name = 'variant synthesis'
