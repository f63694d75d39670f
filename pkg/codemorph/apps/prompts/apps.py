from django.apps import AppConfig


class PromptsConfig(AppConfig):
    name = 'codemorph.apps.prompts'
