from django.apps import AppConfig


class HamEngineConfig(AppConfig):
    name = 'ham'
    verbose_name = 'Homotopy analysis engine'
