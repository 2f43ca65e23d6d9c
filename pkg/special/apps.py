from django.apps import AppConfig


class SpecialConfig(AppConfig):
    name = 'special'
    verbose_name = 'Special functions'
