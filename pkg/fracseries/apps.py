from django.apps import AppConfig


class FracseriesConfig(AppConfig):
    name = 'fracseries'
    verbose_name = 'Fractional power series'
