from django.core.management.base import CommandError

from experiments.management.base import CONFIG_ERROR, RunConfigCommand


class Command(RunConfigCommand):
    help = 'Reference solution at the probe for several fractional orders'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--alpha-values', nargs='*', type=float, default=[],
            help='orders in (0, 1]; 1 uses the closed form',
        )

    def build_table(self, service, options):
        alphas = options['alpha_values'] or []
        if any(not 0 < alpha <= 1 for alpha in alphas):
            raise CommandError('alpha values must lie in (0, 1]', returncode=CONFIG_ERROR)
        return service.alpha_table(alphas)
