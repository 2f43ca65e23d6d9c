from django.core.management.base import CommandError

from experiments.management.base import CONFIG_ERROR, RunConfigCommand


class Command(RunConfigCommand):
    help = 'Partial sums at the probe for several values of hbar'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            '--hbar-values', nargs='+', type=float, required=True,
            help='non-zero convergence-control parameters, one column group each',
        )

    def build_table(self, service, options):
        hbars = options['hbar_values']
        if any(h == 0 or h != h for h in hbars):
            raise CommandError('hbar values must be non-zero numbers', returncode=CONFIG_ERROR)
        return service.hbar_sweep(hbars)
