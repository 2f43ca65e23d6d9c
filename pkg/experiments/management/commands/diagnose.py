from django.core.management.base import CommandError

from experiments.management.base import CONFIG_ERROR, NUMERICAL_ERROR, RunConfigCommand
from experiments.services import ExperimentService
from fracham.exceptions import ConfigurationError, FracHamError


class Command(RunConfigCommand):
    help = 'Print per-term probe values, term ratios and the equation residual of one solve'

    def handle(self, *args, **options):
        run = self.load_run_config(options)
        try:
            report = ExperimentService(run).diagnose()
        except ConfigurationError as exc:
            raise CommandError(str(exc), returncode=CONFIG_ERROR)
        except FracHamError as exc:
            raise CommandError(f'numerical failure: {exc}', returncode=NUMERICAL_ERROR)

        x, t = report['probe']
        self.stdout.write(f'{run.problem} at x={x!r}, t={t!r}, hbar={run.hbar!r}, M={run.m_terms}')
        for m, value in enumerate(report['terms']):
            self.stdout.write(f'u_{m} = {value!r}')
        for m, ratio in enumerate(report['ratios']):
            self.stdout.write(f'|u_{m + 1}| / |u_{m}| = {ratio!r}')
        self.stdout.write(f"max |residual| over t samples = {report['residual_max']!r}")
