from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from experiments.figures import FIGURES, FigureKind, get_figure
from experiments.management.base import CONFIG_ERROR, NUMERICAL_ERROR, build_run_config
from experiments.services import ExperimentService, write_csv_atomic
from fracham.exceptions import ConfigurationError, FracHamError


class Command(BaseCommand):
    help = 'Write the data behind the published figures, one CSV per preset'

    def add_arguments(self, parser):
        parser.add_argument('--output-dir', default='figures', help='directory receiving figN.csv')
        parser.add_argument('--only', nargs='+', choices=list(FIGURES), help='subset of presets')
        parser.add_argument('--n-points', type=int, help='grid size for the sweeps')
        parser.add_argument('--n-samples', type=int, help='instants per curve')

    def handle(self, *args, **options):
        output_dir = Path(options['output_dir'])
        names = options['only'] or list(FIGURES)
        for name in names:
            try:
                preset = get_figure(name)
            except ConfigurationError as exc:
                raise CommandError(str(exc), returncode=CONFIG_ERROR)

            payload = dict(preset.payload)
            for key in ('n_points', 'n_samples'):
                if options.get(key) is not None:
                    payload[key] = options[key]
            target = output_dir / f'{preset.name}.csv'
            payload['output_path'] = str(target)
            run = build_run_config(payload)

            try:
                service = ExperimentService(run)
                if preset.kind == FigureKind.HSWEEP:
                    table = service.hbar_sweep(preset.hbar_values)
                else:
                    table = service.alpha_table(preset.resolved_alphas())
            except FracHamError as exc:
                raise CommandError(f'{preset.name}: numerical failure: {exc}',
                                   returncode=NUMERICAL_ERROR)

            write_csv_atomic(table, run.output_path)
            self.stdout.write(
                self.style.SUCCESS(f'{preset.name}: {preset.description} -> {target}')
            )
