"""
Shared argument handling for the commands that take a RunConfig.

Values come from an optional ``--config`` file first and are overridden by
explicit flags. Invalid configuration exits with status 1, numerical failure
while computing with status 2.
"""

import logging

from django.core.management.base import BaseCommand, CommandError
from rest_framework import serializers

from fracham.exceptions import ConfigurationError, FracHamError
from ham.config import StepForm
from problems.definitions import ProblemName

from ..runconfig import STDOUT, read_config_file, write_config_file
from ..serializers import RunConfigSerializer
from ..services import ExperimentService, write_csv_atomic

logger = logging.getLogger(__name__)

CONFIG_ERROR = 1
NUMERICAL_ERROR = 2

RUN_OPTIONS = (
    'problem', 'alpha', 'psi', 'a', 'hbar', 'm_terms', 'x_min', 'x_max', 'n_points',
    'probe_x', 't_min', 't_max', 'n_samples', 'output_path', 'step_form', 'ml_max_terms',
)


def flatten_errors(detail) -> str:
    """One-line rendering of a DRF error detail"""
    if isinstance(detail, dict):
        return '; '.join(f'{key}: {flatten_errors(value)}' for key, value in detail.items())
    if isinstance(detail, (list, tuple)):
        return '; '.join(flatten_errors(item) for item in detail)
    return str(detail)


def add_run_arguments(parser):
    parser.add_argument('--config', help='KEY=value file with RunConfig fields')
    parser.add_argument('--problem', choices=ProblemName.values)
    parser.add_argument('--alpha', type=float, help='fractional order in (0, 1)')
    parser.add_argument('--psi', help='time warp: identity or log')
    parser.add_argument('--a', type=float, help='lower terminal')
    parser.add_argument('--hbar', type=float, help='convergence-control parameter')
    parser.add_argument('--terms', dest='m_terms', type=int, help='highest HAM order M')
    parser.add_argument('--x-min', type=float)
    parser.add_argument('--x-max', type=float)
    parser.add_argument('--n-points', type=int)
    parser.add_argument('--probe-x', type=float)
    parser.add_argument('--t-min', type=float)
    parser.add_argument('--t-max', type=float)
    parser.add_argument('--n-samples', type=int)
    parser.add_argument('-o', '--output', dest='output_path', help="CSV path, '-' for stdout")
    parser.add_argument('--step-form', choices=StepForm.values)
    parser.add_argument('--ml-max-terms', type=int)
    parser.add_argument('--write-config', help='write the effective RunConfig to this file')


def build_run_config(payload):
    """
    Validate ``payload`` into a RunConfig.

    Raises:
        CommandError: with status 1 when the payload is invalid
    """
    serializer = RunConfigSerializer(data=payload)
    try:
        serializer.is_valid(raise_exception=True)
    except serializers.ValidationError as exc:
        raise CommandError(f'invalid configuration: {flatten_errors(exc.detail)}',
                           returncode=CONFIG_ERROR)
    except ConfigurationError as exc:
        raise CommandError(f'invalid configuration: {exc}', returncode=CONFIG_ERROR)
    return serializer.save()


class RunConfigCommand(BaseCommand):
    """Base for commands that compute a CSV table from one RunConfig"""

    def add_arguments(self, parser):
        add_run_arguments(parser)

    def load_run_config(self, options):
        payload = {}
        if options.get('config'):
            try:
                payload.update(read_config_file(options['config']))
            except ConfigurationError as exc:
                raise CommandError(str(exc), returncode=CONFIG_ERROR)
        payload.update({
            name: options[name] for name in RUN_OPTIONS if options.get(name) is not None
        })
        run = build_run_config(payload)
        if options.get('write_config'):
            write_config_file(run, options['write_config'])
        return run

    def build_table(self, service, options):
        raise NotImplementedError

    def handle(self, *args, **options):
        run = self.load_run_config(options)
        try:
            service = ExperimentService(run)
            table = self.build_table(service, options)
        except ConfigurationError as exc:
            raise CommandError(str(exc), returncode=CONFIG_ERROR)
        except FracHamError as exc:
            command = self.__module__.rsplit('.', 1)[-1]
            logger.info('%s failed for %s: %s', command, run.problem, exc)
            raise CommandError(f'numerical failure: {exc}', returncode=NUMERICAL_ERROR)

        write_csv_atomic(table, run.output_path, self.stdout)
        if run.output_path != STDOUT:
            self.stdout.write(self.style.SUCCESS(
                f'Wrote {len(table)} rows to {run.output_path}'
            ))
