import json

from django.core.management.base import BaseCommand

from experiments.serializers import BUILTIN_PSI
from problems.definitions import PROBLEMS


class Command(BaseCommand):
    help = 'List the built-in problems'

    def add_arguments(self, parser):
        parser.add_argument('--json', action='store_true', help='one JSON record per problem')

    def handle(self, *args, **options):
        psi_names = [value for value, _ in BUILTIN_PSI]
        for problem in PROBLEMS.values():
            if options['json']:
                self.stdout.write(json.dumps({
                    'name': str(problem.name),
                    'description': problem.description,
                    'equation': problem.equation,
                    'psi': psi_names,
                    'reference': str(problem.reference_kind) if problem.reference else None,
                    'x_range': list(problem.x_range),
                    'probe_x': problem.probe_x,
                }))
            else:
                reference = problem.reference_kind.label if problem.reference else 'none'
                self.stdout.write(
                    f'{str(problem.name):<10} {problem.description}  '
                    f"[psi: {', '.join(psi_names)}; reference: {reference}]"
                )
