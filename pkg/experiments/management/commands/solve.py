from experiments.management.base import RunConfigCommand


class Command(RunConfigCommand):
    help = 'Solve one problem with HAM and compare the partial sum with its reference at the probe'

    def build_table(self, service, options):
        return service.solve()
