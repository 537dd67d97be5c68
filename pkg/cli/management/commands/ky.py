from django.core.management.base import BaseCommand, CommandError

from cli.runner import OPTIONS, build_parser, execute


class Command(BaseCommand):
    help = "Compute and validate order-Y invariants: validate, s-set, homology, k0, hh, hc, sbi, trace, product, homotopy-check"

    def add_arguments(self, parser):
        build_parser(parser)

    def handle(self, *args, **options):
        result = execute({key: options.get(key) for key in OPTIONS})
        if result.code:
            if result.report is not None:
                self.stdout.write(result.output)
            raise CommandError(result.output.splitlines()[0] if result.report is None else "check failed",
                               returncode=result.code)
        self.stdout.write(result.output)
