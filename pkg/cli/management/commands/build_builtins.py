from django.core.management.base import BaseCommand

from cli.builtins import write_builtins


class Command(BaseCommand):
    help = "Generate the builtin category and Y documents, run their checkers and write them to KY_BUILTINS_DIR"

    def add_arguments(self, parser):
        parser.add_argument("--directory", help="output directory (default: KY_BUILTINS_DIR)")
        parser.add_argument("--cap", type=int, help="cap of the Y documents (default: KY_MAX_CAP)")

    def handle(self, *args, **options):
        for path in write_builtins(options.get("directory"), options.get("cap")):
            self.stdout.write(f"wrote {path}")
        self.stdout.write(self.style.SUCCESS("builtins written"))
