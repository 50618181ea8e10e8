from ..lib import PipeDreamsCommand
from ....bpd import render
from ....insertion import phi


class Command(PipeDreamsCommand):
    help = "The BPD a plactic biword inserts to"

    def add_command_arguments(self, parser):
        parser.add_argument("--biword", required=True, help='JSON file or text {"top": [...], "bottom": [...]}')

    def handle_command(self, **options):
        D = phi(self.read_biword(options["biword"]))
        self.emit({"bpd": D, "perm": D.perm}, lambda: f"{render(D)}\n\nperm {D.perm}")
