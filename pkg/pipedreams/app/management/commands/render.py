from ..lib import PipeDreamsCommand
from ....bpd import render, weight


class Command(PipeDreamsCommand):
    help = "Validate a BPD and show its permutation and weight"

    def add_command_arguments(self, parser):
        parser.add_argument("--bpd", required=True, help="A .bpd file, or - for stdin")

    def handle_command(self, **options):
        D = self.read_bpd(options["bpd"])
        self.emit(
            {"bpd": D, "perm": D.perm, "weight": weight(D)},
            lambda: f"{render(D)}\n\nperm   {D.perm}\nweight {weight(D)}",
        )
