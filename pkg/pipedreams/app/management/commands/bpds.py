from ..lib import PipeDreamsCommand
from ....bpd import all_bpds, render


class Command(PipeDreamsCommand):
    help = "List BPD(perm)"

    def add_command_arguments(self, parser):
        parser.add_argument("--perm", required=True, help="One-line notation, e.g. 13574862")
        parser.add_argument(
            "--method",
            choices=["droop", "exhaustive"],
            default="droop",
            help="Droop closure from the Rothe BPD, or the exhaustive tile search",
        )

    def handle_command(self, **options):
        perm = self.read_perm(options["perm"])
        found = sorted(all_bpds(perm, method=options["method"]))
        self.emit(
            {"perm": perm, "count": len(found), "bpds": found},
            lambda: "\n\n".join(render(D) for D in found) + f"\n\ncount {len(found)}",
        )
