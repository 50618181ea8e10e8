from ..lib import PipeDreamsCommand
from ....knuth import fiber


class Command(PipeDreamsCommand):
    help = "Every plactic biword that inserts to a BPD"

    def add_command_arguments(self, parser):
        parser.add_argument("--perm", required=True)
        parser.add_argument("--bpd", default=None, help="Defaults to the Rothe BPD of --perm")

    def handle_command(self, **options):
        perm = self.read_perm(options["perm"])
        D = self.bpd_for(perm, options["bpd"])
        words = sorted(fiber(D))
        self.emit(
            {"perm": perm, "count": len(words), "fiber": words},
            lambda: "\n".join(str(Q) for Q in words) + f"\n\ncount {len(words)}",
        )
