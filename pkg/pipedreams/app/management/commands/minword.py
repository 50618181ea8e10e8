from ..lib import PipeDreamsCommand
from ....insertion import ch_l, minword


class Command(PipeDreamsCommand):
    help = "The minword of a BPD and its left insertion chain"

    def add_command_arguments(self, parser):
        parser.add_argument("--perm", required=True)
        parser.add_argument("--bpd", default=None, help="Defaults to the Rothe BPD of --perm")

    def handle_command(self, **options):
        perm = self.read_perm(options["perm"])
        D = self.bpd_for(perm, options["bpd"])
        Q = minword(D)
        chain = ch_l(Q)
        self.emit({"biword": Q, "chain": chain}, lambda: f"{Q}\n{chain}")
