from ..lib import PipeDreamsCommand
from ....insertion import ch_r, maxword


class Command(PipeDreamsCommand):
    help = "The maxword of a BPD and its right insertion chain"

    def add_command_arguments(self, parser):
        parser.add_argument("--perm", required=True)
        parser.add_argument("--bpd", default=None, help="Defaults to the Rothe BPD of --perm")

    def handle_command(self, **options):
        perm = self.read_perm(options["perm"])
        D = self.bpd_for(perm, options["bpd"])
        Q = maxword(D)
        chain = ch_r(Q)
        self.emit({"biword": Q, "chain": chain}, lambda: f"{Q}\n{chain}")
