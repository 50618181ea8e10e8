from ..lib import PipeDreamsCommand
from ....bpd import render
from ....insertion import ch_l, ch_r, phi_l, phi_r


class Command(PipeDreamsCommand):
    help = "Insert a plactic biword into the identity BPD and show the recording chain"

    def add_command_arguments(self, parser):
        parser.add_argument("--biword", required=True, help='JSON file or text {"top": [...], "bottom": [...]}')
        parser.add_argument(
            "--order",
            choices=["left", "right"],
            default="right",
            help="Left insertion read right to left, or right insertion read left to right",
        )

    def handle_command(self, **options):
        Q = self.read_biword(options["biword"])
        if options["order"] == "left":
            D, chain = phi_l(Q), ch_l(Q)
        else:
            D, chain = phi_r(Q), ch_r(Q)
        self.emit(
            {"biword": Q, "bpd": D, "perm": D.perm, "chain": chain},
            lambda: f"{render(D)}\n\nperm  {D.perm}\nchain {chain}",
        )
