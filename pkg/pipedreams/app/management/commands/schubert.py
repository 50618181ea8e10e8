from ..lib import PipeDreamsCommand
from ....schubert import schubert_bpd, schubert_divdiff


class Command(PipeDreamsCommand):
    help = "The Schubert polynomial of a permutation, as a sum over its BPDs"

    def add_command_arguments(self, parser):
        parser.add_argument("--perm", required=True)
        parser.add_argument(
            "--oracle",
            action="store_true",
            default=False,
            help="Also compute it by divided differences and compare",
        )

    def handle_command(self, **options):
        perm = self.read_perm(options["perm"])
        f = schubert_bpd(perm)
        data = {"perm": perm, "polynomial": f}
        text = str(f)
        if options["oracle"]:
            g = schubert_divdiff(perm)
            data["oracle"], data["agrees"] = g, f == g
            text += f"\noracle {g}\nagrees {f == g}"

        self.emit(data, text)
        if options["oracle"] and not data["agrees"]:
            self.fail(f"BPD weights and divided differences disagree on {perm}")
