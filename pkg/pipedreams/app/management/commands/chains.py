from ..lib import PipeDreamsCommand
from ....permutation import iter_chains
from ....serializer import parse_labels


class Command(PipeDreamsCommand):
    help = "Chains from the identity to a permutation with a given label vector"

    def add_command_arguments(self, parser):
        parser.add_argument("--perm", required=True)
        parser.add_argument("--labels", required=True, help="Comma separated, e.g. 3,2,2")

    def handle_command(self, **options):
        perm = self.read_perm(options["perm"])
        chains = list(iter_chains(perm, parse_labels(options["labels"])))
        self.emit(
            {"perm": perm, "count": len(chains), "chains": chains},
            lambda: "\n".join(str(chain) for chain in chains) + f"\n\ncount {len(chains)}",
        )
