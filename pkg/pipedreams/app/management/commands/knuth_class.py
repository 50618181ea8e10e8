from ..lib import PipeDreamsCommand
from ....knuth import knuth_graph, to_dot


class Command(PipeDreamsCommand):
    help = "The generalized Knuth class of a plactic biword"

    def add_command_arguments(self, parser):
        parser.add_argument("--biword", required=True)
        parser.add_argument("--dot", default=None, help="Write the move graph to this DOT file")

    def handle_command(self, **options):
        graph = knuth_graph(self.read_biword(options["biword"]))
        if options["dot"]:
            with open(options["dot"], "w") as f:
                f.write(to_dot(graph))

        self.emit(
            {"count": len(graph.nodes), "class": graph.nodes},
            lambda: "\n".join(str(Q) for Q in graph.nodes) + f"\n\ncount {len(graph.nodes)}",
        )
