import logging
import typing

from django.core.management.base import BaseCommand, CommandError

from ... import conf, fixtures
from ...bpd import BPD, rothe_bpd
from ...permutation import Permutation
from ...serializer import dumps, parse_biword, parse_bpd, parse_permutation
from ...utils import CHECK_FAILED, INVALID_INPUT, handle_pipedreams_errors, read_input

logger = logging.getLogger("pipedreams")


class PipeDreamsCommand(BaseCommand):
    """A command of the pipedreams CLI. Subclasses implement handle_command."""

    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument(
            "--json",
            nargs="?",
            const="-",
            default=None,
            dest="json",
            metavar="PATH",
            help="Machine readable JSON instead of aligned text, written to PATH if given",
        )
        parser.add_argument(
            "--max-n",
            action="store",
            dest="max_n",
            type=int,
            default=4,
            help="Largest window size for exhaustive sweeps",
        )
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def handle(self, *args, **options):
        conf.set_verbosity(options.get("verbosity", 1))
        self.json_path = options["json"]
        with handle_pipedreams_errors(body={k: v for k, v in options.items() if k not in ("stdout", "stderr")}):
            self.handle_command(**options)

    def handle_command(self, **options):
        raise NotImplementedError

    #
    # Output
    #
    def info(self, message: str):
        self.stdout.write(message)

    def emit(self, data, text: typing.Union[str, typing.Callable[[], str]]):
        """
        JSON on stdout with a bare --json, otherwise the human readable text. With
        --json PATH the JSON goes to that file and the text still goes to stdout.
        """
        if self.json_path == "-":
            self.stdout.write(dumps(data, indent=2, sort_keys=True))
            return
        if self.json_path:
            with open(self.json_path, "w") as out:
                out.write(dumps(data, indent=2, sort_keys=True))
            logger.info("wrote %s", self.json_path)
        self.stdout.write(text() if callable(text) else text)

    def fail(self, message: str):
        raise CommandError(message, returncode=CHECK_FAILED)

    #
    # Input
    #
    def read_perm(self, value: str) -> Permutation:
        return parse_permutation(value)

    def read_bpd(self, value: str) -> BPD:
        D = parse_bpd(read_input(value))
        D.perm  # validates
        return D

    def read_biword(self, value: str):
        return parse_biword(read_input(value))

    def bpd_for(self, perm: Permutation, value: str = None) -> BPD:
        """The BPD given with --bpd, else the worked example BPD for 13574862, else Rothe"""
        if value:
            D = self.read_bpd(value)
            if D.perm != perm:
                raise CommandError(f"The BPD has permutation {D.perm}, not {perm}", returncode=INVALID_INPUT)
            return D
        if perm == fixtures.PI:
            return fixtures.bpd()
        return rothe_bpd(perm)
