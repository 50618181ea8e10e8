from django.core.management.base import CommandError

from ..lib import PipeDreamsCommand
from ....knuth import verify_connectivity
from ....utils import INVALID_INPUT
from ....verification import SUITES, run_suite


class Command(PipeDreamsCommand):
    help = "Run brute-force verification sweeps"

    def add_command_arguments(self, parser):
        parser.add_argument("suite", choices=["all", *SUITES])
        parser.add_argument("--perm", help="Check the fibers of one permutation (connectivity only)")

    def handle_command(self, **options):
        if options["perm"]:
            if options["suite"] != "connectivity":
                raise CommandError("--perm only applies to the connectivity suite", returncode=INVALID_INPUT)
            reports = [verify_connectivity(self.read_perm(options["perm"]))]
        else:
            reports = run_suite(options["suite"], max_n=options["max_n"])
        self.emit(reports, lambda: "\n\n".join(report.table() for report in reports))

        failed = [report.name for report in reports if not report.ok]
        if failed:
            self.fail(f"Verification failed: {', '.join(failed)}")
