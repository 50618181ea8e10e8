"""
The ``pipedreams`` console script. Subcommands are Django management commands in
pipedreams/app/management/commands, run without a Django project.
"""
import sys
import typing

import django
from django.core.management import load_command_class

from . import conf
from .utils import INVALID_INPUT

SUBCOMMANDS = {
    "bpds": "bpds",
    "render": "render",
    "insert": "insert",
    "phi": "phi",
    "maxword": "maxword",
    "minword": "minword",
    "knuth-class": "knuth_class",
    "fiber": "fiber",
    "chains": "chains",
    "schubert": "schubert",
    "constants": "constants",
    "verify": "verify",
}


def usage() -> str:
    return "usage: pipedreams {%s} [options]" % ",".join(SUBCOMMANDS)


def run(argv: typing.Sequence[str] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] not in SUBCOMMANDS:
        sys.stderr.write(usage() + "\n")
        return INVALID_INPUT

    name, args = argv[0], argv[1:]
    conf.configure()
    django.setup()

    command = load_command_class("pipedreams.app", SUBCOMMANDS[name])
    try:
        command.run_from_argv(["pipedreams", name, *args])
    except SystemExit as ex:
        # argparse errors and CommandError both end up here
        return ex.code if isinstance(ex.code, int) else INVALID_INPUT
    return 0


def main():
    sys.exit(run())
