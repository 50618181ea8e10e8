"""
Package settings, read from Django settings the way the rest of the app reads them.

    PIPEDREAMS = {
        "NODE_LIMIT": 1_000_000,
        "MAX_DROOP_STEPS": 10_000,
        "MAX_EXPANSION_VARS": 12,
    }

Library callers that never configure Django get the defaults.
"""
import logging

from django.conf import settings

logger = logging.getLogger("pipedreams")

DEFAULTS = {
    "NODE_LIMIT": 1_000_000,
    "MAX_DROOP_STEPS": 10_000,
    "MAX_EXPANSION_VARS": 12,
}


def configure(debug=False, **overrides):
    """Configure Django settings for standalone (non-project) use"""
    if settings.configured:
        return

    settings.configure(
        DEBUG=debug,
        INSTALLED_APPS=["pipedreams.app"],
        DATABASES={},
        PIPEDREAMS={**DEFAULTS, **overrides},
        LOGGING={
            "version": 1,
            "disable_existing_loggers": False,
            "formatters": {"plain": {"format": "%(levelname)s %(name)s: %(message)s"}},
            "handlers": {"stderr": {"class": "logging.StreamHandler", "formatter": "plain"}},
            "loggers": {"pipedreams": {"handlers": ["stderr"], "level": "WARNING", "propagate": False}},
        },
    )


def set_verbosity(verbosity: int):
    """Django's --verbosity: 0 errors only, 1 warnings, 2 info, 3 debug"""
    levels = {0: logging.ERROR, 1: logging.WARNING, 2: logging.INFO}
    logger.setLevel(levels.get(verbosity, logging.DEBUG))


def get(key):
    if key not in DEFAULTS:
        raise KeyError(f"Unknown pipedreams setting {key}")

    if not settings.configured:
        return DEFAULTS[key]

    return getattr(settings, "PIPEDREAMS", {}).get(key, DEFAULTS[key])


def is_debug() -> bool:
    return settings.configured and bool(getattr(settings, "DEBUG", False))
