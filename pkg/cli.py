import argparse
import logging
import os

from console import Console
from database import Database
from features.basis import BasisFeature
from features.cache import CacheFeature
from features.chromatic import ChromaticFeature
from features.conjecture import ConjectureFeature
from features.identities import IdentitiesFeature
from features.oracle import OracleFeature
from features.ribbon import RibbonFeature
from features.triangle import TriangleFeature
from gamma import algebra
from gamma.errors import GammaKitError, GuardError, InconsistentSystemError, UsageError

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

feature_classes = {
    "ribbon": RibbonFeature,
    "triangle": TriangleFeature,
    "conjecture": ConjectureFeature,
    "chromatic": ChromaticFeature,
    "basis": BasisFeature,
    "oracle": OracleFeature,
    "identities": IdentitiesFeature,
    "cache": CacheFeature,
}

USAGE = ("usage: gammakit {ribbon,triangle,conjecture,chromatic,basis,oracle,identities,cache} "
         "[action] [argument] [--json] [--max-n N] [--guard N] [--threads N] [--cache PATH] "
         "[--archive URI] [--vars K] [--family b1|b2] [--n N] [--unshifted] [--progress] [--verbose]")


class CommandConfig:
    """Everything a feature needs to know about one invocation."""

    def __init__(self, command, action=None, argument=None, json=False, max_n=None, guard=None,
                 threads=1, cache=None, archive=None, vars=None, family=None, n=None,
                 unshifted=False, progress=False, verbose=False):
        self.command = command
        self.action = action
        self.argument = argument
        self.json = json
        self.max_n = max_n
        self.guard = guard
        self.threads = threads
        self.cache = cache
        self.archive = archive
        self.vars = vars
        self.family = family
        self.n = n
        self.unshifted = unshifted
        self.progress = progress
        self.verbose = verbose

    def object_guard(self, default):
        """Guard for commands acting on a single object: --guard, else --max-n."""
        if self.guard is not None:
            return self.guard
        if self.max_n is not None:
            return self.max_n
        return default

    def sweep_guard(self, default):
        return self.guard if self.guard is not None else default

    def require_argument(self, what):
        if not self.argument:
            raise UsageError(f"'{self.command} {self.action}' needs a {what} argument")
        return self.argument


class GammaArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    parser = GammaArgumentParser(prog="gammakit", add_help=False)
    parser.add_argument("command")
    parser.add_argument("action", nargs="?")
    parser.add_argument("argument", nargs="?")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--max-n", dest="max_n", type=int)
    parser.add_argument("--guard", type=int)
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--cache")
    parser.add_argument("--archive")
    parser.add_argument("--vars", type=int)
    parser.add_argument("--family", choices=["b1", "b2"])
    parser.add_argument("--n", type=int)
    parser.add_argument("--unshifted", action="store_true")
    parser.add_argument("--progress", action="store_true")
    parser.add_argument("--verbose", action="store_true")
    return parser


def parse_config(argv, environ=None):
    environ = os.environ if environ is None else environ
    args = build_parser().parse_args(list(argv))
    if args.command not in feature_classes:
        raise UsageError(f"unknown command '{args.command}'")
    for name in ("max_n", "guard", "threads", "vars", "n"):
        value = getattr(args, name)
        if value is not None and value < 1:
            raise UsageError(f"--{name.replace('_', '-')} must be positive, got {value}")
    cache = environ.get("GAMMAKIT_CACHE") or args.cache
    archive = args.archive or environ.get("GAMMAKIT_ARCHIVE")
    return CommandConfig(
        args.command, args.action, args.argument, json=args.json, max_n=args.max_n,
        guard=args.guard, threads=args.threads, cache=cache, archive=archive, vars=args.vars,
        family=args.family, n=args.n, unshifted=args.unshifted, progress=args.progress,
        verbose=args.verbose,
    )


def load_cache(config):
    if not config.cache or not os.path.exists(config.cache):
        return
    try:
        algebra.load_q_cache(config.cache)
    except Exception as e:
        logging.error(f"Error loading q cache {config.cache}: {str(e)}")


def save_cache(config):
    if not config.cache or not algebra.q_cache_dirty():
        return
    try:
        algebra.save_q_cache(config.cache)
    except Exception as e:
        logging.error(f"Error saving q cache {config.cache}: {str(e)}")


def open_archive(config):
    if not config.archive:
        return None
    try:
        return Database(config.archive)
    except Exception as e:
        logging.error(f"Report archive unavailable, continuing without it: {str(e)}")
        return None


def run(argv, stream=None, environ=None):
    """Run one command; returns the exit status."""
    console = Console(stream)
    try:
        config = parse_config(argv, environ)
    except UsageError as e:
        console.append_to_console(f"error: {str(e)}")
        console.append_to_console(USAGE)
        console.flush_buffer()
        return EXIT_USAGE

    if config.verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    load_cache(config)
    db = open_archive(config)
    status = EXIT_FAILED
    try:
        feature = feature_classes[config.command](console, db, config)
        status = EXIT_OK if feature.run(config.action, config.argument) else EXIT_FAILED
    except GuardError as e:
        logging.error(f"Guard exceeded: {str(e)}")
        console.append_to_console(f"error: {str(e)}")
        status = EXIT_GUARD
    except InconsistentSystemError as e:
        logging.error(f"Error solving linear system: {str(e)}")
        console.append_to_console(f"error: {str(e)}")
        status = EXIT_FAILED
    except GammaKitError as e:
        logging.error(f"Error running {config.command}: {str(e)}")
        console.append_to_console(f"error: {str(e)}")
        console.append_to_console(USAGE)
        status = EXIT_USAGE
    finally:
        save_cache(config)
        if db is not None:
            db.close_connection()
        console.flush_buffer()
    return status
