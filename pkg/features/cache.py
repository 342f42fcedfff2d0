import logging

from gamma.algebra import save_q_cache
from gamma.errors import UsageError

DEFAULT_MAX_N = 20


class CacheFeature:
    """`cache save --cache PATH [--max-n N]`: precompute q_0..q_N and write the cache file."""

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config

    def run(self, action, argument):
        if action != "save":
            raise UsageError(f"unknown cache action '{action}' (expected save)")
        if not self.config.cache:
            raise UsageError("'cache save' needs --cache PATH or GAMMAKIT_CACHE")
        max_n = self.config.max_n or DEFAULT_MAX_N
        try:
            count = save_q_cache(self.config.cache, max_n)
        except OSError as e:
            logging.error(f"Error writing q cache {self.config.cache}: {str(e)}")
            self.console.append_to_console(f"error: cannot write {self.config.cache}: {str(e)}")
            return False
        if self.config.json:
            self.console.append_json({"path": self.config.cache, "degrees": count})
        else:
            self.console.append_to_console(f"wrote {count} q-expansions to {self.config.cache}")
        return True
