from gamma.errors import UsageError, check_guard
from gamma.identities import CHECKS, run_all
from gamma.positivity import corner_sweep, odd_size_sweep
from gamma.textio import format_parts

DEFAULT_MAX_N = 9
PRODUCT_MAX_N = 5
CLOSED_FORM_MAX_N = 20
TRIANGLE_MAX_N = 20
CORNER_MAX_N = 11
IDENTITIES_GUARD = 12


def identity_limits(max_n):
    """Per-check size limits for one `identities --max-n N` run."""
    limits = {name: max_n for name in CHECKS}
    limits["products"] = min(max_n, PRODUCT_MAX_N)
    limits["triangles"] = max(max_n, TRIANGLE_MAX_N)
    limits["closed forms"] = max(max_n, CLOSED_FORM_MAX_N)
    return limits


def _describe(failure):
    if isinstance(failure, tuple) and all(isinstance(part, int) for part in failure):
        return format_parts(failure)
    if isinstance(failure, tuple):
        return " ".join(_describe(part) for part in failure)
    return str(failure)


class IdentitiesFeature:
    """`identities [--max-n N]`: the q-function and ribbon identity sweeps plus the corner sweeps."""

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config

    def run(self, action, argument):
        if action is not None:
            raise UsageError(f"'identities' takes no action, got '{action}'")
        max_n = self.config.max_n or DEFAULT_MAX_N
        check_guard("identity sweep size", max_n, self.config.sweep_guard(IDENTITIES_GUARD))
        limits = identity_limits(max_n)
        results = run_all(limits)
        corner_n = max(max_n, CORNER_MAX_N)
        results["corners"] = [f"{format_parts(r)} ({reason})" for r, reason in corner_sweep(corner_n)]
        limits["corners"] = corner_n
        odd_failures, uncovered = odd_size_sweep(corner_n)
        results["odd sizes"] = odd_failures
        limits["odd sizes"] = corner_n
        if self.config.json:
            self.console.append_json({
                "checks": {name: {"limit": limits[name], "failures": [_describe(f) for f in failures]}
                           for name, failures in results.items()},
                "uncovered": [{"ribbon": format_parts(r), "verdict": verdict} for r, verdict in uncovered],
                "ok": not any(results.values()),
            })
        else:
            for name, failures in results.items():
                verdict = "holds" if not failures else f"{len(failures)} failure(s)"
                self.console.append_to_console(f"{name} (up to {limits[name]}): {verdict}")
                for failure in failures:
                    self.console.append_to_console(f"  {_describe(failure)}")
            for r, verdict in uncovered:
                self.console.append_to_console(f"not covered by a case, reported only: {format_parts(r)} is {verdict}")
        return not any(results.values())
