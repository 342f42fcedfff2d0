import logging

from gamma.errors import UsageError, check_guard
from gamma.positivity import (CONJECTURE_GUARD, DISCONNECTED_GUARD, constructible_derivations,
                              power_identity_check, verify_conjecture, verify_disconnected_conjecture)
from gamma.textio import format_parts

DEFAULT_DISCONNECTED_MAX_N = 8


class ConjectureFeature:
    """`conjecture verify|disconnected|construct`.

    verify compares the p-positive ribbons of one size (``--n``) or of every
    size up to ``--max-n`` with the basic blocks and the constructible
    ribbons. disconnected checks that a product of ribbon Q-functions is
    p-positive exactly when each factor is. construct lists the derivations
    of the constructible ribbons of size ``--n`` and checks their power identity.
    """

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config
        self.actions = {"verify": self.verify, "disconnected": self.disconnected,
                        "construct": self.construct}

    def run(self, action, argument):
        if action not in self.actions:
            raise UsageError(f"unknown conjecture action '{action}' (expected verify, disconnected or construct)")
        return self.actions[action]()

    def verify(self):
        if self.config.n is not None:
            sizes = [self.config.n]
        elif self.config.max_n is not None:
            sizes = range(1, self.config.max_n + 1)
        else:
            raise UsageError("'conjecture verify' needs --n N or --max-n N")
        guard = self.config.sweep_guard(CONJECTURE_GUARD)
        for n in sizes:
            check_guard("conjecture size", n, guard)
        ok = True
        for n in sizes:
            report = verify_conjecture(n, self.config.threads, self.config.progress, guard)
            document = report.to_dict()
            self._archive("conjecture", document)
            if self.config.json:
                self.console.append_json(document)
            else:
                self.console.append_to_console(
                    f"n={n}: match={str(report.match).lower()} p-positive={len(report.p_positive_set)} "
                    f"predicted={len(report.predicted_set)}")
                for r in report.missing:
                    self.console.append_to_console(f"  predicted but not p-positive: {format_parts(r)}")
                for r in report.extra:
                    self.console.append_to_console(f"  p-positive but not predicted: {format_parts(r)}")
            ok = ok and report.match
        return ok

    def disconnected(self):
        max_n = self.config.max_n or DEFAULT_DISCONNECTED_MAX_N
        guard = self.config.sweep_guard(DISCONNECTED_GUARD)
        report = verify_disconnected_conjecture(max_n, self.config.threads, self.config.progress, guard)
        self._archive("disconnected", {"n": max_n, **report})
        if self.config.json:
            self.console.append_json(report)
        else:
            self.console.append_to_console(
                f"total size <= {max_n}: {report['checked']} products checked, "
                f"{len(report['counterexamples'])} counterexample(s)")
            for components in report["counterexamples"]:
                self.console.append_to_console("  counterexample: " + " ⊕ ".join(components))
        return report["ok"]

    def construct(self):
        n = self.config.n
        if n is None:
            raise UsageError("'conjecture construct' needs --n N")
        check_guard("conjecture size", n, self.config.sweep_guard(CONJECTURE_GUARD))
        derivations = constructible_derivations(n)
        failures = power_identity_check(n)
        rows = []
        for d, block, sequence in derivations:
            steps = " • ".join(f"({format_parts(alpha)})" for alpha in reversed(sequence))
            rows.append({"ribbon": format_parts(d), "block": format_parts(block),
                         "derivation": f"{steps} • ({format_parts(block)})"})
        if self.config.json:
            self.console.append_json({"n": n, "derivations": rows, "power_identity_failures": len(failures)})
        else:
            for row in rows:
                self.console.append_to_console(f"{row['ribbon']} = {row['derivation']}")
            self.console.append_to_console(
                f"{len(rows)} derivation(s), power identity "
                + ("holds" if not failures else f"fails {len(failures)} time(s)"))
        return not failures

    def _archive(self, kind, document):
        if self.db is None:
            return
        success, message = self.db.save_report(kind, document)
        if not success:
            logging.error(f"Error archiving {kind} report: {message}")
