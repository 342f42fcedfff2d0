import logging

from gamma.combinat import Composition
from gamma.errors import UsageError
from gamma.positivity import TRIANGLE_GUARD, classify_triangle, triangle_sweep

DEFAULT_MAX_N = 14


class TriangleFeature:
    """`triangle classify [n,k] [--max-n N | --n N]`: predicted against computed positivity."""

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config

    def run(self, action, argument):
        if action != "classify":
            raise UsageError(f"unknown triangle action '{action}' (expected classify)")
        guard = self.config.sweep_guard(TRIANGLE_GUARD)
        if argument:
            pair = Composition.parse(argument)
            if len(pair) != 2:
                raise UsageError(f"expected 'n,k' for a single triangle, got '{argument}'")
            rows = [classify_triangle(pair[0], pair[1], guard)]
            report = {"rows": rows, "disagreements": [r for r in rows if not r["agree"]],
                      "ok": rows[0]["agree"]}
        else:
            max_n = self.config.max_n or DEFAULT_MAX_N
            report = triangle_sweep(max_n, only_n=self.config.n, guard=guard)
            self._archive(max_n, report)
        self._emit(report)
        return report["ok"]

    def _emit(self, report):
        if self.config.json:
            self.console.append_json(report)
            return
        for row in report["rows"]:
            self.console.append_to_console(
                f"n={row['n']} k={row['k']} predicted={self._verdict(row['predicted'])} "
                f"computed={self._verdict(row['computed'])}" + ("" if row["agree"] else "  MISMATCH"))
        self.console.append_to_console(
            f"{len(report['rows'])} triangles, {len(report['disagreements'])} disagreement(s)")

    @staticmethod
    def _verdict(positive):
        return "positive" if positive else "negative"

    def _archive(self, max_n, report):
        if self.db is None:
            return
        success, message = self.db.save_report("triangle", {"n": self.config.n or max_n, **report})
        if not success:
            logging.error(f"Error archiving triangle sweep: {message}")
