import logging

from gamma.chromatic import (MAX_EDGES, chromatic_sweep, chromatic_sym, gamma_membership_classify,
                             near_chromatic, parse_graph)
from gamma.errors import UsageError, check_guard
from gamma.textio import format_parts, format_rational

DEFAULT_MAX_VERTICES = 6


def _witness_to_json(witness):
    if witness is None:
        return None
    key, coef = witness
    return {"partition": format_parts(key), "coefficient": format_rational(coef)}


class ChromaticFeature:
    """`chromatic X|Y|classify <graph>` and `chromatic sweep --max-n N`."""

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config
        self.actions = {"X": self.expand, "Y": self.expand, "classify": self.classify,
                        "sweep": self.sweep}

    def run(self, action, argument):
        if action not in self.actions:
            raise UsageError(f"unknown chromatic action '{action}' (expected X, Y, classify or sweep)")
        return self.actions[action](action)

    def _graph(self):
        g = parse_graph(self.config.require_argument("graph"))
        check_guard("edge count", len(g.edges), self.config.object_guard(MAX_EDGES))
        return g

    def expand(self, action):
        g = self._graph()
        f = chromatic_sym(g, None) if action == "X" else near_chromatic(g, None)
        if self.config.json:
            self.console.append_json({"graph": str(g), "function": action, "p": f.to_json()})
        else:
            self.console.append_to_console(f"{action}({g}) = {f}")
        return True

    def classify(self, action):
        g = self._graph()
        verdict = gamma_membership_classify(g, None)
        document = {
            "graph": str(g),
            "x_in_gamma": verdict["x_in_gamma"],
            "y_in_gamma": verdict["y_in_gamma"],
            "structural": verdict["structural"],
            "witness": _witness_to_json(verdict["witness"]),
        }
        if self.config.json:
            self.console.append_json(document)
        else:
            for key, value in document.items():
                if isinstance(value, dict):
                    value = f"p[{value['partition']}] with coefficient {value['coefficient']}"
                self.console.append_to_console(f"{key}: {'none' if value is None else value}")
        return verdict["y_in_gamma"] == verdict["structural"]

    def sweep(self, action):
        max_vertices = self.config.max_n or DEFAULT_MAX_VERTICES
        report = chromatic_sweep(max_vertices, self.config.threads, self.config.progress)
        if self.db is not None:
            success, message = self.db.save_report("chromatic", {"n": max_vertices, **report})
            if not success:
                logging.error(f"Error archiving chromatic sweep: {message}")
        if self.config.json:
            self.console.append_json(report)
        else:
            counts = report["counts"]
            self.console.append_to_console(
                f"graphs on <= {max_vertices} vertices: {counts['graphs']}, "
                f"X in Gamma: {counts['x_in_gamma']}, Y in Gamma: {counts['y_in_gamma']}, "
                f"failures: {len(report['failures'])}")
            for graph, reason in report["failures"]:
                self.console.append_to_console(f"  {reason}: {graph}")
        return report["ok"]
