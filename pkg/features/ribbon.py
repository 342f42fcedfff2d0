import logging

from gamma.algebra import ribbon_p_expansion, ribbon_q_polynomial
from gamma.diagram import (Ribbon, corners, head_length, ribbon_shape, rotate, star_word,
                           tail_length, transpose)
from gamma.errors import ShapeError, UsageError, check_guard
from gamma.positivity import (RIBBON_GUARD, corner_identity_check, is_p_positive,
                              many_corners_check, odd_size_theorems_check)
from gamma.textio import format_parts, format_rational, terms_to_json


def _check_to_json(check):
    if not check["applicable"]:
        return {"applicable": False}
    return {"applicable": True, "value": format_rational(check["value"]),
            "expected": format_rational(check["expected"]), "holds": check["holds"]}


class RibbonFeature:
    """`ribbon expand|check|info <composition>`."""

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config
        self.actions = {"expand": self.expand, "check": self.check, "info": self.info}

    def run(self, action, argument):
        if action not in self.actions:
            raise UsageError(f"unknown ribbon action '{action}' (expected expand, check or info)")
        r = Ribbon.parse(self.config.require_argument("composition"))
        check_guard("ribbon size", r.size, self.config.object_guard(RIBBON_GUARD))
        return self.actions[action](r)

    def expand(self, r):
        p = ribbon_p_expansion(r)
        q = ribbon_q_polynomial(r)
        logging.info(f"Expanded r({r}) with {len(p.terms)} p-terms")
        if self.config.json:
            self.console.append_json({"ribbon": format_parts(r), "p": p.to_json(),
                                      "q": terms_to_json(q.terms)})
        else:
            self.console.append_to_console(f"r({format_parts(r)}) = {p}")
            self.console.append_to_console(f"r({format_parts(r)}) = {q}")
        return True

    def check(self, r):
        report = is_p_positive(r, None)
        if self.config.json:
            self.console.append_json(report.to_dict())
        else:
            line = f"r({format_parts(r)}): {report.verdict}"
            if report.witness is not None:
                key, coef = report.witness
                line += f", witness p[{format_parts(key)}] with coefficient {format_rational(coef)}"
            line += f" (canonical form {format_parts(report.canonical_form)})"
            self.console.append_to_console(line)
        return report.positive

    def info(self, r):
        shape = ribbon_shape(r)
        identities = corner_identity_check(r)
        bound = many_corners_check(r, None)
        document = {
            "ribbon": format_parts(r),
            "size": r.size,
            "length": len(r),
            "star_word": star_word(r),
            "transpose": format_parts(transpose(r)),
            "rotation": format_parts(rotate(r)),
            "shape": str(shape),
            "corners": corners(r),
            "head_length": self._length_or_none(head_length, r),
            "tail_length": self._length_or_none(tail_length, r),
            "identities": {name: _check_to_json(check) for name, check in identities["checks"].items()},
            "many_corners": {"hypothesis": bound["hypothesis"], "holds": bound["holds"]},
        }
        ok = identities["ok"] and bound["holds"]
        if r.size % 2 == 1 and r[0] == 1:
            odd = odd_size_theorems_check(r, None)
            document["odd_size"] = {"in_blocks": odd["in_blocks"], "case": odd["case"],
                                    "asserted": odd["asserted"], "verdict": odd["verdict"],
                                    "holds": odd["holds"]}
            ok = ok and odd["holds"]
        if self.config.json:
            self.console.append_json(document)
        else:
            for key, value in document.items():
                if isinstance(value, dict):
                    value = ", ".join(f"{k}={self._plain(v)}" for k, v in value.items())
                self.console.append_to_console(f"{key}: {self._plain(value)}")
        return ok

    @staticmethod
    def _length_or_none(statistic, r):
        try:
            return statistic(r)
        except ShapeError:
            return None

    @staticmethod
    def _plain(value):
        if isinstance(value, dict):
            return "{" + ", ".join(f"{k}={v}" for k, v in value.items()) + "}"
        return "undefined" if value is None else str(value)
