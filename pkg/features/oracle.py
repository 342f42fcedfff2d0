from fractions import Fraction
import logging

from gamma.algebra import ribbon_p_expansion, specialize
from gamma.combinat import Composition
from gamma.diagram import ShiftedSkewShape, ribbon_shape, shape_ops
from gamma.errors import UsageError, check_guard
from gamma.tableaux import oracle_sweep, q_function_monomial, skew_Q
from gamma.textio import format_parts, format_rational

ORACLE_GUARD = 8
DEFAULT_MAX_N = 6


class OracleFeature:
    """`oracle compare <shape|composition> [--vars K] [--unshifted]` and `oracle sweep --max-n N`."""

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config

    def run(self, action, argument):
        if action == "compare":
            return self.compare(self.config.require_argument("shape"))
        if action == "sweep":
            return self.sweep()
        raise UsageError(f"unknown oracle action '{action}' (expected compare or sweep)")

    def _shape(self, text):
        if "/" in text or self.config.unshifted:
            return ShiftedSkewShape.parse(text, shifted=not self.config.unshifted)
        return ribbon_shape(Composition.parse(text))

    def compare(self, text):
        shape = self._shape(text)
        check_guard("shape size", shape.size, self.config.object_guard(ORACLE_GUARD))
        q = skew_Q(shape)
        ops = shape_ops(shape)
        document = {"shape": str(shape), "size": shape.size, "Q": q.to_json(),
                    "connected": ops["is_connected"]}
        ok = True
        if ops["as_ribbon"] is not None:
            r = ops["as_ribbon"]
            agree = q == ribbon_p_expansion(r)
            document["ribbon"] = format_parts(r)
            document["ribbon_agrees"] = agree
            ok = ok and agree
        elif ops["has_2x2_witness"] is not None:
            total = sum(q.terms.values(), Fraction(0))
            document["coefficient_sum"] = format_rational(total)
            document["has_negative"] = any(c < 0 for c in q.terms.values())
            ok = ok and total == 0 and document["has_negative"]
        if self.config.vars:
            k = self.config.vars
            agree = q_function_monomial(shape, k).as_poly() == specialize(q, k)
            document["vars"] = k
            document["monomial_agrees"] = agree
            ok = ok and agree
        logging.info(f"Oracle compare on {shape}: ok={ok}")
        if self.config.json:
            self.console.append_json(document)
        else:
            self.console.append_to_console(f"Q({shape}) = {q}")
            for key, value in document.items():
                if key in ("shape", "Q"):
                    continue
                self.console.append_to_console(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
        return ok

    def sweep(self):
        max_n = self.config.max_n or DEFAULT_MAX_N
        check_guard("oracle size", max_n, self.config.sweep_guard(ORACLE_GUARD))
        report = oracle_sweep(max_n)
        if self.config.json:
            self.console.append_json({**report, "ribbon_failures": [format_parts(r) for r in report["ribbon_failures"]]})
        else:
            self.console.append_to_console(
                f"ribbons up to {max_n}: {report['ribbons_checked']} checked, "
                f"{len(report['ribbon_failures'])} failure(s)")
            self.console.append_to_console(
                f"non-ribbon shapes: {report['shapes_checked']} checked, "
                f"{len(report['shape_failures'])} failure(s)")
            for r in report["ribbon_failures"]:
                self.console.append_to_console(f"  ribbon mismatch: {format_parts(r)}")
            for shape in report["shape_failures"]:
                self.console.append_to_console(f"  shape failure: {shape}")
        return report["ok"]
