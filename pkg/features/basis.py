from gamma.algebra import q_basis_rank
from gamma.chromatic import y_basis_check
from gamma.combinat import odd_partitions
from gamma.errors import UsageError, check_guard

BASIS_GUARD = 14


class BasisFeature:
    """`basis check --family b1|b2 (--n N | --max-n N)`.

    Without ``--family`` the q-products are checked instead of the
    near-chromatic generators.
    """

    def __init__(self, console, db, config):
        self.console = console
        self.db = db
        self.config = config

    def run(self, action, argument):
        if action != "check":
            raise UsageError(f"unknown basis action '{action}' (expected check)")
        if self.config.n is not None:
            sizes = [self.config.n]
        elif self.config.max_n is not None:
            sizes = list(range(1, self.config.max_n + 1))
        else:
            raise UsageError("'basis check' needs --n N or --max-n N")
        guard = self.config.sweep_guard(BASIS_GUARD)
        for n in sizes:
            check_guard("basis degree", n, guard)
        rows = [self._check(n) for n in sizes]
        if self.config.json:
            self.console.append_json(rows if len(rows) > 1 else rows[0])
        else:
            for row in rows:
                verdict = "basis" if row["is_basis"] else "NOT a basis"
                self.console.append_to_console(
                    f"{row['family']} n={row['n']}: rank {row['rank']} of {row['size']} ({verdict})")
        return all(row["is_basis"] for row in rows)

    def _check(self, n):
        if self.config.family:
            return y_basis_check(self.config.family, n)
        found = q_basis_rank(n)
        size = len(odd_partitions(n))
        return {"family": "q", "n": n, "rank": found, "size": size, "is_basis": found == size}
