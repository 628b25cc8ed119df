"""Validation reports shared by every axiom checker."""
from __future__ import annotations

from dataclasses import dataclass, field

from .exactlin import SparseMat


@dataclass(frozen=True)
class Failure:
    """One violated identity; ``discrepancy`` is lhs - rhs as an exact matrix."""

    identity: str
    discrepancy: SparseMat
    order: int | None = None

    def locations(self, limit: int | None = None):
        """``(row, col, value)`` triples of the discrepancy, sorted."""
        ents = self.discrepancy.entries()
        return ents if limit is None else ents[:limit]

    def describe(self, limit: int = 10) -> str:
        head = f"{self.identity} fails"
        if self.order is not None:
            head += f" at order {self.order}"
        locs = ", ".join(f"({i},{j}): {v}" for i, j, v in self.locations(limit))
        more = self.discrepancy.nnz() - limit
        tail = f", ... {more} more" if more > 0 else ""
        return f"{head}; discrepancy entries {locs}{tail}"


@dataclass(frozen=True)
class Report:
    failures: tuple = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def failure(self, identity: str) -> Failure | None:
        for f in self.failures:
            if f.identity == identity:
                return f
        return None

    def __str__(self):
        if self.ok:
            return "pass"
        return "; ".join(f.describe() for f in self.failures)


def collect(checks) -> Report:
    """Build a report from ``(identity, discrepancy)`` pairs, keeping nonzero ones."""
    return Report(tuple(Failure(name, d) for name, d in checks if not d.is_zero()))
