"""Validation reports and the error types shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field


class MalformedPresentation(Exception):
    """A table entry references an unknown cell or mismatched boundaries."""


class DomainMismatch(Exception):
    """Two values that should live over the same (co)domain do not."""


class UnknownBuiltin(Exception):
    pass


class TruncationOverflow(Exception):
    """A composite of words exceeds the requested truncation bound."""

    def __init__(self, msg, offending=()):
        super().__init__(msg)
        self.offending = tuple(offending)


class NonInvertible(Exception):
    """A required inverse does not exist."""


class LiftFailure(Exception):
    """Fully-faithfulness witness tables of a surjection are inconsistent."""


class BudgetExceeded(Exception):
    def __init__(self, msg, partial_count=None):
        super().__init__(msg)
        self.partial_count = partial_count


class ArityOverflow(Exception):
    """A substitution would produce a multimap of arity > 4."""


class ClassifierFailure(Exception):
    """A universal-property equation has zero or multiple solutions."""


class SizeOverflow(Exception):
    """A derived object exceeds the enumeration budget."""


@dataclass
class ValidationReport:
    """Outcome of an axiom suite: passed iff the failure list is empty."""

    failures: list[tuple[str, tuple]] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def tick(self):
        self.checked += 1

    def fail(self, axiom: str, witness: tuple):
        self.failures.append((axiom, witness))

    def check(self, axiom: str, witness: tuple, ok: bool):
        self.tick()
        if not ok:
            self.fail(axiom, witness)

    def merge(self, other: "ValidationReport", prefix: str = ""):
        self.checked += other.checked
        for axiom, witness in other.failures:
            self.failures.append((prefix + axiom if prefix else axiom, witness))

    def raise_if_failed(self):
        if self.failures:
            raise MalformedPresentation(
                "; ".join(f"{ax} at {w}" for ax, w in self.failures[:5])
            )

    def summary(self) -> str:
        if self.passed:
            return f"passed ({self.checked} checks)"
        lines = [f"FAILED ({len(self.failures)} of {self.checked} checks)"]
        lines += [f"  {ax}: {w}" for ax, w in self.failures[:20]]
        if len(self.failures) > 20:
            lines.append(f"  ... and {len(self.failures) - 20} more")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "failures": [
                {"axiom": ax, "witness": [repr(w) for w in wit]}
                for ax, wit in self.failures
            ],
        }
