"""Tiny result type shared by the certificate and property verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of an independent verification pass.

    `failures` names every violated clause, so a failing report explains
    itself; an empty list means the check passed.
    """

    ok: bool
    failures: tuple[str, ...] = field(default_factory=tuple)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def from_failures(cls, failures) -> "CheckReport":
        failures = tuple(failures)
        return cls(ok=not failures, failures=failures)
