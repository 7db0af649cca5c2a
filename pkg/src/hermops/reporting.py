"""Small result container shared by the identity-check routines."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a batch of exact assertions.

    `checked` counts individual assertions run, `failures` describes the ones
    that did not hold, `notes` carries informational messages (for example
    documented divergences from published values), and `data` holds optional
    structured results for callers that want more than pass/fail.
    """

    name: str
    checked: int
    failures: tuple = ()
    notes: tuple = ()
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name} ({self.checked} checks)"
        return (
            f"FAIL {self.name} ({len(self.failures)} of {self.checked} checks failed; "
            f"first: {self.failures[0]})"
        )
