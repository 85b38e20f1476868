"""Error taxonomy shared across the package.

MalformedInput covers unreadable or structurally broken inputs (CLI exit 2);
DomainError covers well-formed inputs that violate a construction's
hypotheses (CLI exit 1).
"""


class MalformedInput(ValueError):
    pass


class DomainError(ValueError):
    pass


class AxiomError(DomainError):
    """Raised when a constructed table fails its defining axioms."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        super().__init__(f"axiom check failed: {first}")
