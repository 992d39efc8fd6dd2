"""Exception types shared across the toolkit."""


class TdkitError(Exception):
    """Base class for all toolkit errors."""


class UnknownId(TdkitError):
    """An id was referenced that does not exist in the store."""

    def __init__(self, kind: str, item_id: str):
        self.kind = kind
        self.item_id = item_id
        super().__init__(f"unknown {kind} {item_id}")


class DomainRuleViolation(TdkitError):
    """A domain rule was violated (e.g. ROI requested without a PD estimate)."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message)


class IntegrityError(TdkitError):
    """A cross-reference in the store does not resolve."""


class SchemaError(TdkitError):
    """A store or import file does not match the expected schema."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message)


class VersionConflict(TdkitError):
    """An optimistic-concurrency update carried a stale version."""

    def __init__(self, item_id: str, expected: int, got: int):
        self.item_id = item_id
        self.expected = expected
        self.got = got
        super().__init__(
            f"stale version for {item_id}: store has {expected}, update carried {got}"
        )
