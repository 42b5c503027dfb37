"""Exception hierarchy shared across the pipeline."""


class NlqueryError(Exception):
    """Base class for all errors raised by this package."""


class EmptyQuestion(NlqueryError):
    """Question text is empty or whitespace-only."""


class ConfigError(NlqueryError):
    """Schema config failed validation."""


class GraphCorrupt(NlqueryError):
    """Schema graph violates a structural invariant."""


class DisconnectedTables(NlqueryError):
    """No join path connects the requested tables."""

    def __init__(self, unreachable):
        self.unreachable = sorted(unreachable)
        super().__init__(f"no join path to table(s): {', '.join(self.unreachable)}")


class NothingMapped(NlqueryError):
    """No candidate phrase mapped to any schema element or data value."""


class NoProjection(NlqueryError):
    """No attribute could be chosen for the SELECT list."""


class SqlSyntaxError(NlqueryError):
    """Generated-dialect parse failure, with character position."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class HeaderMismatch(NlqueryError):
    """CSV header row does not match the declared schema."""


class RaggedRow(NlqueryError):
    """CSV data row has the wrong number of fields."""


class CsvTypeError(NlqueryError):
    """CSV field failed to parse under its declared column type."""


class UnknownTable(NlqueryError):
    """Query references a table the database does not contain."""


class UnknownColumn(NlqueryError):
    """Query references a column absent from the joined tables."""


class NoSharedColumns(NlqueryError):
    """Natural join attempted between tables with disjoint columns."""
