"""Exception types shared across the library."""


class UnitPolyError(Exception):
    """Base class for domain errors raised by this library."""


class BudgetExceeded(UnitPolyError):
    """A configured search or exhaustion budget was exceeded."""


class InconsistentTable(UnitPolyError):
    """No polynomial function takes the requested values."""


class NotAPermutation(UnitPolyError):
    """The polynomial does not permute the odd residues."""


class NotAUnitFunction(UnitPolyError):
    """The polynomial does not map odd residues to odd residues."""


class CarrierError(UnitPolyError):
    """An argument lies outside the quasigroup's carrier set."""
