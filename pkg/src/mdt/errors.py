"""Exception types raised by molecule operations."""


class MDTError(Exception):
    """Base class for every domain error in the package."""


class UnknownPort(MDTError):
    pass


class UnknownElement(MDTError):
    pass


class PortSaturated(MDTError):
    pass


class SelfBond(MDTError):
    pass


class NoSuchBond(MDTError):
    pass


class WrongAdicity(MDTError):
    pass


class BoundaryCrossed(MDTError):
    pass


class NotADyad(MDTError):
    pass


class IllFormed(MDTError):
    pass


class CapExceeded(MDTError):
    pass


class NotASet(MDTError):
    pass


class InvalidGraph(MDTError):
    pass


class SchemaError(MDTError):
    """Input document does not match the expected JSON layout."""


class ValidationFailed(MDTError):
    """A loaded molecule breaks one or more structural invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))
