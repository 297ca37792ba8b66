"""Exception hierarchy shared by every module of the package."""


class CalculusError(Exception):
    """Base class for all errors raised by compcalc."""


class InvalidModule(CalculusError, ValueError):
    """A value violates a structural invariant (dangling edge, duplicate gate, ...)."""


class GateNotInInterface(CalculusError, KeyError):
    pass


class NodeIdCollision(CalculusError, ValueError):
    """Two operands share a primitive vertex identifier."""


class InterfaceNotInGraph(CalculusError, ValueError):
    pass


class PreconditionViolated(CalculusError, ValueError):
    pass


class SymbolNotInAlphabet(CalculusError, ValueError):
    pass


class NotAWordModule(CalculusError, ValueError):
    pass


class SchemaError(CalculusError, ValueError):
    """Malformed module document. ``path`` locates the offending field."""

    def __init__(self, message, path=""):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


class DanglingNodeRef(SchemaError):
    pass


class DuplicateNodeId(SchemaError):
    pass


class UnknownSuite(CalculusError, KeyError):
    pass
