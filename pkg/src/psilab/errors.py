class PsilabError(Exception):
    pass


class GraphParseError(PsilabError, ValueError):
    """Malformed graph6 or edge-list input.

    ``position`` is a byte offset for graph6 and a 1-based line number for
    edge lists.
    """

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ContractViolation(PsilabError, ValueError):
    pass


class CapExceeded(PsilabError, RuntimeError):
    pass


class UnknownPredicate(PsilabError, KeyError):
    pass
