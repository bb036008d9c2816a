class CbstError(Exception):
    """Base for every failure raised by the cbst package."""


class ConfigError(CbstError, ValueError):
    pass


class StaleNodeRef(CbstError, LookupError):
    pass


class DuplicateKey(CbstError, ValueError):
    pass


class KeyNotFound(CbstError, KeyError):
    pass


class ModeError(CbstError, RuntimeError):
    pass


class OutOfRange(CbstError, IndexError):
    pass


class NotSorted(CbstError, ValueError):
    pass


class QueriesNotSorted(CbstError, ValueError):
    pass


class ContractViolation(CbstError, AssertionError):
    pass


class DomainError(CbstError, ValueError):
    pass


class DuplicateAcrossTrees(CbstError, ValueError):
    pass


class DatasetError(CbstError, ValueError):
    def __init__(self, message: str, path: str = "", line: int = 0):
        self.path = path
        self.line = line
        if path and line:
            message = f"{path}:{line}: {message}"
        elif path:
            message = f"{path}: {message}"
        super().__init__(message)
