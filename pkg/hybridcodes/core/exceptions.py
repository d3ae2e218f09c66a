"""Exception hierarchy shared by every toolkit module."""

from typing import Iterable, Optional


class HybridCodeError(Exception):
    """Base class for toolkit errors."""


class DimensionError(HybridCodeError, ValueError):
    """Operands disagree on the number of qubits, or n is out of range."""


class CapacityError(HybridCodeError):
    """A rank, sweep size or state dimension exceeds its configured cap."""

    def __init__(self, what: str, requested: int, cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what} {requested} exceeds cap {cap}")


class InvalidCodeError(HybridCodeError, ValueError):
    """A code or construction input violates one of its invariants."""

    def __init__(self, message: str, section: Optional[str] = None, index: Optional[int] = None):
        self.section = section
        self.index = index
        location = ""
        if section is not None:
            location = f" [{section}" + (f" row {index}" if index is not None else "") + "]"
        super().__init__(message + location)


class CodeFileError(HybridCodeError, ValueError):
    """Malformed code, seed or classical matrix file."""

    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class PreconditionError(HybridCodeError, ValueError):
    """An operation was called outside its domain."""


class DegenerateTranslationError(PreconditionError):
    """A translation generator lies inside the normalizer code and leaves no new coset."""


class UnsupportedAlphabetError(PreconditionError):
    """Only qubit codes (q = 2) are implemented."""

    def __init__(self, q: int):
        self.q = q
        super().__init__(f"alphabet size q={q} is not supported, only q=2")


class InconsistencyError(HybridCodeError, ArithmeticError):
    """An enumerator transform produced a non-integral coefficient."""


class FactorizationError(HybridCodeError, ArithmeticError):
    """A requested dimension split does not factor the code dimension."""


class CatalogLookupError(HybridCodeError, KeyError):
    """Unknown catalog entry."""

    def __init__(self, name: str, valid: Iterable[str]):
        self.name = name
        self.valid = sorted(valid)
        super().__init__(f"unknown catalog code {name!r}; valid names: {', '.join(self.valid)}")

    def __str__(self) -> str:
        return str(self.args[0])


def require_qubits(q: int) -> None:
    """Reject alphabets other than GF(2)."""
    if q != 2:
        raise UnsupportedAlphabetError(q)
