"""Exception hierarchy shared by all fermitangle modules."""


class FermiTangleError(Exception):
    """Base class for every error raised by this package."""


class NotHermitian(FermiTangleError, ValueError):
    pass


class NoConvergence(FermiTangleError, ArithmeticError):
    pass


class AllZeroAmplitudes(FermiTangleError, ValueError):
    pass


class NotAPermutation(FermiTangleError, ValueError):
    pass


class InvalidSpec(FermiTangleError, ValueError):
    pass


class MissingParty(FermiTangleError, KeyError):
    pass


class NotMinkowski(FermiTangleError, ValueError):
    pass


class EmptyKeep(FermiTangleError, ValueError):
    pass


class UnknownMode(FermiTangleError, KeyError):
    pass


class OutOfRange(FermiTangleError, ValueError):
    pass


class StateFormatError(FermiTangleError, ValueError):
    """Malformed custom-state input file."""

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno
