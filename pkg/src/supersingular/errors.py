"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map failures without a
lookup table: 1 for bad input or unmet preconditions, 2 for internal
inconsistencies that indicate a bug.
"""


class SupersingularError(Exception):
    exit_code = 1


class UnsupportedField(SupersingularError):
    pass


class DivisionByZero(SupersingularError, ZeroDivisionError):
    pass


class InexactDivision(SupersingularError):
    exit_code = 2


class NonIntegralModel(SupersingularError):
    pass


class BadReduction(SupersingularError):
    pass


class NotShortForm(SupersingularError):
    pass


class NotSupersingular(SupersingularError):
    pass


class PrecisionTooLow(SupersingularError):
    pass


class InvalidMu(SupersingularError):
    pass


class InvalidInput(SupersingularError):
    pass


class PreconditionViolated(SupersingularError):
    pass


class OracleMismatch(SupersingularError):
    exit_code = 2
