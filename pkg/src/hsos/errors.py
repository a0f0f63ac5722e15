"""Exception hierarchy shared by every module."""


class HsosError(Exception):
    """Base class for all library errors."""


class InputError(HsosError, ValueError):
    """Malformed or inadmissible input (CLI exit code 2)."""


class ParseError(InputError):
    """Polynomial text could not be parsed.

    ``pos`` is the 0-based character offset where the problem was detected.
    """

    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}" + (f" in {text!r}" if text else ""))


class RingMismatchError(InputError):
    pass


class ZeroPolynomialError(InputError):
    """An operation that needs a nonzero polynomial (leading term, degree, divisor) got 0."""


class NonHomogeneousError(InputError):
    pass


class NotHermitianError(InputError):
    pass


class NonMinimalGeneratorsError(InputError):
    def __init__(self, given, minimal):
        self.given = given
        self.minimal = minimal
        super().__init__(f"generating set is not minimal: {given} generators given, {minimal} minimal")


class UnitIdealError(InputError):
    pass


class HypothesisError(InputError):
    """A theorem hypothesis (linear independence, g not in I+) is violated."""


class NotPSDError(HsosError):
    def __init__(self, certificate):
        self.certificate = certificate
        super().__init__(f"coefficient matrix is not positive semidefinite ({certificate.kind})")


class BudgetExceededError(HsosError):
    def __init__(self, estimate, budget):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"search space has {estimate} tuples, budget is {budget}")


class StageFailure(HsosError):
    def __init__(self, stage, detail=""):
        self.stage = stage
        self.detail = detail
        super().__init__(f"stage {stage} failed" + (f": {detail}" if detail else ""))
