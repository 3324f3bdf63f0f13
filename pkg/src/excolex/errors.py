"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An argument broke a documented precondition."""


class InsufficientMonomials(ContractViolation):
    """A revlex segment longer than the whole degree component was requested."""


class NotARevlexSegment(ContractViolation):
    """The operation requires its input set to be a revlex segment."""


class DegreeTooHigh(ContractViolation):
    """The operation requires degree < n - 2."""


class HypothesisViolated(ContractViolation):
    """The input does not satisfy the hypotheses of the characterization."""


class FormulaInapplicable(ContractViolation):
    """The closed-form Betti table only applies to strongly stable ideals."""


class ProfileMismatch(ContractViolation):
    """The two ideals do not have matching generator counts."""


class AmbientCapExceeded(RuntimeError):
    """The construction scan ran past its ambient-size cap."""

    def __init__(self, last_m: int, cap: int):
        self.last_m = last_m
        self.cap = cap
        super().__init__(
            f"construction still incomplete at ambient size {last_m} (cap {cap})"
        )


class OracleTooLarge(RuntimeError):
    """A requested chain space is too big for the homology oracle."""

    def __init__(self, i: int, j: int, dim: int, cap: int):
        self.i = i
        self.j = j
        self.dim = dim
        self.cap = cap
        super().__init__(
            f"chain space at (i={i}, j={j}) has dimension {dim}, above the cap {cap}"
        )
