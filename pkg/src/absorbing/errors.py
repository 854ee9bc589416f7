"""Exception types shared across the package."""


class AlgebraError(ValueError):
    """Invalid algebraic input (bad modulus, foreign element, broken axiom)."""


class CapExceeded(AlgebraError):
    """A carrier, lattice or entry size went past its configured cap."""


class MismatchError(AlgebraError):
    """Objects living over different rings or modules were combined."""


class NotMultiplicationError(AlgebraError):
    """An operation that needs a multiplication module got something else."""
