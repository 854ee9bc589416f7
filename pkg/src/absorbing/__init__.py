"""Finite commutative algebra for 1-absorbing primary submodules.

Finite rings and modules are held as full operation tables; submodules of
Z^k are handled through Hermite normal forms.
"""

from .errors import AlgebraError, CapExceeded, MismatchError, NotMultiplicationError

__version__ = "0.1.0"

__all__ = ["AlgebraError", "CapExceeded", "MismatchError", "NotMultiplicationError",
           "__version__"]
