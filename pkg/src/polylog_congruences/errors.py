"""Exception hierarchy shared by the arithmetic kernel, the case registry and the CLI"""


class PolylogError(Exception):
    """Base class for all errors raised by this package"""


class NotInvertible(PolylogError, ValueError):
    """A residue shares a factor with the modulus"""


class NegativeValuation(PolylogError, ArithmeticError):
    """A p-adic quantity is not p-integral where an integral residue was requested"""


class PrecisionExhausted(PolylogError, ArithmeticError):
    """Guard digits were insufficient to produce the requested residue"""


class DivisionByZero(PolylogError, ZeroDivisionError):
    """Division by an exact zero"""


class IndexOutOfRange(PolylogError, ValueError):
    """A special-constant index outside the range computable modulo p"""


class DomainMismatch(PolylogError, TypeError):
    """Operands live over different coefficient domains or extension rings"""


class FormalDegreeError(PolylogError, ValueError):
    """A formal degree smaller than the actual degree of a polynomial"""


class PreconditionViolated(PolylogError, ValueError):
    """An operation was called outside its documented preconditions"""


class PrimeConditionViolated(PolylogError, ValueError):
    """A congruence case was requested for a prime outside its range of validity"""


class UnknownCase(PolylogError, KeyError):
    """A case or identity id that is not registered"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown case"
