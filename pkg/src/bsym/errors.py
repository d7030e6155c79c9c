"""Exception hierarchy shared by all bsym modules."""


class BsymError(Exception):
    """Base class for all library errors."""


class NonPrimeError(BsymError):
    def __init__(self, p):
        super().__init__(f"p={p} is not prime")
        self.p = p


class NotIrreducibleError(BsymError):
    def __init__(self, modulus):
        super().__init__(f"modulus {list(modulus)} is not irreducible")
        self.modulus = tuple(modulus)


class NoDefaultModulusError(BsymError):
    def __init__(self, p, m):
        super().__init__(
            f"no built-in irreducible modulus for (p={p}, m={m}); supply one explicitly"
        )
        self.p = p
        self.m = m


class FieldMismatchError(BsymError):
    """Operands belong to different fields."""


class DivisionByZeroError(BsymError, ZeroDivisionError):
    """Multiplicative inverse of zero, or division by the zero polynomial."""


class WidthOutOfRangeError(BsymError):
    def __init__(self, b, n):
        super().__init__(f"read width b={b} out of range for length n={n}")
        self.b = b
        self.n = n


class LengthMismatchError(BsymError):
    """Words of different lengths compared."""


class HypothesisViolatedError(BsymError):
    """A bound was requested outside the hypothesis under which it holds."""


class IndexOutOfRangeError(BsymError):
    """Generator exponent i outside [0, p^e]."""


class EnumerationTooLargeError(BsymError):
    def __init__(self, size, cap):
        super().__init__(f"code has {size} codewords, above the enumeration cap {cap}")
        self.size = size
        self.cap = cap


class DegreeTooLargeError(BsymError):
    """deg(g) violates the weight-decomposition precondition."""


class WidthTooLargeError(BsymError):
    """b violates the weight-decomposition precondition b <= p^e - deg(g)."""


class UsageError(BsymError):
    """Invalid command-line invocation."""
