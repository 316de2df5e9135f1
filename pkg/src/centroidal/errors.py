"""Exception hierarchy shared by every module of the package."""


class CentroidalError(Exception):
    """Base class for all errors raised by :mod:`centroidal`."""


class FieldMismatch(CentroidalError, TypeError):
    pass


class DivisionByZero(CentroidalError, ZeroDivisionError):
    pass


class NotPrime(CentroidalError, ValueError):
    pass


class ArityMismatch(CentroidalError, ValueError):
    pass


class ParseError(CentroidalError, ValueError):
    """Malformed polynomial or term text.

    ``pos`` is the 0-based character offset of the offending token.
    """

    def __init__(self, message, pos=None):
        self.message = message
        self.pos = pos
        where = "" if pos is None else f" at position {pos}"
        super().__init__(f"{message}{where}")


class AffineSumNotOne(CentroidalError, ValueError):
    def __init__(self, total):
        self.total = total
        super().__init__(f"affine coefficients must sum to 1, got {total}")


class VarOutOfRange(CentroidalError, ValueError):
    def __init__(self, index, n):
        self.index = index
        self.n = n
        super().__init__(f"variable x{index} out of range for arity {n}")


class SecondComponentNonzero(CentroidalError, ValueError):
    def __init__(self, second):
        self.second = second
        super().__init__(f"term must evaluate to a pair (P, 0); second component is {second}")


class NotInKernel(CentroidalError, ValueError):
    def __init__(self, defect):
        self.defect = defect
        super().__init__(f"polynomial is not in the kernel of phi; phi(P) = {defect}")


class NotStronglyTotal(CentroidalError, ValueError):
    def __init__(self, defect, finite=False):
        self.defect = defect
        self.finite = finite
        msg = f"pair is not strongly total; defect phi(P1) + phi(P2) - 1 = {defect}"
        if finite:
            msg += (
                " (over a finite field, centroidal terms only reach strongly total pairs;"
                " merely total pairs form a strictly larger space)"
            )
        super().__init__(msg)


class EnumerationTooLarge(CentroidalError, ValueError):
    def __init__(self, count, cap):
        self.count = count
        self.cap = cap
        super().__init__(f"exhaustive check needs {count} points, cap is {cap}")
