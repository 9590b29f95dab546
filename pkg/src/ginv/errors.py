"""Exception hierarchy shared by every layer of the toolkit."""


class GinvError(Exception):
    """Base class for all toolkit errors."""


class InputError(GinvError, ValueError):
    """Malformed or inconsistent user input (literals, dimensions, files)."""


class ScalarDivisionError(GinvError, ZeroDivisionError):
    """Inversion of a zero scalar."""


class UnsupportedContextError(GinvError):
    """Operation needs a capability the scalar domain lacks (e.g. a composite modulus)."""


class CapabilityError(GinvError):
    """Operation needs a capability the algebraic context lacks (ring tier, enumeration)."""


class ValidationError(InputError):
    """A Cayley table violates an axiom.

    ``axiom`` names the law and ``witness`` holds the offending element indices.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"axiom {axiom!r} fails at {self.witness}")


class ResourceError(GinvError):
    """Requested structure exceeds the enumeration budget."""


class InvariantViolation(GinvError, AssertionError):
    """A self-check failed: a construction did not pass its defining checker."""
