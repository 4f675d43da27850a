"""Exception types shared across the package."""


class CoxeterError(Exception):
    """Base class for every error raised by coxquandle."""


class GraphSyntaxError(CoxeterError, ValueError):
    """Input document could not be parsed."""


class ValidationError(CoxeterError, ValueError):
    """Input parsed but does not describe a Coxeter matrix."""


class ResourceCapExceeded(CoxeterError):
    """A configured resource cap was hit; the answer is unknown, not wrong."""


class WordProblemBudgetExceeded(ResourceCapExceeded):
    pass


class EnumerationCapExceeded(ResourceCapExceeded):
    pass


class RootCapExceeded(ResourceCapExceeded):
    pass


class ParityError(CoxeterError, ArithmeticError):
    """A halving that must be exact was not. Always an internal bug."""


class NotSingleClass(CoxeterError, ValueError):
    """Operation needs exactly one conjugacy class of reflections."""
