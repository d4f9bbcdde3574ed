"""Exception taxonomy shared by all lerchkit modules."""


class LerchkitError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LerchkitError):
    """Arguments outside an operation's domain of validity."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the target function."""


class ConvergenceError(LerchkitError):
    """An iterative scheme hit its work cap before reaching its target accuracy."""


class NoStrategyError(LerchkitError):
    """The dispatcher found no applicable evaluation strategy.

    Carries one reason string per rejected strategy.
    """

    def __init__(self, reasons: dict[str, str]):
        self.reasons = dict(reasons)
        detail = "; ".join(f"{k}: {v}" for k, v in self.reasons.items())
        super().__init__(f"no applicable strategy ({detail})")


class SamplerExhaustedError(LerchkitError):
    """Rejection sampling hit its retry cap without a valid assignment."""


class EvaluationError(LerchkitError):
    """An identity side failed to evaluate; wraps the cause with its assignment."""

    def __init__(self, identity: str, side: str, assignment: dict, cause: Exception):
        self.identity = identity
        self.side = side
        self.assignment = dict(assignment)
        self.cause = cause
        super().__init__(f"{identity}/{side} failed at {assignment!r}: {cause}")
