"""Exception types shared across the engine."""


class EngineError(Exception):
    """Base class for all engine errors."""


class ScalarError(EngineError):
    """Invalid scalar operation (division by zero, pole, bad exponent)."""


class PoleError(ScalarError):
    """Evaluation at a zero of the denominator."""


class SignatureError(EngineError):
    """Leg operator applied to slots with the wrong signature."""


class SingularOperatorError(EngineError):
    """Inversion or normalization requested for a singular operator."""


class IntertwinerError(EngineError):
    """Commutant solve did not produce a one-dimensional solution space."""


class DegreeBudgetError(EngineError):
    """A computation needs words longer than the configured truncation."""


class ReductionCycleError(EngineError):
    """Rewriting failed to terminate; indicates a rule-ordering bug."""


class NondegeneracyError(EngineError):
    """A quotient collapsed (1, dp or the metric became zero)."""
