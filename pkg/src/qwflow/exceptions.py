"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Array shapes do not agree with the graph or with each other."""


class NormalizationError(ValueError):
    """A probability vector or state is not normalized."""


class UnitarityError(ValueError):
    """An operator (or Kraus family) fails the completeness check."""

    def __init__(self, defect, message=None):
        self.defect = float(defect)
        super().__init__(message or f"operator is not unitary: max |U^H U - I| = {self.defect:.3e}")


class LocalityError(ValueError):
    """An operator moves amplitude along a pair that is not an edge."""

    def __init__(self, source, target, magnitude):
        self.source = int(source)
        self.target = int(target)
        self.magnitude = float(magnitude)
        super().__init__(
            f"edge {self.source}->{self.target} is not in the graph but the operator "
            f"entry [{self.target}, {self.source}] has magnitude {self.magnitude:.3e}"
        )


class InfeasibleFlowError(RuntimeError):
    """No graph-local flow carries ``P`` to ``P_prime``."""

    def __init__(self, value=None, message=None):
        self.value = value
        if message is None:
            message = "no local flow carries the initial distribution to the final one"
            if value is not None:
                message += f" (max-flow value {value:.12g} < 1)"
        super().__init__(message)


class InvalidCutError(ValueError):
    """A cut has an edge crossing from A to B where none is allowed."""


class SizeLimitError(ValueError):
    """An exhaustive enumeration was requested above its size cap."""
