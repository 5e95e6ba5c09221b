"""Exception types. Every error carries a machine-readable ``category``."""


class DSTError(Exception):
    category = "error"


class FrameError(DSTError):
    category = "frame-error"


class DuplicateLabel(FrameError):
    category = "duplicate-label"


class EmptyFrame(FrameError):
    category = "empty-label-list"


class FrameMismatch(FrameError):
    category = "frame-mismatch"


class InvalidMass(DSTError):
    category = "invalid-mass"


class SumOutOfTolerance(InvalidMass):
    category = "sum-out-of-tolerance"


class NegativeMass(InvalidMass):
    category = "negative-mass"


class DuplicateSubset(InvalidMass):
    category = "duplicate-subset"


class DogmaticInput(DSTError):
    category = "dogmatic-input"


class NotSubnormal(DSTError):
    category = "not-subnormal"


class StructureMismatch(DSTError):
    """Raised by closed-form shortcuts when the mass lacks the required structure."""

    def __init__(self, required: str):
        super().__init__(f"mass function is not {required}")
        self.category = f"not-{required}"


class ClosureSizeExceeded(DSTError):
    category = "size-exceeded"


class CapExceeded(DSTError):
    category = "cap-exceeded"


class NoUniqueMinimum(DSTError):
    category = "no-unique-minimum"


class OffSupportQuery(DSTError):
    category = "off-support"


class ModeMismatch(DSTError):
    category = "mode-mismatch"


class TotalConflict(DSTError):
    category = "total-conflict"


class InfeasibleSpec(DSTError):
    category = "infeasible"


class MalformedDocument(DSTError):
    category = "malformed-document"
