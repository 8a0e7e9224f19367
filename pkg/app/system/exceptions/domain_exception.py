class BiquadError(Exception):
    code = "internal_error"
    exit_code = 1
    status_code = 500

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class UsageError(BiquadError):
    code = "usage_error"
    exit_code = 2
    status_code = 422


class UnknownVariableError(UsageError):
    code = "unknown_variable"


class SingularCurveError(UsageError):
    code = "singular_curve"


class VerificationError(BiquadError):
    code = "verification_failed"


class InternalInvariantError(BiquadError):
    code = "internal_invariant"


class DegenerateTraceError(BiquadError):
    code = "degenerate_trace"
    exit_code = 3
    status_code = 422


class PointAtInfinityError(DegenerateTraceError):
    code = "point_at_infinity"
