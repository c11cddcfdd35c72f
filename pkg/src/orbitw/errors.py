"""Exception hierarchy for the orbitw package.

Every error raised by the library derives from OrbitwError so callers can
catch the whole family with one clause. Errors that carry diagnostic
payloads (collision pair, domain argument, truncation time) expose them as
attributes.
"""


class OrbitwError(Exception):
    """Base class for all orbitw errors."""


class ValidationError(OrbitwError):
    """An input value violates a documented invariant."""


class ParseError(OrbitwError):
    """A scenario file could not be parsed.

    Attributes line/column are filled when the underlying parser provides
    them, else None.
    """

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class IoError(OrbitwError):
    """An output file could not be written."""


class NonPositiveMass(ValidationError):
    """A body mass is zero or negative."""


class FewerThanTwoBodies(ValidationError):
    """A system needs at least two bodies."""


class OriginSingularity(OrbitwError):
    """A position (or companion center of mass) sits at the frame origin."""


class IndexOutOfRange(OrbitwError):
    """A body index is outside [0, N)."""


class DomainError(OrbitwError):
    """Argument outside the domain of the requested Lambert-W branch."""

    def __init__(self, z, branch):
        super().__init__(f"argument {z!r} outside domain of branch {branch!r}")
        self.z = z
        self.branch = branch


class BranchPointSingularity(OrbitwError):
    """Lambert-W derivative requested at the branch point -1/e."""


class ConvergenceError(OrbitwError):
    """An iterative solver failed to converge within its iteration budget."""


class NonPositiveB(OrbitwError):
    """The energy constant of the separation equation is not positive."""


class NonPositiveX0(OrbitwError):
    """The initial separation scalar is not positive."""


class LnDomainError(NonPositiveX0):
    """x0 <= 0 makes the logarithmic term of the implicit equation undefined."""


class WArgOutOfDomain(OrbitwError):
    """The Lambert-W argument of the closed form left its branch domain.

    `time` is the evaluation time that failed; `window_end` is the end of
    the evaluable window when known (math.inf when unbounded).
    """

    def __init__(self, message, time=None, window_end=None):
        super().__init__(message)
        self.time = time
        self.window_end = window_end


class CollisionDetected(OrbitwError):
    """Two bodies approached within the collision threshold.

    `partial` holds the trajectories sampled before the collision when the
    error is raised mid-integration (else None).
    """

    def __init__(self, pair, distance, time, partial=None):
        super().__init__(
            f"bodies {pair[0]} and {pair[1]} at distance {distance:.6g} at t={time:.6g}"
        )
        self.pair = pair
        self.distance = distance
        self.time = time
        self.partial = partial


class MaxStepsExceeded(OrbitwError):
    """An integration exceeded its step/evaluation budget."""


class RadicandNegative(OrbitwError):
    """The first-order separation equation has a negative radicand at t0."""


class ToleranceNotMet(OrbitwError):
    """Adaptive quadrature could not reach the requested absolute error."""
