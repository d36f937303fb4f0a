"""Exception hierarchy shared by all gwborel modules."""


class GwBorelError(Exception):
    """Base class for all package errors."""


# ---------------------------------------------------------------- group data
class InvalidMultiplicity(GwBorelError):
    """A multiplicity vector violates the multiple-of-q_j or 0-or->=q_j rule."""


class NoSplitting(GwBorelError):
    """No direct splitting <j> + Gbar with first-coordinate-fixing generators."""


class CrepantInput(GwBorelError):
    """r = sum(c_j) - d vanishes; no correspondence direction exists."""


# ------------------------------------------------------------ coefficient ring
class NonIntegerOffset(GwBorelError):
    """Two Gamma arguments do not differ by an integer."""


class NonInvertible(GwBorelError):
    """Reciprocal of a sector element whose scalar part is not a unit."""


class UnknownGrade(GwBorelError):
    """Basis entry missing from the grading data."""


class LambdaLimitUndefined(GwBorelError):
    """A negative power of the equivariant parameter survives at lambda -> 0."""


class NonIntegerAgeSign(GwBorelError):
    """(-1)^age requested numerically for a fractional age."""


# ------------------------------------------------------------------- series
class TruncationTooSmall(GwBorelError):
    """Requested truncation order below the minimum."""


# ---------------------------------------------------------------- operators
class VariableMismatch(GwBorelError):
    """Operator and series live in different variables."""


class FactorMismatch(GwBorelError):
    """Operator factorization identity failed exact verification."""


class NotInLaplaceNormalForm(GwBorelError):
    """Operator cannot be written as sum_p (d/dtau)^p Q_p(theta)."""


# ------------------------------------------------------------------ numerics
class SingularityTooClose(GwBorelError):
    """Continuation ray or step passes too close to a singular point."""


class PrecisionExhausted(GwBorelError):
    """Local error target unreachable at the working precision."""


class RegionViolation(GwBorelError):
    """Laplace variable outside the admissible Watson region."""


class TailNotConvergent(GwBorelError):
    """exp(-u tau) does not decay along the chosen ray."""


class ResonantParameter(GwBorelError):
    """Equivariant parameter value makes an indicial exponent integral."""


# ---------------------------------------------------------------- connection
class SingularWronskian(GwBorelError):
    """Solution Wronskian numerically singular; no unique linear map."""


class ResidualTooLarge(GwBorelError):
    """Held-out residual exceeds the match tolerance."""


# ------------------------------------------------------------------ birkhoff
class NotBig(GwBorelError):
    """Operator list fails the unit-leading-term certificate."""


class ObstructedFactorization(GwBorelError):
    """z-support cannot be split at some order."""


# ----------------------------------------------------------------------- cli
class MissingStage(GwBorelError):
    """Report lacks the artifacts of a required earlier stage."""


class ConfigError(GwBorelError):
    """Run configuration fails schema validation."""
