"""Exception hierarchy shared by every module."""


class CRNError(Exception):
    """Base class for all errors raised by crnet."""


# -- validation of E-graphs ---------------------------------------------------

class ValidationError(CRNError):
    pass


class EmptyNetwork(ValidationError):
    pass


class DuplicateNode(ValidationError):
    pass


class SelfLoopEdge(ValidationError):
    pass


class IsolatedNode(ValidationError):
    pass


class NegativeCoordinate(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class MergeableParallelEdges(ValidationError):
    pass


class RateLengthMismatch(ValidationError):
    pass


class InvalidRate(ValidationError):
    pass


# -- geometry / algebra --------------------------------------------------------

class SplitConeViolation(CRNError):
    pass


class NonIntegerExponentAtEvaluation(CRNError):
    pass


class PointNotInSet(CRNError):
    pass


class WrongDimension(CRNError):
    pass


class EmptyExtremalSet(CRNError):
    pass


class ExponentNotASource(CRNError):
    pass


class NoPositiveSolution(CRNError):
    pass


# -- realizations ---------------------------------------------------------------

class PreconditionFailed(CRNError):
    """A realization was asked for on a network that does not qualify."""

    flag = "precondition"


class NotEndotactic(PreconditionFailed):
    flag = "endotactic"


class NotStronglyEndotactic(PreconditionFailed):
    flag = "strongly_endotactic"


class NotWeaklyReversible(PreconditionFailed):
    flag = "weakly_reversible"


class InteriorSourcePresent(PreconditionFailed):
    flag = "boundary_sources"


class StoichiometricRankDeficient(PreconditionFailed):
    flag = "stoichiometric_rank"


class ReplacementInfeasible(CRNError):
    pass


class InternalInvariantBroken(CRNError):
    pass


class PostconditionFailed(CRNError):
    pass


# -- text format ------------------------------------------------------------------

class ParseError(CRNError):
    pass


class CRNSyntaxError(ParseError):
    def __init__(self, line, column, expected, text=""):
        self.line = line
        self.column = column
        self.expected = expected
        msg = f"line {line}, column {column}: expected {expected}"
        if text:
            msg += f" in {text!r}"
        super().__init__(msg)


class NegativeCoefficient(ParseError):
    pass


class MissingRate(ParseError):
    pass


class DuplicateSpeciesDeclaration(ParseError):
    pass


class RejectionBudgetExceeded(CRNError):
    pass
