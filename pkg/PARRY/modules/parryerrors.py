"""
Exceptions raised by the parryword library.

Everything derives from ParryWordError so the command front end can map
domain failures to exit status 1 in one place.
"""


class ParryWordError(Exception):
    """ base class for all parryword domain errors """


class ValidationError(ParryWordError, ValueError):
    """ digit data does not describe a Parry number """


class ParseError(ValidationError):
    """ expansion or substitution text is malformed """


class InvalidDigit(ValidationError):
    """ a digit is negative or not an integer """


class ZeroLeadDigit(ValidationError):
    """ t_1 = 0 """


class AllZeroPeriod(ValidationError):
    """ non-simple expansion whose period has only zeros """


class TrivialBase(ValidationError):
    """ d(1) = 1 describes beta = 1, which is not a Parry number """


class ParryConditionViolated(ValidationError):
    """
    Some shift of the digit sequence is not strictly smaller than the
    sequence itself. The offending shift is kept in self.shift.
    """

    def __init__(self, shift, digits=None):
        self.shift = shift
        self.digits = digits
        msg = "Parry condition violated at shift j=%d" % shift
        if digits is not None:
            msg += " for %s" % digits
        super(ParryConditionViolated, self).__init__(msg)


class NoConvergence(ParryWordError):
    """ root isolation for beta failed """


class SimpleExpansion(ParryWordError):
    """ the operation needs a non-simple expansion """


class PrecisionExhausted(ParryWordError):
    """ symbolic gap matching of beta-integers failed """


class LetterOutOfRange(ParryWordError):
    """ a word uses a letter outside the substitution alphabet """


class InvalidSubstitution(ParryWordError):
    """ empty image or image letter outside the alphabet """


class NotProlongable(ParryWordError):
    """ the seed image does not start with the seed or does not grow """


class PrefixTooShort(ParryWordError):
    """ prefix is not longer than the requested factor length """


class BudgetExceeded(ParryWordError):
    """ the prefix length cap was reached before the index stabilized """


class OutOfRange(ParryWordError):
    """ a length query is beyond the depth of the index """


class NotLeftExtensions(ParryWordError):
    """ the given letters are not two distinct left extensions """


class PairNotCoextendable(ParryWordError):
    """ Rext(a) and Rext(b) are disjoint, so g_L(a,b) is undefined """


class AssumptionAViolated(ParryWordError):
    """ the substitution does not give every vertex out-degree one """

    def __init__(self, violations):
        self.violations = violations
        super(AssumptionAViolated, self).__init__(
            "Assumption A violated for %d pair(s): %s" %
            (len(violations), violations))


class AssumptionBUnknown(ParryWordError):
    """ no factor with a unique decomposition was found """


class SeedNotFound(ParryWordError):
    """ a bispecial seed quadruple does not occur in the index """


class OrderingHypothesisFails(ParryWordError):
    """ tail ordering needed by the closed form lcp does not hold """
