"""
Errors raised by leodyn.

Checks whose failure is an answer (LEO certification, expansion checks,
spacing validation) return result objects instead; the classes below are
raised when an operation cannot produce its result at all.
"""


class LeodynError(Exception):
    """Base class for every error raised by leodyn."""
    pass


class InvalidMap(LeodynError, ValueError):
    """Branch table does not describe a self-map of [0,1)."""
    pass


class PointOutsideDomain(LeodynError, ValueError):

    def __init__(self, x):
        super(PointOutsideDomain, self).__init__(
            '{} is not contained in any branch domain'.format(x))
        self.x = x


class BadRadius(LeodynError, ValueError):

    def __init__(self, eps, reason='radius should satisfy 0 < eps <= 1/2'):
        super(BadRadius, self).__init__('{} ({})'.format(eps, reason))
        self.eps = eps


class MaxIterationsExceeded(LeodynError):
    """Carried as the failure payload of an uncertified LEO check."""

    def __init__(self, max_n, terminal):
        super(MaxIterationsExceeded, self).__init__(
            'image did not cover the target within {} iterations'.format(max_n))
        self.max_n = max_n
        self.terminal = terminal


class NotCoveringWithinBound(LeodynError):

    def __init__(self, eps, max_n, center=None):
        super(NotCoveringWithinBound, self).__init__(
            'cell of diameter {} around {} does not cover the space within '
            '{} iterations'.format(eps, center, max_n))
        self.eps = eps
        self.max_n = max_n
        self.center = center


class SpacingViolation(LeodynError, ValueError):

    def __init__(self, index, gap):
        super(SpacingViolation, self).__init__(
            'segment {} starts less than {} steps after segment {} ends'.format(
                index, gap, index - 1))
        self.index = index
        self.gap = gap


class GapBelowCoveringTime(LeodynError, ValueError):

    def __init__(self, gap, covering_time):
        super(GapBelowCoveringTime, self).__init__(
            'gap {} is smaller than covering_time {}'.format(gap, covering_time))
        self.gap = gap
        self.covering_time = covering_time


class EmptyRefinement(LeodynError):

    def __init__(self, stage):
        super(EmptyRefinement, self).__init__(
            'refinement became empty at segment {}'.format(stage))
        self.stage = stage


class NoPeriodicPointInRegion(LeodynError):

    def __init__(self, period):
        super(NoPeriodicPointInRegion, self).__init__(
            'no point of period {} in the closure of the final region'.format(period))
        self.period = period


class TooLarge(LeodynError):

    def __init__(self, size, cap):
        super(TooLarge, self).__init__(
            'enumeration of {} candidates exceeds the cap of {}'.format(size, cap))
        self.size = size
        self.cap = cap


class SymbolOutOfAlphabet(LeodynError, ValueError):

    def __init__(self, symbol):
        super(SymbolOutOfAlphabet, self).__init__(
            '{!r} is not in the alphabet'.format(symbol))
        self.symbol = symbol


class WordNotAllowed(LeodynError, ValueError):

    def __init__(self, word):
        super(WordNotAllowed, self).__init__(
            '{} is not an allowed word'.format(tuple(word)))
        self.word = tuple(word)


class TruncationTooSmall(LeodynError, ValueError):

    def __init__(self, truncation, needed):
        super(TruncationTooSmall, self).__init__(
            'truncation {} is below the required {}'.format(truncation, needed))
        self.truncation = truncation
        self.needed = needed


class NotApplicable(LeodynError, ValueError):
    pass


class NoReturnInPrefix(LeodynError, ValueError):

    def __init__(self, word):
        super(NoReturnInPrefix, self).__init__(
            'no return to [0] within {}'.format(tuple(word)))
        self.word = tuple(word)


class MalformedWord(LeodynError, ValueError):
    pass


class ConsecutiveZeros(LeodynError, ValueError):

    def __init__(self, word, index):
        super(ConsecutiveZeros, self).__init__(
            '{} has consecutive zeros at index {}'.format(tuple(word), index))
        self.word = tuple(word)
        self.index = index


class EmptyRemainder(LeodynError):
    pass
