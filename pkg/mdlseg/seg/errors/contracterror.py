from .segmentationerror import SegmentationError


class ContractViolationError(SegmentationError):
    '''
    A precondition of an operation was violated by its caller.
    '''
    pass


class LimitExceededError(ContractViolationError):
    '''
    An exhaustive operation was refused because its input is too large.

    Attributes:
        count (int): The number of candidate points found.
        limit (int): The largest number of candidate points accepted.
    '''

    def __init__(self, count, limit):
        self.count = count
        self.limit = limit
        super().__init__(
            "Refusing to enumerate {0} candidate points (limit is {1}, i.e. 2^{1} hypotheses)".format(count, limit)
        )
