from .segmentationerror import SegmentationError


class UsageError(SegmentationError):
    '''
    The command line was used incorrectly.
    '''
    pass
