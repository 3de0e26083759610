class SegmentationError(Exception):
    '''
    Base class for all errors raised deliberately by the segmentation library.
    '''
    pass
