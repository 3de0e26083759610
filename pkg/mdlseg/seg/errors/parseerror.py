from .segmentationerror import SegmentationError


class ParseError(SegmentationError):
    '''
    An input file (corpus, inventory or rules) could not be parsed.

    Attributes:
        path (str or None): The file being parsed, if it came from a file.
        line (int or None): The 1-based line number of the offending line.
        column (int or None): The 1-based column of the offending character, if known.
    '''

    def __init__(self, message, path=None, line=None, column=None):
        self.path = path
        self.line = line
        self.column = column
        super().__init__(self._format(message))

    def _format(self, message):
        location = []
        if self.path is not None:
            location.append(str(self.path))
        if self.line is not None:
            location.append("line {0}".format(self.line))
        if self.column is not None:
            location.append("column {0}".format(self.column))

        if not location:
            return message
        return "{0}: {1}".format(", ".join(location), message)
