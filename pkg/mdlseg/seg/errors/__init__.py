from .segmentationerror import SegmentationError
from .parseerror import ParseError
from .contracterror import ContractViolationError, LimitExceededError
from .usageerror import UsageError
from .errorhandling import ErrorCode, get_error_message, exit_code_for

__all__ = ('SegmentationError', 'ParseError', 'ContractViolationError', 'LimitExceededError', 'UsageError',
           'ErrorCode', 'get_error_message', 'exit_code_for')
