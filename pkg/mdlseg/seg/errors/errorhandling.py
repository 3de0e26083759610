from enum import Enum
from .parseerror import ParseError
from .usageerror import UsageError


class ErrorCode(Enum):
    '''
    Process exit statuses of the command line driver.

    Attributes:
        SUCCESS: The run completed.
        USAGE: The command line was malformed or inconsistent.
        INPUT_PARSE: An input file could not be read or parsed.
        CONTRACT_VIOLATION: An operation was called outside its contract (including refused brute force).
    '''
    SUCCESS = 0
    USAGE = 1
    INPUT_PARSE = 2
    CONTRACT_VIOLATION = 3


error_messages = {
    ErrorCode.SUCCESS: "{0}",
    ErrorCode.USAGE: "Usage error: {0}",
    ErrorCode.INPUT_PARSE: "Unable to parse input: {0}",
    ErrorCode.CONTRACT_VIOLATION: "Contract violation: {0}"
}


def exit_code_for(error):
    '''
    Returns the exit status associated with an exception.

    Args:
        error (Exception): The exception that ended the run.

    Returns:
        ErrorCode: The matching exit status. Unknown exceptions map to CONTRACT_VIOLATION.
    '''

    if isinstance(error, UsageError):
        return ErrorCode.USAGE
    if isinstance(error, (ParseError, OSError, UnicodeDecodeError)):
        return ErrorCode.INPUT_PARSE
    return ErrorCode.CONTRACT_VIOLATION


def get_error_message(error_code, additional_message=None):
    '''
    Returns a human-readable message associated with a given error code.

    Args:
        error_code (ErrorCode or int): The error code to translate.
        additional_message (str): Details of the error, substituted into the message.

    Returns:
        str: An error message.
    '''

    try:
        known_error_code = ErrorCode(error_code)
    except ValueError:
        known_error_code = ErrorCode.CONTRACT_VIOLATION

    message = error_messages.get(known_error_code)
    return message.format(additional_message)
