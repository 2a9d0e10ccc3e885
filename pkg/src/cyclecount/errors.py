"""Exception hierarchy shared by every module.

Each class carries the process exit code the CLI maps it to.
"""


class CycleCountError(Exception):
    exit_code = 1


class ParameterError(CycleCountError, ValueError):
    exit_code = 2


class ResourceGuardError(CycleCountError):
    exit_code = 3


class ParseError(CycleCountError, ValueError):
    exit_code = 4

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{message} (at {location})"
        super().__init__(message)
