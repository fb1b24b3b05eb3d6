from typing import Optional


class InvalidSyllableError(Exception):
    def __init__(self, message: str, *, offset: Optional[int] = None):
        super().__init__(message)
        self.offset = offset


class InvalidToneError(Exception):
    def __init__(self, message: str, *, offset: Optional[int] = None):
        super().__init__(message)
        self.offset = offset


class SegmentationError(Exception):
    def __init__(self, message: str, *, start: int, end: int):
        super().__init__(message)
        self.start = start
        self.end = end


class InsufficientDataError(Exception):
    def __init__(self, message: str, *, vowel: Optional[str] = None):
        super().__init__(message)
        self.vowel = vowel


class NumericDomainError(Exception):
    pass


class TableFormatError(Exception):
    def __init__(self, message: str, *, path: str, line: int):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line


class LipDataFormatError(Exception):
    def __init__(self, message: str, *, path: str, line: int):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
