"""Exception types shared across the package."""


class PsaxError(Exception):
    """Base class for all psax errors."""


class EmptyStringError(PsaxError):
    """Raised when an operation receives an empty string, text or family."""


class OutOfRangeError(PsaxError):
    """Raised when a position or offset argument is outside its valid range."""


class CorruptIndexError(PsaxError):
    """Raised when an index fails a structural validity check."""


class IndexFileError(PsaxError):
    """Base class for index (de)serialization failures."""


class BadMagicError(IndexFileError):
    """The file does not start with the expected magic bytes."""


class VersionMismatchError(IndexFileError):
    """The file declares an unsupported format version."""


class ChecksumFailureError(IndexFileError):
    """The file is truncated or its payload checksum does not verify."""
