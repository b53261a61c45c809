"""Exception types shared across the package."""


class NewsCheckError(Exception):
    """Base class for all errors raised by this package."""


class DataError(NewsCheckError):
    """A data file, corpus record, or model file is malformed or inconsistent."""


class UnsupportedLanguageError(NewsCheckError):
    """The detected language has no native models and no translator is configured."""

    def __init__(self, message: str, language: str):
        super().__init__(message)
        self.language = language


class FetchError(NewsCheckError):
    """Fetching a remote URL failed or was blocked."""


class ExtractionError(NewsCheckError):
    """No article content could be extracted from an HTML page."""
