"""Exception hierarchy shared across the package."""


class TermscapeError(Exception):
    """Base class for all termscape errors."""


class InputError(TermscapeError):
    """Bad input data: malformed files, empty categories, degenerate counts.

    The CLI maps this to exit code 1.
    """


class ConfigError(TermscapeError):
    """Bad parameters: invalid labels, thresholds, modes.

    The CLI maps this to exit code 2.
    """
