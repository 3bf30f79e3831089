"""Error types shared across the package.

Every user-facing error carries a machine-readable ``code`` and the
``path`` of the offending field (dotted, with ``[i]`` for list items),
so CLI consumers can act on failures without parsing prose.
"""

from __future__ import annotations


class OvalcheckError(Exception):
    """Base class for all errors raised by this package."""


class InputError(OvalcheckError):
    """Invalid user input: bad document, bad class data, bad overrides."""

    def __init__(self, code: str, message: str, path: str = ""):
        self.code = code
        self.path = path
        super().__init__(message)

    def __str__(self) -> str:
        loc = f" at {self.path}" if self.path else ""
        return f"[{self.code}]{loc}: {super().__str__()}"
