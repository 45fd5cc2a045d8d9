"""Error types shared across the package.

Each error carries a short machine-readable ``code`` so the CLI and the
HTTP service can map failures onto exit codes / status payloads without
string matching.
"""

from __future__ import annotations


class SlideRuleError(ValueError):
    """Base class for all scale engine errors."""

    code = "error"


class DomainError(SlideRuleError):
    """A value lies outside the domain of a distance function."""

    code = "domain_error"


class RangeError(SlideRuleError):
    """A value or distance lies outside the displayed range of a scale."""

    code = "range_error"


class IncompatibleScalesError(SlideRuleError):
    """Two scales cannot be compared (different function kind or geometry)."""

    code = "incompatible_scales"
