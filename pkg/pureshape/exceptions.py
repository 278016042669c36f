# Copyright (c) 2024 Ian Hill
# SPDX-License-Identifier: Apache-2.0

"""Custom exceptions and error handling types for pureshape"""

__all__ = [
    'DomainError',
    'HypothesisError',
    'UserConfigError',
    'NotYetSupportedError',
    'SizeBudgetError',
    'SearchExhaustedError',
    'InternalConsistencyError',
]


class DomainError(ValueError):
    """Raised when the inputs to an operation fall outside its mathematical domain."""

    def __init__(self, msg: str, offenders: list = None):
        super().__init__(msg)
        self.offenders = offenders if offenders is not None else []


class HypothesisError(DomainError):
    """Raised when a radicand fails Hypothesis H for the requested degree; names the violating prime."""

    def __init__(self, msg: str, prime: int = None):
        super().__init__(msg, [prime] if prime is not None else None)
        self.prime = prime


class UserConfigError(DomainError):
    """Error raised when user specified options are missing, incorrectly formatted, or otherwise unsuitable."""


class NotYetSupportedError(Exception):
    """Used to indicate when a branch, fixture, or so forth is requested that is not currently supported."""


class SizeBudgetError(Exception):
    """Raised when a computation would exceed one of the configured resource bounds."""


class SearchExhaustedError(Exception):
    """Raised when a bounded witness search finishes without finding a witness."""


class InternalConsistencyError(AssertionError):
    """Raised when two independent computations that must agree do not."""
