"""Error types raised across the toolkit.

Messages follow the ``code:detail`` convention so the CLI can print them verbatim.
"""

from __future__ import annotations


class ToolkitError(Exception):
    code = "toolkit_error"

    def __init__(self, detail: object = ""):
        self.detail = str(detail)
        super().__init__(f"{self.code}:{self.detail}" if self.detail else self.code)


class InputError(ToolkitError, ValueError):
    code = "invalid_input"


class BadPairPresent(ToolkitError, ValueError):
    code = "bad_pair_present"

    def __init__(self, pair: tuple[int, int]):
        self.pair = (int(pair[0]), int(pair[1]))
        super().__init__(f"{self.pair[0]},{self.pair[1]}")


class NonCocycleError(ToolkitError, ValueError):
    code = "not_a_cocycle"


class DimensionBoundError(ToolkitError, ValueError):
    code = "dimension_bound"


class ResourceBoundExceeded(ToolkitError, RuntimeError):
    code = "resource_bound_exceeded"


class NoSolutionWithinBound(ToolkitError, RuntimeError):
    code = "no_solution_within_bound"


class LoopClosureError(ToolkitError, RuntimeError):
    code = "loop_not_closed"


__all__ = [
    "BadPairPresent",
    "DimensionBoundError",
    "InputError",
    "LoopClosureError",
    "NoSolutionWithinBound",
    "NonCocycleError",
    "ResourceBoundExceeded",
    "ToolkitError",
]
