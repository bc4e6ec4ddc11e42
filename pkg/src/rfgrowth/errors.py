"""Shared exception types.

Input problems raise ValueError at the point of parsing/validation.
Resource ceilings (radius, bound, cap budgets) raise BudgetError so
callers can tell "you asked for too much" apart from "the input is
malformed".  KernelBoundError flags a violated internal guarantee and
should never escape a correct build.
"""


class BudgetError(RuntimeError):
    """A configured resource budget (radius, bound, cap) was exceeded."""


class KernelBoundError(RuntimeError):
    """An internally guaranteed bound failed; indicates a library bug."""
