"""Repeated application of a rule down to its absorbing values 0 and 1.

For any valid rule, values above 1 strictly decrease under application, so
a start value n reaches 0 or 1 within n steps. That bound doubles as a
runtime guard: a rule that fails to descend (possible only for invalid
custom tables) is reported as defective instead of looped on forever.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rules import FunctionRule, RuleError

_NON_DESCENDING = "property violation: non-descending rule"


@dataclass(frozen=True)
class Trajectory:
    """Orbit of a start value: steps[0] is the start, steps[-1] is 0 or 1."""

    start: int
    steps: tuple[int, ...]

    @property
    def length(self) -> int:
        """Number of rule applications performed."""
        return len(self.steps) - 1

    @property
    def final(self) -> int:
        return self.steps[-1]


def iterate(rule: FunctionRule, n: int, m: int) -> int:
    """m-fold application of the rule to n; zero applications return n."""
    if n < 0:
        raise ValueError(f"start value must be >= 0, got {n}")
    if m < 0:
        raise ValueError(f"application count must be >= 0, got {m}")
    v = n
    for _ in range(m):
        if v <= 1:
            break  # 0 and 1 are fixed points
        v = rule.eval(v)
    return v


def trajectory(rule: FunctionRule, n: int) -> Trajectory:
    """Orbit of n down to its first entry in {0, 1}."""
    if n < 0:
        raise ValueError(f"start value must be >= 0, got {n}")
    steps = [n]
    v = n
    budget = max(n, 1)
    while v > 1:
        if budget == 0:
            raise RuleError(
                f"{_NON_DESCENDING}: {rule.name} did not reach 0 or 1 "
                f"within {n} applications from {n}"
            )
        v = rule.eval(v)
        steps.append(v)
        budget -= 1
    return Trajectory(n, tuple(steps))


def h_direct(rule: FunctionRule, n: int) -> int:
    """Limit of repeated application, straight from the definition.

    Equals iterate(rule, n, n); defined for n >= 1.
    """
    if n < 1:
        raise ValueError(f"limit is defined for n >= 1, got {n}")
    v = n
    budget = n
    while v > 1:
        if budget == 0:
            raise RuleError(
                f"{_NON_DESCENDING}: {rule.name} did not reach 0 or 1 "
                f"within {n} applications from {n}"
            )
        v = rule.eval(v)
        budget -= 1
    return v
