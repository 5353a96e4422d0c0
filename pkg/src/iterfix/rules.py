"""Multiplicative arithmetic functions defined by their prime-power values.

A rule assigns a nonnegative integer to prime powers p**alpha; evaluation
extends multiplicatively over the factorization, with the fixed conventions
value(0) = 0 and value(1) = 1 (the evaluator owns both, not the rule).

`validate` checks three prime-power hypotheses on a finite grid:

  I   descent:        f(p**alpha) < p**alpha
  II  compatibility:  f(p) divides f(p**alpha)
  III prime support:  every prime dividing f(p**alpha) divides p * f(p)

`check_global_properties` checks the equivalent whole-integer forms:

  A   f(n) < n for all n > 1
  B   f(p) divides f(n) for every prime divisor p of n

Divisibility follows the ring convention: every integer divides 0, and 0
divides only 0. A value of 0 or 1 has no prime divisors, so III is vacuous
there. A passing report certifies the checked grid only, never all primes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .factorization import U64_MAX, factorize, is_prime, sieve_primes


class RuleError(ValueError):
    """A function rule is unusable for the requested evaluation."""


class FunctionRule:
    """Base class; subclasses supply the prime-power values."""

    def __init__(self, name: str):
        self.name = name
        self._values: dict[int, int] = {}  # n -> f(n), idempotent memo

    def prime_power(self, p: int, alpha: int) -> int:
        """Value at p**alpha for prime p and alpha >= 1."""
        raise NotImplementedError

    def covers(self, p: int, alpha: int) -> bool:
        """Whether the rule defines a value at p**alpha."""
        return True

    def eval(self, n: int) -> int:
        """f(n): 0 at 0, 1 at 1, product of prime-power values elsewhere."""
        if n <= 1:
            if n < 0:
                raise ValueError(f"rule domain is nonnegative, got {n}")
            return n
        cached = self._values.get(n)
        if cached is not None:
            return cached
        out = 1
        for p, a in factorize(n).factors:
            v = self.prime_power(p, a)
            if v == 0:
                out = 0
                break
            out *= v
            if out > U64_MAX:
                raise OverflowError(f"{self.name}({n}) exceeds 64-bit range")
        self._values[n] = out
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self.name!r})"


class SchemmelRule(FunctionRule):
    """Totient family: p**alpha maps to 0 if p <= r, else p**(alpha-1) * (p - r).

    r = 1 is the classic totient (count of integers in [1, n] coprime to n).
    """

    def __init__(self, r: int):
        if r < 1:
            raise ValueError(f"family parameter must be >= 1, got {r}")
        super().__init__(f"schemmel:{r}")
        self.r = r

    def prime_power(self, p: int, alpha: int) -> int:
        if alpha < 1:
            raise ValueError(f"exponent must be >= 1, got {alpha}")
        if p <= self.r:
            return 0
        v = p ** (alpha - 1) * (p - self.r)
        if v > U64_MAX:
            raise OverflowError(f"{self.name}({p}**{alpha}) exceeds 64-bit range")
        return v


class CustomRule(FunctionRule):
    """Rule given by an explicit finite table of prime-power values.

    Evaluation outside the table is a hard error: a finite table cannot
    speak for prime powers it does not cover, and a silent default would
    fabricate values.
    """

    def __init__(self, name: str, table: dict[tuple[int, int], int]):
        super().__init__(name)
        checked: dict[tuple[int, int], int] = {}
        for (p, a), v in table.items():
            if not is_prime(p):
                raise ValueError(f"table key ({p}, {a}): {p} is not prime")
            if a < 1:
                raise ValueError(f"table key ({p}, {a}): exponent must be >= 1")
            if not 0 <= v <= U64_MAX:
                raise ValueError(f"table value for ({p}, {a}) outside 64-bit range")
            if (p, a) in checked:
                raise ValueError(f"duplicate table entry for ({p}, {a})")
            checked[(p, a)] = v
        self.table = checked

    def prime_power(self, p: int, alpha: int) -> int:
        try:
            return self.table[(p, alpha)]
        except KeyError:
            raise RuleError(
                f"rule {self.name!r} incomplete: no value for ({p}, {alpha})"
            ) from None

    def covers(self, p: int, alpha: int) -> bool:
        return (p, alpha) in self.table


def schemmel(r: int) -> SchemmelRule:
    """The rule with prime-power values p**(alpha-1) * (p - r), 0 when p <= r."""
    return SchemmelRule(r)


def rule_from_json(text: str, name: str | None = None) -> CustomRule:
    """Parse a custom rule document: {"name": str, "entries": [{"p", "alpha", "value"}]}."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"invalid rule JSON: {e}") from None
    if not isinstance(doc, dict) or "entries" not in doc:
        raise ValueError('rule JSON must be an object with an "entries" list')
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise ValueError('"entries" must be a list')
    table: dict[tuple[int, int], int] = {}
    for i, entry in enumerate(entries):
        if not isinstance(entry, dict) or not {"p", "alpha", "value"} <= entry.keys():
            raise ValueError(f'entry {i} must have keys "p", "alpha", "value"')
        p, a, v = entry["p"], entry["alpha"], entry["value"]
        if not all(isinstance(x, int) for x in (p, a, v)):
            raise ValueError(f"entry {i}: p, alpha, value must be integers")
        if (p, a) in table:
            raise ValueError(f"entry {i}: duplicate entry for ({p}, {a})")
        table[(p, a)] = v
    return CustomRule(name or str(doc.get("name", "custom")), table)


def load_rule(path: str) -> CustomRule:
    """Load a custom rule from a JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise ValueError(f"cannot read rule file {path}: {e}") from None
    return rule_from_json(text)


def rule_from_spec(spec: str) -> FunctionRule:
    """Resolve a rule argument: "schemmel:<r>" inline, else a JSON file path."""
    if spec.startswith("schemmel:"):
        try:
            r = int(spec.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad rule spec {spec!r}: expected schemmel:<integer>") from None
        return schemmel(r)
    return load_rule(spec)


@dataclass(frozen=True)
class Violation:
    """A failed prime-power check: which hypothesis, where, and the value seen."""

    prop: str  # "I", "II", or "III"
    p: int
    alpha: int
    value: int  # f(p**alpha)


@dataclass(frozen=True)
class GlobalViolation:
    """A failed whole-integer check; p is the offending prime for "B", 0 for "A"."""

    prop: str  # "A" or "B"
    n: int
    p: int
    value: int  # f(n)


@dataclass(frozen=True)
class ValidationReport:
    rule: FunctionRule
    prime_bound: int
    exponent_bound: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def _divides(d: int, m: int) -> bool:
    # every integer divides 0; 0 divides only 0
    if d == 0:
        return m == 0
    return m % d == 0


def _prime_support_ok(value: int, base: int) -> bool:
    """True iff every prime dividing value also divides base.

    Strips shared prime factors by iterated gcd, so value never needs to be
    factored (it can be far beyond the factorization bound).
    """
    if value <= 1:
        return True  # no prime divisors
    if base == 0:
        return True  # every prime divides 0
    m = value
    g = gcd(m, base)
    while g > 1:
        m //= g
        g = gcd(m, base)
    return m == 1


def validate(rule: FunctionRule, prime_bound: int, exponent_bound: int) -> ValidationReport:
    """Check hypotheses I-III for every covered cell with p <= prime_bound
    and 1 <= alpha <= exponent_bound.

    Finite-table rules are checked only where they are defined; checks II
    and III at (p, alpha) additionally need the rule to cover (p, 1).
    Failures are recorded as violations, never raised.
    """
    if prime_bound < 2:
        raise ValueError("prime_bound must be >= 2")
    if exponent_bound < 1:
        raise ValueError("exponent_bound must be >= 1")
    violations = []
    for p in sieve_primes(prime_bound):
        has_fp = rule.covers(p, 1)
        fp = rule.prime_power(p, 1) if has_fp else 0
        for alpha in range(1, exponent_bound + 1):
            if not rule.covers(p, alpha):
                continue
            v = rule.prime_power(p, alpha)
            if v >= p**alpha:
                violations.append(Violation("I", p, alpha, v))
            if has_fp:
                if not _divides(fp, v):
                    violations.append(Violation("II", p, alpha, v))
                if not _prime_support_ok(v, p * fp):
                    violations.append(Violation("III", p, alpha, v))
    return ValidationReport(rule, prime_bound, exponent_bound, tuple(violations))


def check_global_properties(rule: FunctionRule, n_bound: int) -> list[GlobalViolation]:
    """Check descent (A) and prime-divisor compatibility (B) for 2 <= n <= n_bound."""
    if n_bound < 2:
        raise ValueError("n_bound must be >= 2")
    out = []
    for n in range(2, n_bound + 1):
        fn = rule.eval(n)
        if fn >= n:
            out.append(GlobalViolation("A", n, 0, fn))
        for p, _ in factorize(n).factors:
            if not _divides(rule.eval(p), fn):
                out.append(GlobalViolation("B", n, p, fn))
    return out
