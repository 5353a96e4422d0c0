"""Iterated multiplicative arithmetic functions.

Evaluate rules given by prime-power values, iterate them to their absorbing
limit in {0, 1}, classify primes by that limit, and verify on finite ranges
that the limit behaves as a completely multiplicative indicator function.
"""

from .classification import (
    IN_P,
    IN_Q,
    PrimeClassification,
    verify_divisor_closure,
    verify_orbit_closure,
    verify_s_equals_t,
    verify_theorem,
)
from .dynamics import Trajectory, h_direct, iterate, trajectory
from .factorization import (
    Factorization,
    big_omega,
    divisors,
    factor_limit,
    factorize,
    is_prime,
    sieve_primes,
)
from .rules import (
    CustomRule,
    FunctionRule,
    GlobalViolation,
    RuleError,
    SchemmelRule,
    ValidationReport,
    Violation,
    check_global_properties,
    load_rule,
    rule_from_json,
    rule_from_spec,
    schemmel,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "IN_P",
    "IN_Q",
    "PrimeClassification",
    "verify_divisor_closure",
    "verify_orbit_closure",
    "verify_s_equals_t",
    "verify_theorem",
    "Trajectory",
    "h_direct",
    "iterate",
    "trajectory",
    "Factorization",
    "big_omega",
    "divisors",
    "factor_limit",
    "factorize",
    "is_prime",
    "sieve_primes",
    "CustomRule",
    "FunctionRule",
    "GlobalViolation",
    "RuleError",
    "SchemmelRule",
    "ValidationReport",
    "Violation",
    "check_global_properties",
    "load_rule",
    "rule_from_json",
    "rule_from_spec",
    "schemmel",
    "validate",
]
