"""Prime classification and the fast membership route to the iteration limit.

Primes split by the limit of their orbit: class "P" ends at 1, class "Q"
ends at 0. An integer n >= 1 belongs to the set S when no prime divisor of
n is in Q; the set T rebuilds the same membership recursively from the rule
alone (1 belongs; a prime belongs iff its image does, and 0 never belongs;
a composite belongs iff all its prime divisors do).

For valid rules the two sets coincide and the characteristic function of S
is exactly the iteration limit, which is what makes the fast route fast: it
iterates the rule only on primes, once each, and answers composites by
divisor lookup.

The verification suites below re-derive these facts empirically on a finite
range and return counterexample lists; an empty list is a pass. Each suite
keeps direct iteration (`h_direct`) on at least one side of every
comparison so the fast path cannot confirm itself.

Memo caches admit concurrent readers; writes are per-key idempotent (two
racing writers store equal values), so no locking is needed.
"""

from __future__ import annotations

from math import isqrt

from .dynamics import h_direct
from .factorization import divisors, factorize, is_prime
from .rules import FunctionRule, RuleError

IN_P = "P"
IN_Q = "Q"

_NON_DESCENDING = "property violation: non-descending rule"


class PrimeClassification:
    """Memoized per-rule verdicts and set membership for one rule."""

    def __init__(self, rule: FunctionRule):
        self.rule = rule
        self.verdicts: dict[int, str] = {}
        self._t_memo: dict[int, bool] = {1: True}
        self._t_literal_memo: dict[int, bool] = {1: True}

    def classify_prime(self, p: int) -> str:
        """IN_P when the orbit of p ends at 1, IN_Q when it ends at 0."""
        verdict = self.verdicts.get(p)
        if verdict is None:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            verdict = IN_P if h_direct(self.rule, p) == 1 else IN_Q
            self.verdicts[p] = verdict
        return verdict

    def in_s(self, n: int) -> bool:
        """True when no prime divisor of n is classified IN_Q."""
        if n < 1:
            raise ValueError(f"membership is defined for n >= 1, got {n}")
        verdicts = self.verdicts
        for p, _ in factorize(n).factors:
            verdict = verdicts.get(p)
            if verdict is None:
                verdict = self.classify_prime(p)
            if verdict == IN_Q:
                return False
        return True

    def in_t(self, n: int) -> bool:
        """Recursive membership, composites decided by their prime divisors.

        The prime case follows the image chain p -> f(p) -> ... iteratively;
        a hop budget equal to the start value turns a non-descending rule
        into an error instead of an endless walk.
        """
        if n < 1:
            raise ValueError(f"membership is defined for n >= 1, got {n}")
        cached = self._t_memo.get(n)
        if cached is not None:
            return cached
        fac = factorize(n)
        if len(fac.factors) == 1 and fac.factors[0][1] == 1:
            result = self._t_prime(n)
        else:
            result = all(self.in_t(p) for p, _ in fac.factors)
        self._t_memo[n] = result
        return result

    def _t_prime(self, p: int) -> bool:
        chain = [p]
        v = self.rule.eval(p)
        while True:
            if v == 0:
                result = False  # 0 is never a member
                break
            if v == 1:
                result = True
                break
            cached = self._t_memo.get(v)
            if cached is not None:
                result = cached
                break
            fac = factorize(v)
            if len(fac.factors) == 1 and fac.factors[0][1] == 1:
                chain.append(v)
                if len(chain) > p:
                    raise RuleError(
                        f"{_NON_DESCENDING}: image chain from {p} under "
                        f"{self.rule.name} exceeded {p} hops"
                    )
                v = self.rule.eval(v)
            else:
                result = all(self.in_t(q) for q, _ in fac.factors)
                break
        for q in chain:
            self._t_memo[q] = result
        return result

    def in_t_literal(self, n: int, _budget: int | None = None) -> bool:
        """Membership by the literal composite criterion: n splits as
        x1 * x2 with x1, x2 > 1 and both members.

        Equivalent to in_t but exponential without the memo; meant for
        cross-checking the prime-divisor form on small ranges.
        """
        if n < 1:
            raise ValueError(f"membership is defined for n >= 1, got {n}")
        cached = self._t_literal_memo.get(n)
        if cached is not None:
            return cached
        budget = n if _budget is None else _budget
        fac = factorize(n)
        if len(fac.factors) == 1 and fac.factors[0][1] == 1:
            if budget <= 0:
                raise RuleError(
                    f"{_NON_DESCENDING}: image chain from {n} under "
                    f"{self.rule.name} exhausted its budget"
                )
            v = self.rule.eval(n)
            result = False if v == 0 else self.in_t_literal(v, _budget=budget - 1)
        else:
            result = any(
                self.in_t_literal(d) and self.in_t_literal(n // d)
                for d in divisors(fac)[1:-1]
                if d * d <= n
            )
        self._t_literal_memo[n] = result
        return result

    def h_fast(self, n: int) -> int:
        """Limit via membership: 1 when in_s(n), else 0.

        Never iterates the rule on a composite; only primes are iterated,
        inside classify_prime, and each at most once.
        """
        return 1 if self.in_s(n) else 0


def verify_theorem(c: PrimeClassification, bound: int) -> list[tuple[int, int]]:
    """Pairs (x, y), x <= y, x*y <= bound, where the direct limit of x*y
    differs from the product of the direct limits of x and y."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    rule = c.rule
    hd = {n: h_direct(rule, n) for n in range(1, bound + 1)}
    out = []
    for x in range(1, isqrt(bound) + 1):
        for y in range(x, bound // x + 1):
            if hd[x * y] != hd[x] * hd[y]:
                out.append((x, y))
    return out


def verify_s_equals_t(c: PrimeClassification, bound: int) -> list[int]:
    """All n <= bound where in_s and in_t disagree."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return [n for n in range(1, bound + 1) if c.in_s(n) != c.in_t(n)]


def verify_orbit_closure(
    c: PrimeClassification, bound: int, depth: int
) -> list[tuple[int, int]]:
    """Pairs (k, r), k <= bound, r <= depth, where membership of the r-th
    image of k in S differs from membership of k (an image of 0 counts as
    a non-member)."""
    if bound < 1 or depth < 1:
        raise ValueError("bound and depth must be >= 1")
    out = []
    for k in range(1, bound + 1):
        base = c.in_s(k)
        v = k
        for r in range(1, depth + 1):
            v = c.rule.eval(v)
            hit = v >= 1 and c.in_s(v)
            if hit != base:
                out.append((k, r))
    return out


def verify_divisor_closure(c: PrimeClassification, bound: int) -> list[tuple[int, int]]:
    """Divisor-closure counterexamples for T up to bound.

    Flags (k, d) when k is a member but its divisor d is not, and (k, k)
    when every prime divisor of k is a member yet k is not.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = []
    for k in range(1, bound + 1):
        fac = factorize(k)
        if c.in_t(k):
            for d in divisors(fac):
                if not c.in_t(d):
                    out.append((k, d))
        elif all(c.in_t(p) for p, _ in fac.factors):
            out.append((k, k))
    return out
