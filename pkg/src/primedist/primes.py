"""Desk-scale prime oracles used by the labeling constructors.

Primality is answered from a sieve below ``SIEVE_LIMIT`` and by a
deterministic Miller-Rabin witness set above it.  Every search in this
module is deterministic with a documented tie-break, so that outputs
are reproducible run to run.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from math import isqrt

SIEVE_LIMIT = 10_000_000

# Deterministic witness set, correct for every n < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class NotFoundError(Exception):
    """A bounded search exhausted its range without a result."""


class PrimeSieve:
    """Primality table over [0, limit] with a sorted prime list."""

    def __init__(self, limit: int):
        if limit < 4:
            raise ValueError("sieve limit must be at least 4")
        flags = bytearray([1]) * (limit + 1)
        flags[0] = flags[1] = 0
        for p in range(2, isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = b"\x00" * ((limit - p * p) // p + 1)
        self.limit = limit
        self.flags = bytes(flags)
        self._primes: list[int] | None = None

    def __contains__(self, n: int) -> bool:
        return 0 <= n <= self.limit and self.flags[n] == 1

    @property
    def primes(self) -> list[int]:
        if self._primes is None:
            self._primes = [i for i, f in enumerate(self.flags) if f]
        return self._primes

    def primes_from(self, start: int):
        """Yield sieve primes >= start in ascending order."""
        ps = self.primes
        for i in range(bisect_left(ps, start), len(ps)):
            yield ps[i]

    def next_prime(self, n: int) -> int:
        ps = self.primes
        i = bisect_left(ps, n + 1)
        if i >= len(ps):
            raise NotFoundError(f"no prime above {n} within sieve limit {self.limit}")
        return ps[i]


@lru_cache(maxsize=4)
def default_sieve(limit: int = SIEVE_LIMIT) -> PrimeSieve:
    return PrimeSieve(limit)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """True iff n is a prime >= 2.  Negative numbers, 0 and 1 are not prime."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    sieve = default_sieve()
    if n <= sieve.limit:
        return sieve.flags[n] == 1
    return _miller_rabin(n)


def goldbach_pair(m: int, limit: int | None = None) -> tuple[int, int]:
    """Write even m >= 4 as p1 + p2 with p1 >= p2, choosing the smallest p2.

    ``limit`` optionally caps p2; exceeding it raises NotFoundError (a
    signal the cap is too small, never observed for feasible m).
    """
    if m < 4 or m % 2:
        raise ValueError(f"goldbach target must be even and >= 4, got {m}")
    cap = m // 2 if limit is None else min(limit, m // 2)
    for p2 in default_sieve().primes_from(2):
        if p2 > cap:
            break
        if is_prime(m - p2):
            return (m - p2, p2)
    raise NotFoundError(f"no prime pair for {m} with smaller part <= {cap}")


def _ascending_parts(m: int, terms: int, lo: int, odd_only: bool) -> list[int] | None:
    # Smallest-first ascending search => minimizes the final tail of the
    # nonincreasing decomposition lexicographically.
    if terms == 1:
        if m >= lo and (not odd_only or m % 2) and is_prime(m):
            return [m]
        return None
    start = max(lo, 3) if odd_only else lo
    for p in default_sieve().primes_from(start):
        if p * terms > m:
            break
        rest = _ascending_parts(m - p, terms - 1, p, odd_only)
        if rest is not None:
            return [p] + rest
    return None


def prime_sum(m: int, terms: int) -> tuple[int, ...]:
    """Write m as exactly ``terms`` primes, returned in nonincreasing order.

    Tie-break: decompositions avoiding the prime 2 are preferred (one
    exists whenever m and terms share parity); among the admissible
    decompositions the tail is minimized, i.e. smallest last part, then
    smallest next-to-last part, and so on.
    """
    if not 2 <= terms <= 6:
        raise ValueError(f"terms must be in 2..6, got {terms}")
    if m < 2 * terms:
        raise ValueError(f"target {m} too small for {terms} primes")
    parts = _ascending_parts(m, terms, 3, odd_only=True)
    if parts is None:
        parts = _ascending_parts(m, terms, 2, odd_only=False)
    if parts is None:
        raise NotFoundError(f"{m} is not a sum of {terms} primes")
    return tuple(reversed(parts))


def prime_pairs_with_gap(
    gap: int, count: int, min_p: int = 2, consecutive: bool = False
) -> list[tuple[int, int]]:
    """First ``count`` prime pairs (p, p+gap) with p >= min_p, ascending.

    With consecutive=True additionally requires no prime strictly
    between p and p+gap.
    """
    if gap < 2 or gap % 2:
        raise ValueError(f"gap must be even and >= 2, got {gap}")
    if count < 1:
        raise ValueError("count must be >= 1")
    sieve = default_sieve()
    pairs: list[tuple[int, int]] = []
    for p in sieve.primes_from(max(min_p, 2)):
        if p + gap > sieve.limit:
            break
        if sieve.flags[p + gap] and (not consecutive or sieve.next_prime(p) == p + gap):
            pairs.append((p, p + gap))
            if len(pairs) == count:
                return pairs
    raise NotFoundError(
        f"sieve exhausted after {len(pairs)} pairs with gap {gap} (wanted {count})"
    )


def twin_prime_pairs(min_p: int = 2):
    """Yield twin prime pairs (p, p+2) ascending, within the sieve range."""
    sieve = default_sieve()
    for p in sieve.primes_from(max(min_p, 2)):
        if p + 2 > sieve.limit:
            return
        if sieve.flags[p + 2]:
            yield (p, p + 2)


def _even_primorial(length: int) -> int:
    out = 2
    for q in default_sieve().primes_from(3):
        if q > length:
            break
        out *= q
    return out


@lru_cache(maxsize=None)
def prime_ap(length: int, search_limit: int = 1_000_000) -> tuple[int, int]:
    """Arithmetic progression of ``length`` primes within [2, search_limit].

    Deterministic: smallest start, then smallest difference.  The
    difference is even (0 for length 1); every progression of two or
    more odd primes has an even difference, and the degenerate
    progressions through 2 are excluded.
    """
    if length < 1:
        raise ValueError("length must be >= 1")
    if length == 1:
        return (2, 0)
    if search_limit > SIEVE_LIMIT:
        raise ValueError("search_limit beyond sieve range")
    sieve = default_sieve()
    flags = sieve.flags
    step_big = _even_primorial(length)
    for start in sieve.primes_from(3):
        if start + 2 * (length - 1) > search_limit:
            break
        # For start > length, every prime q <= length must divide the
        # difference, else some term is a proper multiple of q.
        step = 2 if start <= length else step_big
        dmax = (search_limit - start) // (length - 1)
        for d in range(step, dmax + 1, step):
            x = start
            for _ in range(length - 1):
                x += d
                if not flags[x]:
                    break
            else:
                return (start, d)
    raise NotFoundError(
        f"no prime progression of length {length} within {search_limit}"
    )
