"""Integer partitions, Young diagrams and the dimension formulas built on them.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the (valid) partition of 0.  All counts are exact Python integers.
Every function here is pure, so results are safe to share between threads.
"""

from functools import cache
from math import comb, factorial

Partition = tuple[int, ...]


def check_partition(lam) -> Partition:
    """Validate and normalize a partition given as any iterable of parts."""
    lam = tuple(int(p) for p in lam)
    for i, p in enumerate(lam):
        if p < 1:
            raise ValueError(f"partition parts must be positive, got {lam}")
        if i and lam[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {lam}")
    return lam


@cache
def generate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.

    This is the canonical index order used by every table and decomposition
    in the package.
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return tuple(rec(n, n))


def conjugate(lam: Partition) -> Partition:
    """Transpose the Young diagram (rows become columns)."""
    lam = check_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def is_self_conjugate(lam: Partition) -> bool:
    lam = check_partition(lam)
    return lam == conjugate(lam)


def hook_lengths(lam: Partition) -> list[list[int]]:
    """Hook length of every cell, row by row."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def specht_dim(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam (hook length formula).

    This is the dimension of the irreducible S_n-module labelled by lam.
    The empty partition counts 1 by convention.
    """
    lam = check_partition(lam)
    n = sum(lam)
    if n == 0:
        return 1
    prod = 1
    for row in hook_lengths(lam):
        for h in row:
            prod *= h
    d, rem = divmod(factorial(n), prod)
    assert rem == 0
    return d


def syt_count_bruteforce(lam: Partition) -> int:
    """Count standard Young tableaux by exhaustively walking removal chains.

    Each tableau corresponds to one maximal chain of corner removals down to
    the empty shape, and each chain is visited once, with no memoization, so
    this is independent of the hook length formula.  Guarded to sum(lam) <= 12.
    """
    lam = check_partition(lam)
    if sum(lam) > 12:
        raise ValueError("syt_count_bruteforce is limited to partitions of n <= 12")

    def count(shape: Partition) -> int:
        if not shape:
            return 1
        total = 0
        for i in range(len(shape)):
            # cell (i, shape[i]-1) is a removable corner
            if i + 1 == len(shape) or shape[i] > shape[i + 1]:
                smaller = shape[:i] + (shape[i] - 1,) + shape[i + 1:]
                if smaller[-1] == 0:
                    smaller = smaller[:-1]
                total += count(smaller)
        return total

    return count(lam)


def weyl_dim(lam: Partition, m: int) -> int:
    """Dimension of the irreducible polynomial GL_m-module of highest weight lam.

    Hook-content formula: prod over cells (i, j) of (m + j - i) / hook(i, j).
    Returns 0 when the diagram has more than m rows.
    """
    lam = check_partition(lam)
    if m < 1:
        raise ValueError("m must be positive")
    if len(lam) > m:
        return 0
    num = 1
    den = 1
    hooks = hook_lengths(lam)
    for i in range(len(lam)):
        for j in range(lam[i]):
            num *= m + j - i
            den *= hooks[i][j]
    d, rem = divmod(num, den)
    assert rem == 0
    return d


def two_row_partitions(n: int) -> list[Partition]:
    """Partitions of n with at most two rows, by decreasing first part.

    The second part ranges over 0..n//2; the 0 case is returned as the
    one-row partition (n,) so its term merges with the one-row label.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for lam2 in range(n // 2 + 1):
        out.append((n,) if lam2 == 0 else (n - lam2, lam2))
    return out


def multinomial(ls) -> int:
    """(sum ls)! / prod(l_i!) for non-negative integers ls."""
    ls = tuple(int(l) for l in ls)
    if any(l < 0 for l in ls):
        raise ValueError("multinomial arguments must be non-negative")
    result = factorial(sum(ls))
    for l in ls:
        result //= factorial(l)
    return result


def binomial(a: int, b: int) -> int:
    """C(a, b), taken to be 0 whenever b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return comb(a, b)
