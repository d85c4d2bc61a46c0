"""Brute-force reference computations, deliberately naive and independent of
the bitmask code paths they check. Sets of ints everywhere."""
from itertools import combinations
from math import gcd


def ideals_by_subsets(R):
    """Every subset containing zero that satisfies the ideal axioms (order <= 12)."""
    others = [x for x in range(R.order) if x != R.zero]
    found = []
    for k in range(len(others) + 1):
        for combo in combinations(others, k):
            S = set(combo) | {R.zero}
            if all(R.add[a][b] in S for a in S for b in S) and \
               all(R.neg[a] in S for a in S) and \
               all(R.mul[r][a] in S for r in range(R.order) for a in S):
                found.append(frozenset(S))
    return found


def closure(R, gens):
    S = {R.zero} | set(gens)
    changed = True
    while changed:
        changed = False
        for a in list(S):
            for b in list(S):
                for c in (R.add[a][b], R.neg[a]):
                    if c not in S:
                        S.add(c)
                        changed = True
            for r in range(R.order):
                if R.mul[r][a] not in S:
                    S.add(R.mul[r][a])
                    changed = True
    return frozenset(S)


def radical_set(R, S):
    out = set()
    for x in range(R.order):
        p = x
        for _ in range(R.order):
            if p in S:
                out.add(x)
                break
            p = R.mul[p][x]
    return frozenset(out)


def is_prime_set(R, S):
    if len(S) == R.order:
        return False
    return all(a in S or b in S for a in range(R.order) for b in range(R.order)
               if R.mul[a][b] in S)


def units(R):
    return {x for x in range(R.order) if any(R.mul[x][y] == R.one for y in range(R.order))}


def is_field_brute(R):
    return R.order > 1 and all(x in units(R) for x in range(R.order) if x != R.zero)


def residue_units(n):
    return [k for k in range(n) if gcd(k, n) == 1]


def fingerprint_brute(R):
    """(order, characteristic, units, ideals, primes, nilradical) by subset search."""
    ideals = ideals_by_subsets(R)
    char = 1
    acc = R.one
    while acc != R.zero:
        acc = R.add[acc][R.one]
        char += 1
    return (R.order, char, len(units(R)), len(ideals),
            sum(1 for S in ideals if is_prime_set(R, S)),
            len(radical_set(R, {R.zero})))


def krull_brute(R, ideals):
    primes = [S for S in ideals if is_prime_set(R, S)]
    best = 0

    def extend(chain_top, length):
        nonlocal best
        best = max(best, length)
        for Q in primes:
            if chain_top < Q:
                extend(Q, length + 1)

    for P in primes:
        extend(P, 0)
    return best
