"""The star property (radical of an arbitrary meet equals a finite meet of
radicals), the uniform-exponent condition A2 and its companions on finite rings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Sequence

from .classify import Equivalence, krull_dimension
from .errors import RingError
from .ideals import (Ideal, enumerate_ideals, is_primary, minimal_primes, prime_ideals,
                     radical_mask)
from .rings import FiniteRing

DEFAULT_STAR_CAP = 16


@dataclass(frozen=True)
class IdealFamily:
    """Distinct ideals of one ring.

    An arbitrary index set over a finite lattice repeats ideals; only the
    distinct members matter, and ``duplicates_removed`` records the reduction.
    """

    ring: FiniteRing = field(repr=False)
    members: tuple[Ideal, ...]
    label: str = ""
    duplicates_removed: int = 0

    @classmethod
    def of(cls, ring: FiniteRing, ideals: Iterable[Ideal], label: str = "") -> "IdealFamily":
        seen, members, dropped = set(), [], 0
        for I in ideals:
            if I.ring is not ring:
                raise RingError("family member belongs to a different ring")
            if I.mask in seen:
                dropped += 1
                continue
            seen.add(I.mask)
            members.append(I)
        return cls(ring, tuple(members), label, dropped)

    @classmethod
    def all_ideals(cls, R: FiniteRing) -> "IdealFamily":
        return cls(R, enumerate_ideals(R).ideals, "all ideals")

    @classmethod
    def all_primary(cls, R: FiniteRing) -> "IdealFamily":
        return cls(R, tuple(Q for Q in enumerate_ideals(R) if is_primary(Q)), "primary ideals")

    @classmethod
    def all_primes(cls, R: FiniteRing) -> "IdealFamily":
        return cls(R, tuple(prime_ideals(R)), "prime ideals")

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class StarCheckResult:
    satisfied: bool
    method: str
    witness_subset: tuple[int, ...] = ()
    counterexample: dict[str, Any] | None = None
    families_checked: int = 0
    certificate: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {
            "satisfied": self.satisfied,
            "method": self.method,
            "witness_subset": list(self.witness_subset),
            "families_checked": self.families_checked,
            "certificate": self.certificate,
            "counterexample": self.counterexample,
        }


class _RadicalCache(dict):
    def __init__(self, R: FiniteRing):
        super().__init__()
        self.R = R

    def __missing__(self, mask: int) -> int:
        r = radical_mask(self.R, mask)
        self[mask] = r
        return r


def _sweep(R: FiniteRing, masks: Sequence[int], rad: _RadicalCache) -> int | None:
    """Check the radical/meet identity on every nonempty subfamily.

    Subset ``s`` extends ``s`` minus its lowest bit, so each meet costs one AND.
    Returns the first failing subset bitmask, or ``None``.
    """
    n = len(masks)
    full = R.full_mask
    rads = [rad[m] for m in masks]
    meet = [full] * (1 << n)
    rmeet = [full] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        i = low.bit_length() - 1
        prev = s ^ low
        m = meet[s] = meet[prev] & masks[i]
        r = rmeet[s] = rmeet[prev] & rads[i]
        if rad[m] != r:
            return s
    return None


def _pairwise(masks: Sequence[int], rad: _RadicalCache) -> tuple[int, int] | None:
    for i, a in enumerate(masks):
        for j in range(i, len(masks)):
            b = masks[j]
            if rad[a & b] != rad[a] & rad[b]:
                return (i, j)
    return None


def _subset_indices(s: int) -> tuple[int, ...]:
    return tuple(i for i in range(s.bit_length()) if (s >> i) & 1)


def _family_counterexample(R, members, idx, rad) -> dict[str, Any]:
    chosen = [members[i] for i in idx]
    meet = R.full_mask
    rmeet = R.full_mask
    for I in chosen:
        meet &= I.mask
        rmeet &= rad[I.mask]
    return {
        "family": [I.to_list() for I in chosen],
        "radical_of_meet": list(R.members_of(rad[meet])),
        "meet_of_radicals": list(R.members_of(rmeet)),
    }


def star_check_finite(R: FiniteRing, cap: int = DEFAULT_STAR_CAP,
                      method: str = "auto") -> StarCheckResult:
    """Decide the star property of ``R`` over its whole ideal lattice.

    With at most ``cap`` ideals every nonempty subfamily is checked; otherwise
    the pairwise identity is checked and extended to all finite families by
    induction (a finite lattice has only finitely many distinct families).
    ``witness_subset`` is the least subfamily of the full lattice realizing
    the radical of its meet.
    """
    lat = enumerate_ideals(R)
    masks = lat.masks
    rad = _RadicalCache(R)
    if method == "auto":
        method = "exhaustive" if len(lat) <= cap else "certified"
    if method == "exhaustive":
        bad = _sweep(R, masks, rad)
        checked = (1 << len(masks)) - 1
        cert = f"all {checked} nonempty subfamilies of {len(masks)} ideals"
        if bad is not None:
            idx = _subset_indices(bad)
            return StarCheckResult(False, method, (), _family_counterexample(R, lat.ideals, idx, rad),
                                   checked, cert)
    elif method == "certified":
        bad = _pairwise(masks, rad)
        checked = len(masks) * (len(masks) + 1) // 2
        cert = (f"finite lattice of {len(masks)} ideals + pairwise radical identity "
                f"({checked} pairs); induction covers every family")
        if bad is not None:
            return StarCheckResult(False, method, (), _family_counterexample(R, lat.ideals, bad, rad),
                                   checked, cert)
    else:
        raise ValueError(f"unknown star-check method {method!r}")
    whole = star_check_family(IdealFamily(R, lat.ideals, "all ideals"))
    return StarCheckResult(True, method, whole.witness_subset, None, checked, cert)


def star_check_family(family: IdealFamily) -> StarCheckResult:
    """Find the least finite subfamily S' whose radicals meet in sqrt(meet of F).

    Subfamilies are tried by size, then lexicographically by member index.
    The empty family meets to R, whose radical is R, so S' is empty.
    """
    R = family.ring
    members = family.members
    rad = _RadicalCache(R)
    cert = f"{family.duplicates_removed} duplicate members removed" if family.duplicates_removed else ""
    if not members:
        return StarCheckResult(True, "exhaustive", (), None, 1, "empty family meets to R")
    meet = R.full_mask
    for I in members:
        meet &= I.mask
    target = rad[meet]
    rads = [rad[I.mask] for I in members]
    tried = 0
    for k in range(len(members) + 1):  # k = 0 only succeeds in the zero ring
        for idx in combinations(range(len(members)), k):
            tried += 1
            acc = R.full_mask
            for i in idx:
                acc &= rads[i]
            if acc == target:
                return StarCheckResult(True, "exhaustive", idx, None, tried, cert)
    return StarCheckResult(False, "exhaustive", (),
                           _family_counterexample(R, members, range(len(members)), rad), tried, cert)


@dataclass(frozen=True)
class A2Exponents:
    """Least uniform exponents for condition A2 on a family."""

    per_element: tuple[int, ...]
    uniform: int
    worst: tuple[int, int] | None  # (element, member index) attaining ``uniform``
    holds: bool


def a2_minimal_exponent(family: IdealFamily) -> A2Exponents:
    """For each ``a``, least ``n`` with ``a**n`` in every member whose radical holds ``a``.

    Exponent sets are upward closed, so the search stops at ``|R|``.
    """
    R = family.ring
    pm = R.power_masks
    per, worst, uniform, holds = [], None, 1, True
    for a in R.elements:
        n_a = 1
        for qi, Q in enumerate(family.members):
            if not pm[a] & Q.mask:
                continue
            row = R.power_table[a]
            k = next((k for k in range(1, R.order + 1) if (Q.mask >> row[k - 1]) & 1), None)
            if k is None:
                holds = False
                continue
            if k > n_a:
                n_a = k
                if k > uniform:
                    uniform, worst = k, (a, qi)
        per.append(n_a)
    return A2Exponents(tuple(per), uniform, worst, holds)


def family_report(family: IdealFamily) -> dict[str, Any]:
    R = family.ring
    meet = R.full_mask
    for Q in family.members:
        meet &= Q.mask
    non_primary = [i for i, Q in enumerate(family.members) if not is_primary(Q)]
    a2 = a2_minimal_exponent(family)
    return {
        "family": [Q.to_list() for Q in family.members],
        "a1_meet_is_zero": meet == 1 << R.zero,
        "meet": list(R.members_of(meet)),
        "all_primary": not non_primary,
        "non_primary_members": non_primary,
        "a2_holds": a2.holds,
        "a2_uniform_exponent": a2.uniform,
        "a2_per_element": list(a2.per_element),
    }


def a2_equiv_radical_identity(family: IdealFamily, cap: int = DEFAULT_STAR_CAP) -> Equivalence:
    """A2 versus the radical/meet identity on every subfamily, evaluated separately."""
    R = family.ring
    a2 = a2_minimal_exponent(family)
    rad = _RadicalCache(R)
    masks = [Q.mask for Q in family.members]
    witnesses: dict[str, Any] = {"a2": {"uniform_exponent": a2.uniform}}
    if len(masks) <= cap:
        bad = _sweep(R, masks, rad)
        witnesses["radical_identity"] = {"method": "exhaustive", "subfamilies": (1 << len(masks)) - 1}
        if bad is not None:
            witnesses["radical_identity"]["counterexample"] = _family_counterexample(
                R, family.members, _subset_indices(bad), rad)
    else:
        bad = _pairwise(masks, rad)
        witnesses["radical_identity"] = {"method": "certified", "pairs": len(masks) * (len(masks) + 1) // 2}
        if bad is not None:
            witnesses["radical_identity"]["counterexample"] = _family_counterexample(
                R, family.members, bad, rad)
    return Equivalence({"a2": a2.holds, "radical_identity": bad is None}, witnesses)


def zero_dim_equivalence(R: FiniteRing) -> Equivalence:
    dim = krull_dimension(R)
    all_ideals = a2_minimal_exponent(IdealFamily.all_ideals(R))
    primary = a2_minimal_exponent(IdealFamily.all_primary(R))
    return Equivalence(
        {"zero_dimensional": dim == 0, "a2_all_ideals": all_ideals.holds,
         "a2_primary_ideals": primary.holds},
        {"krull_dimension": dim, "a2_all_ideals_exponent": all_ideals.uniform,
         "a2_primary_ideals_exponent": primary.uniform},
    )


@dataclass(frozen=True)
class PrimeFamilyReport:
    primes: tuple[Ideal, ...]
    radical_of_meet: Ideal
    gamma: tuple[int, ...] | None  # least subfamily of ``primes`` meeting in radical_of_meet
    every_subfamily: bool  # the identity for each prime subfamily, not just the whole family
    minimal_primes: tuple[Ideal, ...]

    @property
    def holds(self) -> bool:
        return self.gamma is not None

    @property
    def gamma_is_minimal_primes(self) -> bool:
        if self.gamma is None:
            return False
        return {self.primes[i].mask for i in self.gamma} == {P.mask for P in self.minimal_primes}

    def to_dict(self) -> dict[str, Any]:
        return {
            "primes": [P.to_list() for P in self.primes],
            "radical_of_meet": self.radical_of_meet.to_list(),
            "gamma": None if self.gamma is None else [self.primes[i].to_list() for i in self.gamma],
            "holds": self.holds,
            "every_subfamily": self.every_subfamily,
            "gamma_is_minimal_primes": self.gamma_is_minimal_primes,
        }


def prime_family_condition(R: FiniteRing) -> PrimeFamilyReport:
    primes = tuple(prime_ideals(R))
    meet = R.full_mask
    for P in primes:
        meet &= P.mask
    target = radical_mask(R, meet)
    gamma = None
    for k in range(0, len(primes) + 1):
        for idx in combinations(range(len(primes)), k):
            acc = R.full_mask
            for i in idx:
                acc &= primes[i].mask
            if acc == target:
                gamma = idx
                break
        if gamma is not None:
            break
    rad = _RadicalCache(R)
    every = _sweep(R, [P.mask for P in primes], rad) is None
    return PrimeFamilyReport(primes, Ideal(R, target), gamma, every, tuple(minimal_primes(R)))
