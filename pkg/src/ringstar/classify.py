"""Ring-level predicates: reduced, domain, field, VNR, pi-regular, Krull
dimension, radical injectivity, d.c.c. on radical ideals."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .ideals import (Ideal, enumerate_ideals, ideal_product, prime_ideals,
                     radical, radical_mask, zero_ideal)
from .rings import FiniteRing, localize_at_prime


def nilradical(R: FiniteRing) -> Ideal:
    return radical(zero_ideal(R))


def zero_divisor_witness(R: FiniteRing) -> tuple[int, int] | None:
    z = R.zero
    for a in R.elements:
        if a == z:
            continue
        for b in R.elements:
            if b != z and R.mul[a][b] == z:
                return (a, b)
    return None


def is_domain(R: FiniteRing) -> bool:
    return R.order > 1 and zero_divisor_witness(R) is None


def non_unit_witness(R: FiniteRing) -> int | None:
    units = set(R.units)
    return next((x for x in R.elements if x != R.zero and x not in units), None)


def is_field(R: FiniteRing) -> bool:
    return R.order > 1 and non_unit_witness(R) is None


def is_reduced(R: FiniteRing) -> bool:
    return nilradical(R).mask == 1 << R.zero


def vnr_witness(R: FiniteRing) -> int | None:
    """Least ``x`` with no ``y`` such that ``x*x*y == x``."""
    for x in R.elements:
        x2 = R.mul[x][x]
        if x not in R.mul[x2]:
            return x
    return None


def is_vnr(R: FiniteRing) -> bool:
    return vnr_witness(R) is None


def pi_regular_exponents(R: FiniteRing) -> dict[int, tuple[int, int] | None]:
    """For each ``a`` the least ``(n, a')`` with ``a**n == (a**n)**2 * a'``.

    ``n`` is searched up to ``|R|``; the power sequence of ``a`` is periodic
    from some index below that bound, so a miss there is a genuine failure.
    """
    out = {}
    for a in R.elements:
        out[a] = None
        for n in range(1, R.order + 1):
            an = R.power(a, n)
            a2n = R.mul[an][an]
            row = R.mul[a2n]
            if an in row:
                out[a] = (n, row.index(an))
                break
    return out


def pi_regular_witness(R: FiniteRing) -> int | None:
    return next((a for a, hit in pi_regular_exponents(R).items() if hit is None), None)


def is_pi_regular(R: FiniteRing) -> bool:
    return pi_regular_witness(R) is None


def longest_chain(ideals: list[Ideal]) -> list[Ideal]:
    """Longest strictly increasing chain under inclusion (DAG longest path)."""
    ordered = sorted(ideals, key=lambda I: I.sort_key)
    best: list[list[Ideal]] = []
    for i, I in enumerate(ordered):
        chain = [I]
        for j in range(i):
            if ordered[j] < I and len(best[j]) + 1 > len(chain):
                chain = best[j] + [I]
        best.append(chain)
    return max(best, key=len, default=[])


def krull_dimension(R: FiniteRing) -> int:
    """Number of strict inclusions in the longest chain of primes (0 for the zero ring)."""
    return max(len(longest_chain(prime_ideals(R))) - 1, 0)


def radical_injective_witness(R: FiniteRing) -> tuple[Ideal, Ideal] | None:
    seen: dict[int, Ideal] = {}
    for I in enumerate_ideals(R):
        r = radical_mask(R, I.mask)
        if r in seen:
            return (seen[r], I)
        seen[r] = I
    return None


def radical_injective(R: FiniteRing) -> bool:
    return radical_injective_witness(R) is None


def radical_ideals(R: FiniteRing) -> list[Ideal]:
    return [I for I in enumerate_ideals(R) if radical_mask(R, I.mask) == I.mask]


@dataclass(frozen=True)
class ChainReport:
    holds: bool
    size: int
    longest: tuple[Ideal, ...]


def _descending_chains_stabilize(ideals: list[Ideal]) -> ChainReport:
    # strict containment strictly lowers cardinality, so the containment
    # graph is acyclic and every descending chain has at most len(ideals) terms
    acyclic = all(not (I < J and J < I) for I in ideals for J in ideals)
    chain = longest_chain(ideals)
    return ChainReport(acyclic and len(chain) <= len(ideals), len(ideals), tuple(reversed(chain)))


def dcc_radical_ideals(R: FiniteRing) -> ChainReport:
    return _descending_chains_stabilize(radical_ideals(R))


def is_artinian(R: FiniteRing) -> ChainReport:
    return _descending_chains_stabilize(list(enumerate_ideals(R)))


@dataclass(frozen=True)
class Equivalence:
    """Several conditions the theory says are equivalent, evaluated separately."""

    conditions: dict[str, bool]
    witnesses: dict[str, Any] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return len(set(self.conditions.values())) <= 1

    @property
    def first_disagreement(self) -> tuple[str, str] | None:
        keys = list(self.conditions)
        for k in keys[1:]:
            if self.conditions[k] != self.conditions[keys[0]]:
                return (keys[0], k)
        return None


def vnr_equivalence_report(R: FiniteRing) -> Equivalence:
    lat = enumerate_ideals(R)
    witnesses: dict[str, Any] = {}
    x = vnr_witness(R)
    if x is not None:
        witnesses["vnr"] = {"x": x}
    dim0_reduced = krull_dimension(R) == 0 and is_reduced(R)
    local_fields = True
    for P in prime_ideals(R):
        RP, _ = localize_at_prime(R, P)
        if not is_field(RP):
            local_fields = False
            witnesses["localizations_are_fields"] = {"prime": P.to_list(), "order": RP.order}
            break
    not_radical = next((I for I in lat if not radical_mask(R, I.mask) == I.mask), None)
    if not_radical is not None:
        witnesses["ideals_radical"] = {"ideal": not_radical.to_list()}
    not_idem = next((I for I in lat if ideal_product(I, I).mask != I.mask), None)
    if not_idem is not None:
        witnesses["ideals_idempotent"] = {"ideal": not_idem.to_list()}
    return Equivalence({
        "vnr": x is None,
        "zero_dimensional_and_reduced": dim0_reduced,
        "localizations_are_fields": local_fields,
        "ideals_radical": not_radical is None,
        "ideals_idempotent": not_idem is None,
    }, witnesses)


@dataclass(frozen=True)
class ClassificationReport:
    label: str
    order: int
    is_field: bool
    is_domain: bool
    is_reduced: bool
    is_vnr: bool
    is_pi_regular: bool
    radical_injective: bool
    dcc_radical_ideals: bool
    krull_dimension: int
    nilradical: Ideal
    degenerate: bool
    witnesses: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "order": self.order,
            "degenerate": self.degenerate,
            "is_field": self.is_field,
            "is_domain": self.is_domain,
            "is_reduced": self.is_reduced,
            "is_vnr": self.is_vnr,
            "is_pi_regular": self.is_pi_regular,
            "radical_injective": self.radical_injective,
            "dcc_radical_ideals": self.dcc_radical_ideals,
            "krull_dimension": self.krull_dimension,
            "nilradical": self.nilradical.to_list(),
            "witnesses": self.witnesses,
        }


def classify(R: FiniteRing) -> ClassificationReport:
    w: dict[str, Any] = {}
    nil = nilradical(R)
    zd = zero_divisor_witness(R)
    nu = non_unit_witness(R)
    if R.order == 1:
        w["is_field"] = w["is_domain"] = {"reason": "zero ring"}
    else:
        if nu is not None:
            w["is_field"] = {"non_unit": nu}
        if zd is not None:
            w["is_domain"] = {"zero_divisors": list(zd)}
    if nil.mask != 1 << R.zero:
        w["is_reduced"] = {"nilpotent": next(x for x in nil.members if x != R.zero)}
    vx = vnr_witness(R)
    if vx is not None:
        w["is_vnr"] = {"x": vx}
    px = pi_regular_witness(R)
    if px is not None:
        w["is_pi_regular"] = {"a": px}
    rij = radical_injective_witness(R)
    if rij is not None:
        w["radical_injective"] = {"I": rij[0].to_list(), "J": rij[1].to_list()}
    dcc = dcc_radical_ideals(R)
    if not dcc.holds:
        w["dcc_radical_ideals"] = {"chain": [I.to_list() for I in dcc.longest]}
    return ClassificationReport(
        label=R.label, order=R.order,
        is_field=is_field(R), is_domain=is_domain(R), is_reduced=nil.mask == 1 << R.zero,
        is_vnr=vx is None, is_pi_regular=px is None, radical_injective=rij is None,
        dcc_radical_ideals=dcc.holds, krull_dimension=krull_dimension(R), nilradical=nil,
        degenerate=R.order == 1, witnesses=w,
    )
