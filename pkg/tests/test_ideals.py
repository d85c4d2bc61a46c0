import pytest
from hypothesis import given, settings, strategies as st

from oracles import closure, ideals_by_subsets, is_prime_set, radical_set
from ringstar.errors import ResourceCapError, RingError
from ringstar.ideals import (enumerate_ideals, generate_ideal, ideal_product, ideal_sum, intersect,
                             is_ideal_mask, is_maximal, is_primary, is_prime, is_radical_ideal,
                             make_ideal, maximal_ideals, minimal_primes, prime_ideals,
                             primary_decomposition, radical, unit_ideal, zero_ideal)
from ringstar.rings import make_poly_quotient, make_residue_ring, product_ring

SMALL = [make_residue_ring(n) for n in (1, 2, 4, 6, 8, 9, 12, 16, 18, 24, 30)] + [
    make_poly_quotient(2, [0, 0, 1]), make_poly_quotient(2, [1, 1, 1]),
    make_poly_quotient(3, [0, 0, 0, 1]), make_poly_quotient(2, [0, 1, 1]),
    product_ring(make_residue_ring(2), make_residue_ring(4)),
]
rings = st.sampled_from(SMALL)


def test_z12_lattice(z12):
    got = [I.to_list() for I in enumerate_ideals(z12)]
    assert got == [[0], [0, 6], [0, 4, 8], [0, 3, 6, 9], [0, 2, 4, 6, 8, 10], list(range(12))]


@pytest.mark.parametrize("R", [R for R in SMALL if R.order <= 12], ids=lambda R: R.label)
def test_lattice_matches_subset_oracle(R):
    got = {frozenset(I.members) for I in enumerate_ideals(R)}
    assert got == set(ideals_by_subsets(R))


def test_lattice_cap(z12):
    with pytest.raises(ResourceCapError):
        enumerate_ideals(z12, cap=3)


def test_generate_ideal_closure(z12):
    assert generate_ideal(z12, [4]).to_list() == sorted(closure(z12, {4})) == [0, 4, 8]
    assert generate_ideal(z12, [4, 6]).to_list() == [0, 2, 4, 6, 8, 10]
    assert generate_ideal(z12, []).to_list() == [0]
    assert generate_ideal(z12, [5]).is_unit


def test_generate_rejects_out_of_range(z12):
    with pytest.raises(RingError):
        generate_ideal(z12, [12])


def test_make_ideal_rejects_non_ideal(z12):
    with pytest.raises(RingError):
        make_ideal(z12, [0, 4])
    assert not is_ideal_mask(z12, 0b11)


def test_radicals_in_z12(z12):
    assert radical(generate_ideal(z12, [4])).to_list() == [0, 2, 4, 6, 8, 10]
    assert radical(zero_ideal(z12)).to_list() == [0, 6]
    assert radical(generate_ideal(z12, [6])).to_list() == [0, 6]


def test_dual_number_radical(dual2):
    assert radical(zero_ideal(dual2)).to_list() == [0, 2]


def test_lattice_operations(z12):
    I4, I3, I2 = (generate_ideal(z12, [g]) for g in (4, 3, 2))
    assert intersect([I4, I3]) == zero_ideal(z12)
    assert intersect([], ring=z12) == unit_ideal(z12)
    assert ideal_sum(I4, I3).is_unit
    assert ideal_product(I2, I2) == I4
    assert ideal_product(I2, I3) == generate_ideal(z12, [6])


def test_ideal_ordering(z12):
    I4, I2 = generate_ideal(z12, [4]), generate_ideal(z12, [2])
    assert I4 < I2 and I4 <= I2 and not I2 <= I4 and not I2 < I2


def test_primes_and_maximals(z12):
    assert [P.to_list() for P in prime_ideals(z12)] == [[0, 3, 6, 9], [0, 2, 4, 6, 8, 10]]
    assert maximal_ideals(z12) == prime_ideals(z12)
    assert minimal_primes(z12) == prime_ideals(z12)
    assert not is_prime(unit_ideal(z12))


def test_zero_ring_has_no_primes():
    R = make_residue_ring(1)
    assert prime_ideals(R) == [] and len(enumerate_ideals(R)) == 1


def test_primary_examples(z12):
    assert is_primary(generate_ideal(z12, [4]))
    assert not is_primary(zero_ideal(z12))
    assert not is_primary(generate_ideal(z12, [6]))


def test_decomposition_of_zero_in_z12(z12):
    dec = primary_decomposition(zero_ideal(z12))
    assert [Q.to_list() for Q in dec.components] == [[0, 4, 8], [0, 3, 6, 9]]
    assert dec.verify()


def test_decomposition_of_unit_ideal(z12):
    with pytest.raises(RingError):
        primary_decomposition(unit_ideal(z12))


@settings(max_examples=60, deadline=None)
@given(rings, st.data())
def test_radical_is_closure_operator(R, data):
    lat = enumerate_ideals(R)
    I = lat[data.draw(st.integers(0, len(lat) - 1))]
    J = lat[data.draw(st.integers(0, len(lat) - 1))]
    rI = radical(I)
    assert I <= rI and radical(rI) == rI
    assert set(rI.members) == radical_set(R, set(I.members))
    if I <= J:
        assert rI <= radical(J)
    assert radical(intersect([I, J])) == intersect([rI, radical(J)])
    assert radical(ideal_product(I, J)) == radical(intersect([I, J]))


@settings(max_examples=60, deadline=None)
@given(rings, st.data())
def test_prime_hierarchy(R, data):
    lat = enumerate_ideals(R)
    I = lat[data.draw(st.integers(0, len(lat) - 1))]
    assert is_prime(I) == is_prime_set(R, set(I.members))
    if is_maximal(I):
        assert is_prime(I)
    if is_prime(I):
        assert is_primary(I) and is_radical_ideal(I)
    if is_primary(I):
        assert is_prime(radical(I))


@settings(max_examples=40, deadline=None)
@given(rings, st.data())
def test_decomposition_recovers_ideal(R, data):
    lat = enumerate_ideals(R)
    proper = [I for I in lat if not I.is_unit]
    if not proper:
        return
    I = proper[data.draw(st.integers(0, len(proper) - 1))]
    dec = primary_decomposition(I)
    assert intersect(list(dec.components), ring=R) == I
    assert all(is_primary(Q) for Q in dec.components)
    assert dec.verify()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([R for R in SMALL if R.order <= 32]), st.data())
def test_lattice_closed_under_pairs(R, data):
    lat = enumerate_ideals(R)
    picks = data.draw(st.lists(st.integers(0, len(lat) - 1), min_size=1, max_size=2))
    chosen = [lat[i] for i in picks]
    assert lat.contains_mask(intersect(chosen).mask)
    s = chosen[0] if len(chosen) == 1 else ideal_sum(*chosen)
    assert lat.contains_mask(s.mask)
