import pytest

from oracles import closure, fingerprint_brute, is_field_brute, residue_units, units
from ringstar.corpus import fingerprint
from ringstar.errors import RingError, SpecParseError
from ringstar.ideals import enumerate_ideals, generate_ideal, is_maximal, unit_ideal, zero_ideal
from ringstar.rings import (FiniteRing, extend_ideal, localize_at_prime, make_poly_quotient,
                            make_residue_ring, parse_ring_spec, product_ring, quotient_ring,
                            validate_axioms)


def test_residue_ring_arithmetic(z6):
    assert z6.mul[2][3] == 0
    assert z6.mul[5][5] == 1
    assert z6.label == "Z/6"


def test_zero_ring():
    R = make_residue_ring(1)
    assert R.order == 1 and R.one == R.zero
    assert validate_axioms(R)


def test_residue_units_match_gcd_count(z12):
    assert list(z12.units) == residue_units(12) == [1, 5, 7, 11]


@pytest.mark.parametrize("n", [0, -3])
def test_residue_rejects_nonpositive(n):
    with pytest.raises(RingError):
        make_residue_ring(n)


def test_gf4_is_a_field(gf4):
    assert gf4.order == 4
    assert is_field_brute(gf4)
    assert len(gf4.units) == 3


def test_dual_numbers_x_squared_is_zero(dual2):
    x = 2
    assert dual2.mul[x][x] == dual2.zero
    assert dual2.label == "F2[x]/(x^2)"


def test_linear_modulus_matches_residue_fingerprint():
    F3 = make_poly_quotient(3, [0, 1])
    assert fingerprint(F3).as_tuple() == fingerprint_brute(make_residue_ring(3))


@pytest.mark.parametrize("p,f", [(4, [1, 1]), (2, [1]), (2, [1, 0, 2]), (3, [1, 1, 2])])
def test_poly_quotient_rejects(p, f):
    with pytest.raises(RingError):
        make_poly_quotient(p, f)


def test_product_with_coprime_factors_looks_like_z6():
    P = product_ring(make_residue_ring(2), make_residue_ring(3))
    assert P.order == 6 and len(P.units) == 2
    assert fingerprint(P) == fingerprint(make_residue_ring(6))


def test_product_lattice_is_product(z4z9):
    assert z4z9.order == 36
    assert validate_axioms(z4z9)
    # 3 ideals in each factor; the lattice of the product is the product lattice
    assert len(enumerate_ideals(z4z9)) == 9


def test_product_with_zero_ring(z12):
    P = product_ring(z12, make_residue_ring(1))
    assert fingerprint(P) == fingerprint(z12)


def test_quotient_by_four(z12):
    Q, h = quotient_ring(z12, generate_ideal(z12, [4]))
    assert Q.order == 4
    assert fingerprint(Q) == fingerprint(make_residue_ring(4))
    assert h.is_surjective() and h.first_violation() is None


def test_quotient_by_zero_is_bijective(z12):
    Q, h = quotient_ring(z12, zero_ideal(z12))
    assert h.is_bijective()
    assert fingerprint(Q) == fingerprint(z12)


def test_quotient_by_two_is_a_field(z12):
    Q, _ = quotient_ring(z12, generate_ideal(z12, [2]))
    assert Q.order == 2 and is_field_brute(Q)


def test_quotient_rejects_non_ideal(z12):
    with pytest.raises(RingError):
        quotient_ring(z12, {0, 1})


def test_localize_z12_at_2(z12):
    RP, h = localize_at_prime(z12, generate_ideal(z12, [2]))
    assert RP.order == 4
    assert fingerprint(RP) == fingerprint(make_residue_ring(4))
    assert sorted(x for x in range(12) if h.map[x] == RP.zero) == [0, 4, 8]


def test_localize_z12_at_3(z12):
    RP, h = localize_at_prime(z12, generate_ideal(z12, [3]))
    # saturation kernel {r : s r = 0, s outside (3)} = {0, 3, 6, 9}
    assert sorted(x for x in range(12) if h.map[x] == RP.zero) == [0, 3, 6, 9]
    assert RP.order == 3 and is_field_brute(RP)


def test_localize_field_at_zero(gf4):
    RP, h = localize_at_prime(gf4, zero_ideal(gf4))
    assert h.is_bijective() and fingerprint(RP) == fingerprint(gf4)


def test_localize_rejects_non_prime(z12):
    with pytest.raises(RingError):
        localize_at_prime(z12, generate_ideal(z12, [4]))


def test_extend_ideal_cases(z12):
    Q, h = quotient_ring(z12, generate_ideal(z12, [4]))
    assert extend_ideal(h, zero_ideal(z12)).mask == 1 << Q.zero
    assert extend_ideal(h, unit_ideal(z12)).is_unit
    ext = extend_ideal(h, generate_ideal(z12, [2]))
    assert set(ext.members) == closure(Q, {h.map[x] for x in (0, 2, 4, 6, 8, 10)})
    assert len(ext) == 2


def test_validate_catches_noncommutative_mul(z4):
    mul = [list(r) for r in z4.mul]
    mul[1][2] = 3
    bad = FiniteRing.from_tables(z4.add, mul, label="broken")
    rep = validate_axioms(bad)
    assert not rep and rep.axiom == "mul commutative" and rep.witness == (1, 2)


def test_validate_catches_bad_distributivity():
    Z = make_residue_ring(3)
    mul = [list(r) for r in Z.mul]
    mul[2][2] = 2  # 2*2 should be 1; still commutative with identity 1
    rep = validate_axioms(FiniteRing.from_tables(Z.add, mul))
    assert not rep and rep.axiom in {"mul associative", "distributive"}


def test_validate_passes_on_constructors(z4z9, gf4, dual2):
    for R in (z4z9, gf4, dual2, make_residue_ring(17)):
        assert validate_axioms(R).passed


def test_order_cap():
    with pytest.raises(RingError):
        make_residue_ring(257)
    with pytest.raises(RingError):
        product_ring(make_residue_ring(32), make_residue_ring(9))


@pytest.mark.parametrize("spec,order,label", [
    ("Z/4 x F2[x]/(x^2)", 16, "Z/4 x F2[x]/(x^2)"),
    ("Z/12", 12, "Z/12"),
    ("  F3[x]/( x^2 + 1 )", 9, "F3[x]/(x^2+1)"),
    ("Z/2xZ/3xZ/5", 30, "(Z/2 x Z/3) x Z/5"),
])
def test_parse_ring_spec(spec, order, label):
    R = parse_ring_spec(spec)
    assert (R.order, R.label) == (order, label)


@pytest.mark.parametrize("spec,token", [
    ("Q/3", "Q/3"), ("Z/4 y Z/3", "yZ/3"), ("Z/4 x", ""), ("F4[x]/(x)", "F4[x]/(x)"), ("Z/0", "Z/0"),
])
def test_parse_ring_spec_errors(spec, token):
    with pytest.raises(SpecParseError) as e:
        parse_ring_spec(spec)
    assert e.value.token == token


def test_localization_has_one_maximal(z12, z4z9):
    from ringstar.ideals import prime_ideals

    for R in (z12, z4z9):
        for P in prime_ideals(R):
            RP, _ = localize_at_prime(R, P)
            assert sum(1 for I in enumerate_ideals(RP) if is_maximal(I)) == 1


def test_units_oracle_agrees(z4z9):
    assert set(z4z9.units) == units(z4z9)
