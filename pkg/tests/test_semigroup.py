import pytest

from cyclokit import polyring as pr
from cyclokit import semigroup as sg
from cyclokit.errors import ConstructionError, InputError
from cyclokit.polyring import IntPoly


def test_from_generators_basic():
    S = sg.from_generators([5, 6, 7, 8])
    assert S.frobenius == 9
    assert S.gaps == (1, 2, 3, 4, 9)
    assert S.genus == 5
    assert S.minimal_generators == (5, 6, 7, 8)
    assert S.multiplicity == 5

    S23 = sg.from_generators([2, 3])
    assert S23.gaps == (1,)
    assert S23.genus == 1
    assert S23.frobenius == 1

    with pytest.raises(InputError):
        sg.from_generators([4, 6])
    with pytest.raises(InputError):
        sg.from_generators([0, 3])


def test_from_generators_non_coprime_pair():
    # no coprime pair among the two smallest generators; the Apery route
    # still gets the conductor right
    S = sg.from_generators([6, 10, 101])
    assert S.frobenius == 115
    assert S.contains(116) and S.contains(117)
    S2 = sg.from_generators([6, 10, 15])
    assert S2.frobenius == 29


def test_minimal_generators_recomputed():
    S = sg.from_generators([4, 6, 9, 13, 17])
    assert S.minimal_generators == (4, 6, 9)  # 13 = 4+9, 17 = 4+13
    S2 = sg.from_generators([1, 5])
    assert S2.minimal_generators == (1,)
    assert S2.frobenius == -1


def test_s_k_family():
    for k in range(3, 12):
        S = sg.s_k(k)
        assert S.frobenius == 2 * k - 1
        assert S.genus == k
        assert S.minimal_generators == tuple(range(k, 2 * k - 1))
        assert S.embedding_dimension == k - 1
        assert sg.is_symmetric(S)
        assert sg.semigroup_polynomial(S) == sg.fk_poly(k)
    assert sg.s_k(1).gaps == (1,)


def test_is_symmetric():
    assert sg.is_symmetric(sg.from_generators([2, 3]))
    assert not sg.is_symmetric(sg.from_generators([3, 4, 5]))
    assert sg.is_symmetric(sg.from_generators([5, 6, 7, 8]))


def test_semigroup_polynomial():
    assert sg.semigroup_polynomial(sg.from_generators([2, 3])) == IntPoly((1, -1, 1))
    for gens in ([2, 3], [3, 4, 5], [5, 6, 7, 8], [6, 10, 15]):
        S = sg.from_generators(gens)
        P = sg.semigroup_polynomial(S)
        assert P.degree == S.frobenius + 1
        assert P.is_monic()
        assert P(1) == 1
        assert sg.is_symmetric(S) == pr.is_self_reciprocal(P)


def test_is_cyclotomic():
    cert = sg.is_cyclotomic(sg.from_generators([5, 6, 7, 8]))
    assert not cert.is_kronecker
    assert sg.is_cyclotomic(sg.s_k(3)).is_kronecker
    assert sg.is_cyclotomic(sg.s_k(4)).is_kronecker
    assert not sg.is_cyclotomic(sg.s_k(7)).is_kronecker
    # a complete intersection example: <4, 6, 9>
    assert sg.is_cyclotomic(sg.from_generators([4, 6, 9])).is_kronecker


def test_fk_gcd_pattern():
    assert sg.fk_gcd_pattern(3) == (6, 12)
    assert sg.fk_gcd_pattern(4) == (10, 12)
    assert sg.fk_gcd_pattern(60) == ()
    assert sg.fk_gcd_pattern(52) == (10, 12)
    assert sg.fk_gcd_pattern(16) == (12,)
    for k in range(1, 61):
        sg.fk_gcd_pattern(k)  # classification asserted internally


def test_fk_single_root_lemma():
    # Phi_6 | f_k iff k = 1,3 (mod 6); Phi_10 iff k = 2,4 (mod 10);
    # Phi_12 iff k = 3,4 (mod 12)
    for k in range(1, 121):
        f = sg.fk_poly(k)
        assert (pr.poly_div_exact(f, pr.cyclotomic(6)) is not None) == (k % 6 in (1, 3))
        assert (pr.poly_div_exact(f, pr.cyclotomic(10)) is not None) == (k % 10 in (2, 4))
        assert (pr.poly_div_exact(f, pr.cyclotomic(12)) is not None) == (k % 12 in (3, 4))


def test_fk_at_third_root_of_unity():
    # f_k(zeta_3) is 4, -2 zeta_3 or zeta_3^(-1) = -1 - zeta_3 according to
    # k mod 3; the norms 16, 4, 1 drive the exclusion of 3 p^j divisors
    for k in range(1, 31):
        v = pr.eval_at_root_of_unity(sg.fk_poly(k), 3)
        if k % 3 == 0:
            assert v == pr.QuadraticInt(3, 4, 0) and v.norm_squared() == 16
        elif k % 3 == 1:
            assert v == pr.QuadraticInt(3, 0, -2) and v.norm_squared() == 4
        else:
            assert v == pr.QuadraticInt(3, -1, -1) and v.norm_squared() == 1


def test_fk_no_other_cyclotomic_factors():
    assert sg.fk_no_other_cyclotomic_factors(5)
    assert sg.fk_no_other_cyclotomic_factors(7)
    assert sg.fk_remainder(5) == sg.fk_poly(5)
    assert sg.fk_remainder(7).degree == 12


def test_child_symmetric():
    k = 10
    S = sg.s_k(k)
    S1 = sg.child_symmetric(S, k)
    assert S1.frobenius == 2 * k - 1
    assert sg.is_symmetric(S1)
    # P_{S'} = 1 - x + x^(k-1) - x^k + x^(k+1) - x^(2k-1) + x^(2k)
    expect = {0: 1, 1: -1, k - 1: 1, k: -1, k + 1: 1, 2 * k - 1: -1, 2 * k: 1}
    out = [0] * (2 * k + 1)
    for i, c in expect.items():
        out[i] += c
    assert sg.semigroup_polynomial(S1) == IntPoly(out)

    S2 = sg.child_symmetric(S1, k + 2)
    P2 = sg.semigroup_polynomial(S2)
    assert P2(-1) == -3  # k even branch
    assert S2.frobenius == 2 * k - 1
    # the eleven-term polynomial of the second child
    expect2 = {0: 1, 1: -1, k - 3: 1, k - 2: -1, k - 1: 1, k: -1,
               k + 1: 1, k + 2: -1, k + 3: 1, 2 * k - 1: -1, 2 * k: 1}
    out2 = [0] * (2 * k + 1)
    for i, c in expect2.items():
        out2[i] += c
    assert P2 == IntPoly(out2)

    kb = 7  # odd k branch
    Sb = sg.child_symmetric(sg.s_k(kb), kb + 1)
    assert sg.semigroup_polynomial(Sb)(-1) == -1


def test_child_symmetric_precondition_errors():
    S = sg.s_k(5)
    with pytest.raises(ConstructionError) as exc:
        sg.child_symmetric(S, 9)  # 2x - F = 7 is in S' ... actually gap check
    assert exc.value.condition
    with pytest.raises(ConstructionError):
        sg.child_symmetric(S, 4)  # not a generator
    with pytest.raises(ConstructionError):
        sg.child_symmetric(sg.from_generators([3, 4, 5]), 4)  # not symmetric


def test_noncyclotomic_symmetric_with_frobenius():
    S9 = sg.noncyclotomic_symmetric_with_frobenius(9)
    assert S9.minimal_generators == (5, 6, 7, 8)
    S11 = sg.noncyclotomic_symmetric_with_frobenius(11)
    assert S11.minimal_generators == (5, 7, 8, 9)
    S15 = sg.noncyclotomic_symmetric_with_frobenius(15)
    assert S15.minimal_generators == (6, 7, 10, 11)
    S19 = sg.noncyclotomic_symmetric_with_frobenius(19)
    assert sg.semigroup_polynomial(S19)(-1) == -3
    S13 = sg.noncyclotomic_symmetric_with_frobenius(13)
    assert sg.semigroup_polynomial(S13)(-1) == -1
    with pytest.raises(InputError):
        sg.noncyclotomic_symmetric_with_frobenius(8)
    with pytest.raises(InputError):
        sg.noncyclotomic_symmetric_with_frobenius(7)


def test_fk_theorem_sweep_table():
    rows = sg.fk_theorem_sweep(18)
    expected = {
        1: ({6: 1}, False),
        2: ({10: 1}, False),
        3: ({6: 1, 12: 1}, False),
        4: ({10: 1, 12: 1}, False),
        5: ({}, True),
        6: ({}, True),
        7: ({6: 1}, True),
        8: ({}, True),
        9: ({6: 1}, True),
        10: ({}, True),
        11: ({}, True),
        12: ({10: 1}, True),
        13: ({6: 1}, True),
        14: ({10: 1}, True),
        15: ({6: 1, 12: 1}, True),
        16: ({12: 1}, True),
        17: ({}, True),
        18: ({}, True),
    }
    for row in rows:
        k = row["k"]
        want_factors, want_remainder = expected[k]
        assert row["F_k"] == 48 * k - 24
        fac = row["factorization"]
        assert fac["factors"] == {str(d): e for d, e in want_factors.items()}
        rem_deg = len(fac["remainder"]) - 1
        assert (rem_deg > 0) == want_remainder
        assert row["verdict"] == ("kronecker" if k <= 4 else "non_kronecker")
