"""Numerical semigroups, semigroup polynomials and the gap-family application.

Membership is decided through the Apery set of the multiplicity m: the least
element of the semigroup in each residue class mod m, computed exactly by a
Dijkstra relaxation over the residues (all edge weights are generators, hence
positive).  From the Apery set the Frobenius number, gaps and genus follow
with no heuristic bound.

The family S_k = {0, k, k+1, ...} minus {2k-1} has semigroup polynomial
f_k = 1 - x + x^k - x^(2k-1) + x^(2k); the certification pipeline shows S_k
is cyclotomic exactly for k <= 4, and the appendix-style child constructions
produce symmetric non-cyclotomic semigroups for every odd Frobenius number
from 9 on.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .errors import ConstructionError, InputError, InvariantError
from .kronecker import (
    Certificate,
    certify,
    factor_kronecker,
    poly_div_exact,
)
from .polyring import IntPoly, cyclotomic, is_self_reciprocal, log_derivative_values, multiplicity


@dataclass(frozen=True)
class NumericalSemigroup:
    """Cofinite additive submonoid of the naturals."""

    minimal_generators: tuple[int, ...]
    gaps: tuple[int, ...]
    frobenius: int
    genus: int
    multiplicity: int

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        return x > self.frobenius or x not in self.gaps

    def to_json_obj(self) -> dict:
        return {
            "minimal_generators": list(self.minimal_generators),
            "gaps": list(self.gaps),
            "frobenius": self.frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "embedding_dimension": self.embedding_dimension,
        }


def _apery_least_elements(gens: list[int]) -> list[int]:
    # least element of the semigroup in each residue class mod the smallest
    # generator, by Dijkstra over residues
    m = gens[0]
    dist = [None] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if dist[r] is not None and d > dist[r]:
            continue
        for g in gens:
            nd, nr = d + g, (r + g) % m
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    assert all(d is not None for d in dist)
    return dist


def _build(gens: list[int]) -> NumericalSemigroup:
    gens = sorted(set(gens))
    apery = _apery_least_elements(gens)
    m = gens[0]
    frobenius = max(apery) - m
    member = lambda x: x >= 0 and x >= apery[x % m]
    gaps = tuple(x for x in range(1, frobenius + 1) if not member(x))
    # minimal generators: positive elements not expressible as a sum of two
    # positive elements; anything above frobenius + m is m + smaller element
    minimal = []
    for x in range(1, max(frobenius, 0) + m + 1):
        if not member(x):
            continue
        if any(member(s) and member(x - s) for s in range(1, x // 2 + 1)):
            continue
        minimal.append(x)
    return NumericalSemigroup(
        minimal_generators=tuple(minimal),
        gaps=gaps,
        frobenius=frobenius,
        genus=len(gaps),
        multiplicity=m,
    )


def from_generators(gens) -> NumericalSemigroup:
    """The numerical semigroup generated by gens; their gcd must be 1."""
    gens = [int(g) for g in gens]
    if not gens or any(g < 1 for g in gens):
        raise InputError("generators must be positive integers")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise InputError(f"gcd of generators is {g}, not 1 (complement would be infinite)")
    return _build(gens)


def from_gaps(gaps) -> NumericalSemigroup:
    """The numerical semigroup with the given gap set; validates closure."""
    gap_set = set(int(g) for g in gaps)
    if any(g < 1 for g in gap_set):
        raise InputError("gaps must be positive integers")
    if not gap_set:
        return from_generators([1])
    frobenius = max(gap_set)
    member = lambda x: x >= 0 and x not in gap_set
    for x in range(1, frobenius + 1):
        if member(x):
            for y in range(x, frobenius - x + 1):
                if member(y) and not member(x + y):
                    raise InputError(f"complement not closed: {x} + {y} hits gap {x + y}")
    gens = [x for x in range(1, 2 * frobenius + 2) if member(x)]
    return _build(gens)


def is_symmetric(S: NumericalSemigroup) -> bool:
    """x in S if and only if F - x is a gap; checked both directly and via
    the self-reciprocity of the semigroup polynomial."""
    F = S.frobenius
    if F < 0:
        direct = False  # S = N has F = -1 and is conventionally not symmetric here
    else:
        gap_set = set(S.gaps)
        direct = all((x not in gap_set) != (F - x not in gap_set) for x in range(F + 1))
    via_poly = F >= 0 and is_self_reciprocal(semigroup_polynomial(S))
    if direct != via_poly:
        raise InvariantError("symmetry characterizations disagree")
    return direct


def semigroup_polynomial(S: NumericalSemigroup) -> IntPoly:
    """P_S = 1 + (x - 1) sum over gaps g of x^g; monic of degree F + 1."""
    acc = {0: 1}
    for g in S.gaps:
        acc[g + 1] = acc.get(g + 1, 0) + 1
        acc[g] = acc.get(g, 0) - 1
    out = [0] * (max(acc) + 1)
    for i, c in acc.items():
        out[i] = c
    return IntPoly(out)


def is_cyclotomic(S: NumericalSemigroup) -> Certificate:
    """Certificate for P_S being Kronecker (then S is called cyclotomic)."""
    return certify(semigroup_polynomial(S))


# ---------------------------------------------------------------------------
# the S_k family

def fk_poly(k: int) -> IntPoly:
    """1 - x + x^k - x^(2k-1) + x^(2k), the semigroup polynomial of S_k."""
    if k < 1:
        raise InputError("k must be >= 1")
    out = [0] * (2 * k + 1)
    for i, c in ((0, 1), (1, -1), (k, 1), (2 * k - 1, -1), (2 * k, 1)):
        out[i] += c
    return IntPoly(out)


def s_k(k: int) -> NumericalSemigroup:
    """S_k = {0, k, k+1, ...} minus {2k-1}: gaps 1..k-1 and 2k-1."""
    if k < 1:
        raise InputError("k must be >= 1")
    return from_gaps(list(range(1, k)) + [2 * k - 1])


_FK_DIVISOR_TABLE = (6, 10, 12)


def fk_gcd_pattern(k: int) -> tuple[int, ...]:
    """Indices d in {6, 10, 12} with Phi_d dividing f_k, by trial division.

    Cross-checked against the residue classification mod 60: the computed
    pattern must match, and no square of the three divisors may divide.
    """
    f = fk_poly(k)
    found = tuple(d for d in _FK_DIVISOR_TABLE if poly_div_exact(f, cyclotomic(d)) is not None)
    if found != _fk_expected_pattern(k):
        raise InvariantError(f"gcd pattern mismatch at k={k}: {found}")
    for d in found:
        if multiplicity(f, cyclotomic(d)) != 1:
            raise InvariantError(f"Phi_{d}^2 divides f_{k}")
    return found


def _fk_expected_pattern(k: int) -> tuple[int, ...]:
    r12, r10, r60 = k % 12, k % 10, k % 60
    if r60 in (4, 52):
        return (10, 12)
    if r12 == 3:
        return (6, 12)
    if r12 in (1, 7, 9):
        return (6,)
    if r10 in (2, 4) and r12 != 4:
        return (10,)
    if r12 == 4:
        return (12,)
    return ()


def fk_no_other_cyclotomic_factors(k: int, N: int = 15) -> bool:
    """True when no Phi_n with n outside {6, 10, 12} divides f_k.

    The check runs over every candidate n up to max(N, 2 (2k)^2), which
    covers all n with phi(n) <= deg f_k; candidates are screened by the
    integer divisibility Phi_n(2) | f_k(2) before any division.
    """
    if k < 1 or N < 15:
        raise InputError("need k >= 1 and a search cap N >= 15")
    from .kronecker import cyclotomic_candidates, _screen_values

    f = fk_poly(k)
    deg = 2 * k
    bound = max(N, 2 * (2 * k) ** 2)
    f2, f3 = f(2), f(3)
    for n, phin in cyclotomic_candidates(deg):
        if n > bound or n in _FK_DIVISOR_TABLE:
            continue
        v2, v3 = _screen_values(n)
        if f2 % v2 or f3 % v3:
            continue
        if poly_div_exact(f, cyclotomic(n)) is not None:
            return False
    return True


def fk_remainder(k: int) -> IntPoly:
    """f_k divided by gcd(f_k, Phi_6 Phi_10 Phi_12)."""
    f = fk_poly(k)
    for d in fk_gcd_pattern(k):
        f = poly_div_exact(f, cyclotomic(d))
    return f


# ---------------------------------------------------------------------------
# appendix constructions

def child_symmetric(S: NumericalSemigroup, x: int) -> NumericalSemigroup:
    """The symmetric child (S minus {x}) union {F - x} of a symmetric S.

    Preconditions (each reported by name on failure): x is a minimal
    generator, F/2 < x < F, 2x - F is a gap, 3x != 2F, 4x != 3F, and
    F - x is below the multiplicity.  Symmetry and the Frobenius number of
    the child are re-verified rather than trusted.
    """
    F = S.frobenius
    if not is_symmetric(S):
        raise ConstructionError("S symmetric", f"semigroup with gaps {S.gaps} is not symmetric")
    if x not in S.minimal_generators:
        raise ConstructionError("x minimal generator", f"{x} is not a minimal generator")
    if not (2 * x > F and x < F):
        raise ConstructionError("F/2 < x < F", f"x={x}, F={F}")
    if 2 * x - F not in S.gaps:
        raise ConstructionError("2x - F not in S", f"2*{x} - {F} = {2 * x - F} is in S")
    if 3 * x == 2 * F:
        raise ConstructionError("3x != 2F", f"3*{x} = 2*{F}")
    if 4 * x == 3 * F:
        raise ConstructionError("4x != 3F", f"4*{x} = 3*{F}")
    if not F - x < S.multiplicity:
        raise ConstructionError("F - x < multiplicity", f"{F - x} >= {S.multiplicity}")
    new_gaps = (set(S.gaps) - {F - x}) | {x}
    child = from_gaps(new_gaps)
    if child.frobenius != F or not is_symmetric(child):
        raise InvariantError("child construction lost symmetry or the Frobenius number")
    return child


def noncyclotomic_symmetric_with_frobenius(F: int) -> NumericalSemigroup:
    """A symmetric non-cyclotomic numerical semigroup with Frobenius number F.

    F must be odd and at least 9.  The three smallest cases are fixed
    machine-found generator lists; beyond them, F = 3 (mod 4) uses the
    double-child construction from S_k with k = (F+1)/2 even, and
    F = 1 (mod 4) uses the single child swapping k+1 for k-2 with k odd.
    The result is verified: symmetric, Frobenius number F, and certified
    non-Kronecker semigroup polynomial.
    """
    if F % 2 == 0 or F < 9:
        raise InputError(f"need an odd F >= 9, got {F}")
    if F == 9:
        S = from_generators([5, 6, 7, 8])
    elif F == 11:
        S = from_generators([5, 7, 8, 9])
    elif F == 15:
        S = from_generators([6, 7, 10, 11])
    else:
        k = (F + 1) // 2
        base = s_k(k)
        if F % 4 == 3:
            S = child_symmetric(child_symmetric(base, k), k + 2)
        else:
            S = child_symmetric(base, k + 1)
    if S.frobenius != F or not is_symmetric(S):
        raise InvariantError(f"construction for F={F} failed verification")
    cert = is_cyclotomic(S)
    if cert.is_kronecker:
        raise InvariantError(f"construction for F={F} is cyclotomic")
    return S


# ---------------------------------------------------------------------------
# the theorem sweep

def fk_theorem_sweep(k_max: int) -> list[dict]:
    """Rows {k, F_k, gcd_pattern, verdict, factorization} for k = 1..k_max.

    Asserts, with the failing k named: F_k = (2/B_2^+)((log f_k)'(1) +
    (log f_k)''(1)) = 48k - 24 computed from the oracle, the second
    derivative values f_k''(1) = k^2 + 3k - 2 and (log f_k)''(1) = 3k - 2,
    the gcd pattern classification, and that S_k is cyclotomic exactly for
    k <= 4.
    """
    if k_max < 5:
        raise InputError("k_max must be >= 5")
    rows = []
    for k in range(1, k_max + 1):
        f = fk_poly(k)
        logs = log_derivative_values(f, 2, 1)
        f_k_value = 12 * (logs[0] + logs[1])
        if f_k_value != 48 * k - 24:
            raise InvariantError(f"F_k recomputation failed at k={k}: {f_k_value}")
        if f.derivative(2)(1) != k * k + 3 * k - 2:
            raise InvariantError(f"f_k''(1) mismatch at k={k}")
        if logs[1] != 3 * k - 2:
            raise InvariantError(f"(log f_k)''(1) mismatch at k={k}")
        pattern = fk_gcd_pattern(k)
        cert = certify(f)
        if (k <= 4) != cert.is_kronecker:
            raise InvariantError(f"S_k cyclotomicity wrong at k={k}: {cert.verdict}")
        fac = cert.factorization or factor_kronecker(f)
        rows.append(
            {
                "k": k,
                "F_k": int(f_k_value),
                "gcd_pattern": list(pattern),
                "verdict": cert.verdict,
                "factorization": fac.to_json_obj(),
            }
        )
    return rows
