import numpy as np
import pytest

from cdrings.algebra import certify_central_scalar, scalar_ring
from cdrings.analysis import (
    annihilator,
    associative_center,
    center,
    commutative_center,
    commutator_ideal,
    essentiality_data,
    n_membership_by_identities,
    pair_coordinates,
    predicted_associative_center,
    predicted_center,
    skew_annihilator,
    skew_span,
    symmetric_center,
)
from cdrings.doubling import double, tower
from cdrings.errors import StageMismatch
from cdrings.residue import Submodule, all_vectors, intersect, membership

from conftest import brute_span, submodule_set


@pytest.fixture(scope="module")
def z4_quaternion():
    return tower(4, 1, 1)


@pytest.fixture(scope="module")
def z4_octonion():
    return tower(4, 1, 1, 1)


from conftest import brute_associative_center_set, brute_commutative_center_set


def brute_associative_center(algebra):
    return brute_associative_center_set(
        algebra, all_vectors(algebra.modulus, algebra.rank)
    )


def brute_commutative_center(algebra):
    return brute_commutative_center_set(
        algebra, all_vectors(algebra.modulus, algebra.rank)
    )


@pytest.mark.parametrize(
    "base,params",
    [(2, (1, 1)), (3, (1, 1)), (4, (1,)), (4, (1, 1)), (5, (2, 3)), (6, (1,))],
)
def test_centers_match_brute_force(base, params):
    alg = tower(base, *params)
    assert submodule_set(associative_center(alg)) == brute_associative_center(alg)
    assert submodule_set(commutative_center(alg)) == brute_commutative_center(alg)


def test_center_report_invariants(z4_quaternion):
    rep = center(z4_quaternion)
    assert rep.Z == intersect(rep.N, rep.K)
    for g in rep.Z.generators:
        assert rep.N.contains(g) and rep.K.contains(g)
    assert rep.C == rep.Z


def test_associative_center_full_for_associative(z4_quaternion):
    N = associative_center(z4_quaternion)
    assert N.order() == 4**4  # quaternions over Z4 are associative


def test_z4_quaternion_center_is_K_plus_N_ijk(z4_quaternion):
    # Z(A2) = K + Ni + Nj + Nk with N = Ann_K(2) = 2Z4
    expected = Submodule.span(
        4, [[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]
    )
    assert center(z4_quaternion).Z == expected


def test_z3_quaternion_center_is_scalars():
    rep = center(tower(3, 1, 1))
    assert rep.Z == Submodule.span(3, [[1, 0, 0, 0]])
    assert rep.Z.order() == 3


def test_octonion_associative_center_sizes(z4_octonion):
    # N(R) = C + I nu with C of order 32 and I of order 16
    data = essentiality_data(z4_octonion.parent)
    assert data.C.order() == 32
    assert data.I.order() == 16
    N = associative_center(z4_octonion)
    assert N.order() == 32 * 16


def test_z2_sedenion_rank16_center_matches_brute_force():
    # Exhaustive oracle over all 65536 elements. Products are evaluated in
    # float32 (exact far below 2**24) with the per-slot matrices stacked wide
    # so each basis element costs a handful of BLAS calls.
    alg = tower(2, 1, 1, 1, 1)
    assert alg.rank == 16
    n, d = alg.modulus, alg.rank
    c = alg.structure.astype(np.float32)
    X = all_vectors(n, d).astype(np.float32)
    R = c.transpose(1, 0, 2)  # R[j] = right mult by e_j
    L = c  # L[i] = left mult by e_i
    Rwide = np.hstack(list(R))  # (d, d*d): all right mults side by side
    Lwide = np.hstack(list(L))
    m = len(X)
    XB_flat = (X @ Rwide).reshape(m * d, d)  # rows: x e_b for each (x, b)
    BX_flat = (X @ Lwide).reshape(m * d, d)  # rows: e_b x for each (x, b)
    alive = np.ones(m, dtype=bool)
    for a in range(d):
        Xa = X @ R[a]
        aX = X @ L[a]
        # (x e_a) e_b - x (e_a e_b), all b at once
        prod_ab = np.hstack(
            [np.einsum("q,pqk->pk", alg.structure[a, b], alg.structure) for b in range(d)]
        )
        slot1 = Xa @ Rwide - X @ prod_ab.astype(np.float32)
        # (e_a x) e_b - e_a (x e_b)
        slot2 = aX @ Rwide - (XB_flat @ L[a]).reshape(m, d * d)
        # (e_a e_b) x - e_a (e_b x)
        left_ab = np.hstack(
            [np.einsum("q,qpk->pk", alg.structure[a, b], alg.structure) for b in range(d)]
        )
        slot3 = X @ left_ab.astype(np.float32) - (BX_flat @ L[a]).reshape(m, d * d)
        # n == 2: reduction mod 2 is a parity check; int16 holds the small values
        bad = (
            (slot1.astype(np.int16) & 1).any(axis=1)
            | (slot2.astype(np.int16) & 1).any(axis=1)
            | (slot3.astype(np.int16) & 1).any(axis=1)
        )
        alive &= ~bad
    got = frozenset(tuple(map(int, v)) for v in all_vectors(n, d)[alive])
    assert got == submodule_set(associative_center(alg))


def test_commutator_ideal_of_commutative_is_zero():
    assert commutator_ideal(tower(4, 1)).is_zero
    assert commutator_ideal(scalar_ring(5)).is_zero


def test_commutator_ideal_z4_quaternion(z4_quaternion):
    got = commutator_ideal(z4_quaternion)
    expected = Submodule.span(
        4, [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]
    )
    assert got == expected
    # contains [i, j] = 2k
    assert got.contains([0, 0, 0, 2])


def test_commutator_ideal_matches_additive_closure_oracle(z4_quaternion):
    # Desk-scale oracle: close the set of all commutators under products
    # with every element, by exhaustive set growth.
    A = z4_quaternion
    n, d = A.modulus, A.rank
    elems = list(all_vectors(n, d))
    seeds = {tuple(map(int, A.commutator(x, y))) for x in elems for y in elems}
    current = brute_span(list(seeds), n)
    while True:
        extra = set()
        for g in current:
            for e in [A.basis_element(i) for i in range(d)]:
                extra.add(tuple(map(int, A.mul(np.array(g), e))))
                extra.add(tuple(map(int, A.mul(e, np.array(g)))))
        grown = brute_span(list(current | extra), n)
        if grown == current:
            break
        current = grown
    assert submodule_set(commutator_ideal(A)) == current


def test_annihilator_of_zero_is_whole(z4_quaternion):
    C = center(z4_quaternion).Z
    zero = Submodule.zero(4, 4)
    assert annihilator(zero, C, z4_quaternion) == C


def test_annihilator_I_for_z4_quaternion(z4_quaternion):
    data = essentiality_data(z4_quaternion)
    expected = Submodule.span(
        4, [[2, 0, 0, 0], [0, 2, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]]
    )
    assert data.I == expected
    assert data.J == expected
    assert data.B == data.C == center(z4_quaternion).Z


def test_annihilator_z3_quaternion_is_zero():
    A = tower(3, 1, 1)
    data = essentiality_data(A)
    assert data.I.is_zero


def test_annihilator_matches_enumeration(z4_quaternion):
    A = z4_quaternion
    data = essentiality_data(A)
    comm = data.commutator_ideal
    C = data.C
    expected = set()
    for c in C.enumerate():
        if all(
            not A.mul(c, np.array(s)).any() for s in comm.elements()
        ):
            expected.add(tuple(int(t) for t in c))
    assert submodule_set(data.I) == expected


def test_symmetric_center_identity_involution():
    A = scalar_ring(6)
    B = symmetric_center(A)
    assert B == center(A).Z
    J = skew_annihilator(A)
    assert J == B


def test_skew_span_of_conjugated_double():
    A = tower(4, 1)
    # {a - a*} is spanned by i - i* = 2i
    assert skew_span(A) == Submodule.span(4, [[0, 2]])
    data = essentiality_data(A)
    # B = {x + yi : 2y = 0}, J = Ann_B(2i) = {x + yi : x, y even}
    assert data.B == Submodule.span(4, [[1, 0], [0, 2]])
    assert data.J == Submodule.span(4, [[2, 0], [0, 2]])


def test_involution_stability_of_I_and_alpha_stability(z4_quaternion):
    A = z4_quaternion
    data = essentiality_data(A)
    for g in data.I.generators:
        assert data.I.contains(A.involve(g))
    for alpha in (1, 3):
        cert = certify_central_scalar(A, alpha)
        scaled_I = Submodule.span(
            4, [(A.mul(cert.value, g)) for g in data.I.generators] or np.zeros((0, 4)),
            4,
        )
        scaled_C = Submodule.span(
            4, [(A.mul(cert.value, g)) for g in data.C.generators], 4
        )
        assert scaled_I == data.I
        assert scaled_C == data.C


@pytest.mark.parametrize(
    "base,params",
    [
        (2, (1, 1)),
        (3, (1, 1)),
        (3, (2, 2)),
        (4, (1, 1)),
        (4, (3, 1)),
        (5, (1, 2)),
        (6, (1, 5)),
    ],
)
def test_predicted_centers_match_direct(base, params):
    stage = tower(base, *params[:-1]) if len(params) > 1 else tower(base)
    doubled = double(stage, params[-1])
    data = essentiality_data(stage)
    assert predicted_associative_center(data, doubled) == associative_center(doubled)
    assert predicted_center(data, doubled) == center(doubled).Z


def test_predicted_centers_match_for_nonscalar_parameters():
    # Doubling parameters that are not scalar multiples of the unit.
    stage1 = tower(4, 1)
    for alpha in ([1, 2], [3, 2]):
        R = double(stage1, alpha)
        data = essentiality_data(stage1)
        assert predicted_associative_center(data, R) == associative_center(R)
        assert predicted_center(data, R) == center(R).Z
    stage2 = tower(4, 1, 1)
    # 1 + 2i is central, symmetric, and self-inverse in the quaternion stage
    R = double(stage2, [1, 2, 0, 0])
    data = essentiality_data(stage2)
    assert predicted_associative_center(data, R) == associative_center(R)
    assert predicted_center(data, R) == center(R).Z


def test_predicted_center_of_commutative_double_is_full():
    base = scalar_ring(4)
    data = essentiality_data(base)
    R = double(base, 1)
    assert predicted_center(data, R) == Submodule.full(4, 2)
    assert center(R).Z == Submodule.full(4, 2)


def test_predicted_center_z3_octonion_is_scalars():
    stage = tower(3, 1, 1)
    R = double(stage, 1)
    data = essentiality_data(stage)
    assert data.I.is_zero
    predicted = predicted_center(data, R)
    assert predicted == Submodule.span(3, [[1] + [0] * 7])
    assert center(R).Z == predicted


def test_predicted_center_stage_mismatch(z4_octonion):
    data = essentiality_data(scalar_ring(4))
    with pytest.raises(StageMismatch):
        predicted_center(data, z4_octonion)


def test_identity_membership_examples(z4_quaternion):
    R = double(z4_quaternion, 1)
    A = z4_quaternion
    # x in Z(A), y = 0 -> member
    assert n_membership_by_identities(R, [1, 0, 0, 0], A.zero())
    assert n_membership_by_identities(R, [0, 2, 0, 0], A.zero())
    # x = 0, y in Ann_{Z(A)}([A,A]) -> member
    assert n_membership_by_identities(R, A.zero(), [2, 0, 0, 0])
    # x = i is not central -> not a member
    assert not n_membership_by_identities(R, [0, 1, 0, 0], A.zero())


@pytest.mark.parametrize("base,params", [(2, (1, 1)), (4, (1,))])
def test_identity_membership_equals_center_membership(base, params):
    stage = tower(base, *params)
    R = double(stage, 1)
    N = associative_center(R)
    n, d = stage.modulus, stage.rank
    for x in all_vectors(n, d):
        for y in all_vectors(n, d):
            via_identities = n_membership_by_identities(R, x, y)
            via_center = membership(pair_coordinates(R, x, y), N)
            assert via_identities == via_center, (x, y)


def test_essentiality_data_containments_and_involution_invariance():
    for alg in (tower(4, 1, 1), tower(3, 1, 1), tower(4, 1), tower(6, 1, 5)):
        data = essentiality_data(alg)
        for g in data.I.generators:
            assert data.C.contains(g)
        for g in data.B.generators:
            assert data.C.contains(g)
        for g in data.J.generators:
            assert data.B.contains(g)
        # B and J are stable under the involution
        for sub in (data.B, data.J):
            for g in sub.generators:
                assert sub.contains(alg.involve(g))


def test_apply_involution_matches_method():
    from cdrings.algebra import apply_involution

    A = tower(4, 1)
    assert np.array_equal(apply_involution(A, [1, 3]), A.involve([1, 3]))


def test_identity_membership_equals_lemma_formula():
    # Membership by identities <=> x in Z(A) and y in Ann_{Z(A)}([A,A]).
    stage = tower(2, 1, 1)
    R = double(stage, 1)
    data = essentiality_data(stage)
    n, d = stage.modulus, stage.rank
    for x in all_vectors(n, d):
        for y in all_vectors(n, d):
            got = n_membership_by_identities(R, x, y)
            want = data.C.contains(x) and data.I.contains(y)
            assert got == want
