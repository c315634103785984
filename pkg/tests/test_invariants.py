import itertools
from fractions import Fraction

import numpy as np
import pytest

from luinv import (
    EnumerationBoundError,
    InvariantVector,
    SubsetMask,
    all_subsets,
    apply_local_unitaries,
    basis_vector_m2,
    bell_state,
    eta,
    ghz_state,
    higher_basis_vector,
    higher_invariant,
    i_from_j,
    invariant_I,
    invariant_I_vector,
    invariant_J,
    invariant_J_vector,
    j_from_i,
    meyer_wallach,
    product_state,
    projector,
    purify,
    random_density_matrix,
    random_pure_state,
    random_unitary,
)

BELL_I = (0.75, 0.0, 0.0, 0.25)
BELL_J = (1.0, 0.5, 0.5, 1.0)


def _random_product_state(dims, seed):
    rng = np.random.default_rng(seed)
    factors = []
    for n in dims:
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        factors.append(z / np.linalg.norm(z))
    return product_state(factors)


def test_invariant_I_bell():
    bell = bell_state()
    for subset, expected in zip(all_subsets(2), BELL_I):
        assert invariant_I(bell, subset) == pytest.approx(expected, abs=1e-12)


def test_invariant_I_vanishes_on_odd_subsets():
    for dims, seed in [((2, 2), 0), ((2, 3), 1), ((2, 2, 2), 2)]:
        psi = random_pure_state(dims, seed)
        for subset in all_subsets(len(dims)):
            if len(subset) % 2 == 1:
                assert abs(invariant_I(psi, subset)) < 1e-12


def test_invariant_I_product_state():
    psi = _random_product_state((2, 2, 2), seed=3)
    for subset in all_subsets(3):
        expected = 1.0 if len(subset) == 0 else 0.0
        assert invariant_I(psi, subset) == pytest.approx(expected, abs=1e-9)


def test_invariant_I_sums_to_one():
    for dims, seed in [((2, 2), 4), ((3, 3), 5), ((2, 2, 2), 6)]:
        psi = random_pure_state(dims, seed)
        total = sum(invariant_I(psi, s) for s in all_subsets(len(dims)))
        assert total == pytest.approx(1.0, abs=1e-9)


def test_invariant_I_degree_four_homogeneity():
    psi = random_pure_state((2, 2), seed=7)
    scaled = type(psi)((2, 2), 1.3j * psi.coeffs)
    for subset in all_subsets(2):
        assert invariant_I(scaled, subset) == pytest.approx(
            1.3**4 * invariant_I(psi, subset), abs=1e-10
        )


def test_invariant_J_examples():
    bell_rho = projector(bell_state())
    for subset, expected in zip(all_subsets(2), BELL_J):
        assert invariant_J(bell_rho, subset) == pytest.approx(expected, abs=1e-12)
    rho = random_density_matrix((2, 3), seed=8)
    full = SubsetMask.of(2, [1, 2])
    assert invariant_J(rho, full) == pytest.approx(rho.trace() ** 2, abs=1e-12)
    psi = random_pure_state((2, 3), seed=9)
    assert invariant_J(projector(psi), SubsetMask.of(2, [])) == pytest.approx(
        1.0, abs=1e-12
    )


def test_transform_bell_and_indicator():
    bell_ivec = InvariantVector(2, BELL_I)
    assert j_from_i(bell_ivec).values == pytest.approx(BELL_J)
    assert i_from_j(InvariantVector(2, BELL_J)).values == pytest.approx(BELL_I)
    indicator = InvariantVector(3, (1,) + (0,) * 7)
    assert j_from_i(indicator).values == (1,) * 8


def test_transform_roundtrip_random():
    rng = np.random.default_rng(10)
    for k in (1, 2, 3, 4):
        vec = InvariantVector(k, tuple(rng.standard_normal(1 << k)))
        back = i_from_j(j_from_i(vec))
        assert np.abs(np.array(back.values) - np.array(vec.values)).max() < 1e-12


def test_transform_exact_on_rationals():
    vec = InvariantVector(2, (Fraction(3, 4), Fraction(0), Fraction(0), Fraction(1, 4)))
    assert j_from_i(vec).values == (1, Fraction(1, 2), Fraction(1, 2), 1)
    assert i_from_j(j_from_i(vec)).values == vec.values


def test_transform_size_mismatch():
    with pytest.raises(ValueError):
        InvariantVector(2, (1.0, 0.0))


def test_transform_consistency_on_states():
    for dims, seed in [((2, 2), 11), ((3, 3), 12), ((2, 2, 2), 13)]:
        psi = random_pure_state(dims, seed)
        ivec = invariant_I_vector(psi)
        jvec = invariant_J_vector(projector(psi))
        forward = np.array(j_from_i(ivec).values) - np.array(jvec.values)
        backward = np.array(i_from_j(jvec).values) - np.array(ivec.values)
        assert np.abs(forward).max() < 1e-9
        assert np.abs(backward).max() < 1e-9


def test_eta_examples():
    bell_rho = projector(bell_state())
    assert eta(bell_rho, SubsetMask.of(2, [1])) == pytest.approx(1.0, abs=1e-9)
    prod = projector(_random_product_state((2, 2, 2), seed=14))
    for subset in all_subsets(3):
        if 0 < len(subset) < 3:
            assert eta(prod, subset) == pytest.approx(0.0, abs=1e-9)
    mixed = projector(bell_state())
    maximally_mixed = type(mixed)((2, 2), np.eye(4) / 4)
    assert eta(maximally_mixed, SubsetMask.of(2, [1])) == pytest.approx(1.0)


def test_eta_rejects_empty_and_full():
    rho = projector(bell_state())
    with pytest.raises(ValueError):
        eta(rho, SubsetMask.of(2, []))
    with pytest.raises(ValueError):
        eta(rho, SubsetMask.of(2, [1, 2]))
    unnormalized = type(rho)((2, 2), 2.0 * rho.entries)
    with pytest.raises(ValueError):
        eta(unnormalized, SubsetMask.of(2, [1]))


def test_meyer_wallach_examples():
    for k in range(2, 6):
        assert meyer_wallach(ghz_state(k)) == pytest.approx(1.0, abs=1e-9)
        prod = _random_product_state((2,) * k, seed=15 + k)
        assert meyer_wallach(prod) == pytest.approx(0.0, abs=1e-9)
    assert meyer_wallach(bell_state()) == pytest.approx(1.0, abs=1e-9)


def test_meyer_wallach_requires_normalization():
    psi = bell_state()
    doubled = type(psi)((2, 2), 2.0 * psi.coeffs)
    with pytest.raises(ValueError):
        meyer_wallach(doubled)


def test_lu_invariance_of_I_and_J():
    psi = random_pure_state((2, 2, 2), seed=16)
    us = [random_unitary(2, seed=30 + i) for i in range(3)]
    rotated = apply_local_unitaries(psi, us)
    for subset in all_subsets(3):
        assert invariant_I(rotated, subset) == pytest.approx(
            invariant_I(psi, subset), abs=1e-9
        )
        assert invariant_J(projector(rotated), subset) == pytest.approx(
            invariant_J(projector(psi), subset), abs=1e-9
        )


def test_purification_compatibility():
    for dims, seed in [((2, 2), 17), ((2, 3), 18)]:
        rho = random_density_matrix(dims, seed)
        psi = purify(rho)
        k = len(dims)
        kplus = psi.k
        pure_rho = projector(psi)
        for subset in all_subsets(k):
            expected = invariant_J(rho, subset)
            with_env = SubsetMask.of(kplus, sorted(subset.members) + [kplus])
            complement = SubsetMask.of(
                kplus, set(range(1, k + 1)) - subset.members
            )
            assert invariant_J(pure_rho, with_env) == pytest.approx(
                expected, abs=1e-9
            )
            assert invariant_J(pure_rho, complement) == pytest.approx(
                expected, abs=1e-9
            )


def test_basis_vector_m2_norms_single_site():
    v = basis_vector_m2((3,), SubsetMask.of(1, []), [(0, 1)])
    assert np.vdot(v, v).real == pytest.approx(2.0)
    v = basis_vector_m2((3,), SubsetMask.of(1, []), [(1, 1)])
    assert np.vdot(v, v).real == pytest.approx(4.0)


def test_basis_vector_m2_orthogonality():
    dims = (2, 2)
    subset = SubsetMask.of(2, [])
    pairs = list(itertools.product([(0, 0), (0, 1), (1, 1)], repeat=2))
    vectors = [basis_vector_m2(dims, subset, p) for p in pairs]
    for i, v in enumerate(vectors):
        for w in vectors[i + 1 :]:
            assert abs(np.vdot(v, w)) < 1e-12


def test_basis_vector_m2_admissibility():
    with pytest.raises(ValueError):
        basis_vector_m2((2, 2), SubsetMask.of(2, [1]), [(0, 0), (0, 1)])
    with pytest.raises(ValueError):
        basis_vector_m2((2, 2), SubsetMask.of(2, []), [(1, 0), (0, 1)])
    with pytest.raises(ValueError):
        basis_vector_m2((2, 2), SubsetMask.of(2, []), [(0, 2), (0, 1)])


def test_higher_basis_vector_matches_m2():
    dims = (2, 3)
    ratios = []
    for subset in all_subsets(2):
        if len(subset) % 2:
            continue
        strict = [j in subset for j in (1, 2)]
        site_pairs = [
            list(itertools.combinations(range(n), 2))
            if s
            else list(itertools.combinations_with_replacement(range(n), 2))
            for n, s in zip(dims, strict)
        ]
        for pairs in itertools.product(*site_pairs):
            v2 = basis_vector_m2(dims, subset, pairs)
            hv = higher_basis_vector(dims, subset, 2, pairs)
            norm = np.abs(v2).max()
            assert norm > 0
            mask = np.abs(v2) > 1e-14
            assert np.abs(hv[~mask]).max(initial=0.0) < 1e-12
            ratios.append(hv[mask] / v2[mask])
    flat = np.concatenate([r.reshape(-1) for r in ratios])
    assert np.abs(flat - flat[0]).max() < 1e-12


def test_higher_basis_vector_monomial():
    v = higher_basis_vector((2, 2), SubsetMask.of(2, []), 3, [(0, 0, 0), (1, 1, 1)])
    nz = np.nonzero(v)
    assert len(nz[0]) == 1
    assert v[1, 1, 1] != 0.0  # flat index of e_{01} repeated


def test_higher_basis_vector_orthogonality_m3():
    dims = (3, 3)
    vectors = []
    for subset in [SubsetMask.of(2, []), SubsetMask.of(2, [1, 2])]:
        strict = [j in subset for j in (1, 2)]
        rows = [
            list(itertools.combinations(range(3), 3))
            if s
            else list(itertools.combinations_with_replacement(range(3), 3))
            for s in strict
        ]
        for table in itertools.product(*rows):
            vectors.append(higher_basis_vector(dims, subset, 3, table))
    gram_off = 0.0
    for i, v in enumerate(vectors):
        for w in vectors[i + 1 :]:
            gram_off = max(gram_off, abs(np.vdot(v, w)))
    assert gram_off < 1e-12
    assert len(vectors) == 101


def test_higher_basis_vector_validation():
    with pytest.raises(ValueError):
        higher_basis_vector((2, 2), SubsetMask.of(2, [1]), 2, [(0, 1), (0, 1)])
    with pytest.raises(ValueError):
        higher_basis_vector((2, 2), SubsetMask.of(2, []), 2, [(1, 0), (0, 1)])
    with pytest.raises(ValueError):
        higher_basis_vector(
            (2, 2), SubsetMask.of(2, [1, 2]), 2, [(0, 0), (0, 1)]
        )


def test_higher_invariant_matches_I_at_m2():
    for dims, seed in [((2, 2), 19), ((3, 3), 20), ((2, 2, 2), 21), ((2, 3), 22)]:
        psi = random_pure_state(dims, seed)
        for subset in all_subsets(len(dims)):
            if len(subset) % 2:
                continue
            assert higher_invariant(psi, subset, 2) == pytest.approx(
                invariant_I(psi, subset), abs=1e-9
            )


def test_higher_invariant_m1_is_norm():
    psi = random_pure_state((2, 3), seed=23)
    scaled = type(psi)((2, 3), 1.7 * psi.coeffs)
    assert higher_invariant(scaled, SubsetMask.of(2, []), 1) == pytest.approx(
        scaled.norm_squared(), abs=1e-9
    )


def test_higher_invariant_m3_sum_bound():
    psi = random_pure_state((3, 3), seed=24)
    total = sum(
        higher_invariant(psi, s, 3) for s in all_subsets(2) if len(s) % 2 == 0
    )
    assert total <= psi.norm_squared() ** 3 + 1e-9


def test_higher_invariant_lu_invariance():
    psi = random_pure_state((3, 3), seed=25)
    us = [random_unitary(3, seed=40 + i) for i in range(2)]
    rotated = apply_local_unitaries(psi, us)
    for subset in [SubsetMask.of(2, []), SubsetMask.of(2, [1, 2])]:
        assert higher_invariant(rotated, subset, 3) == pytest.approx(
            higher_invariant(psi, subset, 3), abs=1e-9
        )


def test_higher_invariant_validation():
    psi = random_pure_state((2, 2), seed=26)
    with pytest.raises(ValueError):
        higher_invariant(psi, SubsetMask.of(2, [1]), 2)
    with pytest.raises(ValueError):
        higher_invariant(psi, SubsetMask.of(2, []), 0)
    with pytest.raises(EnumerationBoundError):
        higher_invariant(psi, SubsetMask.of(2, []), 4)
    big = random_pure_state((5, 5, 5), seed=27)
    with pytest.raises(EnumerationBoundError):
        higher_invariant(big, SubsetMask.of(3, []), 2)
