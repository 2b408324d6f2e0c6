import json
import logging

import numpy as np
import pytest

from minleg.lu_inequality import (
    FamilyValidationError,
    MatrixFamily,
    canonical_extremal,
    extremal_search,
    family_from_text,
    family_to_text,
    load_family,
    lu_bound,
    lu_check,
    normalize_family,
    objective_gradients,
    objective_value,
    save_family,
)

from _helpers import random_orthogonal, random_orthogonal_family, random_symmetric


# ---- family construction and validation -------------------------------------


def test_family_requires_unit_lead():
    mats = np.zeros((1, 2, 2))
    mats[0] = np.diag([1.0, 1.0])  # norm sqrt(2)
    with pytest.raises(FamilyValidationError):
        MatrixFamily(n=2, mats=mats)


def test_family_requires_exact_symmetry():
    mats = np.zeros((1, 2, 2))
    mats[0, 0, 1] = 1.0
    with pytest.raises(FamilyValidationError):
        MatrixFamily(n=2, mats=mats)


def test_family_rejects_too_many_matrices():
    mats = np.zeros((3, 2, 2))
    mats[0] = np.diag([1.0, 0.0])
    with pytest.raises(FamilyValidationError):
        MatrixFamily(n=2, mats=mats)


def test_family_rejects_nonorthogonal():
    a1 = np.diag([1.0, 0.0])
    a2 = np.diag([0.8, 0.1])
    with pytest.raises(FamilyValidationError):
        MatrixFamily(n=2, mats=np.stack([a1, a2]))


def test_family_rejects_unsorted_tail():
    a1 = np.diag([1.0, 0.0, 0.0])
    a2 = np.zeros((3, 3))
    a2[0, 1] = a2[1, 0] = 0.5
    a3 = np.zeros((3, 3))
    a3[0, 2] = a3[2, 0] = 2.0
    with pytest.raises(FamilyValidationError):
        MatrixFamily(n=3, mats=np.stack([a1, a2, a3]))


def test_normalize_family_rescales_and_sorts():
    a1 = 2.0 * np.diag([1.0, 0.0, 0.0])
    small = np.zeros((3, 3))
    small[0, 1] = small[1, 0] = 0.3
    big = np.zeros((3, 3))
    big[0, 2] = big[2, 0] = 1.5
    fam = normalize_family([a1, small, big])
    norms = fam.norms()
    assert abs(norms[0] - 1.0) < 1e-15
    # whole-family rescale by 1/2, then tail sorted descending
    assert abs(norms[1] - 1.5 * np.sqrt(2) / 2.0) < 1e-15
    assert abs(norms[2] - 0.3 * np.sqrt(2) / 2.0) < 1e-15


def test_normalize_family_keeps_valid_input():
    fam0 = canonical_extremal(3, 2, mu=0.5)
    fam1 = normalize_family(list(fam0.mats))
    assert np.allclose(fam0.mats, fam1.mats, atol=1e-15)


def test_normalize_family_rejects_overlap():
    a1 = np.diag([1.0, 0.0])
    a2 = np.diag([0.5, 0.5])  # <a1, a2> = 0.5
    with pytest.raises(FamilyValidationError):
        normalize_family([a1, a2])


def test_normalize_family_rejects_zero_lead():
    with pytest.raises(FamilyValidationError):
        normalize_family([np.zeros((2, 2))])
    with pytest.raises(FamilyValidationError):
        normalize_family([])


# ---- the inequality ----------------------------------------------------------


def test_lu_check_single_matrix():
    fam = MatrixFamily(n=3, mats=np.diag([1.0, 0.0, 0.0])[None])
    rep = lu_check(fam)
    assert rep.lhs == 0.0 and rep.rhs == 0.0 and rep.is_equality


def test_lu_check_two_by_two_equality():
    a1 = np.diag([1.0, -1.0]) / np.sqrt(2.0)
    a2 = np.array([[0.0, 1.0], [1.0, 0.0]])
    fam = MatrixFamily(n=2, mats=np.stack([a1, a2]))
    rep = lu_check(fam)
    assert abs(rep.lhs - 4.0) < 1e-14
    assert abs(rep.rhs - 4.0) < 1e-14
    assert rep.is_equality


def test_canonical_extremal_equality_grid():
    # every (n, k, mu) combination sits exactly on the bound
    for n in range(2, 7):
        for k in range(1, n):
            for mu in (0.0, 0.3, 1.0, 2.0):
                fam = canonical_extremal(n, k, mu)
                rep = lu_check(fam, tol=1e-12)
                assert abs(rep.slack) <= 1e-12, (n, k, mu, rep.slack)
                assert rep.is_equality


def test_canonical_extremal_structure():
    fam = canonical_extremal(4, 2, mu=0.7)
    lam = 1.0 / np.sqrt(6.0)
    assert np.allclose(fam.mats[0], np.diag([2 * lam, -lam, -lam, 0.0]), atol=1e-15)
    assert fam.mats[1][0, 1] == 0.7
    assert np.max(np.abs(fam.mats[3])) == 0.0
    with pytest.raises(ValueError):
        canonical_extremal(3, 0)
    with pytest.raises(ValueError):
        canonical_extremal(3, 3)


def test_slack_nonnegative_fuzz():
    # the inequality itself, 1e4 seeded random orthogonal families
    rng = np.random.default_rng(1234)
    worst = np.inf
    for _ in range(10_000):
        n = int(rng.integers(2, 7))
        fam = random_orthogonal_family(rng, n)
        rep = lu_check(fam)
        worst = min(worst, rep.slack)
        assert rep.slack >= -1e-10
    # the bound is attainable, so some families should get reasonably close
    assert worst < np.inf


def test_conjugation_invariance():
    rng = np.random.default_rng(77)
    for _ in range(50):
        n = int(rng.integers(2, 7))
        fam = random_orthogonal_family(rng, n)
        q = random_orthogonal(rng, n)
        conj = np.stack([q.T @ a @ q for a in fam.mats])
        conj = (conj + np.transpose(conj, (0, 2, 1))) / 2.0
        rep0 = lu_check(fam)
        rep1 = lu_check(normalize_family(list(conj)))
        assert abs(rep0.lhs - rep1.lhs) < 1e-10
        assert abs(rep0.rhs - rep1.rhs) < 1e-10
        assert abs(rep0.slack - rep1.slack) < 1e-10


# ---- optimizer ----------------------------------------------------------------


def test_objective_matches_check():
    rng = np.random.default_rng(3)
    for _ in range(20):
        fam = random_orthogonal_family(rng, 4)
        assert abs(objective_value(fam.mats) - lu_check(fam).lhs) < 1e-12


def test_gradient_against_finite_differences():
    # central differences, step 1e-6, 1e-4 relative agreement
    rng = np.random.default_rng(11)
    for _ in range(10):
        n = int(rng.integers(2, 6))
        fam = random_orthogonal_family(rng, n)
        mats = fam.mats
        grad = objective_gradients(mats)
        h = 1e-6
        for _ in range(6):
            a = int(rng.integers(0, mats.shape[0]))
            v = random_symmetric(rng, n)
            pert = np.zeros_like(mats)
            pert[a] = v
            fd = (objective_value(mats + h * pert) - objective_value(mats - h * pert)) / (2 * h)
            an = float(np.sum(grad[a] * v))
            assert abs(fd - an) <= 1e-4 * max(1.0, abs(fd))


def test_search_two_by_two_reaches_bound():
    best, fam = extremal_search(2, (1.0,), restarts=50, seed=0)
    assert abs(best - 2.0) < 1e-9
    rep = lu_check(fam, tol=1e-9)
    assert rep.is_equality


def test_search_zero_profile():
    best, fam = extremal_search(3, (0.0, 0.0), restarts=3, seed=1)
    assert best == 0.0
    assert lu_bound(fam) == 0.0


def test_search_deterministic():
    b1, f1 = extremal_search(3, (1.0, 0.5), restarts=5, seed=42)
    b2, f2 = extremal_search(3, (1.0, 0.5), restarts=5, seed=42)
    assert b1 == b2
    assert np.array_equal(f1.mats, f2.mats)


def test_search_soundness_random_profiles():
    # best value never beats the bound by more than 1e-6
    rng = np.random.default_rng(8)
    for _ in range(6):
        n = int(rng.integers(2, 5))
        m = int(rng.integers(1, n))
        profile = np.sort(rng.uniform(0.1, 1.5, size=m))[::-1]
        best, fam = extremal_search(n, profile, restarts=3, seed=9)
        assert best <= lu_bound(fam) + 1e-6


def test_search_validates_arguments():
    with pytest.raises(ValueError):
        extremal_search(1, (1.0,))
    with pytest.raises(ValueError):
        extremal_search(3, (0.5, 1.0))  # ascending
    with pytest.raises(ValueError):
        extremal_search(3, (-1.0,))
    with pytest.raises(ValueError):
        extremal_search(4, (1.0, 1.0, 1.0, 1.0))  # more than n-1
    with pytest.raises(ValueError):
        extremal_search(3, (1.0,), restarts=0)


def test_search_logs_equality_families(caplog):
    with caplog.at_level(logging.INFO, logger="minleg.lu_inequality"):
        extremal_search(2, (1.0,), restarts=5, seed=0)
    assert "bound" in caplog.text


# ---- serialization -------------------------------------------------------------


def test_family_text_round_trip_bit_exact():
    rng = np.random.default_rng(21)
    for _ in range(25):
        n = int(rng.integers(2, 7))
        fam = random_orthogonal_family(rng, n)
        clone = family_from_text(family_to_text(fam))
        assert np.array_equal(fam.mats, clone.mats)
        assert clone.n == fam.n


def test_family_file_round_trip(tmp_path):
    fam = canonical_extremal(4, 2, mu=0.7)
    path = tmp_path / "fam.json"
    save_family(fam, path)
    clone = load_family(path)
    assert np.array_equal(fam.mats, clone.mats)


def test_family_from_text_lenient_mode():
    fam = canonical_extremal(3, 1, mu=0.4)
    doc = json.loads(family_to_text(fam))
    # scale everything by 3: strict parse must fail, lenient renormalizes
    doc["mats"] = [[3.0 * x for x in row] for row in doc["mats"]]
    text = json.dumps(doc)
    with pytest.raises(FamilyValidationError):
        family_from_text(text)
    fixed = family_from_text(text, strict=False)
    assert abs(fixed.norms()[0] - 1.0) < 1e-12


def test_family_from_text_malformed():
    with pytest.raises((ValueError, KeyError, json.JSONDecodeError)):
        family_from_text("{not json")
    with pytest.raises((ValueError, KeyError)):
        family_from_text('{"n": 2}')
