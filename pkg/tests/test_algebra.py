from fractions import Fraction

import pytest

from superhaar import (InputError, LieSuperalgebra, ad_prime_trace,
                       change_basis, even_part_structure, lambda_values,
                       linalg, trace_condition_holds, validate_superalgebra)
from superhaar.randgen import random_odd_basis_change, random_scalar

from conftest import ALGEBRA_FILES, fixture_algebra

F = Fraction


def test_fixture_algebras_all_validate():
    for key in ALGEBRA_FILES:
        report = validate_superalgebra(fixture_algebra(key))
        assert report.ok, (key, report.violations)


def test_purely_odd_abelian_is_valid():
    alg = LieSuperalgebra("odd-abelian", [], ["a", "b"], {})
    assert validate_superalgebra(alg).ok


def test_antisymmetry_violation_is_witnessed():
    # flipped sign on the reverse bracket
    alg = LieSuperalgebra("broken", ["X"], ["th"],
                          {(0, 1): {1: 1}, (1, 0): {1: 1}})
    report = validate_superalgebra(alg)
    kinds = {(v.kind, v.witness) for v in report.violations}
    assert ("antisymmetry", (0, 1)) in kinds


def test_parity_violation_is_witnessed():
    # [X, th] with an even component
    alg = LieSuperalgebra("broken", ["X"], ["th"],
                          {(0, 1): {0: 1}, (1, 0): {0: -1}})
    report = validate_superalgebra(alg)
    assert any(v.kind == "parity" and v.witness == (0, 1, 0)
               for v in report.violations)


def test_jacobi_violation_is_witnessed():
    # [th, th] = 2X together with [X, th] = th cannot satisfy Jacobi
    alg = LieSuperalgebra("broken", ["X"], ["th"],
                          {(0, 1): {1: 1}, (1, 0): {1: -1}, (1, 1): {0: 2}})
    report = validate_superalgebra(alg)
    assert any(v.kind == "jacobi" for v in report.violations)


def test_malformed_input_raises():
    with pytest.raises(InputError):
        LieSuperalgebra("x", ["A"], [], {(0, 5): {0: 1}})
    with pytest.raises(InputError):
        LieSuperalgebra("x", ["A"], [], {(0, 0): {0: 0.5}})
    with pytest.raises(InputError):
        LieSuperalgebra("x", ["A"], ["A"], {})


def test_ad_prime_trace_values(bad2, gl11, osp12):
    assert ad_prime_trace(bad2, 0) == 1
    assert ad_prime_trace(gl11, 0) == 0   # h1: +1 on e, -1 on f
    assert ad_prime_trace(gl11, 1) == 0
    assert all(ad_prime_trace(osp12, i) == 0 for i in range(3))
    with pytest.raises(ValueError):
        ad_prime_trace(bad2, 1)  # odd index


def test_trace_condition(g2, g3, bad2, gl11, osp12, sl2):
    assert trace_condition_holds(g2)
    assert trace_condition_holds(g3)
    assert not trace_condition_holds(bad2)
    assert trace_condition_holds(gl11)
    assert trace_condition_holds(osp12)
    assert trace_condition_holds(sl2)


def test_lambda_is_linear_on_random_even_combinations(rng):
    for key in ("gl11", "osp12", "bad2", "sl2"):
        alg = fixture_algebra(key)
        n0, m = alg.n_even, alg.n_odd
        lam = lambda_values(alg)
        for _ in range(10):
            coeffs = [random_scalar(rng) for _ in range(n0)]
            # trace of the combined action on the odd part, from scratch
            mat = linalg.zeros(m, m)
            for i, ci in enumerate(coeffs):
                if not ci:
                    continue
                for j in range(n0, alg.dim):
                    for k, c in alg.bracket(i, j):
                        mat[k - n0][j - n0] += ci * c
            assert linalg.trace(mat) == sum(
                (ci * lam[i] for i, ci in enumerate(coeffs)), F(0))


def test_even_part_structure_examples(g2, gl11, osp12):
    rep = even_part_structure(g2)
    assert rep.center_dim == 0 and rep.derived_dim == 0
    assert rep.certified_reductive

    rep = even_part_structure(gl11)
    assert rep.center_dim == 2 and rep.derived_dim == 0
    assert rep.certified_reductive

    rep = even_part_structure(osp12)
    assert rep.center_dim == 0 and rep.derived_dim == 3
    assert rep.killing_nondegenerate
    assert rep.certified_reductive


def test_even_part_not_reductive_and_override():
    # 2-dimensional nonabelian Lie algebra: [A, B] = B, not reductive
    alg = LieSuperalgebra("aff1", ["A", "B"], [],
                          {(0, 1): {1: 1}, (1, 0): {1: -1}})
    assert validate_superalgebra(alg).ok
    rep = even_part_structure(alg)
    assert not rep.certified_reductive
    assert not rep.reductive
    forced = even_part_structure(alg, assume_reductive=True)
    assert forced.assumed_reductive and forced.reductive
    # the assumption flag is only recorded when the certificate failed
    certified = even_part_structure(fixture_algebra("osp12"), assume_reductive=True)
    assert certified.certified_reductive and not certified.assumed_reductive


def test_change_basis_preserves_validity(rng, osp12):
    for _ in range(3):
        twisted, full = random_odd_basis_change(osp12, rng)
        assert validate_superalgebra(twisted).ok
        assert twisted.n_even == 3 and twisted.n_odd == 2
    with pytest.raises(ValueError):
        change_basis(osp12, linalg.identity(3),
                     [[F(1), F(1)], [F(1), F(1)]])  # singular odd map


def test_change_basis_rescaling_scales_brackets(bad2):
    # doubling the odd generator scales [th, th'] quadratically and keeps
    # the even action diagonal
    scaled, _ = change_basis(bad2, linalg.identity(1), [[F(2)]])
    assert scaled.bracket(0, 1) == ((1, F(1)),)   # [X, 2th] = 2th = 1 * (2th)
    assert validate_superalgebra(scaled).ok
