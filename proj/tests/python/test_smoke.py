import numpy as np
import pytest

import cocycle


def test_group_and_irreps():
    q8 = cocycle.Group.builtin("q8")
    assert q8.order == 8
    assert len(cocycle.conjugacy_classes(q8)) == 5
    basis = cocycle.decompose_irreps(q8, seed=42)
    assert sorted(r.dim for r in basis.irreps) == [1, 1, 1, 1, 2]
    assert cocycle.schur_orthogonality_error(basis) < 1e-8


def test_fourier_round_trip():
    g = cocycle.Group.builtin("s4")
    basis = cocycle.decompose_irreps(g)
    rng = np.random.default_rng(0)
    values = rng.normal(size=24) + 1j * rng.normal(size=24)
    f = cocycle.GroupFunction(g, values)
    blocks = cocycle.fourier_transform(f, basis)
    assert [b.shape[0] for b in blocks] == [r.dim for r in basis.irreps]
    back = cocycle.fourier_inverse(blocks, basis)
    assert np.max(np.abs(back.values - values)) < 1e-9


def test_solvers():
    g = cocycle.Group.builtin("q8")
    basis = cocycle.decompose_irreps(g)
    sols = cocycle.solve_dalembert(basis)
    assert len(sols) == 5
    for s in sols:
        assert cocycle.dalembert_residual(s.f).satisfied
    dims = sorted(sp.dimension for sp in cocycle.solve_wilson(basis))
    assert dims == [1, 1, 1, 1, 4]


def test_oracle_matches():
    g = cocycle.Group.builtin("z4")
    basis = cocycle.decompose_irreps(g)
    found = cocycle.gauss_newton_oracle(g, "dalembert", starts=100, threads=2)
    report = cocycle.match_solutions(found.solutions, cocycle.solve_dalembert(basis))
    assert report.complete()
    assert len(report.matches) == 3


def test_lemma():
    g = cocycle.Group.builtin("a4")
    basis = cocycle.decompose_irreps(g)
    three = [r for r in basis.irreps if r.dim == 3][0]
    report = cocycle.verify_small_dimension_lemma(three)
    assert not report.hypothesis_holds
    assert report.conclusion == "not_applicable"


def test_validation_errors():
    with pytest.raises(cocycle.ValidationError, match="NotAPermutationRow"):
        cocycle.Group.from_cayley_table(["e", "a"], [[0, 1], [1, 1]])
    with pytest.raises(cocycle.CocycleError):
        cocycle.Group.builtin("q9")
