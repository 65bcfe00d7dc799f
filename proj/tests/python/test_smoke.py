import math

import pytest

import sbq


def test_alpha_beta_limits():
    t, lam, rho_sq, d = 0.5, 3.0, 1.0, 3
    R = sbq.r_infinity(t, lam, rho_sq, d)
    assert abs(sbq.alpha(t, R, lam, rho_sq, d) - 1.0) < 1e-6
    assert abs(sbq.beta(t, R, lam, rho_sq, d) / sbq.beta_limit(t, lam) - 1.0) < 1e-6
    assert sbq.beta(0.5, 0.3, lam, rho_sq, d) == pytest.approx(
        math.exp(0.25 * lam) * sbq.alpha(1.0, 0.6, lam, rho_sq, d), rel=1e-9
    )


def test_domain_errors_map_to_value_error():
    with pytest.raises(ValueError):
        sbq.alpha(-1.0, 1.0, 0.0)
    with pytest.raises(sbq.DomainError):
        sbq.alpha(0.5, 0.0, 0.0)


def test_models_and_functions():
    c = sbq.circle_model(7)
    assert len(c) == 7
    assert c.eigenvalues()[:3] == pytest.approx([0.0, 4 * math.pi**2, 4 * math.pi**2])
    f = sbq.SpectralFunction.eigenfunction(c, 1)
    assert abs(f([0.25]) - 1j) < 1e-14
    s = sbq.synthetic_quotient_model(d=3, n_modes=100)
    assert s.name == "synthetic" and len(s) == 100
    assert sbq.positivity_radius(s) == pytest.approx(math.pi / 4)


def test_inversion_and_isometry():
    for model in (sbq.circle_model(32), sbq.torus_model(2), sbq.synthetic_quotient_model()):
        f = sbq.SpectralFunction.random(model, 8, seed=3)
        rep = sbq.global_inversion_l2(f, 0.5)
        assert rep["final_error"] < 1e-6
        assert rep["eventually_decreasing"]
        assert rep["columns"] == ["R", "error_sq", "relative_error"]
        assert sbq.isometry_G(f, 0.5) == pytest.approx(f.norm_sq(), rel=1e-6)


def test_geometric_paths_on_circle():
    c = sbq.circle_model(16)
    f = sbq.SpectralFunction.random(c, 5, seed=11)
    a = sbq.partial_inversion_spectral(f, 0.5, 0.2)
    assert abs(sbq.partial_inversion_geometric(f, 0.5, 0.2, [0.3]) - a([0.3])) < 1e-7
    assert sbq.isometry_geometric(f, 0.5, 0.2) == pytest.approx(sbq.isometry_G(f, 0.5, 0.2), rel=1e-6)
    with pytest.raises(sbq.CapabilityError):
        sbq.partial_inversion_geometric(sbq.SpectralFunction.random(sbq.synthetic_quotient_model(), 3), 0.5, 0.2, [0.0, 0.0, 0.0])


def test_surjectivity_and_lemma5():
    F = sbq.SpectralFunction.random(sbq.torus_model(2), 8, seed=2)
    f, limit = sbq.surjectivity_reconstruct(F, 0.5)
    back = sbq.heat(f, 0.5)
    for a, b in zip(F.coefficients, back.coefficients):
        assert abs(a - b) <= 1e-12 * max(abs(a), 1e-300)
    assert limit == pytest.approx(sbq.isometry_G(f, 0.5), rel=1e-6)
    r = sbq.lemma5_check([1.0, 0.5, 0.25])
    assert not r["monte_carlo"]
    assert r["difference"] < 1e-7 * max(1.0, abs(r["rhs"]))


def test_holo_change_and_jacobians():
    c = sbq.circle_model(4)
    F1 = sbq.SpectralFunction.random(c, 4, seed=1).coefficients
    F2 = sbq.SpectralFunction.random(c, 4, seed=2).coefficients
    _, _, diff = sbq.holo_change_check_circle(F1, F2, lambda y: math.exp(-y * y), 0.25)
    assert diff < 1e-8
    assert sbq.j_c_radial("A1", [1.3]) == pytest.approx((math.sin(1.3) / 1.3) ** 2, abs=1e-14)
    assert abs(sbq.j_radial_complex("A2", [0.7j, -0.2j]) - sbq.j_c_radial("A2", [0.7, -0.2])) < 1e-10


def test_harness_run(tmp_path):
    assert len(sbq.list_experiments()) == 8
    code, err, checks = sbq.run_config("[multiplier-curve]\n", tmp_path)
    assert code == 0 and err == ""
    assert checks and all(c["pass"] for c in checks)
    assert (tmp_path / "multiplier-curve.csv").exists()
    code, err, _ = sbq.run_config("[invert-pointwise]\nmodel = synthetic\n", tmp_path)
    assert code == 3 and "synthetic" in err
    code, _, _ = sbq.run_config("[nope]\n", tmp_path)
    assert code == 2
