import math

import numpy as np
import pytest
from scipy import special as sp
from scipy.integrate import quad

from fraccalc.closed import d_log, d_power
from fraccalc.errors import DomainError, ToleranceNotMet
from fraccalc.quadrature import (
	Integrand,
	QuadratureConfig,
	adaptive_mesh,
	default_order,
	fractional,
	gauss_jacobi,
	rl_apply,
	rl_derivative,
	rl_integral,
	rl_integral_result,
)


def test_gauss_jacobi_cached_and_read_only():
	s, w = gauss_jacobi(5, 0.0, 0.0)
	assert w.sum() == pytest.approx(2.0)
	assert gauss_jacobi(5, 0.0, 0.0)[0] is s
	with pytest.raises(ValueError):
		w[0] = 1.0


def test_integral_of_polynomial():
	assert rl_integral(Integrand.power(1), -1.0, 2.0) == pytest.approx(2.0, rel=1e-12)
	# ∫_1^3 t^2 dt
	assert rl_integral(Integrand.power(2), -1.0, 3.0, a=1.0) == pytest.approx(26.0 / 3.0, rel=1e-12)


@pytest.mark.parametrize("sigma", [-0.5, -1.5, -2.7])
def test_integral_of_singular_power(sigma):
	want = d_power(sigma, 0.5).evaluate(1.5)
	assert rl_integral(Integrand.power(0.5), sigma, 1.5) == pytest.approx(want, rel=1e-9)


@pytest.mark.parametrize("sigma", [-0.5, -1.5])
def test_integral_of_log(sigma):
	assert rl_integral(Integrand.log(), sigma, 2.0) == pytest.approx(d_log(sigma).evaluate(2.0), rel=1e-8)


def test_result_carries_error_estimate():
	res = rl_integral_result(Integrand.log(), -0.5, 2.0)
	assert res.error <= 1e-9 * abs(res.value) + 1e-10
	assert res.subdivisions > 0


def test_out_of_budget_raises():
	cfg = QuadratureConfig(abs_tol=1e-15, rel_tol=1e-15, max_subdivisions=0)
	with pytest.raises(ToleranceNotMet) as info:
		rl_integral(Integrand.log(), -0.5, 2.0, cfg=cfg)
	assert info.value.estimate > 0


def test_derivative_of_power():
	# D^1/2 x = 2/sqrt(pi) x^1/2
	want = 2.0 / math.sqrt(math.pi)
	assert rl_derivative(Integrand.power(1), 0.5, 1.0) == pytest.approx(want, rel=1e-6)


def test_derivative_of_log():
	assert rl_derivative(Integrand.log(), 0.5, 2.0) == pytest.approx(d_log(0.5).evaluate(2.0), rel=1e-6)


def test_apply_dispatch():
	f = Integrand.power(2)
	assert rl_apply(f, 0.0, 1.7) == pytest.approx(1.7 ** 2)
	assert rl_apply(f, -1.0, 3.0) == pytest.approx(9.0, rel=1e-12)


def test_default_order():
	assert default_order(0.5) == 2
	assert default_order(2.7) == 4
	assert default_order(1.0) == 3


@pytest.mark.parametrize("kwargs", [
	dict(sigma=-0.5, x=1.0, a=1.0),
	dict(sigma=0.5, x=1.0, m=1),
	dict(sigma=0.0, x=1.0),
])
def test_derivative_domain(kwargs):
	with pytest.raises(DomainError):
		rl_derivative(Integrand.power(1), **kwargs)


def test_integral_domain():
	with pytest.raises(DomainError):
		rl_integral(Integrand.power(1), 0.5, 1.0)
	with pytest.raises(DomainError):
		rl_integral(Integrand.power(-1.5), -0.5, 1.0)


def test_combined_integrand_is_linear():
	f, g = Integrand.power(0.5), Integrand.log()
	h = f.combine(2.0, g, -3.0)
	assert h.singular_at_zero
	want = 2.0 * rl_integral(f, -0.7, 1.3) - 3.0 * rl_integral(g, -0.7, 1.3)
	assert rl_integral(h, -0.7, 1.3) == pytest.approx(want, rel=1e-9)


def test_fractional_composes_to_one_order():
	inner = fractional(Integrand.power(1), -0.5, 2.0)
	assert inner(np.array([2.0]))[0] == pytest.approx(d_power(-0.5, 1).evaluate(2.0), rel=1e-10)
	assert rl_integral(inner, -0.5, 2.0) == pytest.approx(d_power(-1, 1).evaluate(2.0), rel=1e-8)


def test_log_eps_tends_to_log():
	t = np.array([0.1, 1.0, 3.0])
	np.testing.assert_allclose(Integrand.log_eps(1e-9)(t), np.log(t), rtol=1e-7, atol=1e-8)
	assert Integrand.log_eps(0.0).label == "log"


@pytest.mark.parametrize("r, sigma, x", [(0.5, -0.5, 1.5), (2.0, -0.3, 0.8), (0.0, -1.7, 2.5)])
def test_integral_against_scipy_weighted_quad(r, sigma, x):
	# the whole integrand t^r (x-t)^(-1-sigma) is the algebraic weight
	val, _ = quad(lambda t: 1.0, 0.0, x, weight="alg", wvar=(r, -1.0 - sigma), epsabs=1e-13, epsrel=1e-13)
	want = val / sp.gamma(-sigma)
	assert rl_integral(Integrand.power(r), sigma, x) == pytest.approx(want, rel=1e-9)


def test_relative_mesh_leaves_out_kernel_power():
	f = Integrand.log()
	mesh, value, _, _, converged = adaptive_mesh(f.eval, 0.0, 2.0, 0.7, f.zero_exponent, True, 31, 1e-12, 1e-12, 64)
	assert converged
	assert mesh.evaluate(2.0) == pytest.approx(value, rel=1e-12)
	u = np.array([0.5, 2.0, 3.5])
	np.testing.assert_allclose(mesh.evaluate(u, relative=True) * u ** 1.7, mesh.evaluate(u), rtol=1e-14)


@pytest.mark.parametrize("kwargs", [dict(fd_step=0.0), dict(fd_halvings=0), dict(deriv_abs_tol=0.0), dict(max_subdivisions=-1)])
def test_config_rejects_bad_derivative_settings(kwargs):
	with pytest.raises(ValueError):
		QuadratureConfig(**kwargs)


def test_derivative_of_integral_near_the_origin():
	# D^2.5 x^3 = Γ(4)/Γ(1.5) x^0.5 at a small x
	want = d_power(2.5, 3).evaluate(0.05)
	assert rl_derivative(Integrand.power(3), 2.5, 0.05) == pytest.approx(want, rel=1e-6)
