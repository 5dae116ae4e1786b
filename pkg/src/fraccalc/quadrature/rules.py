from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Tuple

import numpy as np
from scipy.special import roots_jacobi

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def gauss_jacobi(n: int, right_exp: float, left_exp: float) -> Tuple[np.ndarray, np.ndarray]:
	"""
	n-point rule on [-1, 1] for weight (1-s)^right_exp (1+s)^left_exp.
	Both exponents must exceed -1; 0/0 gives Gauss-Legendre.
	"""
	s, w = roots_jacobi(int(n), float(right_exp), float(left_exp))
	s.setflags(write=False)
	w.setflags(write=False)
	return s, w


@dataclass(frozen=True)
class Panel:
	"""Sub-interval [lo, hi] of the relative coordinate τ in [0, 1]."""
	lo: float
	hi: float
	left_exp: float = 0.0
	right_exp: float = 0.0

	def nodes(self, n: int) -> Tuple[np.ndarray, np.ndarray, float]:
		half = 0.5 * (self.hi - self.lo)
		s, w = gauss_jacobi(n, self.right_exp, self.left_exp)
		return 0.5 * (self.lo + self.hi) + half * s, w, half


@dataclass(frozen=True)
class FrozenMesh:
	"""
	Quadrature of ∫_a^u f(t)(u-t)^kernel_exp dt on panels fixed in relative
	coordinates, so the same nodes serve every upper limit u.
	"""
	f: Callable[[np.ndarray], np.ndarray]
	a: float
	kernel_exp: float
	tau: np.ndarray
	weight: np.ndarray
	half: np.ndarray
	left_exp: np.ndarray
	right_exp: np.ndarray

	@property
	def size(self) -> int:
		return int(self.tau.size)

	def evaluate(self, u, dtype=float, relative: bool = False):
		"""The integral at upper limit u; relative=True leaves out the factor (u-a)^(1+kernel_exp)."""
		u = np.asarray(u, dtype=dtype)
		L = (u - self.a)[..., None]
		t = self.a + L * self.tau
		vals = (
			self.half ** (1.0 + self.left_exp + self.right_exp)
			* self.weight
			* self.f(t)
			* (t / L) ** (-self.left_exp)
			* (1.0 - self.tau) ** (self.kernel_exp - self.right_exp)
		)
		out = vals.sum(axis=-1)
		if not relative:
			out = out * (u - self.a) ** (1.0 + self.kernel_exp)
		if out.ndim == 0:
			return out[()]
		return out


def _mesh_from_panels(f, a: float, kernel_exp: float, panels: List[Panel], n: int) -> FrozenMesh:
	taus, weights, halves, les, res = [], [], [], [], []
	for p in sorted(panels, key=lambda p: p.lo):
		tau, w, half = p.nodes(n)
		taus.append(tau)
		weights.append(w)
		halves.append(np.full(n, half))
		les.append(np.full(n, p.left_exp))
		res.append(np.full(n, p.right_exp))
	return FrozenMesh(
		f=f,
		a=float(a),
		kernel_exp=float(kernel_exp),
		tau=np.concatenate(taus),
		weight=np.concatenate(weights),
		half=np.concatenate(halves),
		left_exp=np.concatenate(les),
		right_exp=np.concatenate(res),
	)


def adaptive_mesh(
	f: Callable[[np.ndarray], np.ndarray],
	a: float,
	x: float,
	kernel_exp: float,
	zero_exp: float,
	graded_at_zero: bool,
	base_nodes: int,
	abs_tol: float,
	rel_tol: float,
	max_subdivisions: int,
) -> Tuple[FrozenMesh, float, float, int, bool]:
	"""
	Globally adaptive bisection of [a, x] for ∫ f(t)(x-t)^kernel_exp dt.

	The panel touching x carries the kernel in its Jacobi weight; with
	graded_at_zero the panel touching 0 carries t^zero_exp and the mesh is
	started split so refinement can grade towards 0. Panel error is the gap
	between the base rule and a rule of half the size.

	Returns (mesh, value, error, subdivisions, converged).
	"""
	n_hi = int(base_nodes)
	n_lo = max(3, (n_hi - 1) // 2)

	def make(lo: float, hi: float) -> Panel:
		le = float(zero_exp) if (graded_at_zero and lo == 0.0) else 0.0
		re = float(kernel_exp) if hi == 1.0 else 0.0
		return Panel(lo, hi, le, re)

	def estimate(p: Panel) -> Tuple[float, float]:
		hi_val = float(_mesh_from_panels(f, a, kernel_exp, [p], n_hi).evaluate(x))
		lo_val = float(_mesh_from_panels(f, a, kernel_exp, [p], n_lo).evaluate(x))
		return hi_val, abs(hi_val - lo_val)

	start = [make(0.0, 0.5), make(0.5, 1.0)] if graded_at_zero else [make(0.0, 1.0)]
	heap: List[Tuple[float, int, Panel, float]] = []
	counter = 0
	for p in start:
		v, e = estimate(p)
		heapq.heappush(heap, (-e, counter, p, v))
		counter += 1

	subdivisions = 0
	while True:
		total = float(np.sum([item[3] for item in heap]))
		error = float(np.sum([-item[0] for item in heap]))
		if error <= max(abs_tol, rel_tol * abs(total)):
			converged = True
			break
		if subdivisions >= max_subdivisions:
			converged = False
			break
		neg_e, _, worst, _ = heapq.heappop(heap)
		mid = 0.5 * (worst.lo + worst.hi)
		for child in (make(worst.lo, mid), make(mid, worst.hi)):
			v, e = estimate(child)
			heapq.heappush(heap, (-e, counter, child, v))
			counter += 1
		subdivisions += 1
		logger.debug("split [%.3e, %.3e] err=%.3e total=%.16e", worst.lo, worst.hi, -neg_e, total)

	mesh = _mesh_from_panels(f, a, kernel_exp, [item[2] for item in heap], n_hi)
	return mesh, total, error, subdivisions, converged
