"""Second-fundamental-form machinery for unit-sphere immersions.

An :class:`ImmersionChart` is a parametrized map F from an n-dimensional
coordinate box into the unit sphere of C^{n+1} (realified to R^{2n+2}),
carrying analytic first and second partials via the jet layer.  At a chart
point the engine builds an orthonormal tangent frame, extracts the cubic
form

    sigma_ijk = <d2F(e_i, e_j), J e_k>,

which for a minimal Legendrian immersion is fully symmetric, and derives
from it the fundamental matrix S_lj = sum_ts sigma_tsl sigma_tsj, its
spectrum, the squared second-fundamental-form norm, the pinching quantity
|B|^2 + lambda_2, Ricci and scalar curvature, and the residuals of the
identities these objects must satisfy (Legendrian contact conditions,
minimality, full symmetry, the Simons-type matrix identity for parallel
examples).  Contraction against J e_k needs no normal projection: J e_k is
orthogonal to F and to the tangent space, so tangential and radial parts of
d2F drop out.

Complex structure convention: coordinate pairs (x_{2k-1}, x_{2k}) realify
z_k = x_{2k-1} + i x_{2k}, and J(x_{2k-1}, x_{2k}) = (-x_{2k}, x_{2k-1}).

An independent scalar-curvature route (finite-difference Christoffel symbols
of the induced metric, no sigma anywhere) serves as the oracle for the
Gauss-equation relation R = n(n-1) - |B|^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .jets import Jet
from .symmat import sym_eigen, symmetrize

PSD_TOL = 1e-10
DEGENERACY_TOL = 1e-8


class DegeneratePointError(RuntimeError):
    """Coordinate tangents fail to span an n-plane at the given point."""


class NonPSDError(RuntimeError):
    """A fundamental matrix came out with an eigenvalue below -1e-10."""


@dataclass(frozen=True)
class Interval:
    lo: float
    hi: float
    periodic: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi) and self.lo < self.hi):
            raise ValueError(f"bad interval [{self.lo}, {self.hi}]")

    @property
    def span(self) -> float:
        return self.hi - self.lo


class ImmersionChart:
    """Parametrized immersion into the unit sphere of C^{dim+1}.

    component_fn maps a list of coordinate jets (or plain floats) to the
    dim+1 complex components of F.  `closed` records whether the chart covers
    a closed manifold up to measure zero; all-periodic domains default to
    closed, anything else must opt in.
    """

    def __init__(self, name: str, dim: int, domain: Sequence[Interval],
                 component_fn: Callable, closed: bool | None = None):
        if dim < 1 or len(domain) != dim:
            raise ValueError("domain must provide one interval per coordinate")
        self.name = name
        self.dim = dim
        self.domain = tuple(domain)
        self.ambient_complex_dim = dim + 1
        self.closed = all(iv.periodic for iv in domain) if closed is None else closed
        self._fn = component_fn

    def _components(self, coords):
        comps = self._fn(coords)
        if len(comps) != self.ambient_complex_dim:
            raise ValueError(
                f"chart {self.name}: expected {self.ambient_complex_dim} components, got {len(comps)}"
            )
        return comps

    def point(self, u) -> np.ndarray:
        """F(u) in R^{2n+2} (fast value-only path)."""
        u = np.asarray(u, dtype=float)
        comps = np.asarray(self._components(list(u)), dtype=complex)
        return _interleave(comps)

    def jet_eval(self, u) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(F, dF, d2F) with shapes (2n+2,), (2n+2, n), (2n+2, n, n)."""
        u = np.asarray(u, dtype=float)
        comps = self._components(Jet.variables(u))
        vals = np.asarray([c.val for c in comps], dtype=complex)
        grads = np.asarray([c.grad for c in comps], dtype=complex)
        hesss = np.asarray([c.hess for c in comps], dtype=complex)
        return _interleave(vals), _interleave(grads), _interleave(hesss)

    def jacobian(self, u) -> np.ndarray:
        return self.jet_eval(u)[1]

    def hessian(self, u) -> np.ndarray:
        return self.jet_eval(u)[2]


def _interleave(comps: np.ndarray) -> np.ndarray:
    """Stack complex components (m, ...) into reals (2m, ...)."""
    out = np.empty((2 * comps.shape[0],) + comps.shape[1:])
    out[0::2] = comps.real
    out[1::2] = comps.imag
    return out


def apply_J(v) -> np.ndarray:
    """Multiplication by i on realified vectors, last axis of size 2n+2."""
    v = np.asarray(v, dtype=float)
    out = np.empty_like(v)
    out[..., 0::2] = -v[..., 1::2]
    out[..., 1::2] = v[..., 0::2]
    return out


@dataclass(frozen=True)
class PointFrame:
    """Orthonormal tangent data at a chart point.

    e holds the frame vectors as rows; a is the change of basis with
    e_i = sum_s a_is dF/du_s; metric is G_st = <dF_s, dF_t>; vol = sqrt(det G).
    """

    u: np.ndarray
    F: np.ndarray
    e: np.ndarray
    a: np.ndarray
    metric: np.ndarray
    vol: float


def _frame_from(u, f, jac) -> PointFrame:
    n = jac.shape[1]
    v = jac.T
    metric = jac.T @ jac
    e = np.zeros_like(v)
    coeff = np.zeros((n, n))
    for i in range(n):
        w = v[i].copy()
        c = np.zeros(n)
        c[i] = 1.0
        for _ in range(2):  # one reorthogonalization pass keeps <e_i,e_j> ~ 1e-15
            for j in range(i):
                r = float(w @ e[j])
                w -= r * e[j]
                c -= r * coeff[j]
        nrm = float(np.linalg.norm(w))
        if nrm <= DEGENERACY_TOL * (1.0 + float(np.linalg.norm(v[i]))):
            raise DegeneratePointError(f"coordinate tangents degenerate at u = {u.tolist()}")
        e[i] = w / nrm
        coeff[i] = c / nrm
    det = float(np.linalg.det(metric))
    if det <= 0.0:
        raise DegeneratePointError(f"metric not positive definite at u = {u.tolist()}")
    return PointFrame(u=u, F=f, e=e, a=coeff, metric=metric, vol=math.sqrt(det))


def frame_at(chart: ImmersionChart, u) -> PointFrame:
    """Gram-Schmidt frame over the coordinate tangents, in coordinate order."""
    u = np.asarray(u, dtype=float)
    f, jac, _ = chart.jet_eval(u)
    return _frame_from(u, f, jac)


def _sigma_from(frame: PointFrame, hess: np.ndarray) -> np.ndarray:
    je = apply_J(frame.e)
    m = np.einsum("ast,ka->stk", hess, je)
    return np.einsum("is,jt,stk->ijk", frame.a, frame.a, m)


def sigma_at(chart: ImmersionChart, frame: PointFrame) -> np.ndarray:
    """sigma_ijk = sum_st a_is a_jt <d2F/du_s du_t, J e_k>, returned raw.

    Full symmetry is a property to be measured (sigma_symmetry_defect), not
    enforced.  Values are only meaningful if the Legendrian residual gate
    passes for the same frame.
    """
    _, _, hess = chart.jet_eval(frame.u)
    return _sigma_from(frame, hess)


def sigma_symmetry_defect(sigma: np.ndarray) -> float:
    """Max deviation of sigma from itself over all six index permutations."""
    perms = [(0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]
    return max(float(np.max(np.abs(sigma - np.transpose(sigma, p)))) for p in perms)


def minimality_residual(sigma: np.ndarray) -> float:
    """max_k |sum_i sigma_iik|; zero mean curvature makes every trace vanish."""
    return float(np.max(np.abs(np.einsum("iik->k", sigma))))


def legendrian_residual(frame: PointFrame) -> float:
    """Max of |<J e_i, e_j>| and |<J F, e_j>| over the frame."""
    je = apply_J(frame.e)
    jf = apply_J(frame.F)
    return max(float(np.max(np.abs(je @ frame.e.T))), float(np.max(np.abs(frame.e @ jf))))


def fundamental_matrix(sigma: np.ndarray) -> np.ndarray:
    """S_lj = sum_ts sigma_tsl sigma_tsj (symmetric PSD by construction)."""
    s = np.einsum("tsl,tsj->lj", sigma, sigma)
    return (s + s.T) / 2.0


@dataclass(frozen=True)
class Spectrum:
    """Eigen data of a fundamental matrix.

    lambdas descending; normB2 = trace = |B|^2; pinch = |B|^2 + lambda_2;
    ricci_eigs ascending (mu_i = n - 1 - lambda_i); scalar = n(n-1) - |B|^2.
    """

    lambdas: np.ndarray
    normB2: float
    pinch: float
    ricci_eigs: np.ndarray
    scalar: float

    @property
    def n(self) -> int:
        return self.lambdas.size


def spectrum_of(s: np.ndarray) -> Spectrum:
    s = symmetrize(s)
    n = s.shape[0]
    if n < 2:
        raise ValueError("spectrum needs n >= 2 (lambda_2 is used)")
    values = sym_eigen(s).values
    if values[-1] < -PSD_TOL:
        raise NonPSDError(f"fundamental matrix has eigenvalue {values[-1]:.3e} < -{PSD_TOL}")
    norm_b2 = float(values.sum())
    return Spectrum(
        lambdas=values,
        normB2=norm_b2,
        pinch=norm_b2 + float(values[1]),
        ricci_eigs=(n - 1.0) - values,
        scalar=n * (n - 1.0) - norm_b2,
    )


def gauss_rank(spec: Spectrum, tol: float = 1e-8) -> int:
    """Number of eigenvalues above tol; the rank of the Gauss-map differential."""
    return int(np.sum(spec.lambdas > tol))


def f_m(s: np.ndarray, m: int) -> tuple[float, float]:
    """Power sums of the fundamental spectrum: f = sum lambda_i^m, g = f^(1/m).

    g increases to lambda_1 as m grows, which gives a derivative-free handle
    on the top eigenvalue.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError("m must be a positive integer")
    lam = np.clip(spectrum_of(s).lambdas, 0.0, None)
    f = float(np.sum(lam**m))
    return f, f ** (1.0 / m)


def simons_residual(sigma: np.ndarray) -> float:
    """Residual of the matrix form of the Simons-type identity.

    With sigma_l the symmetric matrix sigma(., ., e_l) and S the fundamental
    matrix, parallel second fundamental form forces

        (n+1) sigma_l - sum_j S_lj sigma_j - sum_j [sigma_j, [sigma_j, sigma_l]] = 0

    for every l; returns the largest Frobenius norm over l.  Only meaningful
    as a hard check on examples known to have parallel sigma.
    """
    n = sigma.shape[0]
    s = fundamental_matrix(sigma)
    sl = np.einsum("ijl->lij", sigma)
    lin = (n + 1.0) * sl - np.einsum("lj,jab->lab", s, sl)
    double = np.zeros_like(sl)
    for j in range(n):
        sj = sl[j]
        inner = sj @ sl - sl @ sj        # [sigma_j, sigma_l] for all l
        double += sj @ inner - inner @ sj
    resid = lin - double
    return float(np.max(np.sqrt(np.einsum("lab,lab->l", resid, resid))))


def structure_constants_check(norm_b2: float) -> tuple[float, float]:
    """Gauss curvature and log-Laplacian forced on a 3-dim parallel-rank-2 block.

    K = 2 - 8/|B|^2 and Delta log |B|^2 = 32/|B|^2 - 6; at |B|^2 = 16/3 these
    are (1/2, 0), at |B|^2 = 8 they are (1, -2).
    """
    if norm_b2 <= 0.0:
        raise ValueError("|B|^2 must be positive")
    return 2.0 - 8.0 / norm_b2, 32.0 / norm_b2 - 6.0


@dataclass(frozen=True)
class PointData:
    """Frame, cubic form, fundamental matrix and spectrum at one chart point."""

    frame: PointFrame
    sigma: np.ndarray
    smatrix: np.ndarray
    spectrum: Spectrum


def point_data(chart: ImmersionChart, u) -> PointData:
    u = np.asarray(u, dtype=float)
    f, jac, hess = chart.jet_eval(u)
    frame = _frame_from(u, f, jac)
    sigma = _sigma_from(frame, hess)
    smatrix = fundamental_matrix(sigma)
    return PointData(frame=frame, sigma=sigma, smatrix=smatrix, spectrum=spectrum_of(smatrix))


# ---- intrinsic curvature oracle --------------------------------------------


def _metric(chart: ImmersionChart, u: np.ndarray) -> np.ndarray:
    jac = chart.jacobian(u)
    return jac.T @ jac


def _christoffel(chart: ImmersionChart, u: np.ndarray, step: float) -> np.ndarray:
    n = chart.dim
    eye = np.eye(n)
    g = _metric(chart, u)
    det = float(np.linalg.det(g))
    if det <= 0.0:
        raise DegeneratePointError(f"metric not positive definite at u = {u.tolist()}")
    ginv = np.linalg.inv(g)
    dg = np.stack(
        [(_metric(chart, u + step * eye[l]) - _metric(chart, u - step * eye[l])) / (2.0 * step)
         for l in range(n)]
    )  # dg[l, s, t] = d_l G_st
    gamma = 0.5 * (
        np.einsum("kl,slt->kst", ginv, dg)
        + np.einsum("kl,tls->kst", ginv, dg)
        - np.einsum("kl,lst->kst", ginv, dg)
    )
    return gamma


def scalar_curvature_intrinsic(chart: ImmersionChart, u, step: float = 5e-5) -> float:
    """Scalar curvature from the induced metric alone.

    Christoffel symbols come from central differences of G(u) and are
    differenced once more for the curvature contraction, so this route never
    touches sigma or the complex structure; it is the independent oracle for
    the Gauss-equation relation R = n(n-1) - |B|^2.
    """
    u = np.asarray(u, dtype=float)
    n = chart.dim
    eye = np.eye(n)
    ginv = np.linalg.inv(_metric(chart, u))
    gamma = _christoffel(chart, u, step)
    dgamma = np.stack(
        [(_christoffel(chart, u + step * eye[m], step) - _christoffel(chart, u - step * eye[m], step))
         / (2.0 * step) for m in range(n)]
    )  # dgamma[m, k, s, t] = d_m Gamma^k_st
    term1 = np.einsum("sskt,kt->", dgamma, ginv)
    term2 = np.einsum("tsks,kt->", dgamma, ginv)
    term3 = np.einsum("ssl,lkt,kt->", gamma, gamma, ginv)
    term4 = np.einsum("stl,lks,kt->", gamma, gamma, ginv)
    return float(term1 - term2 + term3 - term4)


# ---- derivative cross-check -------------------------------------------------


def derivative_cross_check(chart: ImmersionChart, u, step: float = 1e-3) -> tuple[float, float]:
    """Max-abs gaps between jet derivatives and a Richardson central-difference
    oracle built from chart.point values only: (first-order gap, second-order gap)."""
    u = np.asarray(u, dtype=float)
    n = chart.dim
    eye = np.eye(n)
    p = chart.point
    f0, jac, hess = chart.jet_eval(u)

    def d1(h):
        return np.stack([(p(u + h * eye[s]) - p(u - h * eye[s])) / (2.0 * h) for s in range(n)], axis=1)

    fd1 = (4.0 * d1(step / 2.0) - d1(step)) / 3.0

    def d2(h):
        out = np.empty_like(hess)
        for s in range(n):
            out[:, s, s] = (p(u + h * eye[s]) - 2.0 * f0 + p(u - h * eye[s])) / h**2
        for s in range(n):
            for t in range(s + 1, n):
                mixed = (
                    p(u + h * (eye[s] + eye[t]))
                    - p(u + h * (eye[s] - eye[t]))
                    - p(u - h * (eye[s] - eye[t]))
                    + p(u - h * (eye[s] + eye[t]))
                ) / (4.0 * h**2)
                out[:, s, t] = out[:, t, s] = mixed
        return out

    fd2 = (4.0 * d2(step / 2.0) - d2(step)) / 3.0
    return float(np.max(np.abs(fd1 - jac))), float(np.max(np.abs(fd2 - hess)))
