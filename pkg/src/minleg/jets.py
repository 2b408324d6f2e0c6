"""Second-order forward-mode jets.

A :class:`Jet` carries a scalar value together with its gradient and Hessian
with respect to ``d`` underlying real coordinates.  Arithmetic on jets
propagates derivatives through the chain rule, so any map written in jet
operations comes with first and second partials that are analytic: exact up
to rounding, with no truncation error.

Values may be real or complex.  Derivatives are always taken with respect to
real coordinates, so conjugation acts coefficient-wise and is a legal jet
operation.  The module-level helpers (:func:`sin`, :func:`cos`, :func:`exp`,
:func:`sqrt`, :func:`cis`, :func:`conj`) dispatch on their argument: applied
to a plain number they fall back to numpy, which lets the same map body serve
as a fast value-only evaluator.
"""

from __future__ import annotations

import numpy as np


class Jet:
    """Truncated second-order Taylor data of a scalar function of d reals."""

    __slots__ = ("val", "grad", "hess")

    def __init__(self, val, grad, hess):
        self.val = val
        self.grad = np.asarray(grad)
        self.hess = np.asarray(hess)

    @staticmethod
    def variables(u):
        """Jets for the coordinate functions at the point u."""
        u = np.asarray(u, dtype=float)
        d = u.size
        eye = np.eye(d)
        return [Jet(float(u[i]), eye[i].copy(), np.zeros((d, d))) for i in range(d)]

    @staticmethod
    def constant(value, d):
        return Jet(value, np.zeros(d), np.zeros((d, d)))

    # ---- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Jet):
            return Jet(self.val + other.val, self.grad + other.grad, self.hess + other.hess)
        return Jet(self.val + other, self.grad, self.hess)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.val, -self.grad, -self.hess)

    def __sub__(self, other):
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Jet):
            cross = np.outer(self.grad, other.grad)
            return Jet(
                self.val * other.val,
                self.grad * other.val + self.val * other.grad,
                self.hess * other.val + self.val * other.hess + cross + cross.T,
            )
        return Jet(self.val * other, self.grad * other, self.hess * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * _chain(other, 1.0 / other.val, -1.0 / other.val**2, 2.0 / other.val**3)
        return self * (1.0 / other)

    def __rtruediv__(self, other):
        return _chain(self, 1.0 / self.val, -1.0 / self.val**2, 2.0 / self.val**3) * other

    # ---- real-linear maps ------------------------------------------------

    def conj(self):
        return Jet(np.conj(self.val), np.conj(self.grad), np.conj(self.hess))

    def real_part(self):
        return Jet(np.real(self.val), np.real(self.grad), np.real(self.hess))


def _chain(x, f0, f1, f2):
    """Compose a scalar function with a jet given f(x), f'(x), f''(x)."""
    return Jet(f0, f1 * x.grad, f1 * x.hess + f2 * np.outer(x.grad, x.grad))


def sin(x):
    if isinstance(x, Jet):
        return _chain(x, np.sin(x.val), np.cos(x.val), -np.sin(x.val))
    return np.sin(x)


def cos(x):
    if isinstance(x, Jet):
        return _chain(x, np.cos(x.val), -np.sin(x.val), -np.cos(x.val))
    return np.cos(x)


def exp(x):
    if isinstance(x, Jet):
        e = np.exp(x.val)
        return _chain(x, e, e, e)
    return np.exp(x)


def sqrt(x):
    if isinstance(x, Jet):
        r = np.sqrt(x.val)
        return _chain(x, r, 0.5 / r, -0.25 / (r * x.val))
    return np.sqrt(x)


def cis(x):
    """exp(i*x) for a real jet or number."""
    if isinstance(x, Jet):
        return cos(x) + 1j * sin(x)
    return np.exp(1j * x)


def conj(x):
    if isinstance(x, Jet):
        return x.conj()
    return np.conj(x)
