"""Bases for degree-4 polynomials on the unit sphere.

Fully symmetric 4th-order tensors on R^3 form a 15-dimensional space.  Two
coordinate systems are used throughout the package:

* ``u`` -- monomial coefficients of the homogeneous quartic
  ``p(x) = sum_a u_a * x^a`` with exponents listed in ``MONOMIAL_EXPONENTS``.
* ``q`` -- coefficients in the real, orthonormal spherical harmonics of bands
  l = 0, 2, 4 (Condon-Shortley-free signs), ordered as
  ``l=0; l=2, m=-2..2; l=4, m=-4..4``.

Both describe the same function on S^2 (band-l harmonics are padded with
powers of ``x^2+y^2+z^2`` to homogeneous degree 4, which is invisible on the
sphere).  The change of basis is linear: ``u = SH_TO_MONO @ q``.

The SH basis is orthonormal for the L2 inner product on the sphere, so the
Euclidean norm of ``q`` equals the L2 norm of the induced sphere function.
All tables below are validated at import time against exact monomial
integrals over S^2.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "MONOMIAL_EXPONENTS",
    "MULTINOMIAL",
    "BAND_SLICES",
    "SH_TO_MONO",
    "MONO_TO_SH",
    "SPHERE_GRAM",
    "monomial_values",
    "sh_values",
    "sh_rotation_matrix",
    "sphere_quadrature",
]


def _monomial_exponents() -> list[tuple[int, int, int]]:
    exps = []
    for i in range(4, -1, -1):
        for j in range(4 - i, -1, -1):
            exps.append((i, j, 4 - i - j))
    return exps


#: Exponent triples (i, j, k) with i + j + k = 4, in the fixed package order.
MONOMIAL_EXPONENTS: tuple[tuple[int, int, int], ...] = tuple(_monomial_exponents())

#: Multinomial coefficient 4!/(i! j! k!) per monomial slot.
MULTINOMIAL = np.array(
    [math.factorial(4) // (math.factorial(i) * math.factorial(j) * math.factorial(k))
     for (i, j, k) in MONOMIAL_EXPONENTS],
    dtype=float,
)

#: Slices of the SH coefficient vector for bands l = 0, 2, 4.
BAND_SLICES = {0: slice(0, 1), 2: slice(1, 6), 4: slice(6, 15)}

_MONO_INDEX = {e: i for i, e in enumerate(MONOMIAL_EXPONENTS)}


def sphere_monomial_integral(a: int, b: int, c: int) -> float:
    """Exact integral of x^a y^b z^c over the unit sphere S^2."""
    if a % 2 or b % 2 or c % 2:
        return 0.0

    def dfact(n):
        out = 1
        while n > 1:
            out *= n
            n -= 2
        return out

    return 4.0 * math.pi * dfact(a - 1) * dfact(b - 1) * dfact(c - 1) / dfact(a + b + c + 1)


def _pmul(p1: dict, p2: dict) -> dict:
    out: dict[tuple[int, int, int], float] = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[e] = out.get(e, 0.0) + c1 * c2
    return out


def _real_sh_quartics() -> list[dict]:
    """The 15 real SH basis functions as homogeneous quartic polynomials.

    Band-0 and band-2 harmonics are multiplied by (x^2+y^2+z^2)^2 and
    (x^2+y^2+z^2) respectively so every entry is a degree-4 homogeneous
    polynomial equal to the harmonic on the sphere.
    """
    x = {(1, 0, 0): 1.0}
    y = {(0, 1, 0): 1.0}
    z = {(0, 0, 1): 1.0}
    r2 = {(2, 0, 0): 1.0, (0, 2, 0): 1.0, (0, 0, 2): 1.0}

    def lin(*terms):
        out: dict[tuple[int, int, int], float] = {}
        for coef, poly in terms:
            for e, c in poly.items():
                out[e] = out.get(e, 0.0) + coef * c
        return out

    pi = math.pi
    x2, y2, z2 = _pmul(x, x), _pmul(y, y), _pmul(z, z)
    xy, yz, xz = _pmul(x, y), _pmul(y, z), _pmul(x, z)

    basis = []
    # l = 0
    basis.append(lin((0.5 / math.sqrt(pi), _pmul(r2, r2))))
    # l = 2  (m = -2..2), each multiplied by r^2
    k2a = 0.5 * math.sqrt(15.0 / pi)
    k2b = 0.25 * math.sqrt(5.0 / pi)
    k2c = 0.25 * math.sqrt(15.0 / pi)
    basis.append(lin((k2a, _pmul(xy, r2))))
    basis.append(lin((k2a, _pmul(yz, r2))))
    basis.append(lin((k2b, _pmul(lin((3.0, z2), (-1.0, r2)), r2))))
    basis.append(lin((k2a, _pmul(xz, r2))))
    basis.append(lin((k2c, _pmul(lin((1.0, x2), (-1.0, y2)), r2))))
    # l = 4  (m = -4..4)
    k4_4 = 0.75 * math.sqrt(35.0 / pi)
    k4_3 = 0.75 * math.sqrt(35.0 / (2.0 * pi))
    k4_2 = 0.75 * math.sqrt(5.0 / pi)
    k4_1 = 0.75 * math.sqrt(5.0 / (2.0 * pi))
    k4_0 = 3.0 / 16.0 * math.sqrt(1.0 / pi)
    k4p2 = 3.0 / 8.0 * math.sqrt(5.0 / pi)
    k4p4 = 3.0 / 16.0 * math.sqrt(35.0 / pi)
    basis.append(lin((k4_4, _pmul(xy, lin((1.0, x2), (-1.0, y2))))))
    basis.append(lin((k4_3, _pmul(yz, lin((3.0, x2), (-1.0, y2))))))
    basis.append(lin((k4_2, _pmul(xy, lin((7.0, z2), (-1.0, r2))))))
    basis.append(lin((k4_1, _pmul(yz, lin((7.0, z2), (-3.0, r2))))))
    basis.append(lin((k4_0, lin((35.0, _pmul(z2, z2)), (-30.0, _pmul(z2, r2)), (3.0, _pmul(r2, r2))))))
    basis.append(lin((k4_1, _pmul(xz, lin((7.0, z2), (-3.0, r2))))))
    basis.append(lin((k4p2, _pmul(lin((1.0, x2), (-1.0, y2)), lin((7.0, z2), (-1.0, r2))))))
    basis.append(lin((k4_3, _pmul(xz, lin((1.0, x2), (-3.0, y2))))))
    basis.append(lin((k4p4, lin((1.0, _pmul(x2, x2)), (-6.0, _pmul(x2, y2)), (1.0, _pmul(y2, y2))))))
    return basis


def _build_tables():
    sh_polys = _real_sh_quartics()
    S = np.zeros((15, 15))
    for i, poly in enumerate(sh_polys):
        for e, c in poly.items():
            S[_MONO_INDEX[e], i] = c
    G = np.array(
        [[sphere_monomial_integral(a[0] + b[0], a[1] + b[1], a[2] + b[2])
          for b in MONOMIAL_EXPONENTS]
         for a in MONOMIAL_EXPONENTS]
    )
    gram = S.T @ G @ S
    if not np.allclose(gram, np.eye(15), atol=1e-12):
        raise AssertionError("real SH table is not orthonormal; table transcription bug")
    return S, S.T @ G, G


#: u = SH_TO_MONO @ q maps SH coefficients to monomial coefficients.
SH_TO_MONO, MONO_TO_SH, SPHERE_GRAM = _build_tables()


def monomial_values(points: np.ndarray) -> np.ndarray:
    """Evaluate the 15 quartic monomials at ``points`` (..., 3) -> (..., 15)."""
    pts = np.asarray(points, dtype=float)
    x, y, z = pts[..., 0], pts[..., 1], pts[..., 2]
    cols = [x ** i * y ** j * z ** k if (i or j or k) else np.ones_like(x)
            for (i, j, k) in MONOMIAL_EXPONENTS]
    return np.stack(cols, axis=-1)


def sh_values(points: np.ndarray) -> np.ndarray:
    """Evaluate the 15 SH basis quartics at ``points`` (..., 3) -> (..., 15)."""
    return monomial_values(points) @ SH_TO_MONO


def _fibonacci_sphere(n: int) -> np.ndarray:
    k = np.arange(n, dtype=float) + 0.5
    phi = math.pi * (1.0 + math.sqrt(5.0)) * k
    cz = 1.0 - 2.0 * k / n
    sz = np.sqrt(np.maximum(0.0, 1.0 - cz ** 2))
    return np.stack([sz * np.cos(phi), sz * np.sin(phi), cz], axis=-1)


_ROT_POINTS = _fibonacci_sphere(36)
_ROT_PINV = np.linalg.pinv(sh_values(_ROT_POINTS))


def sh_rotation_matrix(R: np.ndarray) -> np.ndarray:
    """15x15 matrix D with p_{Dq}(x) = p_q(R^T x) for any rotation R.

    Built by sampling the basis on a fixed unisolvent point set and solving
    the induced linear system, so no Wigner-D recursion is involved.  D is
    orthogonal (rotations preserve the sphere L2 product).
    """
    B = sh_values(_ROT_POINTS @ np.asarray(R, dtype=float))
    return _ROT_PINV @ B


def sphere_quadrature(n_theta: int = 8, n_phi: int = 17):
    """Product Gauss-Legendre x trapezoid rule on S^2.

    Exact for spherical polynomials up to degree min(2*n_theta-1, n_phi-1);
    the defaults integrate degree-8 integrands (products of two quartics)
    exactly.  Returns (points (N,3), weights (N,)).
    """
    nodes, wts = np.polynomial.legendre.leggauss(n_theta)
    phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
    wphi = 2.0 * math.pi / n_phi
    ct = nodes[:, None] + 0.0 * phi[None, :]
    st = np.sqrt(1.0 - ct ** 2)
    pts = np.stack(
        [st * np.cos(phi)[None, :], st * np.sin(phi)[None, :], ct], axis=-1
    ).reshape(-1, 3)
    w = (wts[:, None] * wphi + 0.0 * phi[None, :]).reshape(-1)
    return pts, w
