# Copyright 2026 The ccgeom Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent oracles for the frozen fixture values used by the C++ tests.

Run with `python3 tests/oracles/frozen_values.py`. Nothing here imports the
library; every value is recomputed from first principles with numpy.
"""
import numpy as np


def heisenberg_frame(p):
    x, y, _ = p
    return np.array([[1.0, 0.0], [0.0, 1.0], [-y / 2.0, x / 2.0]])


def martinet_frame(p):
    x, _, _ = p
    return np.array([[1.0, 0.0], [0.0, 1.0], [0.0, x * x]])


def normal_equations_projection(F, v):
    # w = F (F^T F)^{-1} F^T v, solved directly without any orthogonalization
    coeff = np.linalg.solve(F.T @ F, F.T @ v)
    return F @ coeff


def projector(F):
    return F @ np.linalg.solve(F.T @ F, F.T)


def grid_lipschitz(frame, lo, hi, res):
    axes = [np.linspace(lo, hi, res) for _ in range(3)]
    h = (hi - lo) / (res - 1)
    best = 0.0
    P = {}
    for i, x in enumerate(axes[0]):
        for j, y in enumerate(axes[1]):
            for k, z in enumerate(axes[2]):
                P[(i, j, k)] = projector(frame(np.array([x, y, z])))
    for (i, j, k), Pa in P.items():
        for d in range(3):
            idx = [i, j, k]
            idx[d] += 1
            if idx[d] >= res:
                continue
            Pb = P[tuple(idx)]
            best = max(best, np.linalg.norm(Pa - Pb, 2) / h)
    return best


def recursion_iterate(alpha, beta, n):
    a = alpha
    for _ in range(n - 1):
        a = beta * a + alpha
    return a


def projected_field(frame, v):
    return lambda x: normal_equations_projection(frame(x), v)


def rk4(field, x, T, h):
    n = int(np.ceil(T / h - 1e-12))
    dt = T / n
    for _ in range(n):
        k1 = field(x)
        k2 = field(x + 0.5 * dt * k1)
        k3 = field(x + 0.5 * dt * k2)
        k4 = field(x + dt * k3)
        x = x + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
    return x


def closed_curve_cost(xs, ys):
    # perimeter and the vertical gain 1/2 * sum (x dy - y dx) of a closed polygon
    dx = np.diff(xs)
    dy = np.diff(ys)
    length = np.sum(np.hypot(dx, dy))
    xm = 0.5 * (xs[1:] + xs[:-1])
    ym = 0.5 * (ys[1:] + ys[:-1])
    gain = 0.5 * np.sum(xm * dy - ym * dx)
    return length, gain


def isoperimetric_brute_force(h, samples=20001):
    # loops through the origin enclosing signed area h: ellipses over a sweep of
    # aspect ratios and regular polygons; the best perimeter over the families
    th = np.linspace(0.0, 2.0 * np.pi, samples)
    best = np.inf
    for aspect in np.exp(np.linspace(np.log(0.2), np.log(5.0), 201)):
        a = np.sqrt(h * aspect / np.pi)
        b = h / (np.pi * a)
        length, gain = closed_curve_cost(a * np.cos(th) - a, b * np.sin(th))
        best = min(best, length * np.sqrt(h / gain))
    for n in range(3, 40):
        ang = np.linspace(0.0, 2.0 * np.pi, n + 1)
        length, gain = closed_curve_cost(np.cos(ang) - 1.0, np.sin(ang))
        best = min(best, length * np.sqrt(h / gain))
    return best


def heisenberg_left_k(res=401):
    # sup over p in [-1,1]^2 of max(s_max, 1/s_min) for the Jacobian of p*x
    best = 1.0
    for px in np.linspace(-1, 1, res):
        for py in (-1.0, 1.0):
            J = np.eye(3)
            J[2, 0] = -py / 2.0
            J[2, 1] = px / 2.0
            s = np.linalg.svd(J, compute_uv=False)
            best = max(best, s[0], 1.0 / s[-1])
    return best


def zigzag_endpoint(eps, T, h):
    x = np.zeros(3)
    w = [np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])]
    a = [0.5, 0.5]
    n = int(round(T / eps))
    for k in range(n):
        j = k % 2
        x = rk4(projected_field(heisenberg_frame, 2 * a[j] * w[j]), x, eps, h)
    return x


def circle_lift_point(t, steps=20000):
    # planar arc of radius 1/2 centred at (1/2, 0) from angle pi, lifted by
    # integrating z' = (x y' - y x') / 2 numerically
    r, cx, phi0 = 0.5, 0.5, np.pi
    if t == 0.0:
        return np.array([cx + r * np.cos(phi0), r * np.sin(phi0), 0.0])
    ts = np.linspace(0.0, t, steps + 1)
    phi = phi0 + ts / r
    x = cx + r * np.cos(phi)
    y = r * np.sin(phi)
    integrand = 0.5 * (x * np.cos(phi) - y * (-np.sin(phi)))
    z = np.trapz(integrand, ts)
    return np.array([x[-1], y[-1], z])


if __name__ == "__main__":
    np.set_printoptions(precision=17)
    p = np.array([1.0, 2.0, 3.0])
    print("heis_proj_e3", repr(normal_equations_projection(heisenberg_frame(p), np.array([0.0, 0.0, 1.0]))))
    print("heis_proj_111", repr(normal_equations_projection(heisenberg_frame(p), np.array([1.0, 1.0, 1.0]))))
    print("recursion(0.01,1.1,10)", repr(recursion_iterate(0.01, 1.1, 10)))
    print("isoperimetric(0.25)", repr(isoperimetric_brute_force(0.25)), "closed form", repr(2 * np.sqrt(np.pi * 0.25)))
    print("heisenberg_left_k", repr(heisenberg_left_k()))
    print("zigzag_endpoint(0.05, 1, 1e-4)", repr(zigzag_endpoint(0.05, 1.0, 1e-4)))
    print("window_velocity(0.2, 0.1)", repr((circle_lift_point(0.3) - circle_lift_point(0.2)) / 0.1))
    for res in (9, 17, 33, 65):
        print("C_heis raw res", res, repr(grid_lipschitz(heisenberg_frame, -1, 1, res)))
    for res in (9, 17, 33, 65):
        print("C_martinet raw res", res, repr(grid_lipschitz(martinet_frame, -1, 1, res)))
