"""Floating-point cross-checks of the exact engine.

Everything runs through the quadratic parametrization of the closed upper
half-cone by the plane,

    (a, b)  ->  (h, x, y) = (-a*b/2, a^2/2, -b^2/2),

under which pairings against the cone measure become plain double
integrals over the plane (with density factor 2), evaluated here by
deterministic tensor-product quadrature.  Test functions are polynomial
times Gaussian, so every derivative needed is available in closed form.
Floats are confined to this module; nothing numeric flows back into the
symbolic side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

_AXES = ("h", "x", "y")


def moment_map(a, b):
    """Image (h, x, y) = (-a*b/2, a*a/2, -b*b/2) of the plane point (a, b).

    The closed form comes from requiring tr(M Z) = B(v, Z v)/2 against the
    three basis directions, B the symplectic form; it satisfies h^2 + xy = 0
    and x - y >= 0 identically, with equality only at the origin.  Exact on
    Fractions, vectorized on numpy arrays.
    """
    return (-a * b / 2, a * a / 2, -b * b / 2)


def _diff_poly(poly, axis):
    out = {}
    for expo, c in poly.items():
        if expo[axis]:
            dexpo = list(expo)
            dexpo[axis] -= 1
            key = tuple(dexpo)
            out[key] = out.get(key, Fraction(0)) + c * expo[axis]
    return out


def _mul_polys(p1, p2):
    out = {}
    for e1, c1 in p1.items():
        for e2, c2 in p2.items():
            key = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return out


class TestFunction:
    """Polynomial times centered Gaussian on R^3, closed under d/dh, d/dx, d/dy.

    The polynomial part has Fraction coefficients keyed by exponent triples
    for h^i x^j y^k; center and squared width are stored exactly so that
    differentiation and coordinate multiplication stay inside the class.
    Only evaluation produces floats.
    """

    __slots__ = ("poly", "center", "sigma2")
    __test__ = False          # not a pytest class, despite the name

    def __init__(self, poly, center, sigma2):
        self.poly = {tuple(e): Fraction(c) for e, c in poly.items() if c}
        self.center = tuple(Fraction(t) for t in center)
        self.sigma2 = Fraction(sigma2)
        if self.sigma2 <= 0:
            raise ValueError("width must be positive")

    @classmethod
    def gaussian(cls, center=(0, 0, 0), sigma=1, poly=None) -> "TestFunction":
        if poly is None:
            poly = {(0, 0, 0): 1}
        return cls(poly, center, Fraction(sigma) ** 2)

    def value(self, h, x, y):
        """Evaluate at floats or numpy arrays."""
        pv = 0.0
        for (i, j, k), c in self.poly.items():
            pv = pv + float(c) * h ** i * x ** j * y ** k
        ch, cx, cy = (float(t) for t in self.center)
        expo = ((h - ch) ** 2 + (x - cx) ** 2 + (y - cy) ** 2) / float(self.sigma2)
        return pv * np.exp(-expo)

    def diff(self, axis: int) -> "TestFunction":
        """Exact partial derivative along coordinate axis 0=h, 1=x, 2=y."""
        shift = [0, 0, 0]
        shift[axis] = 1
        lin = {tuple(shift): Fraction(-2) / self.sigma2,
               (0, 0, 0): 2 * self.center[axis] / self.sigma2}
        poly = _diff_poly(self.poly, axis)
        for key, c in _mul_polys(self.poly, lin).items():
            poly[key] = poly.get(key, Fraction(0)) + c
        return TestFunction(poly, self.center, self.sigma2)

    def mul_poly(self, poly) -> "TestFunction":
        return TestFunction(_mul_polys(self.poly, {tuple(e): Fraction(c) for e, c in poly.items()}),
                            self.center, self.sigma2)

    def casimir(self) -> "TestFunction":
        """(1/2) d^2/dh^2 + 2 d^2/dx dy, the invariant constant-coefficient operator."""
        return Fraction(1, 2) * self.diff(0).diff(0) + 2 * self.diff(1).diff(2)

    def __add__(self, other: "TestFunction") -> "TestFunction":
        if self.center != other.center or self.sigma2 != other.sigma2:
            raise ValueError("can only add test functions sharing one Gaussian factor")
        poly = dict(self.poly)
        for key, c in other.poly.items():
            poly[key] = poly.get(key, Fraction(0)) + c
        return TestFunction(poly, self.center, self.sigma2)

    def __rmul__(self, scalar) -> "TestFunction":
        scalar = Fraction(scalar)
        return TestFunction({e: scalar * c for e, c in self.poly.items()},
                            self.center, self.sigma2)

    __mul__ = __rmul__


def lie_derivative(z_label: str, f: TestFunction) -> TestFunction:
    """Flow derivative of f along the adjoint vector field of H, X or Y:
    L_H = -2x d/dx + 2y d/dy, L_X = 2h d/dx - y d/dh, L_Y = x d/dh - 2h d/dy."""
    fh, fx, fy = f.diff(0), f.diff(1), f.diff(2)
    if z_label == "H":
        return (-2) * fx.mul_poly({(0, 1, 0): 1}) + 2 * fy.mul_poly({(0, 0, 1): 1})
    if z_label == "X":
        return 2 * fx.mul_poly({(1, 0, 0): 1}) + (-1) * fh.mul_poly({(0, 0, 1): 1})
    if z_label == "Y":
        return fh.mul_poly({(0, 1, 0): 1}) + (-2) * fy.mul_poly({(1, 0, 0): 1})
    raise ValueError(f"unknown direction {z_label!r}; expected 'H', 'X' or 'Y'")


@dataclass(frozen=True)
class QuadratureGrid:
    """Deterministic tensor-product rule on [-R, R]^2.

    Nodes are exactly symmetric under negation (midpoint nodes are built
    as signed multiples of the step; Gauss-Legendre nodes are explicitly
    antisymmetrized), which the parity cancellations downstream rely on.
    """

    radius: float
    m: int
    rule: str = "midpoint"

    def nodes1d(self):
        if self.m <= 0:
            raise ValueError("need at least one node per axis")
        if self.rule == "midpoint":
            step = 2.0 * self.radius / self.m
            x = (np.arange(self.m) - (self.m - 1) / 2.0) * step
            w = np.full(self.m, step)
        elif self.rule == "gauss":
            x, w = np.polynomial.legendre.leggauss(self.m)
            x = (x - x[::-1]) / 2.0 * self.radius
            w = (w + w[::-1]) / 2.0 * self.radius
        else:
            raise ValueError(f"unknown rule {self.rule!r}")
        return x, w

    def nodes(self):
        """Flattened row-major (a, b, weight) arrays; order is part of the contract."""
        x, w = self.nodes1d()
        a = np.repeat(x, self.m)
        b = np.tile(x, self.m)
        weight = np.outer(w, w).ravel()
        return a, b, weight


def _pairwise_sum(values) -> float:
    """Binary-tree summation in a fixed order, for bit-reproducible totals."""
    buf = np.asarray(values, dtype=float)
    if buf.size == 0:
        return 0.0
    while buf.size > 1:
        if buf.size % 2:
            buf = np.concatenate([buf, [0.0]])
        buf = buf[0::2] + buf[1::2]
    return float(buf[0])


def _mirror_pair_values(values: np.ndarray, m: int) -> np.ndarray:
    """Collapse node values into (v, -v) pair sums (center node kept as is).

    On the symmetric grids above the mirror of flat index (i, j) is
    (m-1-i, m-1-j); summing each pair first makes odd integrands cancel
    exactly in floating point.
    """
    idx = np.arange(m * m)
    mirror = (m - 1 - idx // m) * m + (m - 1 - idx % m)
    first = idx[idx < mirror]
    out = values[first] + values[mirror[first]]
    center = idx[idx == mirror]
    if center.size:
        out = np.concatenate([out, values[center]])
    return out


def pair_delta_nplus(f: TestFunction, grid: QuadratureGrid) -> float:
    """Pairing of the upper half-cone measure against f: the approximation
    of 2 * integral of f(moment_map(a, b)) da db over the grid square.

    The caller is responsible for a radius large enough that the Gaussian
    tail is negligible; tail_bound reports a conservative estimate.
    """
    a, b, w = grid.nodes()
    h, x, y = moment_map(a, b)
    return 2.0 * _pairwise_sum(f.value(h, x, y) * w)


def tail_bound(f: TestFunction, grid: QuadratureGrid) -> float:
    """Conservative estimate of the pairing mass lost outside the grid square.

    Uses |image point| between sqrt(3)/4 r^2 and r^2/2 on the circle |v| = r
    to bound the integrand by a radial profile, then integrates the profile
    outward from the grid radius.
    """
    c_norm = math.sqrt(sum(float(t) ** 2 for t in f.center))
    s2 = float(f.sigma2)
    coeff_mass = [(abs(float(c)), sum(e)) for e, c in f.poly.items()]

    def profile(r):
        lo = math.sqrt(3.0) / 4.0 * r * r
        hi = 0.5 * r * r
        poly_bound = sum(mass * max(hi, 1.0) ** deg for mass, deg in coeff_mass)
        gap = max(0.0, lo - c_norm)
        return 2.0 * poly_bound * math.exp(-gap * gap / s2) * 2.0 * math.pi * r

    total = 0.0
    r = float(grid.radius)
    step = max(0.01 * r, 0.01)
    g = profile(r)
    while r < 1e4:
        g_next = profile(r + step)
        total += max(g, g_next) * step
        r += step
        g = g_next
        if g < 1e-300:
            break
    return 2.0 * total


def _monomials(degree: int) -> list[tuple[int, int, int]]:
    return sorted((i, j, degree - i - j)
                  for i in range(degree + 1) for j in range(degree + 1 - i))


def _multinomial(m: int, i: int, j: int, k: int) -> int:
    return math.factorial(m) // (math.factorial(i) * math.factorial(j) * math.factorial(k))


def _ad_matrix(z_label: str, degree: int) -> np.ndarray:
    """Derivation action of ad(H|X|Y) on degree-d monomials in (H, X, Y),
    using [H,X]=2X, [H,Y]=-2Y, [X,Y]=H, as a float matrix."""
    monos = _monomials(degree)
    index = {mono: t for t, mono in enumerate(monos)}
    mat = np.zeros((len(monos), len(monos)))

    def add(target, source_col, value):
        mat[index[target], source_col] += value

    for col, (al, be, ga) in enumerate(monos):
        if z_label == "H":
            add((al, be, ga), col, 2.0 * be - 2.0 * ga)
        elif z_label == "X":
            if al:
                add((al - 1, be + 1, ga), col, -2.0 * al)
            if ga:
                add((al + 1, be, ga - 1), col, 1.0 * ga)
        elif z_label == "Y":
            if al:
                add((al - 1, be, ga + 1), col, 2.0 * al)
            if be:
                add((al + 1, be - 1, ga), col, -1.0 * be)
        else:
            raise ValueError(f"unknown direction {z_label!r}")
    return mat


def seed_pairing(n: int, f: TestFunction, grid: QuadratureGrid) -> np.ndarray:
    """Vector pairing of the degree-n/2 seeded cone measure against f.

    Coordinates are over the monomial basis of degree-n/2 symmetric tensors
    in (H, X, Y): the component at H^a X^b Y^c is the multinomial coefficient
    times 2 * integral of h^a x^b y^c f at the image points.
    """
    if n % 2:
        raise ValueError("the seeded pairing requires even n")
    degree = n // 2
    monos = _monomials(degree)
    a, b, w = grid.nodes()
    h, x, y = moment_map(a, b)
    base = f.value(h, x, y) * w
    out = np.empty(len(monos))
    for t, (al, be, ga) in enumerate(monos):
        coeff = float(_multinomial(degree, al, be, ga))
        out[t] = 2.0 * _pairwise_sum(coeff * h ** al * x ** be * y ** ga * base)
    return out


def invariance_residual(n: int, z_label: str, f: TestFunction,
                        grid: QuadratureGrid) -> float:
    """Norm of  ad(Z) . P(f) - P(L_Z f)  with P the seeded pairing vector.

    Equivariance of the parametrized cone measure makes the two terms agree
    (the flow derivative transposes to its negative against the invariant
    density, which is where the relative sign comes from); the residual is
    pure quadrature error and must vanish under refinement.  Odd n has no
    seeded pairing and is rejected.
    """
    if n % 2:
        raise ValueError("odd n rejected: the equivariant seed only exists for even n")
    p_vec = seed_pairing(n, f, grid)
    q_vec = seed_pairing(n, lie_derivative(z_label, f), grid)
    action = _ad_matrix(z_label, n // 2)
    return float(np.linalg.norm(action @ p_vec - q_vec))


def odd_section_obstruction(n: int, f: TestFunction, grid: QuadratureGrid,
                            negative_control: bool = False) -> float:
    """Norm of the pairing 2 * integral of (v tensor image^{(n-1)/2}) f.

    The integrand is exactly odd under v -> -v while the image point is
    even, so on a negation-symmetric grid the (v, -v) pair sums cancel in
    floating point: the numeric shadow of the missing global section over
    the half-cone for odd n.  With negative_control=True the first factor
    v is replaced by |a| times the first basis vector, which breaks the
    parity and must produce a visibly nonzero value.
    """
    if n % 2 == 0:
        raise ValueError("even n rejected: the obstruction pairing is for odd n")
    degree = (n - 1) // 2
    monos = _monomials(degree)
    a, b, w = grid.nodes()
    h, x, y = moment_map(a, b)
    base = f.value(h, x, y) * w
    if negative_control:
        lead = (np.abs(a), np.zeros_like(b))
    else:
        lead = (a, b)
    total = 0.0
    for factor in lead:
        for (al, be, ga) in monos:
            coeff = float(_multinomial(degree, al, be, ga))
            vals = coeff * factor * h ** al * x ** be * y ** ga * base
            comp = 2.0 * _pairwise_sum(_mirror_pair_values(vals, grid.m))
            total += comp * comp
    return math.sqrt(total)


def odd_section_scale(n: int, f: TestFunction, grid: QuadratureGrid) -> float:
    """Companion magnitude for the obstruction: same pairing with absolute
    values everywhere, for forming relative residuals."""
    if n % 2 == 0:
        raise ValueError("even n rejected")
    degree = (n - 1) // 2
    monos = _monomials(degree)
    a, b, w = grid.nodes()
    h, x, y = moment_map(a, b)
    base = np.abs(f.value(h, x, y)) * w
    total = 0.0
    for factor in (np.abs(a), np.abs(b)):
        for (al, be, ga) in monos:
            coeff = float(_multinomial(degree, al, be, ga))
            comp = 2.0 * _pairwise_sum(coeff * factor
                                       * np.abs(h) ** al * x ** be * np.abs(y) ** ga * base)
            total += comp * comp
    return math.sqrt(total)
