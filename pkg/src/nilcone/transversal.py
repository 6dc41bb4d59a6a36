"""Exact delta calculus on the transversal line through the base cone point.

A distribution here is a finite sum  psi(y) = sum a_{i,k} delta^{(k)}(y) (x) v_i
supported at y = 0, with Fraction coefficients, v_i the ladder basis of the
weight-n module, and delta normalized so that pairing delta against g gives
g(0).  The whole local classification reduces to linear algebra on these
sums: psi is the restriction of a locally invariant distribution exactly
when (rho(X) + y*rho(Y)) psi = 0, and the ambient Casimir acts through its
radial form (3 + rho(H) + 2y d/dy) d/dy + (1/2) rho(Y)^2.

Operations never truncate in the delta order k; any cutoff is the caller's
search bound, not ours.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .sl2 import EndMatrix, make_irrep


class TransversalDist:
    """Sparse exact combination of delta derivatives tensor ladder vectors.

    terms maps (i, k) -> Fraction with 0 <= i <= n and k >= 0; zero
    coefficients are never stored.  Instances are treated as immutable
    values: every operation returns a fresh one.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("n must be a natural number")
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, k), coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            if not (0 <= i <= n) or k < 0:
                raise ValueError(f"term ({i},{k}) out of range for n={n}")
            clean[(i, k)] = coeff
        self.n = n
        self.terms = clean

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, TransversalDist)
                and self.n == other.n and self.terms == other.terms)

    def __add__(self, other: "TransversalDist") -> "TransversalDist":
        self._check(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return TransversalDist(self.n, out)

    def __sub__(self, other: "TransversalDist") -> "TransversalDist":
        return self + (-other)

    def __neg__(self) -> "TransversalDist":
        return TransversalDist(self.n, {key: -c for key, c in self.terms.items()})

    def __rmul__(self, scalar) -> "TransversalDist":
        scalar = Fraction(scalar)
        return TransversalDist(self.n, {key: scalar * c for key, c in self.terms.items()})

    __mul__ = __rmul__

    def __repr__(self) -> str:
        inner = ", ".join(f"({i},{k}): {c}" for (i, k), c in sorted(self.terms.items()))
        return f"TransversalDist(n={self.n}, {{{inner}}})"

    def coefficient(self, i: int, k: int) -> Fraction:
        return self.terms.get((i, k), Fraction(0))

    def delta_order(self):
        """Highest stored delta derivative order; -inf for the zero distribution."""
        return max((k for _, k in self.terms), default=-math.inf)

    def _check(self, other: "TransversalDist") -> None:
        if self.n != other.n:
            raise ValueError(f"mixing distributions for n={self.n} and n={other.n}")

    # -- serialization: structured record with "p/q" coefficient strings --

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"i": i, "k": k, "coeff": str(c)}
                      for (i, k), c in sorted(self.terms.items())],
        }

    @classmethod
    def from_record(cls, record: dict) -> "TransversalDist":
        terms = {(t["i"], t["k"]): Fraction(t["coeff"]) for t in record["terms"]}
        return cls(record["n"], terms)

    def to_json(self) -> str:
        return json.dumps(self.to_record(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "TransversalDist":
        return cls.from_record(json.loads(text))


def zero(n: int) -> TransversalDist:
    return TransversalDist(n, {})


def delta_seed(n: int) -> TransversalDist:
    """delta^0 tensor v_n: the transversal restriction of the cone measure
    weighted by the degree-n/2 equivariant seed function."""
    return TransversalDist(n, {(n, 0): 1})


def d_dy(psi: TransversalDist) -> TransversalDist:
    """Derivative in the transversal coordinate: shifts every k up by one."""
    return TransversalDist(psi.n, {(i, k + 1): c for (i, k), c in psi.terms.items()})


def mul_y(psi: TransversalDist) -> TransversalDist:
    """Multiplication by y:  y*delta^0 = 0  and  y*delta^k = -k*delta^{k-1}."""
    out: dict[tuple[int, int], Fraction] = {}
    for (i, k), c in psi.terms.items():
        if k == 0:
            continue
        key = (i, k - 1)
        out[key] = out.get(key, Fraction(0)) - k * c
    return TransversalDist(psi.n, out)


def apply_endo(endo: EndMatrix, psi: TransversalDist) -> TransversalDist:
    """Act on the module index by an endomorphism, leaving delta data alone."""
    if endo.n != psi.n:
        raise ValueError(f"dimension mismatch: matrix n={endo.n}, distribution n={psi.n}")
    out: dict[tuple[int, int], Fraction] = {}
    for (i, k), c in psi.terms.items():
        for j in range(psi.n + 1):
            e = endo.rows[j][i]
            if e:
                key = (j, k)
                out[key] = out.get(key, Fraction(0)) + e * c
    return TransversalDist(psi.n, out)


def equivariance_defect(psi: TransversalDist) -> TransversalDist:
    """(rho(X) + y*rho(Y)) psi.  Zero exactly when psi is the transversal
    restriction of a locally invariant distribution."""
    rep = make_irrep(psi.n)
    return apply_endo(rep.rho_x, psi) + mul_y(apply_endo(rep.rho_y, psi))


def radial_casimir(psi: TransversalDist) -> TransversalDist:
    """Radial form of the Casimir operator on the transversal:
    (3 + rho(H) + 2y d/dy) d/dy + (1/2) rho(Y)^2, computed exactly.

    On the v_n component it sends a*delta^k to (n-2k-1)*a*delta^{k+1} plus
    terms in lower ladder vectors; that leading coefficient drives the whole
    classification.
    """
    rep = make_irrep(psi.n)
    d1 = d_dy(psi)
    out = 3 * d1 + apply_endo(rep.rho_h, d1) + 2 * mul_y(d_dy(d1))
    return out + Fraction(1, 2) * apply_endo(rep.rho_y * rep.rho_y, psi)


def radial_mn(psi: TransversalDist) -> TransversalDist:
    """Radial form of the mixed equivariant operator
    rho(X) (d/dY) + rho(Y) (d/dX) + (1/2) rho(H) (d/dH) on the transversal:

        (rho(X) + y*rho(Y)) d/dy + rho(Y).

    The reduction substitutes the invariance relations for the flow
    derivatives, so it is only valid on locally invariant input; anything
    with a nonzero equivariance defect is rejected.
    """
    if equivariance_defect(psi):
        raise ValueError("radial_mn requires a locally invariant distribution")
    rep = make_irrep(psi.n)
    d1 = d_dy(psi)
    return apply_endo(rep.rho_x, d1) + mul_y(apply_endo(rep.rho_y, d1)) + apply_endo(rep.rho_y, psi)
