"""Extended affine Weyl group, orbit dimensions, convolution fibers, and the
affine-root separation check.

Elements t^lambda w are pairs (translation, finite part) with the group law
(t^lam v)(t^mu w) = t^{lam + v mu} vw.  The length function is the
Iwahori-Matsumoto formula; everything is exact integer or Fraction
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rootdata import RootDatum, WeylElement


@dataclass(frozen=True)
class AffineWeylElement:
    translation: tuple[int, ...]
    finite: WeylElement


@dataclass(frozen=True)
class AffineRoot:
    """The affine function <finite_root, .> + level on the apartment."""

    finite_root: tuple[int, ...]
    level: int

    def evaluate(self, rd: RootDatum, point_weight_coords):
        return rd.pair_weight_coords(self.finite_root, point_weight_coords) + self.level


def translation_element(rd: RootDatum, lam) -> AffineWeylElement:
    return AffineWeylElement(tuple(lam), rd.identity_element())


def affine_mul(rd: RootDatum, u: AffineWeylElement, v: AffineWeylElement) -> AffineWeylElement:
    lam = tuple(
        a + b for a, b in zip(u.translation, rd.weyl_act(u.finite, v.translation))
    )
    return AffineWeylElement(lam, rd.weyl_mul(u.finite, v.finite))


def affine_inverse(rd: RootDatum, u: AffineWeylElement) -> AffineWeylElement:
    winv = rd.weyl_inverse(u.finite)
    lam = tuple(-x for x in rd.weyl_act(winv, u.translation))
    return AffineWeylElement(lam, winv)


def d_lambda(rd: RootDatum, lam) -> int:
    """Dimension of the lattice orbit indexed by lambda: sum |<alpha, lambda>|."""
    return sum(abs(rd.pair(a, lam)) for a in rd.positive_roots)


def length(rd: RootDatum, u: AffineWeylElement) -> int:
    """Iwahori-Matsumoto length of t^lambda w."""
    total = 0
    winv = rd.weyl_inverse(u.finite)
    for a in rd.positive_roots:
        p = rd.pair(a, u.translation)
        if rd.act_on_root(winv, a) in rd.positive_roots:
            total += abs(p)
        else:
            total += abs(p - 1)
    return total


def sign_character(rd: RootDatum, u: AffineWeylElement) -> int:
    return -1 if length(rd, u) % 2 else 1


def omega_elements(rd: RootDatum):
    """Length-zero elements of W-tilde, by brute force over a radius-1 window.

    Sufficient window: a length-zero element t^lam w has minuscule-type lam,
    whose lattice-basis coefficients lie in {-1, 0, 1} for all supported types.
    """
    out = []
    for lam in rd.lattice_points(1):
        for w in rd.weyl_elements():
            u = AffineWeylElement(lam, w)
            if length(rd, u) == 0:
                out.append(u)
    return out


def conv_fiber_dim(rd: RootDatum, lam, mu) -> int:
    dl, dm, ds = d_lambda(rd, lam), d_lambda(rd, mu), d_lambda(rd, tuple(a + b for a, b in zip(lam, mu)))
    num = dl + dm - ds
    assert num % 2 == 0 and num >= 0, "parity/positivity failure in fiber dimension"
    return num // 2


def per_root_z_dim(rd: RootDatum, lam, mu, alpha) -> int:
    """Per-root fiber dimension (lambda must be dominant)."""
    if not rd.is_dominant(lam):
        raise ValueError("per-root fiber dimension requires dominant lambda")
    s = tuple(a + b for a, b in zip(lam, mu))
    num = rd.pair(alpha, lam) + abs(rd.pair(alpha, mu)) - abs(rd.pair(alpha, s))
    assert num % 2 == 0 and num >= 0
    return num // 2


def standard_convolution(rd: RootDatum, lam, mu):
    """Support and fiber dimension of the convolution of two standard objects."""
    return tuple(a + b for a, b in zip(lam, mu)), conv_fiber_dim(rd, lam, mu)


def gr_fixed_points(rd: RootDatum, radius: int, d_bound: int | None = None):
    """Lattice window of fixed points on the spherical side, optionally cut by d."""
    pts = rd.lattice_points(radius)
    if d_bound is not None:
        pts = [p for p in pts if d_lambda(rd, p) <= d_bound]
    return pts


def default_level_bound(rd: RootDatum, lam, mu) -> int:
    s = tuple(a + b for a, b in zip(lam, mu))
    vals = [abs(rd.pair(a, s)) for a in rd.positive_roots]
    vals += [abs(rd.pair(a, mu)) for a in rd.positive_roots]
    return max(vals) + 2


def check_no_separating_affine_root(rd: RootDatum, lam, mu, level_bound: int | None = None):
    """True iff no affine root a has a(x) > 0, a(x + mu) < 0, a(lam + mu) >= 0,
    x the barycenter of the fundamental alcove.  Returns (ok, witness).

    The first two conditions confine the level to an interval of width
    |<alpha, mu>| + 1, so the default bound makes the scan exhaustive.
    """
    if level_bound is None:
        level_bound = default_level_bound(rd, lam, mu)
    x = rd.alcove_barycenter()
    mu_w = rd.to_weight_coords(mu)
    s_w = rd.to_weight_coords(tuple(a + b for a, b in zip(lam, mu)))
    x_mu = tuple(Fraction(a) + b for a, b in zip(x, mu_w))
    for root in rd.all_roots():
        for n in range(-level_bound, level_bound + 1):
            a = AffineRoot(root, n)
            if a.evaluate(rd, x) > 0 and a.evaluate(rd, x_mu) < 0 and a.evaluate(rd, s_w) >= 0:
                return False, a
    return True, None
