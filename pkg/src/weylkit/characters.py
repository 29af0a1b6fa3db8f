"""Group algebra Z[Lambda] and weight-multiplicity oracles.

LaurentPoly is the group algebra of the coweight lattice: finitely supported
integer functions on Lambda with convolution product.  Exponents are lattice
coordinate tuples as produced by RootDatum.  All arithmetic is exact; division
either succeeds exactly or raises.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .rootdata import RootDatum


class ExactDivisionError(ArithmeticError):
    pass


class LaurentPoly:
    """Finitely supported map exponent-tuple -> integer coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[tuple(e)] = int(c)

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({tuple(exp): coeff})

    @classmethod
    def one(cls, rank):
        return cls({(0,) * rank: 1})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def is_unit(self):
        """True iff this is +-(a single monomial), i.e. a unit of Z[Lambda]."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def copy(self):
        return LaurentPoly(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            n = out.get(e, 0) + c
            if n:
                out[e] = n
            else:
                out.pop(e, None)
        r = LaurentPoly()
        r.terms = out
        return r

    def __neg__(self):
        r = LaurentPoly()
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            r = LaurentPoly()
            if other:
                r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                n = out.get(e, 0) + c1 * c2
                if n:
                    out[e] = n
                else:
                    out.pop(e, None)
        r = LaurentPoly()
        r.terms = out
        return r

    __rmul__ = __mul__

    def apply_exponent_map(self, fn):
        """Transform every exponent by fn (e.g. a Weyl action on Lambda)."""
        out = {}
        for e, c in self.terms.items():
            e2 = tuple(fn(e))
            out[e2] = out.get(e2, 0) + c
        return LaurentPoly(out)

    def coefficient(self, exp):
        return self.terms.get(tuple(exp), 0)

    def eval_at_one(self):
        return sum(self.terms.values())

    def support(self):
        return sorted(self.terms)

    def sorted_items(self):
        return sorted(self.terms.items())

    def _leading(self):
        e = max(self.terms)
        return e, self.terms[e]

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self/divisor in Z[Lambda]; raises if not divisible.

        Lex order on exponent tuples is a translation-invariant total order, so
        when self = q*divisor the reduction strips the leading term of q each
        step.  A Newton-polytope box bound detects non-divisibility instead of
        looping.
        """
        if divisor.is_zero():
            raise ExactDivisionError("division by zero")
        if self.is_zero():
            return LaurentPoly()
        rank = len(next(iter(self.terms)))
        lo_f = [min(e[i] for e in self.terms) for i in range(rank)]
        hi_f = [max(e[i] for e in self.terms) for i in range(rank)]
        lo_g = [min(e[i] for e in divisor.terms) for i in range(rank)]
        hi_g = [max(e[i] for e in divisor.terms) for i in range(rank)]
        de, dc = divisor._leading()
        rem = self.copy()
        q = {}
        while not rem.is_zero():
            re, rc = rem._leading()
            if rc % dc:
                raise ExactDivisionError("leading coefficient does not divide")
            qe = tuple(a - b for a, b in zip(re, de))
            for i in range(rank):
                if not (lo_f[i] - hi_g[i] <= qe[i] <= hi_f[i] - lo_g[i]):
                    raise ExactDivisionError("quotient support escapes bound")
            qc = rc // dc
            q[qe] = q.get(qe, 0) + qc
            rem = rem - LaurentPoly.monomial(qe, qc) * divisor
        return LaurentPoly(q)

    def divisible_by(self, divisor: "LaurentPoly") -> bool:
        try:
            self.divide_exact(divisor)
            return True
        except ExactDivisionError:
            return False

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly(0)"
        parts = []
        for e, c in self.sorted_items():
            parts.append(f"{c}*e{list(e)}")
        return "LaurentPoly(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# Weight multiplicities of irreducible modules of the dual group.
#
# Dominant coweights of G index irreducibles of the dual group; the roles of
# roots and coroots swap, so the "rho" of the dual group is the all-ones
# vector in fundamental-coweight coordinates and its pairings are root
# heights.  rho itself may lie outside the chosen lattice, so all formulas
# are used in their rho-shifted form (exponents like w(mu + rho) - rho stay
# in the lattice).
# ---------------------------------------------------------------------------


def _require_dominant(rd, mu):
    if not rd.is_dominant(mu):
        raise ValueError(f"{mu} is not dominant")


def _rho_shift(rd, w):
    """w(rho) - rho as a lattice vector (rho of the dual group)."""
    ones = (1,) * rd.rank
    shifted = rd.weyl_act_weight_coords(w, ones)
    return rd.from_weight_coords(tuple(a - b for a, b in zip(shifted, ones)))


def _positive_coroots(rd):
    out = {}
    for w in rd.weyl_elements():
        for i in range(rd.rank):
            simple = tuple(1 if j == i else 0 for j in range(rd.rank))
            root = rd.act_on_root(w, simple)
            if root in rd.positive_roots and root not in out:
                out[root] = rd.weyl_act(w, rd.coroot(i))
    assert len(out) == len(rd.positive_roots)
    return tuple(out[r] for r in rd.positive_roots)


def weyl_denominator(rd) -> LaurentPoly:
    """sum_w sgn(w) e^{w rho - rho} = prod over positive coroots (1 - e^{-a_check})."""
    out = LaurentPoly.zero()
    for w in rd.weyl_elements():
        sgn = -1 if len(w.word) % 2 else 1
        out = out + LaurentPoly.monomial(_rho_shift(rd, w), sgn)
    return out


def weyl_character(rd, mu) -> LaurentPoly:
    """Character of the irreducible dual-group module with highest weight mu,
    by exact division of the shifted alternating sums."""
    _require_dominant(rd, mu)
    num = LaurentPoly.zero()
    for w in rd.weyl_elements():
        sgn = -1 if len(w.word) % 2 else 1
        exp = tuple(a + b for a, b in zip(rd.weyl_act(w, mu), _rho_shift(rd, w)))
        num = num + LaurentPoly.monomial(exp, sgn)
    return num.divide_exact(weyl_denominator(rd))


def weyl_dimension(rd, mu) -> int:
    """Weyl dimension formula; pairings with rho are root heights."""
    _require_dominant(rd, mu)
    d = Fraction(1)
    for a in rd.positive_roots:
        h = sum(a)
        d *= Fraction(rd.pair(a, mu) + h, h)
    assert d.denominator == 1
    return int(d)


def _height_functional(rd, v) -> int:
    """<2 rho_G, v>: positive on nonzero nonnegative coroot combinations."""
    return rd.pair(rd.two_rho, v)


def kostant_partition(rd, v, _memo=None) -> int:
    """Number of ways to write v as a nonnegative integer combination of
    positive coroots (brute force with height pruning)."""
    coroots = _positive_coroots(rd)

    def rec(vec, i, memo):
        if all(x == 0 for x in vec):
            return 1
        if i == len(coroots):
            return 0
        h = _height_functional(rd, vec)
        if h <= 0:
            return 0
        key = (vec, i)
        if key in memo:
            return memo[key]
        c = coroots[i]
        total = 0
        cur = vec
        while True:
            total += rec(cur, i + 1, memo)
            cur = tuple(a - b for a, b in zip(cur, c))
            if _height_functional(rd, cur) < 0:
                break
        memo[key] = total
        return total

    memo = _memo if _memo is not None else {}
    return rec(tuple(v), 0, memo)


def kostant_multiplicity(rd, mu, lam) -> int:
    """Alternating sum over W of partition counts of w(mu+rho) - (lam+rho)."""
    _require_dominant(rd, mu)
    memo = {}
    total = 0
    for w in rd.weyl_elements():
        sgn = -1 if len(w.word) % 2 else 1
        arg = tuple(
            a + b - c
            for a, b, c in zip(rd.weyl_act(w, mu), _rho_shift(rd, w), lam)
        )
        total += sgn * kostant_partition(rd, arg, memo)
    return total


def _inner(rd, x, y) -> int:
    """W-invariant form sum_{a>0} <a,x><a,y> on the coweight lattice."""
    return sum(rd.pair(a, x) * rd.pair(a, y) for a in rd.positive_roots)


def _inner_rho(rd, x) -> int:
    """(x, rho) under the same form: pairings with rho are heights."""
    return sum(rd.pair(a, x) * sum(a) for a in rd.positive_roots)


def dominant_weights_below(rd, mu):
    """Dominant lattice points lam with mu - lam a nonnegative combination of
    simple coroots (exactly the dominant weights of the mu-irreducible)."""
    simple_cr = [rd.coroot(i) for i in range(rd.rank)]
    hmu = _height_functional(rd, mu)
    bounds = [hmu // _height_functional(rd, c) + 1 for c in simple_cr]
    out = []
    for ks in itertools.product(*[range(b + 1) for b in bounds]):
        lam = tuple(
            m - sum(k * c[i] for k, c in zip(ks, simple_cr))
            for i, m in enumerate(mu)
        )
        if rd.is_dominant(lam):
            out.append(lam)
    return sorted(set(out), key=lambda v: (_height_functional(rd, tuple(m - x for m, x in zip(mu, v))), v))


def dominant_representative(rd, lam):
    cur = tuple(lam)
    while True:
        for i in range(rd.rank):
            simple = tuple(1 if j == i else 0 for j in range(rd.rank))
            if rd.pair(simple, cur) < 0:
                cur = rd.weyl_act(rd.simple_reflection(i), cur)
                break
        else:
            return cur


def freudenthal_multiplicities(rd, mu):
    """All dominant weight multiplicities of the mu-irreducible by the
    Freudenthal recursion, outward from the highest weight."""
    _require_dominant(rd, mu)
    doms = dominant_weights_below(rd, mu)
    dom_set = set(doms)
    coroots = _positive_coroots(rd)
    mults = {tuple(mu): 1}

    def mult_of(v):
        rep = dominant_representative(rd, v)
        return mults.get(rep, 0) if rep in dom_set else 0

    c_mu = _inner(rd, mu, mu) + 2 * _inner_rho(rd, mu)
    for lam in doms:
        if lam == tuple(mu):
            continue
        acc = 0
        for cr in coroots:
            k = 1
            while True:
                v = tuple(a + k * b for a, b in zip(lam, cr))
                if _height_functional(rd, tuple(m - x for m, x in zip(mu, v))) < 0:
                    break
                m = mult_of(v)
                if m:
                    acc += m * _inner(rd, v, cr)
                k += 1
        den = c_mu - _inner(rd, lam, lam) - 2 * _inner_rho(rd, lam)
        assert den > 0, "Freudenthal denominator must be positive below mu"
        assert (2 * acc) % den == 0
        mults[lam] = (2 * acc) // den
    return mults


def freudenthal_multiplicity(rd, mu, lam) -> int:
    _require_dominant(rd, mu)
    rep = dominant_representative(rd, lam)
    table = freudenthal_multiplicities(rd, mu)
    return table.get(rep, 0)


def character_multiplicities(rd, mu):
    """Full weight diagram {lam: mult} from the Weyl character oracle."""
    return {e: c for e, c in weyl_character(rd, mu).terms.items()}


def microstalk_dims(rd, mu):
    """lam -> mult(-lam): the inversion composed with restriction."""
    return {tuple(-x for x in e): c for e, c in character_multiplicities(rd, mu).items()}


def fiber_functor_dim(rd, mu) -> int:
    return sum(microstalk_dims(rd, mu).values())


def microstalk_of_poly(ch: LaurentPoly):
    """Microstalk measure of an arbitrary character-ring element."""
    return {tuple(-x for x in e): c for e, c in ch.terms.items()}


def convolve_measures(m1: dict, m2: dict) -> dict:
    out = {}
    for e1, c1 in m1.items():
        for e2, c2 in m2.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}
