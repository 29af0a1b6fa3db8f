"""Acceptance suite: the eight quantitative checks the package certifies,
each returning a pass/fail record.  All randomness is seeded; the emitted
document excludes timings so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
import random
import time

from . import affine, characters, hessenberg
from .gkm import KModel
from .rootdata import RootDatum

RANK2_TYPES = (("A", 1), ("A", 2), ("B", 2), ("G", 2))


def _record(name, passed, detail, seconds):
    return {
        "name": name,
        "passed": bool(passed),
        "detail": detail,
        "seconds": round(seconds, 3),
    }


def criterion_1(seed=0):
    """d_lambda equals <2 rho, lambda> on every dominant lambda in a
    radius-5 window, all rank <= 2 types."""
    t0 = time.time()
    bad = []
    total = 0
    for t, r in RANK2_TYPES:
        rd = RootDatum(t, r)
        for lam in rd.lattice_points(5):
            if not rd.is_dominant(lam):
                continue
            total += 1
            two_rho_pairing = sum(rd.pair(a, lam) for a in rd.positive_roots)
            if affine.d_lambda(rd, lam) != two_rho_pairing:
                bad.append((t, r, lam))
    return _record(
        "dominant_orbit_dimension_identity",
        not bad,
        f"{total} dominant coweights checked" + (f"; failures {bad[:3]}" if bad else ""),
        time.time() - t0,
    )


def criterion_2(seed=0):
    """Per-root fiber dimensions sum to the convolution fiber dimension,
    exhaustively on a radius-3 window."""
    t0 = time.time()
    bad = []
    total = 0
    for t, r in RANK2_TYPES:
        rd = RootDatum(t, r)
        window = rd.lattice_points(3)
        doms = [lam for lam in window if rd.is_dominant(lam)]
        for lam in doms:
            for mu in window:
                total += 1
                per_root = sum(
                    affine.per_root_z_dim(rd, lam, mu, a) for a in rd.positive_roots
                )
                if per_root != affine.conv_fiber_dim(rd, lam, mu):
                    bad.append((t, r, lam, mu))
    return _record(
        "convolution_fiber_additivity",
        not bad,
        f"{total} (lambda, mu) pairs checked" + (f"; failures {bad[:3]}" if bad else ""),
        time.time() - t0,
    )


def criterion_3(seed=0):
    """Fixed-component examples: full flag variety at lambda = 0, |W| points
    in the isolated case, and the dimension-2 surface with Betti (1, 4, 1)."""
    t0 = time.time()
    msgs = []
    ok = True

    rd = RootDatum("A", 2)
    poincare = hessenberg.poincare_polynomial(rd, (0, 0))
    lengths = [0] * (len(rd.positive_roots) + 1)
    for w in rd.weyl_elements():
        lengths[len(w.word)] += 1
    if poincare != lengths:
        ok = False
        msgs.append(f"flag-variety Poincare {poincare} != {lengths}")

    for t, r in RANK2_TYPES:
        rdi = RootDatum(t, r)
        # sum of positive coroots: every positive-root pairing is >= 2
        lam = rdi.from_weight_coords(tuple(2 for _ in range(r)))
        if not hessenberg.is_isolated(rdi, lam):
            ok = False
            msgs.append(f"{t}{r}: lambda {lam} not isolated")
            continue
        datum = hessenberg.hessenberg_datum(rdi, lam)
        nw = len(rdi.weyl_elements())
        if datum.dim != 0 or datum.betti() != (nw,):
            ok = False
            msgs.append(f"{t}{r}: isolated case got dim {datum.dim}, betti {datum.betti()}")

    rd_gl = RootDatum("A", 2, lattice_mode="adjoint")
    lam = hessenberg.gl_coweight(rd_gl, (-1, 0, 1))
    datum = hessenberg.hessenberg_datum(rd_gl, lam)
    if datum.dim != 2 or datum.betti() != (1, 4, 1):
        ok = False
        msgs.append(f"blow-up surface got dim {datum.dim}, betti {datum.betti()}")

    return _record(
        "fixed_component_examples",
        ok,
        "; ".join(msgs) if msgs else "flag variety, isolated points, and the (1,4,1) surface all match",
        time.time() - t0,
    )


def criterion_4(seed=0):
    """Three multiplicity oracles agree on every dominant weight of every
    highest weight in a radius-4 window; fiber functor dimensions match."""
    t0 = time.time()
    bad = []
    total = 0
    for t, r in RANK2_TYPES:
        rd = RootDatum(t, r)
        for mu in rd.lattice_points(4):
            if not rd.is_dominant(mu):
                continue
            table = characters.character_multiplicities(rd, mu)
            freud = characters.freudenthal_multiplicities(rd, mu)
            for lam in characters.dominant_weights_below(rd, mu):
                total += 1
                a = table.get(lam, 0)
                b = characters.kostant_multiplicity(rd, mu, lam)
                c = freud.get(lam, 0)
                if not (a == b == c):
                    bad.append((t, r, mu, lam, a, b, c))
            if characters.fiber_functor_dim(rd, mu) != characters.weyl_dimension(rd, mu):
                bad.append((t, r, mu, "dim"))
    rd_adj = RootDatum("A", 2, lattice_mode="adjoint")
    theta = (1, 1)  # highest coroot in fundamental-coweight coordinates
    if characters.fiber_functor_dim(rd_adj, theta) != 8:
        bad.append(("A", 2, "adjoint-dim"))
    if characters.character_multiplicities(rd_adj, theta).get((0, 0), 0) != 2:
        bad.append(("A", 2, "adjoint-zero-weight"))
    return _record(
        "multiplicity_oracle_agreement",
        not bad,
        f"{total} (highest weight, weight) checks" + (f"; failures {bad[:3]}" if bad else ""),
        time.time() - t0,
    )


def criterion_5(seed=0):
    """Microstalk measures are monoidal (product of characters goes to
    convolution) and intertwine duality, 50 random pairs per type."""
    t0 = time.time()
    rng = random.Random(seed + 5)
    bad = []
    for t, r in RANK2_TYPES:
        rd = RootDatum(t, r)
        doms = [mu for mu in rd.lattice_points(3) if rd.is_dominant(mu)]
        chars = {mu: characters.weyl_character(rd, mu) for mu in doms}
        w0 = rd.longest_element()
        for _ in range(50):
            m1, m2 = rng.choice(doms), rng.choice(doms)
            lhs = characters.microstalk_of_poly(chars[m1] * chars[m2])
            rhs = characters.convolve_measures(
                characters.microstalk_of_poly(chars[m1]),
                characters.microstalk_of_poly(chars[m2]),
            )
            if lhs != rhs:
                bad.append((t, r, m1, m2, "monoidal"))
        for mu in doms:
            dual = tuple(-x for x in rd.weyl_act(w0, mu))
            if characters.microstalk_dims(rd, mu) != characters.character_multiplicities(rd, dual):
                bad.append((t, r, mu, "duality"))
    return _record(
        "microstalk_monoidality",
        not bad,
        "200 random pairs plus duality sweep" + (f"; failures {bad[:3]}" if bad else ""),
        time.time() - t0,
    )


def criterion_6(seed=0):
    """No separating affine root exists for strictly dominant lambda and
    dominant mu in a radius-3 window, with the complete level bound."""
    t0 = time.time()
    bad = []
    total = 0
    for t, r in RANK2_TYPES:
        rd = RootDatum(t, r)
        window = rd.lattice_points(3)
        for lam in window:
            if not rd.is_strictly_dominant(lam):
                continue
            for mu in window:
                if not rd.is_dominant(mu):
                    continue
                total += 1
                ok, witness = affine.check_no_separating_affine_root(rd, lam, mu)
                if not ok:
                    bad.append((t, r, lam, mu, witness))
    return _record(
        "no_separating_affine_root",
        not bad,
        f"{total} (lambda, mu) pairs scanned" + (f"; failures {bad[:3]}" if bad else ""),
        time.time() - t0,
    )


def criterion_7(seed=0):
    """Bimodule verification battery: rank-|W| freeness with unit transition
    determinant, the full relation battery, and parabolic invariant ranks."""
    t0 = time.time()
    msgs = []
    ok = True
    for t, r in (("A", 1), ("A", 2), ("B", 2), ("A", 3)):
        rd = RootDatum(t, r, lattice_mode="adjoint")
        model = KModel(rd)
        rep = model.verify_cc_bimodule(seed=seed)
        nw = len(model.W)
        if not rep.iso_found or rep.freeness_rank != nw:
            ok = False
            fails = [n for n, good in rep.relation_checks if not good]
            msgs.append(f"{t}{r}: iso_found={rep.iso_found} rank={rep.freeness_rank} fails={fails}")
        else:
            msgs.append(f"{t}{r}: rank {nw}, all relations pass")
    return _record(
        "bimodule_verification",
        ok,
        "; ".join(msgs),
        time.time() - t0,
    )


CRITERIA = (
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
)


def build_document(seed=0) -> bytes:
    """Canonical JSON for criteria 1-7, timings stripped: the determinism
    target."""
    records = []
    for fn in CRITERIA:
        rec = fn(seed)
        records.append({k: rec[k] for k in ("name", "passed", "detail")})
    return json.dumps({"seed": seed, "criteria": records}, sort_keys=True).encode()


def criterion_8(seed=0):
    """Repeated suite runs emit byte-identical documents within the runtime
    budget."""
    t0 = time.time()
    d1 = build_document(seed)
    d2 = build_document(seed)
    elapsed = time.time() - t0
    identical = d1 == d2
    within_budget = elapsed <= 300
    return _record(
        "determinism_and_runtime",
        identical and within_budget,
        f"documents {'identical' if identical else 'DIFFER'}; two full runs in {elapsed:.1f}s",
        elapsed,
    )


def run_all(seed=0):
    records = [fn(seed) for fn in CRITERIA]
    records.append(criterion_8(seed))
    return records
