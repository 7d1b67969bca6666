"""Counted property suites shared by the property tests and the acceptance run.

Each function draws its own samples from the given generator and returns a
list of human-readable violations; an empty list means every sample passed.
"""

from __future__ import annotations

import itertools

import numpy as np

import oracles
from alo_ipcm import (
    SCALES,
    AloGroup,
    DomainError,
    GInterval,
    idistance,
    identity_interval,
    imul,
    inorm,
    interval_equal,
    ipcm_consistency_index,
    ipcm_degenerates_to_pcm,
    ipcm_indeterminacy_index,
    ipcm_is_approx_consistent,
    ipcm_is_full_consistent,
    ipcm_is_liu_consistent,
    ipcm_is_reciprocal,
    ipcm_lr,
    ipcm_transport,
    is_point,
    isomorphism,
    pcm_consistency_index,
    pcm_is_consistent,
    pcm_transport,
    recip_interval,
)
from alo_ipcm.generators import random_ipcm

TOL = 1e-9
SPREAD = 5.0
IPCM_KINDS = ("random", "full", "liu", "approx", "point", "point_consistent")


def _element(g: AloGroup, t: float):
    return g.element(g.from_additive(float(t)))


def _coords(rng: np.random.Generator, k: int) -> list[float]:
    # mostly uniform, with repeats and the identity mixed in so the
    # "equality iff" clauses are exercised from both sides
    out = []
    for _ in range(k):
        r = rng.random()
        if r < 0.1:
            out.append(0.0)
        elif r < 0.2 and out:
            out.append(out[-1])
        else:
            out.append(float(rng.uniform(-SPREAD, SPREAD)))
    return out


def _interval(g: AloGroup, rng: np.random.Generator) -> GInterval:
    a, b = _coords(rng, 2)
    lo, hi = min(a, b), max(a, b)
    return GInterval(_element(g, lo), _element(g, hi))


def group_axiom_violations(g: AloGroup, rng: np.random.Generator, samples: int = 1000) -> list[str]:
    """Abelian group laws, translation-invariant order, roots, norm and distance."""
    bad: list[str] = []
    e = g.identity

    def check(ok: bool, what: str, *args) -> None:
        if not ok:
            bad.append(f"{g.name}: {what} at {args}")

    for _ in range(samples):
        a, b, c = (_element(g, t) for t in _coords(rng, 3))
        try:
            ab = g.op(a, b)
        except DomainError:
            bad.append(f"{g.name}: closure at {(a, b)}")
            continue
        check(g.equal(ab, g.op(b, a), TOL), "commutativity", a, b)
        check(g.equal(g.op(ab, c), g.op(a, g.op(b, c)), TOL), "associativity", a, b, c)
        check(g.equal(g.op(a, e), a, TOL), "identity", a)
        check(g.equal(g.op(a, g.inv(a)), e, TOL), "inverse", a)
        if g.lt(a, b, TOL):
            check(g.le(g.op(a, c), g.op(b, c), TOL), "order invariance", a, b, c)
        n = int(rng.integers(1, 9))
        check(g.equal(g.power(g.root(a, n), n), a, TOL), "root", a, n)

        # norm
        na = g.norm(a)
        check(g.equal(na, g.norm(g.inv(a)), TOL), "norm symmetry", a)
        check(g.le(a, na, TOL), "a <= norm", a)
        check(g.le(e, na, TOL), "norm >= e", a)
        check(g.equal(na, e, TOL) == g.equal(a, e, TOL), "norm = e iff a = e", a)
        check(g.le(g.norm(ab), g.op(na, g.norm(b)), TOL), "norm triangle", a, b)

        # distance
        dab = g.distance(a, b)
        check(g.le(e, dab, TOL), "distance >= e", a, b)
        check(g.equal(dab, e, TOL) == g.equal(a, b, TOL), "distance = e iff equal", a, b)
        check(g.equal(dab, g.distance(b, a), TOL), "distance symmetry", a, b)
        check(g.le(dab, g.op(g.distance(a, c), g.distance(c, b)), TOL), "distance triangle", a, b, c)
    return bad


def interval_axiom_violations(g: AloGroup, rng: np.random.Generator, samples: int = 1000) -> list[str]:
    """Interval norm clauses and interval distance axioms."""
    bad: list[str] = []
    e = g.identity
    E = identity_interval(g)

    def check(ok: bool, what: str, *args) -> None:
        if not ok:
            bad.append(f"{g.name}: {what} at {args}")

    for _ in range(samples):
        a, b, c = (_interval(g, rng) for _ in range(3))
        na = inorm(a)
        check(g.equal(na, inorm(recip_interval(a)), TOL), "norm of reciprocal", a)
        check(g.le(a.lo, na, TOL) and g.le(a.hi, na, TOL), "endpoints <= norm", a)
        check(g.le(e, na, TOL), "norm >= e", a)
        check(g.equal(na, e, TOL) == interval_equal(a, E, TOL), "norm = e iff [e, e]", a)
        check(g.le(inorm(imul(a, b)), g.op(na, inorm(b)), TOL), "norm triangle", a, b)

        dab = idistance(a, b)
        check(g.le(e, dab, TOL), "distance >= e", a, b)
        check(g.equal(dab, e, TOL) == interval_equal(a, b, TOL), "distance = e iff equal", a, b)
        check(g.equal(dab, idistance(b, a), TOL), "distance symmetry", a, b)
        check(g.le(dab, g.op(idistance(a, c), idistance(c, b)), TOL), "distance triangle", a, b, c)

        # singletons embed the group
        pa, pb = GInterval(a.lo, a.lo), GInterval(b.lo, b.lo)
        prod = imul(pa, pb)
        check(is_point(prod, TOL) and g.equal(prod.lo, g.op(a.lo, b.lo), TOL), "point product", a, b)
        if g.lt(a.lo, b.lo, TOL):
            check(g.lt(pa.lo, pb.lo, TOL), "point order", a, b)
    return bad


def grid_image_violations(g: AloGroup, rng: np.random.Generator, pairs: int = 500, points: int = 21) -> list[str]:
    """Closed-form interval product against a dense sample of the set image."""
    op, to_add, from_add = oracles.RAW[g.name]
    bad: list[str] = []
    for _ in range(pairs):
        a, b = _interval(g, rng), _interval(g, rng)
        r = imul(a, b)
        image = [to_add(v) for v in oracles.image_grid(op, a.to_list(), b.to_list(), to_add, from_add, points)]
        lo, hi = to_add(float(r.lo)), to_add(float(r.hi))
        if min(image) < lo - TOL or max(image) > hi + TOL:
            bad.append(f"{g.name}: image of {a} * {b} escapes {r}")
        if abs(min(image) - lo) > TOL or abs(max(image) - hi) > TOL:
            bad.append(f"{g.name}: image of {a} * {b} does not attain {r}")
    return bad


def _additive_coords(A) -> list[list[tuple[float, float]]]:
    g = A.group
    return [[(g.coordinate(iv.lo), g.coordinate(iv.hi)) for iv in row] for row in A.rows]


def inclusion_chain_violations(g: AloGroup, rng: np.random.Generator, samples: int = 200) -> tuple[list[str], dict]:
    """Liu implies approximate implies full, cross-checked against brute force.

    Also returns how often each verdict held, so callers can see the chain
    was exercised and not satisfied vacuously.
    """
    bad: list[str] = []
    counts = {"liu": 0, "approx": 0, "full": 0}
    for s in range(samples):
        kind = IPCM_KINDS[s % len(IPCM_KINDS)]
        A = random_ipcm(g, int(rng.integers(3, 6)), rng, kind=kind)
        if not ipcm_is_reciprocal(A, TOL):
            bad.append(f"{g.name}: generator produced a non-reciprocal {kind} matrix")
            continue
        liu = ipcm_is_liu_consistent(A, TOL)
        approx, witness = ipcm_is_approx_consistent(A, TOL)
        full = ipcm_is_full_consistent(A, TOL)
        counts["liu"] += liu
        counts["approx"] += approx
        counts["full"] += full
        if liu and not approx:
            bad.append(f"{g.name}: Liu but not approximately consistent ({kind})")
        if approx and not full:
            bad.append(f"{g.name}: approximately but not fully consistent ({kind})")
        C = _additive_coords(A)
        # the loose tolerance absorbs rounding from the round trip through coordinates
        if witness != oracles.approx_witness_additive(C, 1e-7):
            bad.append(f"{g.name}: witness {witness} disagrees with brute force ({kind})")
        if full != oracles.full_consistent_additive(C, 1e-7):
            bad.append(f"{g.name}: full verdict disagrees with brute force ({kind})")
    return bad, counts


def _check_transport(bad: list[str], label: str, A) -> None:
    for target in SCALES.values():
        iso = isomorphism(A.group, target)
        B = ipcm_transport(A, iso)
        h = target
        if ipcm_is_full_consistent(A, TOL) != ipcm_is_full_consistent(B, TOL):
            bad.append(f"{label} -> {h.name}: full-consistency verdict changed")
        if ipcm_is_reciprocal(A, TOL) != ipcm_is_reciprocal(B, TOL):
            bad.append(f"{label} -> {h.name}: reciprocity verdict changed")
        if not ipcm_is_reciprocal(A, TOL):
            continue
        if not h.equal(iso(ipcm_consistency_index(A, TOL)), ipcm_consistency_index(B, TOL), TOL):
            bad.append(f"{label} -> {h.name}: consistency index does not commute")
        if not h.equal(iso(ipcm_indeterminacy_index(A, TOL)), ipcm_indeterminacy_index(B, TOL), TOL):
            bad.append(f"{label} -> {h.name}: indeterminacy index does not commute")
        for P in ipcm_lr(A, tol=TOL):
            if not h.equal(iso(pcm_consistency_index(P, TOL)), pcm_consistency_index(pcm_transport(P, iso), TOL), TOL):
                bad.append(f"{label} -> {h.name}: PCM index of a bound matrix does not commute")


def transport_violations(fixtures: dict) -> list[str]:
    """Index transport identities on every named matrix, onto every scale."""
    bad: list[str] = []
    for label, A in fixtures.items():
        _check_transport(bad, label, A)
    return bad


def degeneration_violations(g: AloGroup, rng: np.random.Generator, n: int, samples: int) -> tuple[list[str], int]:
    """Degenerates to a consistent PCM iff every relabelling has consistent bounds.

    Every one of the n! permutations is checked for every sample.  Returns
    the violations and the number of samples on which both sides held.
    """
    bad: list[str] = []
    positives = 0
    perms = list(itertools.permutations(range(n)))
    for s in range(samples):
        kind = IPCM_KINDS[s % len(IPCM_KINDS)]
        A = random_ipcm(g, n, rng, kind=kind)
        P = ipcm_degenerates_to_pcm(A, TOL)
        lhs = P is not None and pcm_is_consistent(P, TOL)
        rhs = all(pcm_is_consistent(M, TOL) for sigma in perms for M in ipcm_lr(A, sigma, TOL))
        positives += lhs and rhs
        if lhs != rhs:
            bad.append(f"{g.name}: n={n} {kind} degenerate-consistent={lhs} all-bounds-consistent={rhs}")
    return bad, positives
