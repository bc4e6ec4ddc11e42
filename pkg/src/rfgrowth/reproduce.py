"""End-to-end verification runners, one per headline check.

Each runner returns a plain dict: claim id, a list of named checks with
pass/fail and a human-readable detail, the overall verdict, and the
configuration that produced it.  Runners are deterministic given the
seed recorded in their config and carry no timing fields, so two runs
with the same inputs produce identical structures (criterion: warm and
cold caches must agree byte for byte).

`inconclusive` marks runs that hit a resource ceiling (catalog bound,
level cap) rather than a falsified check; callers should treat it as
"raise the budget", not "the mathematics failed".
"""

from __future__ import annotations

import random

import numpy as np

from .catalog import Catalog
from .detect import ANY, Detector, detection_floor_verify
from .errors import BudgetError, KernelBoundError
from .families import LamplighterFamily, get_family
from .gaussian import (
    STABILIZER_GENERATORS,
    GaussMat2,
    GaussInt,
    entry_growth_probe,
    fuchsian_reduction_check,
    g_level,
    gi,
    h_map,
    in_delta,
    kernel_2group_check,
    nil_detect_upper,
    ONE,
    ZERO,
)
from .growth import inequality3_check
from .magnus import depth_doubling_check, doubling_word
from .wreath import build_ap_matrix, kernel_mod_p, small_integer_kernel, wreath_word_length

CLAIM_IDS = ("claim1", "claim2", "claim3", "example1", "example2", "ineq3")


def _check(name: str, ok: bool, detail: str) -> dict:
    return {"name": name, "ok": bool(ok), "detail": detail}


def _outcome(claim: str, checks: list[dict], config: dict, inconclusive: bool = False) -> dict:
    return {
        "claim": claim,
        "passed": all(c["ok"] for c in checks) and not inconclusive,
        "inconclusive": inconclusive,
        "checks": checks,
        "config": config,
    }


# -- claim 1: iterated commutators stay nontrivial, depth doubles -------------------


def run_claim1(catalog: Catalog, detector: Detector | None = None,
               cap: int = 8, nmax: int = 3) -> dict:
    if detector is None:
        detector = Detector(catalog)
    doubling = depth_doubling_check(nmax, cap=cap)
    checks = [
        _check(
            "iterated commutators nontrivial",
            all(r.certified_nontrivial for r in doubling.reports),
            "depths %s at cap %d" % (list(doubling.depths()), cap),
        ),
        _check(
            "depth at least doubles",
            doubling.outcome == "pass",
            "outcome %s" % doubling.outcome,
        ),
    ]
    # a nilpotent quotient of class c kills everything at series depth >= c,
    # so detectors of the second word need class >= its measured depth
    u2 = doubling_word(2)
    depth2 = doubling.reports[1].depth
    free2 = get_family("free2")
    detecting: list[tuple[str, int]] = []
    for table in catalog.groups:
        cls = table.nilpotency_class()
        if cls is None:
            continue
        if any(
            free2.image(table, images, u2) != 0
            for images in detector.valid_images(free2, table)
        ):
            detecting.append((table.name, cls))
    class_ok = all(cls >= depth2 for _, cls in detecting)
    checks.append(_check(
        "nilpotent detectors have class >= depth",
        depth2 is not None and class_ok,
        "depth %s, detecting classes %s" % (depth2, sorted({c for _, c in detecting})),
    ))
    offenders = [
        (t.name, t.nilpotency_class(), t.order)
        for t in catalog.groups
        if (t.nilpotency_class() or 0) >= 2 and t.order <= 2 ** t.nilpotency_class()
    ]
    checks.append(_check(
        "class c >= 2 needs order > 2^c",
        not offenders,
        "offenders %s" % offenders if offenders else "all catalog groups conform",
    ))
    config = {"claim": "claim1", "cap": cap, "nmax": nmax, "bound": catalog.bound}
    return _outcome("claim1", checks, config)


# -- claim 2: congruence kernels, additivity, growth, norm mechanism ------------------


def _delta_generators() -> list[GaussMat2]:
    one_minus_i = gi(1, -1)
    two = gi(2)
    return [
        GaussMat2(ONE, one_minus_i, ZERO, ONE),
        GaussMat2(ONE, ZERO, one_minus_i, ONE),
        GaussMat2(ONE, two, ZERO, ONE),
        GaussMat2(ONE, ZERO, two, ONE),
        GaussMat2(gi(0, 1), ZERO, ZERO, gi(0, -1)),
        -GaussMat2.identity(),
    ]


def _random_delta_element(rng: random.Random, gens: list[GaussMat2]) -> GaussMat2:
    acc = GaussMat2.identity()
    for _ in range(rng.randint(1, 6)):
        g = rng.choice(gens)
        acc = acc * (g if rng.random() < 0.5 else g.inverse())
    return acc


def enumerate_small_delta(max_snorm: int = 2) -> list[GaussMat2]:
    """All determinant-1 matrices with entry s-norms <= max_snorm that are
    congruent to 1 mod (1-i) and projectively nontrivial."""
    values = [
        GaussInt(re, im)
        for re in range(-max_snorm, max_snorm + 1)
        for im in range(-max_snorm, max_snorm + 1)
        if abs(re) + abs(im) <= max_snorm
    ]
    ident = GaussMat2.identity()
    out = []
    for a in values:
        for d in values:
            ad = a * d
            for b in values:
                for c in values:
                    if ad - b * c != ONE:
                        continue
                    mat = GaussMat2(a, b, c, d)
                    if not in_delta(mat):
                        continue
                    if mat == ident or mat == -ident:
                        continue
                    out.append(mat)
    return out


def run_claim2(seed: int = 0, pair_trials: int = 100, probe_trials: int = 200,
               max_length: int = 6) -> dict:
    checks = []
    for k, expected in ((1, 8), (2, 256)):
        rep = kernel_2group_check(k)
        checks.append(_check(
            "level %d kernel" % k,
            rep.order == expected and rep.is_two_group and rep.within_bound,
            rep.describe(),
        ))
    rng = random.Random(seed)
    gens = _delta_generators()
    bad_pairs = 0
    for _ in range(pair_trials):
        a = _random_delta_element(rng, gens)
        b = _random_delta_element(rng, gens)
        if h_map(a * b) != h_map(a) + h_map(b):
            bad_pairs += 1
    checks.append(_check(
        "h additivity",
        bad_pairs == 0,
        "%d random pairs, %d violations" % (pair_trials, bad_pairs),
    ))
    probe_ok = True
    worst = ""
    for n in range(1, max_length + 1):
        rep = entry_growth_probe(STABILIZER_GENERATORS, n, trials=probe_trials, seed=seed + n)
        if not rep.within_bound:
            probe_ok = False
            worst = rep.describe()
    checks.append(_check(
        "entry growth <= (2*beta)^n",
        probe_ok,
        worst or "%d products per length 1..%d within bound" % (probe_trials, max_length),
    ))
    enumerated = enumerate_small_delta(2)
    mech_failures = 0
    levels = set()
    for mat in enumerated:
        try:
            rep = nil_detect_upper(mat)
            levels.add(rep.level)
        except KernelBoundError:
            mech_failures += 1
    checks.append(_check(
        "norm mechanism on enumerated matrices",
        mech_failures == 0 and levels <= {1, 2},
        "%d matrices, levels %s, %d mechanism failures"
        % (len(enumerated), sorted(levels), mech_failures),
    ))
    config = {
        "claim": "claim2", "seed": seed, "pair_trials": pair_trials,
        "probe_trials": probe_trials, "max_length": max_length,
    }
    return _outcome("claim2", checks, config)


# -- claim 3: the fixed stabilizer generators ------------------------------------------


def run_claim3() -> dict:
    rep = fuchsian_reduction_check()
    checks = [
        _check("determinants are 1", rep.dets_ok, "all four generators"),
        _check("first pair reduces trivially", rep.first_pair_trivial,
               "mod (1-i) images of the first two generators"),
        _check("third generator image", rep.x3_expected, "bits %s" % list(rep.x3_image)),
        _check("fourth generator image", rep.x4_expected, "bits %s" % list(rep.x4_image)),
        _check("image cyclic of order 3", rep.image_order == 3 and rep.image_cyclic,
               "order %d" % rep.image_order),
        _check("circle preserved", all(lam in (1, -1) for lam in rep.circle_lambdas),
               "lambdas %s" % list(rep.circle_lambdas)),
    ]
    return _outcome("claim3", checks, {"claim": "claim3"})


# -- example 1: lamplighter detection floors -------------------------------------------


def run_example1(catalog: Catalog, n: int = 3, p: int = 2,
                 detector: Detector | None = None) -> dict:
    if detector is None:
        detector = Detector(catalog)
    matrix = build_ap_matrix(n)
    candidate = kernel_mod_p(matrix, p, n)
    element = candidate.element()
    family = LamplighterFamily(p)
    m = matrix.shape[1]
    residue = (matrix @ np.array(candidate.vector, dtype=np.int64)) % p
    in_kernel = not residue.any()
    length = wreath_word_length(element)
    length_cap = 2 * m * (p + 2)
    floor = detection_floor_verify(family, element, n, catalog, detector)
    inconclusive = catalog.bound < n - 1
    checks = [
        _check("candidate in kernel mod %d" % p, in_kernel,
               "A v has residues %s" % residue.tolist()),
        _check("word length under 2m(p+2)", length < length_cap,
               "length %d < %d" % (length, length_cap)),
        _check("no quotient below %d detects" % n, not floor.violations,
               "%d homomorphisms over orders %s" % (floor.homs_checked, list(floor.orders_scanned))),
        _check("first detector at or above %d" % n, floor.floor_holds,
               floor.detection.describe()),
    ]
    config = {"claim": "example1", "n": n, "p": p, "bound": catalog.bound}
    return _outcome("example1", checks, config, inconclusive=inconclusive)


# -- example 2: integer kernel vectors with small entries ------------------------------


def run_example2(ns: tuple[int, ...] = (2, 4)) -> dict:
    checks = []
    for n in ns:
        matrix = build_ap_matrix(n)
        m = matrix.shape[1]
        try:
            candidate = small_integer_kernel(matrix, n)
        except (BudgetError, KernelBoundError) as err:
            checks.append(_check("n=%d kernel vector" % n, False, str(err)))
            continue
        vec = np.array(candidate.vector, dtype=np.int64)
        exact = not (matrix @ vec).any()
        largest = int(np.max(np.abs(vec)))
        checks.append(_check(
            "n=%d kernel vector" % n,
            exact and vec.any() and largest <= m + 2,
            "max |entry| %d <= %d, A v = 0 exact: %s" % (largest, m + 2, exact),
        ))
    return _outcome("example2", checks, {"claim": "example2", "ns": list(ns)})


# -- inequality (3) ----------------------------------------------------------------------


def run_ineq3(catalog: Catalog, nmax: int = 2, detector: Detector | None = None) -> dict:
    if detector is None:
        detector = Detector(catalog)
    family = get_family("free2")
    checks = []
    inconclusive = False
    for n in range(nmax + 1):
        row = inequality3_check(n, catalog, family, detector)
        if row.holds is None:
            inconclusive = True
            checks.append(_check("n=%d" % n, False, row.describe()))
        else:
            checks.append(_check("n=%d" % n, bool(row.holds), row.describe()))
    config = {"claim": "ineq3", "nmax": nmax, "bound": catalog.bound}
    return _outcome("ineq3", checks, config, inconclusive=inconclusive)


# -- dispatch ------------------------------------------------------------------------------


def run_claim(claim: str, catalog: Catalog | None = None,
              detector: Detector | None = None, **kwargs) -> dict:
    """Run one claim by id.  Claims that need the catalog require it."""
    if claim not in CLAIM_IDS:
        raise ValueError("unknown claim %r (expected one of %s)" % (claim, ", ".join(CLAIM_IDS)))
    if claim == "claim1":
        if catalog is None:
            raise ValueError("claim1 needs a catalog")
        return run_claim1(catalog, detector, **kwargs)
    if claim == "claim2":
        return run_claim2(**kwargs)
    if claim == "claim3":
        return run_claim3()
    if claim == "example1":
        if catalog is None:
            raise ValueError("example1 needs a catalog")
        return run_example1(catalog, detector=detector, **kwargs)
    if claim == "example2":
        return run_example2(**kwargs)
    if catalog is None:
        raise ValueError("ineq3 needs a catalog")
    return run_ineq3(catalog, detector=detector, **kwargs)
