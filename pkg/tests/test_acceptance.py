"""Acceptance criteria 1-11, each at its stated sample size and time limit.

Every test records one PASS/FAIL line (shown in the terminal summary) before
asserting, so a failing criterion is still reported.
"""
import time
from itertools import combinations

from linkgeom.constructions import (ProductGrid, cylinder_grid, hexagon_helix6, k4n_grid_r4,
                                    moment_curve, product_hypergraph, rational_helix,
                                    simplex_plus_interior, torus_cycle, torus_k3n)
from linkgeom.errors import DegenerateInput
from linkgeom.kernel import Configuration, derive_seed, random_configuration
from linkgeom.linking import below_sides_count, project_from_extreme, triangles_linked
from linkgeom.partitions import (hulls_common_point, radon_partition, stirling2,
                                 tverberg_counterexample, tverberg_partition, tverberg_search)
from linkgeom.realizability import classify_pair, is_embedded, is_linear_realization
from linkgeom.simplex import (BrokenLine, TwoCycle, bodies_crossings_4d, broken_lines_crossings,
                              line_body_crossings, tetrahedron_surface)
from linkgeom.verifiers import (Verdict, verify_cgs, verify_plane_intersection, verify_product,
                                verify_sachs, verify_stat_il, verify_unlinking_r3, verify_vkf)

import oracles

SEED = 20261016


def configs(n, d, count, stream):
    return [random_configuration(n, d, derive_seed(SEED + stream, i)) for i in range(count)]


def campaign(verifier, cfgs):
    reps = [verifier(c) for c in cfgs]
    nondeg = [r for r in reps if r.verdict is not Verdict.DEGENERATE]
    ok = sum(r.verdict is Verdict.CONFIRMED for r in nondeg)
    return reps, nondeg, ok


def test_criterion_01_plane_parity(criterion):
    start = time.perf_counter()
    reps, nondeg, ok = campaign(verify_plane_intersection, configs(5, 2, 500, 1))
    pent = verify_plane_intersection(Configuration.from_points([(2, 0), (1, 2), (-1, 2), (-2, 0), (0, -2)]))
    oracle_pent = oracles.count_disjoint_crossings([(2, 0), (1, 2), (-1, 2), (-2, 0), (0, -2)], 1)
    elapsed = time.perf_counter() - start
    passed = ok == len(nondeg) and len(nondeg) > 0 and pent.count == 5 == oracle_pent and elapsed < 5
    criterion(1, passed, f"plane parity {ok}/{len(nondeg)} odd, convex count {pent.count}, {elapsed:.1f}s")
    assert passed


def test_criterion_02_cgs(criterion):
    start = time.perf_counter()
    reps, nondeg, ok = campaign(verify_cgs, configs(6, 3, 500, 2))
    helix = verify_cgs(hexagon_helix6())
    has_pair = ((0, 2, 4), (1, 3, 5)) in helix.witnesses
    elapsed = time.perf_counter() - start
    passed = ok == len(nondeg) == 500 and has_pair and elapsed < 20
    criterion(2, passed, f"CGS {ok}/{len(nondeg)} odd, hexagon-helix pair A1A3A5/A2A4A6 "
                         f"{'found' if has_pair else 'missing'}, {elapsed:.1f}s")
    assert passed


def test_criterion_03_vkf(criterion):
    start = time.perf_counter()
    reps, nondeg, ok = campaign(verify_vkf, configs(7, 4, 200, 3))
    moment = verify_vkf(moment_curve(7, 4))
    pinned = oracles.count_disjoint_crossings(moment_curve(7, 4).points, 2)
    elapsed = time.perf_counter() - start
    passed = ok == len(nondeg) == 200 and moment.count == pinned == 7 and elapsed < 60
    criterion(3, passed, f"vKF {ok}/{len(nondeg)} odd, moment curve count {moment.count} "
                         f"(oracle {pinned}), {elapsed:.1f}s")
    assert passed


def test_criterion_04_stat_il(criterion):
    start = time.perf_counter()
    dedicated = {2: verify_plane_intersection, 3: verify_cgs, 4: verify_vkf}
    confirmed, total, mismatches = 0, 0, 0
    for n in range(1, 7):
        for cfg in configs(n + 3, n, 100, 40 + n):
            rep = verify_stat_il(cfg)
            total += 1
            confirmed += rep.verdict is Verdict.CONFIRMED
            if n in dedicated:
                other = dedicated[n](cfg)
                mismatches += (other.count, other.verdict) != (rep.count, rep.verdict)
    elapsed = time.perf_counter() - start
    passed = confirmed == total == 600 and mismatches == 0 and elapsed < 300
    criterion(4, passed, f"stat-il {confirmed}/{total} confirmed for n=1..6, "
                         f"{mismatches} mismatches with n=2,3,4 verifiers, {elapsed:.1f}s")
    assert passed


def test_criterion_05_products(criterion):
    start = time.perf_counter()
    found = {}
    for (m, n, d), count, stream in (((5, 3, 3), 300, 51), ((4, 4, 3), 300, 52), ((5, 5, 4), 200, 53)):
        hits = 0
        for cfg in configs(m * n, d, count, stream):
            rep = verify_product(ProductGrid(m, n, cfg))
            hits += rep.verdict is Verdict.CONFIRMED and rep.count >= 1
        found[(m, n, d)] = (hits, count)
    elapsed = time.perf_counter() - start
    passed = all(h == c for h, c in found.values())
    detail = ", ".join(f"({m},{n}) in R^{d}: {h}/{c}" for (m, n, d), (h, c) in found.items())
    criterion(5, passed, f"intersecting disjoint triangles found {detail}, {elapsed:.1f}s")
    assert passed


def test_criterion_06_constructions(criterion):
    start = time.perf_counter()
    cyl = all(is_embedded(g.config, g.triangles)[0] for g in (cylinder_grid(n) for n in range(2, 9)))
    torus = torus_k3n(4)
    torus_ok = torus.config.field == "quad_sqrt3" and \
        is_linear_realization(product_hypergraph(3, 4), torus.config)[0]
    k4n = all(is_embedded(g.config, g.triangles)[0] for g in (k4n_grid_r4(n) for n in range(2, 7)))
    helix = verify_unlinking_r3(rational_helix(6))
    helix_ok = helix.verdict is Verdict.CONFIRMED and all(k % 2 == 0 for _, k in helix.details["per_segment"])
    elapsed = time.perf_counter() - start
    passed = cyl and torus_ok and k4n and helix_ok
    criterion(6, passed, f"cylinder n<=8 {cyl}, torus K3xK4 over Q(sqrt3) {torus_ok}, "
                         f"k4n n<=6 {k4n}, rational helix all even {helix_ok}, {elapsed:.1f}s")
    assert passed


OCTAHEDRON = [t for t in combinations(range(6), 3) if len({i // 2 for i in t}) == 3]


def _lemma_counts(trials=200):
    """Parity lemma counts on seeded random instances; returns {name: (even, total, errors)}."""
    out = {}

    def run(name, n, d, stream, fn):
        even = errors = 0
        for cfg in configs(n, d, trials, stream):
            try:
                even += fn(cfg) % 2 == 0
            except DegenerateInput:
                errors += 1
        out[name] = (even, trials, errors)

    run("triangle outlines R^2", 6, 2, 71, lambda c: broken_lines_crossings(c, BrokenLine((0, 1, 2)), BrokenLine((3, 4, 5))))
    run("closed broken lines R^2", 9, 2, 72, lambda c: broken_lines_crossings(c, BrokenLine((0, 1, 2, 3)),
                                                              BrokenLine((4, 5, 6, 7, 8))))
    tet = TwoCycle(tuple(tetrahedron_surface((3, 4, 5, 6))))
    run("outline vs tetra surface R^3", 7, 3, 73, lambda c: line_body_crossings(c, BrokenLine((0, 1, 2)), tet))
    octa = TwoCycle(tuple(tuple(i + 5 for i in t) for t in OCTAHEDRON))
    run("broken line vs octahedron R^3", 11, 3, 74, lambda c: line_body_crossings(c, BrokenLine((0, 1, 2, 3, 4)), octa))
    s1 = TwoCycle(tuple(tetrahedron_surface((0, 1, 2, 3))))
    s2 = TwoCycle(tuple(tetrahedron_surface((4, 5, 6, 7))))
    run("tetra surfaces R^4", 8, 4, 75, lambda c: bodies_crossings_4d(c, s1, s2))

    def tori(c):
        g = ProductGrid(6, 3, c)
        return bodies_crossings_4d(c, torus_cycle(g, (1, 2, 3), (1, 2, 3)), torus_cycle(g, (4, 5, 6), (1, 2, 3)))
    run("grid tori R^4", 18, 4, 76, tori)
    return out


def test_criterion_07_parity_lemmas(criterion):
    start = time.perf_counter()
    counts = _lemma_counts()
    elapsed = time.perf_counter() - start
    passed = all(e == t and err == 0 for e, t, err in counts.values())
    detail = ", ".join(f"{k} {e}/{t} even ({err} exc)" for k, (e, t, err) in counts.items())
    criterion(7, passed, f"{detail}, {elapsed:.1f}s")
    assert passed


def test_criterion_08_projection(criterion):
    start = time.perf_counter()
    agree = checks = 0
    for cfg in configs(6, 3, 500, 81):
        for t1 in combinations(range(6), 3):
            if 0 not in t1:
                continue
            t2 = tuple(i for i in range(6) if i not in t1)
            checks += 1
            agree += (below_sides_count(cfg, t1[0], t1[1:], t2) % 2 == 1) == triangles_linked(cfg, t1, t2).linked
    projected = 0
    for cfg in configs(7, 4, 100, 82):
        apex = max(range(7), key=lambda i: cfg.points[i][0])
        projected += verify_cgs(project_from_extreme(cfg, apex)).verdict is Verdict.CONFIRMED
    elapsed = time.perf_counter() - start
    passed = agree == checks and projected == 100
    criterion(8, passed, f"below-sides parity agrees {agree}/{checks}, projected CGS confirmed "
                         f"{projected}/100, {elapsed:.1f}s")
    assert passed


def test_criterion_09_sachs(criterion):
    start = time.perf_counter()
    reps, nondeg, ok = campaign(verify_sachs, configs(8, 3, 300, 9))
    elapsed = time.perf_counter() - start
    passed = ok == len(nondeg) == 300
    criterion(9, passed, f"Sachs linked alternating loops found {ok}/{len(nondeg)}, {elapsed:.1f}s")
    assert passed


def test_criterion_10_radon_tverberg(criterion):
    start = time.perf_counter()
    radon_ok = 0
    for d in range(1, 7):
        for cfg in configs(d + 2, d, 200, 100 + d):
            cert = radon_partition(cfg)
            radon_ok += cert.validate(cfg) and hulls_common_point(cfg, cert.blocks).feasible
    tv_ok = 0
    for cfg in configs(7, 2, 100, 110):
        cert = tverberg_partition(cfg, 3)
        tv_ok += cert is not None and cert.validate(cfg)
    counter = tverberg_search(tverberg_counterexample(2, 3), 3)
    # six points have S(6,3) = 90 partitions into three blocks
    absence = counter.certificate is None and counter.partitions_covered == counter.partitions_total == stirling2(6, 3)
    elapsed = time.perf_counter() - start
    passed = radon_ok == 1200 and tv_ok == 100 and absence
    criterion(10, passed, f"Radon validated {radon_ok}/1200, Tverberg r=3 {tv_ok}/100, counterexample "
                          f"absence over {counter.partitions_covered}/{counter.partitions_total} "
                          f"partitions {absence}, {elapsed:.1f}s")
    assert passed


def test_criterion_11_negative_realizability(criterion):
    start = time.perf_counter()
    negatives = 0
    for n, d, stream in ((6, 3, 111), (7, 4, 112)):
        for cfg in configs(n, d, 100, stream):
            ok, bad = is_embedded(cfg, combinations(range(n), 3))
            negatives += not ok and bad is not None and not classify_pair(cfg, *bad).proper
    positives = all(is_embedded(simplex_plus_interior(d), combinations(range(d + 2), 3))[0] for d in (3, 4))
    elapsed = time.perf_counter() - start
    passed = negatives == 200 and positives
    criterion(11, passed, f"all-triangle families rejected with witness {negatives}/200, "
                          f"simplex plus interior embedded {positives}, {elapsed:.1f}s")
    assert passed
