"""Seeded random instances and trial campaigns for the verifiers.

Trial i of a campaign with seed S uses ``derive_seed(S, i)``; results are
collected in trial order, so the output does not depend on the worker count.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .constructions import ProductGrid
from .errors import InvalidInput, SearchExhausted
from .kernel import SplitMix64, derive_seed, random_configuration
from .realizability import is_embedded
from .simplex import simplex
from .verifiers import REGISTRY, ParityReport, Verdict, deleted_face_family, verify

__all__ = ["INSTANCE_SHAPES", "random_instance", "run_trial", "run_trials", "Aggregate", "aggregate"]

# theorem id -> (points, dimension) of a random instance
INSTANCE_SHAPES = {
    "plane-intersection": (5, 2),
    "k33": (6, 2),
    "red-blue-plane": (6, 2),
    "unlinking-plane": (5, 2),
    "cgs": (6, 3),
    "intersection-r3": (6, 3),
    "unlinking-r3": (6, 3),
    "sachs": (8, 3),
    "vkf": (7, 4),
    "unlinking-r4": (7, 4),
    "join3": (9, 4),
}

REJECTION_BUDGET = 5000


def _rejection(n, d, seed, bits, family):
    rng = SplitMix64(seed)
    for _ in range(REJECTION_BUDGET):
        cfg = random_configuration(n, d, rng.next(), bits)
        if is_embedded(cfg, family)[0]:
            return cfg
    raise SearchExhausted(f"no random instance satisfied the precondition in {REJECTION_BUDGET} draws")


def random_instance(theorem: str, seed: int, bits: int = 16, n: int | None = None,
                    shape: tuple | None = None, variant: str = "a"):
    """A random input for ``theorem`` satisfying its precondition.

    ``n`` is the dimension for stat-il; ``shape`` is (m, n, d) for product;
    ``variant`` selects the deleted-face family.
    """
    if theorem == "stat-il":
        if n is None:
            raise InvalidInput("stat-il needs the dimension n")
        return random_configuration(n + 3, n, seed, bits)
    if theorem == "product":
        if shape is None:
            raise InvalidInput("product needs a grid shape (m, n, d)")
        m, k, d = shape
        return ProductGrid(m, k, random_configuration(m * k, d, seed, bits))
    if theorem == "red-blue-plane":
        fam = [simplex(r, b) for r in range(4) for b in (4, 5)]
        return _rejection(6, 2, seed, bits, fam)
    if theorem == "deleted-face":
        pts, d = (7, 4) if variant == "r4a" else (6, 3)
        return _rejection(pts, d, seed, bits, deleted_face_family(variant))
    try:
        pts, d = INSTANCE_SHAPES[theorem]
    except KeyError:
        raise InvalidInput(f"unknown theorem id {theorem!r}") from None
    return random_configuration(pts, d, seed, bits)


def _verify_kwargs(theorem, n=None, variant="a", max_n=8):
    if theorem == "stat-il":
        return {"max_n": max_n}
    if theorem == "deleted-face":
        return {"variant": variant}
    return {}


def run_trial(args) -> tuple[int, ParityReport]:
    theorem, trial_seed, bits, n, shape, variant, max_n = args
    inst = random_instance(theorem, trial_seed, bits, n=n, shape=shape, variant=variant)
    return trial_seed, verify(theorem, inst, **_verify_kwargs(theorem, n, variant, max_n))


def run_trials(theorem: str, trials: int, seed: int, bits: int = 16, workers: int = 1,
               n: int | None = None, shape: tuple | None = None, variant: str = "a",
               max_n: int = 8) -> list:
    """Run ``trials`` random verifications; returns [(trial_seed, report)] in trial order."""
    if theorem not in REGISTRY:
        raise InvalidInput(f"unknown theorem id {theorem!r}")
    if theorem == "stat-il" and n is not None and n > max_n:
        raise InvalidInput(f"dimension {n} exceeds the cap {max_n}")
    jobs = [(theorem, derive_seed(seed, i), bits, n, shape, variant, max_n) for i in range(trials)]
    if workers <= 1:
        return [run_trial(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_trial, jobs, chunksize=max(1, trials // (4 * workers))))


@dataclass
class Aggregate:
    trials: int = 0
    confirmed: int = 0
    degenerate: int = 0
    violated: int = 0
    counts: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"trials": self.trials, "confirmed": self.confirmed,
                "degenerate": self.degenerate, "violated": self.violated,
                "count_histogram": {str(k): v for k, v in sorted(self.counts.items())}}


def aggregate(reports) -> Aggregate:
    agg = Aggregate()
    for rep in reports:
        agg.trials += 1
        if rep.verdict is Verdict.CONFIRMED:
            agg.confirmed += 1
        elif rep.verdict is Verdict.DEGENERATE:
            agg.degenerate += 1
        else:
            agg.violated += 1
        agg.counts[rep.count] = agg.counts.get(rep.count, 0) + 1
    return agg
