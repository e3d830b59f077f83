"""Radon and Tverberg partitions with exact certificates.

* Radon: an affine dependence sum c_i X_i = 0, sum c_i = 0 (integer kernel
  vector of the lifted point matrix) split by coefficient sign.
* Common point of several convex hulls: one exact LP.
* Tverberg: unordered partitions into r blocks enumerated as restricted
  growth strings in lexicographic order.  A prefix is abandoned when even the
  relaxation "every block may still absorb all unassigned points" has no
  common point, which can only lose partitions that fail anyway.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import ArityError, BudgetExceeded, InvalidInput, SearchExhausted
from .kernel import Configuration
from .linalg import nullspace_vector
from .lp import OPTIMAL, maximize

__all__ = [
    "PartitionCertificate", "FeasibilityResult", "TverbergSearch", "radon_partition",
    "hulls_common_point", "tverberg_partition", "tverberg_search",
    "tverberg_counterexample", "stirling2", "default_budget",
]

DEFAULT_BUDGET = 2_000_000


def default_budget() -> int:
    try:
        return int(os.environ.get("LINKGEOM_BUDGET", DEFAULT_BUDGET))
    except ValueError:
        raise InvalidInput("LINKGEOM_BUDGET must be an integer") from None


@dataclass(frozen=True)
class PartitionCertificate:
    blocks: tuple
    common_point: tuple
    coefficients: tuple

    def validate(self, cfg: Configuration) -> bool:
        """Re-check every convex-combination equation from scratch."""
        seen = set()
        for block, lam in zip(self.blocks, self.coefficients):
            if not block or len(block) != len(lam) or seen & set(block):
                return False
            seen |= set(block)
            if any(v < 0 for v in lam) or sum(lam) != 1:
                return False
            for r in range(cfg.dimension):
                if sum(l * cfg.points[i][r] for l, i in zip(lam, block)) != self.common_point[r]:
                    return False
        return len(self.blocks) == len(self.coefficients)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    coefficients: tuple | None = None
    point: tuple | None = None


def radon_partition(cfg: Configuration) -> PartitionCertificate:
    d = cfg.dimension
    if len(cfg) != d + 2:
        raise ArityError(f"Radon partition needs {d + 2} points in R^{d}, got {len(cfg)}")
    if cfg.field != "rational":
        raise InvalidInput("Radon partition expects rational coordinates")
    ex = cfg.exact
    rows = [[p[r] for p in ex] for r in range(d)] + [[1] * len(ex)]
    # c != 0 and sum c = 0, so both strict signs occur; zeros join the
    # nonnegative block
    c = nullspace_vector(rows)
    pos = tuple(i for i, v in enumerate(c) if v >= 0)
    neg = tuple(i for i, v in enumerate(c) if v < 0)
    s = sum(c[i] for i in pos)
    lam = tuple(Fraction(c[i], s) for i in pos)
    mu = tuple(Fraction(-c[i], s) for i in neg)
    point = tuple(sum(l * cfg.points[i][r] for l, i in zip(lam, pos)) for r in range(d))
    return PartitionCertificate((pos, neg), point, (lam, mu))


def _common_point_lp(points, blocks):
    d = len(points[0])
    nvar = sum(len(b) for b in blocks)
    A, b = [], []
    offs = []
    o = 0
    for blk in blocks:
        offs.append(o)
        o += len(blk)
    for k, blk in enumerate(blocks):
        row = [0] * nvar
        for j in range(len(blk)):
            row[offs[k] + j] = 1
        A.append(row)
        b.append(1)
    for k in range(1, len(blocks)):
        for r in range(d):
            row = [0] * nvar
            for j, i in enumerate(blocks[0]):
                row[offs[0] + j] = points[i][r]
            for j, i in enumerate(blocks[k]):
                row[offs[k] + j] = -points[i][r]
            A.append(row)
            b.append(0)
    res = maximize([0] * nvar, A, b)
    if res.status != OPTIMAL:
        return None
    return tuple(tuple(res.x[offs[k] + j] for j in range(len(blk))) for k, blk in enumerate(blocks))


def hulls_common_point(cfg: Configuration, blocks: Sequence[Sequence[int]]) -> FeasibilityResult:
    blocks = [tuple(b) for b in blocks]
    if any(not b for b in blocks):
        raise InvalidInput("blocks must be nonempty")
    flat = [i for b in blocks for i in b]
    if len(set(flat)) != len(flat):
        raise InvalidInput("blocks must be disjoint")
    if any(not 0 <= i < len(cfg) for i in flat):
        raise InvalidInput("block index out of range")
    lam = _common_point_lp(cfg.points, blocks)
    if lam is None:
        return FeasibilityResult(False)
    point = tuple(sum(l * cfg.points[i][r] for l, i in zip(lam[0], blocks[0]))
                  for r in range(cfg.dimension))
    return FeasibilityResult(True, lam, point)


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


@lru_cache(maxsize=None)
def _completions(remaining: int, used: int, r: int) -> int:
    """Ways to finish a restricted growth string with ``used`` blocks opened
    so that exactly r blocks end up nonempty."""
    if remaining == 0:
        return 1 if used == r else 0
    if r - used > remaining:
        return 0
    total = used * _completions(remaining - 1, used, r)
    if used < r:
        total += _completions(remaining - 1, used + 1, r)
    return total


@dataclass(frozen=True)
class TverbergSearch:
    certificate: PartitionCertificate | None
    partitions_total: int
    partitions_covered: int
    lp_calls: int


def tverberg_search(cfg: Configuration, r: int, budget: int | None = None,
                    prune: bool = True) -> TverbergSearch:
    """Exhaustive search; ``partitions_covered`` counts partitions either
    tested or excluded by a failed relaxation."""
    n = len(cfg)
    if r < 2:
        raise InvalidInput("r must be at least 2")
    if n < r:
        raise ArityError(f"cannot split {n} points into {r} nonempty blocks")
    total = stirling2(n, r)
    budget = default_budget() if budget is None else budget
    if total > budget:
        raise BudgetExceeded(f"{total} partitions exceed the budget {budget}")
    pts = cfg.points
    assign = [0] * n
    stats = {"covered": 0, "lp": 0}

    def blocks_of(upto, used):
        bl = [[] for _ in range(used)]
        for i in range(upto):
            bl[assign[i]].append(i)
        return bl

    def relaxation_ok(upto, used):
        rest = list(range(upto, n))
        bl = [tuple(b) + tuple(rest) for b in blocks_of(upto, used)]
        if used < r:
            if not rest:
                return False
            bl.append(tuple(rest))
        stats["lp"] += 1
        return _common_point_lp(pts, bl) is not None

    def rec(i, used):
        if i == n:
            if used != r:
                return None
            bl = [tuple(b) for b in blocks_of(n, used)]
            stats["lp"] += 1
            lam = _common_point_lp(pts, bl)
            stats["covered"] += 1
            if lam is None:
                return None
            point = tuple(sum(l * pts[j][c] for l, j in zip(lam[0], bl[0])) for c in range(cfg.dimension))
            return PartitionCertificate(tuple(bl), point, lam)
        if r - used > n - i:
            return None
        if prune and used >= 2 and i < n - 1 and not relaxation_ok(i, used):
            stats["covered"] += _completions(n - i, used, r)
            return None
        for k in range(min(used + 1, r)):
            assign[i] = k
            found = rec(i + 1, max(used, k + 1))
            if found is not None:
                return found
        return None

    assign[0] = 0
    cert = rec(1, 1)
    return TverbergSearch(cert, total, stats["covered"], stats["lp"])


def tverberg_partition(cfg: Configuration, r: int, budget: int | None = None):
    """First partition (lexicographic order) into r blocks whose hulls share a
    point, or None when no such partition exists."""
    return tverberg_search(cfg, r, budget).certificate


def tverberg_counterexample(d: int, r: int, budget: int | None = None, max_halvings: int = 40) -> Configuration:
    """(d+1)(r-1) points with no Tverberg partition into r blocks: tight
    clusters of r-1 points around the vertices of the standard simplex."""
    if d < 1 or r < 2:
        raise InvalidInput("need d >= 1 and r >= 2")
    sites = [tuple([0] * d)] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
    eps = Fraction(1, 4)
    for _ in range(max_halvings):
        pts, labels = [], []
        for s, site in enumerate(sites):
            for t in range(1, r):
                pts.append(tuple(site[k] + eps * Fraction(t) ** (k + 1) for k in range(d)))
                labels.append(f"C{s}_{t}")
        cfg = Configuration(d, tuple(pts), tuple(labels))
        if tverberg_partition(cfg, r, budget) is None:
            return cfg
        eps /= 2
    raise SearchExhausted("cluster radius could not be shrunk far enough")
