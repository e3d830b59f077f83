"""Points, configurations, orientation predicates, general position, perturbation.

A :class:`Configuration` is an immutable labeled point list in R^d.  Rational
configurations are internally rescaled by the common denominator of all
coordinates so the hot determinant kernel runs on plain integers; affine
notions (orientation signs, barycentric coefficients) are unchanged by a
positive rescaling.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Callable, Iterable, Sequence

from . import _accel
from .errors import DimensionMismatch, InvalidInput, PerturbExhausted
from .scalar import QuadSqrt3, format_scalar, parse_scalar, sign, to_scalar

__all__ = [
    "Configuration", "SplitMix64", "orientation", "is_general_position",
    "perturb", "perturb_search", "random_configuration", "load_configuration",
    "configuration_from_json", "configuration_to_json", "affinely_independent",
    "derive_seed", "dump_configuration",
]

RATIONAL = "rational"
QUAD = "quad_sqrt3"


def _inversions(seq) -> int:
    n = len(seq)
    return sum(1 for i in range(n) for j in range(i + 1, n) if seq[i] > seq[j])


def _rank(rows) -> int:
    """Rank of a small matrix of exact scalars (plain Gaussian elimination)."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][col]
            if f != 0:
                ratio = f / p[col]
                m[i] = [a - ratio * b for a, b in zip(m[i], p)]
        rank += 1
    return rank


@dataclass(frozen=True)
class Configuration:
    """Labeled, pairwise distinct points in R^d with exact coordinates."""

    dimension: int
    points: tuple
    labels: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        d = self.dimension
        if not isinstance(d, int) or d < 1:
            raise InvalidInput(f"dimension must be a positive integer, got {d!r}")
        if len(self.labels) != len(self.points):
            raise InvalidInput("one label per point is required")
        if len(set(self.labels)) != len(self.labels):
            raise InvalidInput("labels must be unique")
        pts = []
        quad = any(isinstance(c, QuadSqrt3) for p in self.points for c in p)
        for p in self.points:
            if len(p) != d:
                raise DimensionMismatch(f"point {p!r} is not in R^{d}")
            coords = tuple(to_scalar(c) for c in p)
            if quad:
                coords = tuple(c if isinstance(c, QuadSqrt3) else QuadSqrt3(c) for c in coords)
            pts.append(coords)
        if len(set(pts)) != len(pts):
            raise InvalidInput("points must be pairwise distinct")
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))

    @classmethod
    def from_points(cls, points: Iterable[Sequence], labels: Sequence[str] | None = None,
                    dimension: int | None = None) -> "Configuration":
        pts = [tuple(p) for p in points]
        if dimension is None:
            if not pts:
                raise InvalidInput("cannot infer the dimension of an empty configuration")
            dimension = len(pts[0])
        if labels is None:
            labels = [f"A{i + 1}" for i in range(len(pts))]
        return cls(dimension, tuple(pts), tuple(labels))

    @property
    def field(self) -> str:
        if self.points and isinstance(self.points[0][0], QuadSqrt3):
            return QUAD
        return RATIONAL

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InvalidInput(f"no point labeled {label!r}") from None

    def subset(self, indices: Iterable[int]) -> "Configuration":
        idx = list(indices)
        return Configuration(self.dimension, tuple(self.points[i] for i in idx),
                             tuple(self.labels[i] for i in idx))

    # -- exact internals -------------------------------------------------
    @property
    def exact(self) -> tuple:
        """Coordinates used by the kernels: integers for rational input."""
        ex = self._cache.get("exact")
        if ex is None:
            if self.field == RATIONAL:
                scale = lcm(*(c.denominator for p in self.points for c in p)) if self.points else 1
                ex = tuple(tuple(int(c * scale) for c in p) for p in self.points)
            else:
                ex = self.points
            self._cache["exact"] = ex
        return ex

    def _det(self, key: tuple):
        """Edge-vector determinant for a sorted (d+1)-tuple of indices (cached)."""
        dets = self._cache.setdefault("det", {})
        v = dets.get(key)
        if v is None:
            ex = self.exact
            base = ex[key[0]]
            rows = [[a - b for a, b in zip(ex[k], base)] for k in key[1:]]
            v = _accel.det_int(rows) if self.field == RATIONAL else _accel.det_field(rows)
            dets[key] = v
        return v

    def det(self, idx: Sequence[int]):
        """Signed edge-vector determinant of d+1 points given by index (scaled)."""
        if len(idx) != self.dimension + 1:
            raise DimensionMismatch(f"need {self.dimension + 1} indices, got {len(idx)}")
        key = tuple(sorted(idx))
        if len(set(key)) != len(key):
            return 0
        v = self._det(key)
        return -v if _inversions(idx) % 2 else v

    def orient(self, idx: Sequence[int]) -> int:
        return sign(self.det(idx))

    def affinely_independent(self, idx: Sequence[int]) -> bool:
        idx = list(idx)
        if len(idx) > self.dimension + 1:
            return False
        if len(idx) == self.dimension + 1:
            return self.det(idx) != 0
        if len(idx) <= 1:
            return True
        ex = self.exact
        base = ex[idx[0]]
        rows = [[a - b for a, b in zip(ex[k], base)] for k in idx[1:]]
        if self.field == RATIONAL:
            rows = [[Fraction(a) for a in r] for r in rows]
        return _rank(rows) == len(idx) - 1


def affinely_independent(points: Sequence[Sequence]) -> bool:
    pts = [tuple(to_scalar(c) for c in p) for p in points]
    if len(pts) <= 1:
        return True
    rows = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    return _rank(rows) == len(pts) - 1


def orientation(pts: Sequence[Sequence]) -> int:
    """Sign of det[P1-P0, ..., Pd-P0] for d+1 points of R^d."""
    if not pts:
        raise DimensionMismatch("need at least one point")
    d = len(pts[0])
    if len(pts) != d + 1 or any(len(p) != d for p in pts):
        raise DimensionMismatch(f"orientation needs {d + 1} points of R^{d}")
    coords = [[to_scalar(c) for c in p] for p in pts]
    rows = [[a - b for a, b in zip(p, coords[0])] for p in coords[1:]]
    if any(isinstance(c, QuadSqrt3) for r in rows for c in r):
        return sign(_accel.det_field(rows))
    scale = lcm(*(c.denominator for r in rows for c in r)) if rows else 1
    return sign(_accel.det_int([[int(c * scale) for c in r] for r in rows]))


def is_general_position(cfg: Configuration):
    """Return ``(True, None)`` or ``(False, offending index tuple)``."""
    k = min(cfg.dimension + 1, len(cfg))
    if k < cfg.dimension + 1:
        idx = tuple(range(len(cfg)))
        return (True, None) if cfg.affinely_independent(idx) else (False, idx)
    for idx in combinations(range(len(cfg)), k):
        if cfg.det(idx) == 0:
            return False, _minimal_dependent(cfg, idx)
    return True, None


def _minimal_dependent(cfg: Configuration, idx: tuple) -> tuple:
    # report the smallest dependent sub-tuple (e.g. three collinear points in R^2)
    for size in range(3, len(idx) + 1):
        for sub in combinations(idx, size):
            if not cfg.affinely_independent(sub):
                return sub
    return idx


class SplitMix64:
    """SplitMix64 generator: state += golden gamma, then two xor-shift-multiply rounds."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("n must be positive")
        bits = (n - 1).bit_length()
        if bits == 0:
            return 0
        while True:
            x, got = 0, 0
            while got < bits:
                x = (x << 64) | self.next()
                got += 64
            x >>= got - bits
            if x < n:
                return x

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def spawn(self) -> "SplitMix64":
        return SplitMix64(self.next())


def derive_seed(seed: int, index: int) -> int:
    """Independent per-trial seed, stable across platforms and worker counts."""
    g = SplitMix64(seed ^ (index * 0xD1B54A32D192ED03 & SplitMix64.MASK))
    return g.next()


def perturb_search(cfg: Configuration, seed: int, predicate: Callable[[Configuration], bool],
                   k0: int = 6, budget: int = 48):
    """Shift every coordinate by offsets in {-(2^k-1)..2^k-1}/2^(2k), k = k0, k0+1, ...

    Returns ``(cfg', eps)`` for the first candidate satisfying ``predicate``;
    every offset is bounded by ``eps = 2^-k``.
    """
    if cfg.field != RATIONAL:
        raise InvalidInput("perturbation needs rational coordinates")
    rng = SplitMix64(seed)
    for attempt in range(budget):
        k = k0 + attempt
        half = (1 << k) - 1
        den = 1 << (2 * k)
        pts = [tuple(c + Fraction(rng.randint(-half, half), den) for c in p) for p in cfg.points]
        try:
            cand = Configuration(cfg.dimension, tuple(pts), cfg.labels)
        except InvalidInput:
            continue
        if predicate(cand):
            return cand, Fraction(1, 1 << k)
    raise PerturbExhausted(f"no admissible perturbation within {budget} attempts")


def perturb(cfg: Configuration, seed: int, predicate: Callable[[Configuration], bool] | None = None,
            k0: int = 6, budget: int = 48) -> Configuration:
    if predicate is None:
        predicate = lambda c: is_general_position(c)[0]
    return perturb_search(cfg, seed, predicate, k0, budget)[0]


def random_configuration(n: int, d: int, seed: int, bits: int = 16,
                         general: bool = True) -> Configuration:
    """n points with coordinates p/2^bits, p uniform in [0, 2^bits).

    With ``general`` the result is perturbed into general position when the
    raw draw is degenerate (rare for the default bit width).
    """
    rng = SplitMix64(seed)
    den = 1 << bits
    seen, pts = set(), []
    while len(pts) < n:
        p = tuple(Fraction(rng.below(den), den) for _ in range(d))
        if p not in seen:
            seen.add(p)
            pts.append(p)
    cfg = Configuration.from_points(pts, dimension=d)
    if general and not is_general_position(cfg)[0]:
        cfg = perturb(cfg, rng.next(), k0=bits + 2)
    return cfg


# -- point files ----------------------------------------------------------

def configuration_to_json(cfg: Configuration, extra: dict | None = None) -> dict:
    f = cfg.field
    doc = {
        "dimension": cfg.dimension,
        "field": f,
        "points": [{"label": lab, "coords": [format_scalar(c, f) for c in p]}
                   for lab, p in zip(cfg.labels, cfg.points)],
    }
    if extra:
        doc.update(extra)
    return doc


def configuration_from_json(doc) -> Configuration:
    if not isinstance(doc, dict):
        raise InvalidInput("point file must be a JSON object")
    try:
        d = doc["dimension"]
        f = doc.get("field", RATIONAL)
        entries = doc["points"]
    except KeyError as e:
        raise InvalidInput(f"point file lacks {e.args[0]!r}") from None
    if f not in (RATIONAL, QUAD):
        raise InvalidInput(f"unknown field {f!r}")
    if not isinstance(d, int) or isinstance(d, bool):
        raise InvalidInput("dimension must be an integer")
    labels, pts = [], []
    for i, e in enumerate(entries):
        if not isinstance(e, dict) or "coords" not in e:
            raise InvalidInput(f"point entry {i} malformed")
        labels.append(e.get("label", f"A{i + 1}"))
        coords = e["coords"]
        if not isinstance(coords, list) or len(coords) != d:
            raise DimensionMismatch(f"point {i} does not have {d} coordinates")
        pts.append(tuple(parse_scalar(c, f) for c in coords))
    return Configuration(d, tuple(pts), tuple(labels))


def load_configuration(path) -> Configuration:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise InvalidInput(f"{path}: not valid JSON ({e.msg})") from None
    except OSError as e:
        raise InvalidInput(f"{path}: {e.strerror}") from None
    return configuration_from_json(doc)


def dump_configuration(cfg: Configuration, path, extra: dict | None = None) -> None:
    with open(path, "w") as fh:
        json.dump(configuration_to_json(cfg, extra), fh, indent=1)
        fh.write("\n")
