"""Star-pattern weighted digraphs and their adjacency-style matrices.

Two families are modeled.  A *double star* has two centres joined by arcs
in both directions (weights a and b); centre 1 sends arcs to its m leaves
with weights x and receives arcs back with weights y, centre 2 likewise
with weights z and w over n leaves.  Vertex order is
[centre1, leaves1..., centre2, leaves2...].

*D-linked stars* attach one star to every vertex of a base digraph on n
vertices: vertex i sends arcs to its r_i leaves with weights x_i and
receives arcs back with weights y_i.  Vertex order is
[base vertices..., leaves of star 1..., leaves of star 2, ...].

All star weights are required to be nonzero (they are arc weights, so a
zero weight would change the digraph shape); violations raise
SpecViolationError naming the offending field.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .field import FieldConfig, Scalar, ZERO
from .matrix import ExactMatrix


class SpecViolationError(ValueError):
    """A star spec broke a structural requirement; ``field`` names the culprit."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _as_scalar(value: object, where: str) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Scalar(value)
    raise SpecViolationError(where, f"not a scalar: {value!r}")


def _weight_vector(values: Sequence[object], name: str, cfg: FieldConfig) -> tuple[Scalar, ...]:
    if len(values) == 0:
        raise SpecViolationError(name, "a star needs at least one leaf")
    out = []
    for i, v in enumerate(values):
        s = _as_scalar(v, f"{name}[{i}]")
        if not s:
            raise SpecViolationError(f"{name}[{i}]", "star weights must be nonzero")
        if not cfg.admits(s):
            raise SpecViolationError(f"{name}[{i}]", "weight lies outside the configured field")
        out.append(s)
    return tuple(out)


def _dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


@dataclass(frozen=True)
class DoubleStarSpec:
    """Weights of a double star digraph; every weight must be nonzero."""

    a: Scalar
    b: Scalar
    x: tuple[Scalar, ...]
    y: tuple[Scalar, ...]
    z: tuple[Scalar, ...]
    w: tuple[Scalar, ...]
    cfg: FieldConfig

    def __post_init__(self) -> None:
        for name in ("a", "b"):
            s = _as_scalar(getattr(self, name), name)
            if not s:
                raise SpecViolationError(name, "centre arc weights must be nonzero")
            if not self.cfg.admits(s):
                raise SpecViolationError(name, "weight lies outside the configured field")
            object.__setattr__(self, name, s)
        for name in ("x", "y", "z", "w"):
            object.__setattr__(self, name, _weight_vector(getattr(self, name), name, self.cfg))
        if len(self.x) != len(self.y):
            raise SpecViolationError("y", f"length {len(self.y)} != length of x {len(self.x)}")
        if len(self.z) != len(self.w):
            raise SpecViolationError("w", f"length {len(self.w)} != length of z {len(self.z)}")

    @property
    def m(self) -> int:
        return len(self.x)

    @property
    def n(self) -> int:
        return len(self.z)

    @property
    def order(self) -> int:
        return self.m + self.n + 2

    def xy(self) -> Scalar:
        """The first star's leaf cycle sum x . y."""
        return _dot(self.x, self.y)

    def zw(self) -> Scalar:
        """The second star's leaf cycle sum z . w."""
        return _dot(self.z, self.w)


def build_double_star(spec: DoubleStarSpec) -> ExactMatrix:
    """Assemble the (m+n+2)-square matrix in the documented vertex order."""
    m, n = spec.m, spec.n
    size = spec.order
    c1, c2 = 0, m + 1
    data = [ZERO] * (size * size)
    for j, v in enumerate(spec.x):
        data[c1 * size + (1 + j)] = v
    data[c1 * size + c2] = spec.a
    for j, v in enumerate(spec.y):
        data[(1 + j) * size + c1] = v
    data[c2 * size + c1] = spec.b
    for j, v in enumerate(spec.z):
        data[c2 * size + (m + 2 + j)] = v
    for j, v in enumerate(spec.w):
        data[(m + 2 + j) * size + c2] = v
    return ExactMatrix(size, size, data, spec.cfg)


def swap_stars(spec: DoubleStarSpec) -> tuple[DoubleStarSpec, ExactMatrix]:
    """Exchange the two stars; returns the swapped spec and the permutation P
    with build(swapped) = P * build(spec) * P^T."""
    swapped = DoubleStarSpec(
        a=spec.b, b=spec.a, x=spec.z, y=spec.w, z=spec.x, w=spec.y, cfg=spec.cfg
    )
    m, n = spec.m, spec.n
    size = spec.order
    # position p in the swapped order holds old vertex sigma(p)
    sigma = [m + 1] + [m + 2 + j for j in range(n)] + [0] + [1 + j for j in range(m)]
    data = [ZERO] * (size * size)
    one = Scalar(1)
    for p, old in enumerate(sigma):
        data[p * size + old] = one
    return swapped, ExactMatrix(size, size, data, spec.cfg)


@dataclass(frozen=True)
class StarPair:
    """Out-weights x and in-weights y of one attached star (equal lengths)."""

    x: tuple[Scalar, ...]
    y: tuple[Scalar, ...]


@dataclass(frozen=True)
class DLinkedSpec:
    """A base matrix with one star attached to each of its vertices."""

    base: ExactMatrix
    stars: tuple[StarPair, ...]

    def __post_init__(self) -> None:
        if not self.base.is_square():
            raise SpecViolationError("A", "base matrix must be square")
        if self.base.rows == 0:
            raise SpecViolationError("A", "base matrix must be nonempty")
        if len(self.stars) != self.base.rows:
            raise SpecViolationError(
                "stars", f"expected {self.base.rows} stars, got {len(self.stars)}"
            )
        cfg = self.base.cfg
        fixed = []
        for i, star in enumerate(self.stars):
            x = _weight_vector(star.x, f"stars[{i}].x", cfg)
            y = _weight_vector(star.y, f"stars[{i}].y", cfg)
            if len(x) != len(y):
                raise SpecViolationError(
                    f"stars[{i}].y", f"length {len(y)} != length of x {len(x)}"
                )
            fixed.append(StarPair(x, y))
        object.__setattr__(self, "stars", tuple(fixed))

    @property
    def cfg(self) -> FieldConfig:
        return self.base.cfg

    @property
    def leaf_count(self) -> int:
        return sum(len(s.x) for s in self.stars)

    @property
    def order(self) -> int:
        return self.base.rows + self.leaf_count

    def link_products(self) -> tuple[Scalar, ...]:
        """The per-star cycle sums x_i . y_i."""
        return tuple(_dot(s.x, s.y) for s in self.stars)


def build_d_linked(spec: DLinkedSpec) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """Assemble M = [[A, B], [C, 0]] plus the star blocks B (out-weights,
    block-diagonal rows) and C (in-weights, block-diagonal columns)."""
    n = spec.base.rows
    r_total = spec.leaf_count
    cfg = spec.cfg
    b_data = [ZERO] * (n * r_total)
    c_data = [ZERO] * (r_total * n)
    offset = 0
    for i, star in enumerate(spec.stars):
        for j, v in enumerate(star.x):
            b_data[i * r_total + offset + j] = v
        for j, v in enumerate(star.y):
            c_data[(offset + j) * n + i] = v
        offset += len(star.x)
    b = ExactMatrix(n, r_total, b_data, cfg)
    c = ExactMatrix(r_total, n, c_data, cfg)
    m = ExactMatrix.block([[spec.base, b], [c, ExactMatrix.zeros(r_total, r_total, cfg)]])
    return m, b, c


@dataclass(frozen=True)
class Digraph:
    """Arc list view of a square matrix: (tail, head, weight) per nonzero entry."""

    order: int
    edges: tuple[tuple[int, int, Scalar], ...]


def digraph_of(a: ExactMatrix) -> Digraph:
    """The weighted digraph whose arc i -> j carries entry (i, j)."""
    if not a.is_square():
        raise SpecViolationError("matrix", "digraphs come from square matrices")
    edges = []
    for i in range(a.rows):
        for j in range(a.cols):
            v = a.entry(i, j)
            if v:
                edges.append((i, j, v))
    return Digraph(a.rows, tuple(edges))
