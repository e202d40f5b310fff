"""Deterministic random generation of scalars, specs, and matrices.

Seeding goes through strings ("<seed>:<family>:<case>") fed to
``random.Random``, which hashes them with SHA-512 internally, so the same
seed reproduces the same objects across processes and platforms.  Rational
magnitudes stay small (|numerator| <= 10, denominator <= 10) to keep exact
arithmetic cheap.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .closedform import DoubleStarCaseTag
from .field import FieldBase, FieldConfig, Scalar, ZERO
from .graphs import DLinkedSpec, DoubleStarSpec, StarPair
from .matrix import ExactMatrix


class UnreachableCaseError(ValueError):
    """The requested target cannot be generated within the given bounds."""


def case_rng(seed: int | str, family: str, index: int) -> random.Random:
    """The per-case generator; derivation is deterministic and indexable."""
    return random.Random(f"{seed}:{family}:{index}")


def rand_fraction(rng: random.Random, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(-10, 10), rng.randint(1, 10))
        if value or not nonzero:
            return value


def rand_scalar(rng: random.Random, cfg: FieldConfig, nonzero: bool = False) -> Scalar:
    while True:
        if cfg.base is FieldBase.GAUSSIAN_RATIONALS:
            value = Scalar(rand_fraction(rng), rand_fraction(rng))
        else:
            value = Scalar(rand_fraction(rng))
        if value or not nonzero:
            return value


def rand_vector(
    rng: random.Random, cfg: FieldConfig, length: int, nonzero: bool = True
) -> tuple[Scalar, ...]:
    return tuple(rand_scalar(rng, cfg, nonzero=nonzero) for _ in range(length))


def vector_with_dot(
    rng: random.Random, cfg: FieldConfig, x: tuple[Scalar, ...], target: Scalar
) -> tuple[Scalar, ...]:
    """A strictly nonzero y with x . y = target (the last entry is solved)."""
    k = len(x)
    if k == 1:
        if not target:
            raise UnreachableCaseError("a length-1 strictly nonzero pair cannot have dot 0")
        return (target / x[0],)
    for _ in range(1000):
        head = rand_vector(rng, cfg, k - 1)
        partial = ZERO
        for xi, yi in zip(x, head):
            partial = partial + xi * yi
        last = (target - partial) / x[-1]
        if last:
            return head + (last,)
    raise UnreachableCaseError("could not solve the dot-product constraint")


_DOT_ZERO_TAGS = {
    DoubleStarCaseTag.BOTH_ZERO: ("xy", "zw"),
    DoubleStarCaseTag.FIRST_NONZERO_SECOND_ZERO: ("zw",),
    DoubleStarCaseTag.NILPOTENT_CASE: ("zw",),
    DoubleStarCaseTag.MIRRORED: ("xy",),
}


def random_double_star(
    rng: random.Random,
    cfg: FieldConfig,
    target: DoubleStarCaseTag,
    m_range: tuple[int, int] = (1, 5),
    n_range: tuple[int, int] = (1, 5),
    mirror_nilpotent: bool | None = None,
) -> DoubleStarSpec:
    """A spec that classifies to ``target``, leaf counts inside the ranges.

    A star whose leaf cycle sum must vanish needs at least two leaves, so
    the effective lower bound is raised where required; impossible bounds
    raise UnreachableCaseError.
    """
    zero_sides = _DOT_ZERO_TAGS.get(target, ())

    def pick(bounds: tuple[int, int], needs_two: bool) -> int:
        lo, hi = bounds
        if needs_two:
            lo = max(lo, 2)
        if lo > hi:
            raise UnreachableCaseError(f"cannot satisfy {target.value} with bounds {bounds}")
        return rng.randint(lo, hi)

    m = pick(m_range, "xy" in zero_sides)
    n = pick(n_range, "zw" in zero_sides)
    a = rand_scalar(rng, cfg, nonzero=True)
    b = rand_scalar(rng, cfg, nonzero=True)
    x = rand_vector(rng, cfg, m)
    z = rand_vector(rng, cfg, n)

    if target is DoubleStarCaseTag.GROUP_INVERTIBLE:
        y = vector_with_dot(rng, cfg, x, rand_scalar(rng, cfg, nonzero=True))
        w = vector_with_dot(rng, cfg, z, rand_scalar(rng, cfg, nonzero=True))
    elif target is DoubleStarCaseTag.BOTH_ZERO:
        y = vector_with_dot(rng, cfg, x, ZERO)
        w = vector_with_dot(rng, cfg, z, ZERO)
    elif target is DoubleStarCaseTag.FIRST_NONZERO_SECOND_ZERO:
        while True:
            t = rand_scalar(rng, cfg, nonzero=True)
            if t + a * b:
                break
        y = vector_with_dot(rng, cfg, x, t)
        w = vector_with_dot(rng, cfg, z, ZERO)
    elif target is DoubleStarCaseTag.NILPOTENT_CASE:
        y = vector_with_dot(rng, cfg, x, -(a * b))
        w = vector_with_dot(rng, cfg, z, ZERO)
    elif target is DoubleStarCaseTag.MIRRORED:
        y = vector_with_dot(rng, cfg, x, ZERO)
        to_nilpotent = (
            mirror_nilpotent if mirror_nilpotent is not None else bool(rng.getrandbits(1))
        )
        if to_nilpotent:
            # swapped spec has zeta' = z.w + ba = 0
            w = vector_with_dot(rng, cfg, z, -(b * a))
        else:
            while True:
                t = rand_scalar(rng, cfg, nonzero=True)
                if t + b * a:
                    break
            w = vector_with_dot(rng, cfg, z, t)
    else:  # pragma: no cover - the enum is closed
        raise UnreachableCaseError(f"unknown target {target!r}")

    return DoubleStarSpec(a=a, b=b, x=x, y=y, z=z, w=w, cfg=cfg)


def jordan_sum(
    rng: random.Random,
    cfg: FieldConfig,
    nil_index: int,
    extra_blocks: int = 1,
) -> ExactMatrix:
    """Direct sum of Jordan blocks with exactly ``nil_index`` as the index:
    one nilpotent block of that size (none when 0) plus invertible blocks."""
    if nil_index < 0:
        raise UnreachableCaseError("index must be nonnegative")
    blocks: list[tuple[int, Scalar]] = []
    if nil_index:
        blocks.append((nil_index, ZERO))
    count = max(extra_blocks, 1 if nil_index == 0 else extra_blocks)
    for _ in range(count):
        blocks.append((rng.randint(1, 2), rand_scalar(rng, cfg, nonzero=True)))
    size = sum(s for s, _ in blocks)
    data = [ZERO] * (size * size)
    offset = 0
    for block_size, eig in blocks:
        for i in range(block_size):
            data[(offset + i) * size + (offset + i)] = eig
            if i + 1 < block_size:
                data[(offset + i) * size + (offset + i + 1)] = Scalar(1)
        offset += block_size
    return ExactMatrix(size, size, data, cfg)


def random_d_linked(
    rng: random.Random,
    cfg: FieldConfig,
    mode: str,
    n_range: tuple[int, int] = (1, 3),
    r_range: tuple[int, int] = (1, 3),
    base_nil_index: int | None = None,
) -> DLinkedSpec:
    """A d-linked spec; ``mode`` shapes the per-star cycle sums:
    'group' all nonzero, 'zero_links' all zero, 'mixed' at least one of
    each, 'free' unconstrained."""
    lo, hi = n_range
    if mode == "mixed":
        lo = max(lo, 2)
    if lo > hi:
        raise UnreachableCaseError(f"cannot satisfy {mode} with n bounds {n_range}")
    n = rng.randint(lo, hi)
    r_lo, r_hi = r_range
    if mode in ("zero_links", "mixed"):
        r_lo = max(r_lo, 2)
        if r_lo > r_hi:
            raise UnreachableCaseError(f"cannot satisfy {mode} with r bounds {r_range}")

    if base_nil_index is not None:
        base = jordan_sum(rng, cfg, base_nil_index)
        n = base.rows
        if mode == "mixed" and n < 2:
            raise UnreachableCaseError("mixed links need at least two stars")
    else:
        base = ExactMatrix.from_rows(
            [[rand_scalar(rng, cfg) for _ in range(n)] for _ in range(n)], cfg
        )

    if mode == "mixed":
        zero_flags = [True, False] + [bool(rng.getrandbits(1)) for _ in range(n - 2)]
        rng.shuffle(zero_flags)
    elif mode == "zero_links":
        zero_flags = [True] * n
    elif mode == "group":
        zero_flags = [False] * n
    elif mode == "free":
        zero_flags = [bool(rng.getrandbits(1)) for _ in range(n)]
    else:
        raise UnreachableCaseError(f"unknown mode {mode!r}")

    stars = []
    for make_zero in zero_flags:
        r = rng.randint(max(r_lo, 2) if make_zero else r_lo, r_hi)
        x = rand_vector(rng, cfg, r)
        if make_zero:
            y = vector_with_dot(rng, cfg, x, ZERO)
        else:
            y = vector_with_dot(rng, cfg, x, rand_scalar(rng, cfg, nonzero=True))
        stars.append(StarPair(x, y))
    return DLinkedSpec(base=base, stars=tuple(stars))


_FLAVORS = ("dense", "low_rank", "nilpotent", "jordan", "diagonal")


def random_matrix(
    rng: random.Random, cfg: FieldConfig, size: int, flavor: str | None = None
) -> ExactMatrix:
    """Square test matrices with deliberately mixed ranks and indices."""
    if flavor is None:
        flavor = _FLAVORS[rng.randrange(len(_FLAVORS))]
    if size == 0:
        return ExactMatrix.zeros(0, 0, cfg)
    if flavor == "dense":
        return ExactMatrix.from_rows(
            [[rand_scalar(rng, cfg) for _ in range(size)] for _ in range(size)], cfg
        )
    if flavor == "low_rank":
        r = rng.randint(1, max(1, size - 1)) if size > 1 else 1
        left = [[rand_scalar(rng, cfg) for _ in range(r)] for _ in range(size)]
        right = [[rand_scalar(rng, cfg) for _ in range(size)] for _ in range(r)]
        return ExactMatrix.from_rows(left, cfg) * ExactMatrix.from_rows(right, cfg)
    if flavor == "nilpotent":
        rows = [
            [rand_scalar(rng, cfg) if j > i else ZERO for j in range(size)]
            for i in range(size)
        ]
        return ExactMatrix.from_rows(rows, cfg)
    if flavor == "jordan":
        block = jordan_sum(rng, cfg, rng.randint(0, min(3, size)))
        if block.rows >= size:
            return block.sub(0, size, 0, size)
        pad = ExactMatrix.zeros(size - block.rows, size - block.rows, cfg)
        filler = ExactMatrix.zeros(block.rows, size - block.rows, cfg)
        return ExactMatrix.block([[block, filler], [filler.transpose(), pad]])
    if flavor == "diagonal":
        return ExactMatrix.diagonal(
            [rand_scalar(rng, cfg) for _ in range(size)], cfg
        )
    raise UnreachableCaseError(f"unknown flavor {flavor!r}")
