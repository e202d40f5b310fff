"""Exact dense matrices over Q and Q(i), plus the linear-algebra kernel.

Everything downstream (generalized inverses, closed forms, the CLI) is
built on the routines here: reduced row echelon form with first-nonzero
pivoting, full-rank factorization, kernel/column-space bases, minimal and
characteristic polynomials, the corner-block inverse, and the
core-nilpotent decomposition.  All arithmetic is exact and equality is
structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .field import FieldConfig, Involution, ONE, Scalar, ZERO
from .polynomial import Polynomial


class DimensionMismatchError(ValueError):
    """Operand shapes (or field configs) do not conform."""


class NotInvertibleError(ArithmeticError):
    """A square matrix required to be invertible is singular."""


class ZeroMatrixError(ValueError):
    """An operation that needs positive rank was given the zero matrix."""


def _as_scalar(value: object) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Scalar(value)
    raise TypeError(f"cannot use {value!r} as a matrix entry")


class ExactMatrix:
    """Immutable dense matrix; entries are a flat row-major tuple."""

    __slots__ = ("rows", "cols", "data", "cfg")

    def __init__(self, rows: int, cols: int, data: Sequence[Scalar], cfg: FieldConfig):
        if rows < 0 or cols < 0:
            raise DimensionMismatchError("negative dimensions")
        data = tuple(data)
        if len(data) != rows * cols:
            raise DimensionMismatchError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}"
            )
        self.rows = rows
        self.cols = cols
        self.data = data
        self.cfg = cfg

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cfg: FieldConfig) -> "ExactMatrix":
        """Build from nested sequences; ints and Fractions coerce."""
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat: list[Scalar] = []
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionMismatchError(f"row {i} has {len(row)} entries, expected {ncols}")
            flat.extend(_as_scalar(v) for v in row)
        for v in flat:
            if not cfg.admits(v):
                raise DimensionMismatchError(f"entry {v} lies outside the configured field")
        return cls(nrows, ncols, flat, cfg)

    @classmethod
    def identity(cls, n: int, cfg: FieldConfig) -> "ExactMatrix":
        data = [ZERO] * (n * n)
        for i in range(n):
            data[i * n + i] = ONE
        return cls(n, n, data, cfg)

    @classmethod
    def zeros(cls, rows: int, cols: int, cfg: FieldConfig) -> "ExactMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols), cfg)

    @classmethod
    def diagonal(cls, values: Sequence[object], cfg: FieldConfig) -> "ExactMatrix":
        n = len(values)
        data = [ZERO] * (n * n)
        for i, v in enumerate(values):
            data[i * n + i] = _as_scalar(v)
        return cls(n, n, data, cfg)

    @classmethod
    def column(cls, values: Sequence[object], cfg: FieldConfig) -> "ExactMatrix":
        return cls(len(values), 1, [_as_scalar(v) for v in values], cfg)

    @classmethod
    def block(cls, grid: Sequence[Sequence["ExactMatrix"]]) -> "ExactMatrix":
        """Assemble a block matrix; block shapes must tile consistently."""
        if not grid or not grid[0]:
            raise DimensionMismatchError("empty block grid")
        cfg = grid[0][0].cfg
        widths = [b.cols for b in grid[0]]
        out_rows: list[Scalar] = []
        total_rows = 0
        for brow in grid:
            if len(brow) != len(widths):
                raise DimensionMismatchError("ragged block grid")
            height = brow[0].rows
            for j, blockm in enumerate(brow):
                if blockm.rows != height:
                    raise DimensionMismatchError("block heights differ within a row")
                if blockm.cols != widths[j]:
                    raise DimensionMismatchError("block widths differ within a column")
                if blockm.cfg != cfg:
                    raise DimensionMismatchError("blocks over different fields")
            for i in range(height):
                for blockm in brow:
                    out_rows.extend(blockm.data[i * blockm.cols : (i + 1) * blockm.cols])
            total_rows += height
        return cls(total_rows, sum(widths), out_rows, cfg)

    def identity_like(self) -> "ExactMatrix":
        return ExactMatrix.identity(self.rows, self.cfg)

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def entry(self, i: int, j: int) -> Scalar:
        return self.data[i * self.cols + j]

    def row_list(self, i: int) -> list[Scalar]:
        return list(self.data[i * self.cols : (i + 1) * self.cols])

    def col_list(self, j: int) -> list[Scalar]:
        return [self.data[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[Scalar]]:
        return [self.row_list(i) for i in range(self.rows)]

    def sub(self, r0: int, r1: int, c0: int, c1: int) -> "ExactMatrix":
        """Submatrix with python-slice semantics on both axes."""
        out: list[Scalar] = []
        for i in range(r0, r1):
            out.extend(self.data[i * self.cols + c0 : i * self.cols + c1])
        return ExactMatrix(r1 - r0, c1 - c0, out, self.cfg)

    def select_columns(self, indices: Sequence[int]) -> "ExactMatrix":
        out: list[Scalar] = []
        for i in range(self.rows):
            base = i * self.cols
            out.extend(self.data[base + j] for j in indices)
        return ExactMatrix(self.rows, len(indices), out, self.cfg)

    # -- arithmetic ----------------------------------------------------------

    def _check_same_field(self, other: "ExactMatrix") -> None:
        if self.cfg != other.cfg:
            raise DimensionMismatchError("matrices over different field configs")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot add {self.shape} and {other.shape}")
        return ExactMatrix(
            self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)], self.cfg
        )

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        self._check_same_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"cannot subtract {other.shape} from {self.shape}")
        return ExactMatrix(
            self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)], self.cfg
        )

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [-a for a in self.data], self.cfg)

    def __mul__(self, other: object) -> "ExactMatrix":
        if isinstance(other, ExactMatrix):
            self._check_same_field(other)
            if self.cols != other.rows:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            n, m, p = self.rows, self.cols, other.cols
            a, b = self.data, other.data
            out: list[Scalar] = []
            for i in range(n):
                arow = a[i * m : (i + 1) * m]
                for j in range(p):
                    acc = ZERO
                    for k in range(m):
                        av = arow[k]
                        if av:
                            bv = b[k * p + j]
                            if bv:
                                acc = acc + av * bv
                    out.append(acc)
            return ExactMatrix(n, p, out, self.cfg)
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: object) -> "ExactMatrix":
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, s: object) -> "ExactMatrix":
        s = _as_scalar(s)
        return ExactMatrix(self.rows, self.cols, [s * v for v in self.data], self.cfg)

    def __pow__(self, k: int) -> "ExactMatrix":
        if self.rows != self.cols:
            raise DimensionMismatchError("powers need a square matrix")
        if k < 0:
            return inverse(self) ** (-k)
        out = self.identity_like()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- shape transforms ------------------------------------------------------

    def transpose(self) -> "ExactMatrix":
        out = [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)]
        return ExactMatrix(self.cols, self.rows, out, self.cfg)

    def adjoint(self) -> "ExactMatrix":
        """Transpose with the configured involution applied entrywise."""
        if self.cfg.involution is Involution.IDENTITY:
            return self.transpose()
        out = [
            self.data[i * self.cols + j].conjugate()
            for j in range(self.cols)
            for i in range(self.rows)
        ]
        return ExactMatrix(self.cols, self.rows, out, self.cfg)

    def map_entries(self, fn: Callable[[Scalar], Scalar]) -> "ExactMatrix":
        return ExactMatrix(self.rows, self.cols, [fn(v) for v in self.data], self.cfg)

    # -- predicates -------------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.data)

    def trace(self) -> Scalar:
        if not self.is_square():
            raise DimensionMismatchError("trace needs a square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.data[i * self.cols + i]
        return acc

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactMatrix):
            return (
                self.rows == other.rows
                and self.cols == other.cols
                and self.cfg == other.cfg
                and self.data == other.data
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data, self.cfg))

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(v) for v in self.row_list(i)) for i in range(self.rows)
        )
        return f"ExactMatrix({self.rows}x{self.cols} [{body}])"


def hstack(*blocks: ExactMatrix) -> ExactMatrix:
    return ExactMatrix.block([list(blocks)])


def vstack(*blocks: ExactMatrix) -> ExactMatrix:
    return ExactMatrix.block([[b] for b in blocks])


# -- elimination ---------------------------------------------------------------


@dataclass(frozen=True)
class RrefResult:
    """Reduced row echelon form plus pivot bookkeeping."""

    reduced: ExactMatrix
    pivot_cols: tuple[int, ...]
    rank: int


def rref(a: ExactMatrix) -> RrefResult:
    """Gauss-Jordan with first-nonzero pivoting (deterministic over exact fields)."""
    m, n = a.rows, a.cols
    rows = [a.row_list(i) for i in range(m)]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = None
        for i in range(r, m):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pinv = rows[r][c].inv()
        prow = [v * pinv if v else v for v in rows[r]]
        rows[r] = prow
        for i in range(m):
            if i != r and rows[i][c]:
                f = rows[i][c]
                cur = rows[i]
                rows[i] = [cur[j] - f * prow[j] if prow[j] else cur[j] for j in range(n)]
        pivots.append(c)
        r += 1
        if r == m:
            break
    flat = [v for row in rows for v in row]
    return RrefResult(ExactMatrix(m, n, flat, a.cfg), tuple(pivots), r)


def rank(a: ExactMatrix) -> int:
    return rref(a).rank


def inverse(a: ExactMatrix) -> ExactMatrix:
    """Exact inverse via Gauss-Jordan on [A | I]; NotInvertibleError if singular."""
    if not a.is_square():
        raise DimensionMismatchError("inverse needs a square matrix")
    n = a.rows
    if n == 0:
        return a
    res = rref(hstack(a, a.identity_like()))
    if res.pivot_cols[:n] != tuple(range(n)) or res.rank != n:
        raise NotInvertibleError(f"matrix of rank {rank(a)} is not invertible")
    return res.reduced.sub(0, n, n, 2 * n)


@dataclass(frozen=True)
class FullRankFactorization:
    """A = F G with F of full column rank and G of full row rank."""

    f: ExactMatrix
    g: ExactMatrix
    rank: int


def full_rank_factorize(a: ExactMatrix) -> FullRankFactorization:
    """F = pivot columns of A, G = nonzero rows of rref(A); requires rank > 0."""
    res = rref(a)
    if res.rank == 0:
        raise ZeroMatrixError("the zero matrix has no full-rank factorization")
    f = a.select_columns(res.pivot_cols)
    g = res.reduced.sub(0, res.rank, 0, a.cols)
    return FullRankFactorization(f, g, res.rank)


def null_space(a: ExactMatrix) -> ExactMatrix:
    """Kernel basis as columns (cols x nullity), in free-column order."""
    res = rref(a)
    pivots = set(res.pivot_cols)
    free = [j for j in range(a.cols) if j not in pivots]
    cols: list[list[Scalar]] = []
    for fcol in free:
        v = [ZERO] * a.cols
        v[fcol] = ONE
        for i, pc in enumerate(res.pivot_cols):
            v[pc] = -res.reduced.entry(i, fcol)
        cols.append(v)
    flat = [cols[j][i] for i in range(a.cols) for j in range(len(free))]
    return ExactMatrix(a.cols, len(free), flat, a.cfg)


def column_space_basis(a: ExactMatrix) -> ExactMatrix:
    """The pivot columns of A themselves (rows x rank)."""
    return a.select_columns(rref(a).pivot_cols)


# -- spectral helpers --------------------------------------------------------


def minimal_polynomial(a: ExactMatrix) -> Polynomial:
    """Monic minimal polynomial via the first linear dependence among
    vectorized powers I, A, A^2, ... (incremental exact elimination)."""
    if not a.is_square():
        raise DimensionMismatchError("minimal polynomial needs a square matrix")
    n = a.rows
    if n == 0:
        return Polynomial.one()
    nn = n * n
    by_lead: dict[int, tuple[list[Scalar], list[Scalar]]] = {}
    power = a.identity_like()
    d = 0
    while True:
        vec = list(power.data)
        combo = [ZERO] * (d + 1)
        combo[d] = ONE
        while True:
            lead = next((i for i, v in enumerate(vec) if v), None)
            if lead is None:
                return Polynomial(combo)
            hit = by_lead.get(lead)
            if hit is None:
                break
            bvec, bcombo = hit
            f = vec[lead]
            for idx in range(lead, nn):
                if bvec[idx]:
                    vec[idx] = vec[idx] - f * bvec[idx]
            for p, c in enumerate(bcombo):
                if c:
                    combo[p] = combo[p] - f * c
        pinv = vec[lead].inv()
        by_lead[lead] = ([v * pinv for v in vec], [c * pinv for c in combo])
        power = power * a
        d += 1


def characteristic_polynomial(a: ExactMatrix) -> Polynomial:
    """Monic characteristic polynomial via the Faddeev-LeVerrier recursion."""
    if not a.is_square():
        raise DimensionMismatchError("characteristic polynomial needs a square matrix")
    n = a.rows
    coeffs: list[Scalar] = [ZERO] * (n + 1)
    coeffs[n] = ONE
    m = a.identity_like()
    for k in range(1, n + 1):
        am = a * m
        ck = -(am.trace() / k)
        coeffs[n - k] = ck
        m = am + a.identity_like().scale(ck)
    return Polynomial(coeffs)


def schur_corner_inverse(alpha: ExactMatrix, beta: ExactMatrix, gamma: ExactMatrix) -> ExactMatrix:
    """Inverse of [[alpha, beta], [gamma, I]] via the corner Schur complement
    sigma = alpha - beta*gamma; raises NotInvertibleError when sigma is singular."""
    if not alpha.is_square():
        raise DimensionMismatchError("corner block must be square")
    p = alpha.rows
    q = gamma.rows
    if beta.shape != (p, q) or gamma.cols != p:
        raise DimensionMismatchError("corner blocks do not conform")
    sigma = alpha - beta * gamma
    sinv = inverse(sigma)
    iq = ExactMatrix.identity(q, alpha.cfg)
    return ExactMatrix.block(
        [
            [sinv, -(sinv * beta)],
            [-(gamma * sinv), iq + gamma * sinv * beta],
        ]
    )


@dataclass(frozen=True)
class CoreNilpotent:
    """A = U * blockdiag(core, nilpotent) * U^{-1} with core invertible.

    ``index`` is the nilpotency index (0 for invertible A, where the
    nilpotent block is 0x0; the zero matrix has index 1).
    """

    transform: ExactMatrix
    transform_inv: ExactMatrix
    core: ExactMatrix
    nilpotent: ExactMatrix
    index: int


def core_nilpotent(a: ExactMatrix) -> CoreNilpotent:
    """Split A along range(A^k) + ker(A^k), k = first rank stabilization point."""
    if not a.is_square():
        raise DimensionMismatchError("core-nilpotent decomposition needs a square matrix")
    n = a.rows
    k = 0
    power = a.identity_like()
    r_prev = n
    while True:
        nxt = power * a
        r_next = rank(nxt)
        if r_next == r_prev:
            break
        k += 1
        power = nxt
        r_prev = r_next
    colb = column_space_basis(power) if r_prev else ExactMatrix.zeros(n, 0, a.cfg)
    kerb = null_space(power)
    u = hstack(colb, kerb)
    u_inv = inverse(u)
    d = u_inv * a * u
    core = d.sub(0, r_prev, 0, r_prev)
    nil = d.sub(r_prev, n, r_prev, n)
    return CoreNilpotent(u, u_inv, core, nil, k)
