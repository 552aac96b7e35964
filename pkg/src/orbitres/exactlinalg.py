"""Dense matrices over the rationals with exact arithmetic.

Nothing in here touches floating point.  Entries are :class:`fractions.Fraction`.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .partitions import Partition, dual


class MatrixError(ValueError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise MatrixError("floating point entries are not accepted")
    return Fraction(x)


class ExactMatrix:
    """Immutable rational matrix stored row-major."""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise MatrixError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise MatrixError("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = width
        self._hash = None

    # construction

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "ExactMatrix":
        cols = rows if cols is None else cols
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diag(cls, values: Sequence) -> "ExactMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def jordan_block(cls, size: int, eigenvalue=0) -> "ExactMatrix":
        return cls([[eigenvalue if i == j else (1 if j == i + 1 else 0)
                     for j in range(size)] for i in range(size)])

    @classmethod
    def block_diag(cls, blocks: Sequence["ExactMatrix"]) -> "ExactMatrix":
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[r + i][c + j] = b[i, j]
            r += b.rows
            c += b.cols
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "ExactMatrix":
        """Parse ``"1,2;3,4/5"``: rows split on ``;``, entries on ``,``."""
        rows = []
        for k, row in enumerate(text.strip().split(";")):
            try:
                rows.append([Fraction(e.strip()) for e in row.split(",")])
            except (ValueError, ZeroDivisionError) as exc:
                raise MatrixError(f"bad entry in row {k}: {row.strip()!r}") from exc
        return cls(rows)

    # access

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def entries(self) -> tuple[Fraction, ...]:
        return tuple(x for r in self._data for x in r)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def format(self) -> str:
        return ";".join(",".join(str(x) for x in r) for r in self._data)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"ExactMatrix({self.format()!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._data)
        return self._hash

    # arithmetic

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)])

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix([[-a for a in r] for r in self._data])

    def scale(self, c) -> "ExactMatrix":
        c = _frac(c)
        return ExactMatrix([[c * a for a in r] for r in self._data])

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise MatrixError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other._data))
        return ExactMatrix([[sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                            for r in self._data])

    def __pow__(self, k: int) -> "ExactMatrix":
        self._require_square()
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(zip(*self._data))

    @property
    def T(self) -> "ExactMatrix":
        return self.transpose()

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._data for x in r)

    def inverse(self) -> "ExactMatrix":
        self._require_square()
        n = self.rows
        aug = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self._data)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
            if piv is None:
                raise MatrixError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return ExactMatrix([r[n:] for r in aug])

    def _same_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise MatrixError("shape mismatch")

    def _require_square(self) -> None:
        if not self.is_square:
            raise MatrixError(f"matrix is not square ({self.rows}x{self.cols})")


def _integer_rows(m: ExactMatrix) -> list[list[int]]:
    # scale each row by the lcm of its denominators; rank is unchanged
    out = []
    for i in range(m.rows):
        row = m.row(i)
        scale = lcm(*(x.denominator for x in row))
        out.append([int(x * scale) for x in row])
    return out


def rank(m: ExactMatrix) -> int:
    """Exact rank by fraction-free (Bareiss) elimination on an integer copy."""
    a = _integer_rows(m)
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def char_poly(m: ExactMatrix) -> tuple[Fraction, ...]:
    """Coefficients ``(c1, ..., cn)`` with ``det(xI - m) = x^n + c1 x^(n-1) + ... + cn``.

    Berkowitz's algorithm: division free, so the only arithmetic is ring
    operations on the entries.
    """
    if not m.is_square:
        raise MatrixError(f"matrix is not square ({m.rows}x{m.cols})")
    n = m.rows
    a = m.tolist()
    # poly holds coefficients of the leading r x r principal submatrix, highest degree first
    poly = [Fraction(1), -a[0][0]]
    for r in range(1, n):
        row = a[r][:r]            # R
        col = [a[i][r] for i in range(r)]  # C
        sub = [x[:r] for x in a[:r]]       # leading principal block
        # Toeplitz column: 1, -a_rr, -R C, -R A C, -R A^2 C, ...
        t = [Fraction(1), -a[r][r]]
        vec = col
        for _ in range(r):
            t.append(-sum((x * y for x, y in zip(row, vec)), Fraction(0)))
            vec = [sum((sub[i][k] * vec[k] for k in range(r)), Fraction(0)) for i in range(r)]
        new = []
        for i in range(r + 2):
            new.append(sum((t[i - j] * poly[j] for j in range(len(poly)) if 0 <= i - j < len(t)),
                           Fraction(0)))
        poly = new
    return tuple(poly[1:])


def poly_from_roots(values: Sequence[tuple]) -> tuple[Fraction, ...]:
    """Coefficients ``(c1, ..., cn)`` of ``prod (x - lam)^k`` for ``(lam, k)`` pairs."""
    coeffs = [Fraction(1)]
    for lam, k in values:
        lam = _frac(lam)
        for _ in range(k):
            nxt = coeffs + [Fraction(0)]
            for i in range(1, len(nxt)):
                nxt[i] -= lam * coeffs[i - 1]
            coeffs = nxt
    return tuple(coeffs[1:])


def is_nilpotent(m: ExactMatrix) -> bool:
    m._require_square()
    power, exponent = m, 1
    while exponent < m.rows:
        power = power @ power
        exponent *= 2
    return power.is_zero()


def rank_sequence(m: ExactMatrix) -> list[int]:
    """``rank(m^0), rank(m^1), ...`` stopping at the first zero (nilpotent input)."""
    seq = [m.rows]
    power = ExactMatrix.identity(m.rows)
    while seq[-1] > 0:
        power = power @ m
        seq.append(rank(power))
    return seq


def jordan_type(m: ExactMatrix) -> Partition:
    if not m.is_square:
        raise MatrixError(f"matrix is not square ({m.rows}x{m.cols})")
    if not is_nilpotent(m):
        raise MatrixError("not nilpotent")
    seq = rank_sequence(m)
    # number of blocks of size >= j is rank(m^(j-1)) - rank(m^j)
    return dual(Partition(seq[j - 1] - seq[j] for j in range(1, len(seq))))


def is_semisimple_with_spectrum(m: ExactMatrix, values: Sequence[tuple]) -> bool:
    """True iff the characteristic polynomial is ``prod (x - lam)^k`` and
    ``prod (m - lam I)`` vanishes."""
    if not m.is_square or sum(k for _, k in values) != m.rows:
        return False
    if char_poly(m) != poly_from_roots(values):
        return False
    ident = ExactMatrix.identity(m.rows)
    prod = ident
    for lam, _ in values:
        prod = prod @ (m - ident.scale(lam))
    return prod.is_zero()


def conjugate(m: ExactMatrix, g: ExactMatrix) -> ExactMatrix:
    """``g m g^-1``."""
    return g @ m @ g.inverse()
