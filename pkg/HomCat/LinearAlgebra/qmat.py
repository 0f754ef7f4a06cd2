from fractions import Fraction
import logging

from flint import fmpq, fmpq_mat


def to_fmpq(value):
    value = Fraction(value)
    return fmpq(value.numerator, value.denominator)


def to_fraction(value):
    return Fraction(int(value.p), int(value.q))


def is_zero_matrix(mat):
    return mat == fmpq_mat(mat.nrows(), mat.ncols())


def rref_pivots(mat):
    """
    Reduced row echelon form of a flint matrix together with its pivot columns.

    Returns:
        (rref, pivots) with pivots[i] the pivot column of row i.
    """
    if not mat.nrows() or not mat.ncols():
        return mat, []
    reduced, rk = mat.rref()
    zero = fmpq(0)
    pivots = []
    column = 0
    for r in range(rk):
        while reduced[r, column] == zero:
            column += 1
        pivots.append(column)
        column += 1
    return reduced, pivots


def nullspace(mat):
    """
    Columns spanning the kernel of a flint matrix, one per free column of its reduced form.
    """
    cols = mat.ncols()
    reduced, pivots = rref_pivots(mat)
    chosen = set(pivots)
    free = [c for c in range(cols) if c not in chosen]
    kernel = fmpq_mat(cols, len(free))
    zero = fmpq(0)
    for k, f in enumerate(free):
        kernel[f, k] = fmpq(1)
        for i, pivot in enumerate(pivots):
            value = reduced[i, f]
            if value != zero:
                kernel[pivot, k] = -value
    return kernel


def take_columns(mat, columns):
    result = fmpq_mat(mat.nrows(), len(columns))
    for k, c in enumerate(columns):
        for r in range(mat.nrows()):
            result[r, k] = mat[r, c]
    return result


def take_rows(mat, rows):
    result = fmpq_mat(len(rows), mat.ncols())
    for k, r in enumerate(rows):
        for c in range(mat.ncols()):
            result[k, c] = mat[r, c]
    return result


def rref_sparse_rows(rows, width):
    """
    Reduced echelon basis of the span of sparse rows, eliminated in chunks of at most width rows.

    Args:
        rows (list of dict): column -> rational value.
        width (int): Number of columns.

    Returns:
        (pivots, reduced) with reduced[i] the sparse row dict column -> fmpq of pivot pivots[i].
    """
    pivots, reduced = [], []
    if not width:
        return pivots, reduced
    zero = fmpq(0)
    for start in range(0, len(rows), width):
        chunk = rows[start:start + width]
        mat = fmpq_mat(len(reduced) + len(chunk), width)
        for r, row in enumerate(reduced):
            for c, value in row.items():
                mat[r, c] = value
        for r, row in enumerate(chunk, start = len(reduced)):
            for c, value in row.items():
                if value:
                    mat[r, c] = to_fmpq(value)
        echelon, pivots = rref_pivots(mat)
        reduced = []
        for r, pivot in enumerate(pivots):
            row = {}
            for c in range(pivot, width):
                value = echelon[r, c]
                if value != zero:
                    row[c] = value
            reduced.append(row)
    return pivots, reduced


class QMat():

    def __init__(self, rows, cols, entries = None) -> None:
        """
        Sparse rational matrix.

        Args:
            rows (int): Number of rows.
            cols (int): Number of columns.
            entries (dict): (row, col) -> value, zeros are dropped.
        """
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (r, c), value in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                logging.error(f"Entry ({r}, {c}) outside a {rows}x{cols} matrix.")
                raise ValueError("matrix index out of bounds")
            if value:
                self.entries[(r, c)] = Fraction(value)

    def __repr__(self) -> str:
        return f"QMat({self.rows}x{self.cols}, {len(self.entries)} entries)"

    def __eq__(self, other):
        if not isinstance(other, QMat):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    @staticmethod
    def identity(size):
        return QMat(size, size, {(i, i): 1 for i in range(size)})

    @staticmethod
    def zero(rows, cols):
        return QMat(rows, cols)

    @staticmethod
    def from_dense(rows):
        height = len(rows)
        width = len(rows[0]) if height else 0
        return QMat(height, width, {(r, c): value for r, row in enumerate(rows) for c, value in enumerate(row)})

    @staticmethod
    def from_columns(columns, rows):
        entries = {}
        for c, column in enumerate(columns):
            for r, value in column.items():
                entries[(r, c)] = value
        return QMat(rows, len(columns), entries)

    @staticmethod
    def block(blocks, row_sizes, col_sizes):
        """
        Assembles a block matrix from a dict (block_row, block_col) -> QMat.
        """
        row_offsets = [sum(row_sizes[:i]) for i in range(len(row_sizes))]
        col_offsets = [sum(col_sizes[:j]) for j in range(len(col_sizes))]
        entries = {}
        for (i, j), matrix in blocks.items():
            if (matrix.rows, matrix.cols) != (row_sizes[i], col_sizes[j]):
                logging.error(f"Block ({i}, {j}) has shape {matrix.rows}x{matrix.cols}, expected {row_sizes[i]}x{col_sizes[j]}.")
                raise ValueError("block shape mismatch")
            for (r, c), value in matrix.entries.items():
                entries[(row_offsets[i] + r, col_offsets[j] + c)] = value
        return QMat(sum(row_sizes), sum(col_sizes), entries)

    def to_dense(self):
        dense = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), value in self.entries.items():
            dense[r][c] = value
        return dense

    def to_flint(self):
        mat = fmpq_mat(self.rows, self.cols)
        for (r, c), value in self.entries.items():
            mat[r, c] = fmpq(value.numerator, value.denominator)
        return mat

    @staticmethod
    def from_flint(mat):
        zero = fmpq(0)
        entries = {}
        for r in range(mat.nrows()):
            for c in range(mat.ncols()):
                value = mat[r, c]
                if value != zero:
                    entries[(r, c)] = to_fraction(value)
        return QMat(mat.nrows(), mat.ncols(), entries)

    def row_dicts(self):
        rows = {}
        for (r, c), value in self.entries.items():
            rows.setdefault(r, {})[c] = value
        return rows

    def columns(self):
        columns = [{} for _ in range(self.cols)]
        for (r, c), value in self.entries.items():
            columns[c][r] = value
        return columns

    def transpose(self):
        return QMat(self.cols, self.rows, {(c, r): value for (r, c), value in self.entries.items()})

    def is_zero(self):
        return not self.entries

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QMat(self.rows, self.cols, {key: value * other for key, value in self.entries.items()})
        if self.cols != other.rows:
            logging.error(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}.")
            raise ValueError("shape mismatch")
        right_rows = other.row_dicts()
        entries = {}
        for (r, k), value in self.entries.items():
            for c, other_value in right_rows.get(k, {}).items():
                entries[(r, c)] = entries.get((r, c), 0) + value * other_value
        return QMat(self.rows, other.cols, entries)

    __rmul__ = __mul__

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            logging.error(f"Cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols}.")
            raise ValueError("shape mismatch")
        entries = dict(self.entries)
        for key, value in other.entries.items():
            entries[key] = entries.get(key, 0) + value
        return QMat(self.rows, self.cols, entries)

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def apply(self, vector):
        """
        Multiplies the matrix with a sparse column vector given as dict.
        """
        result = {}
        for (r, c), value in self.entries.items():
            if c in vector:
                result[r] = result.get(r, 0) + value * vector[c]
        return {r: value for r, value in result.items() if value}


def rank(m):
    """
    Rank over the rationals by exact elimination.
    """
    if not m.entries:
        return 0
    return m.to_flint().rref()[1]


def kernel_basis(m):
    """
    Basis of the null space, one column per free column of the reduced row echelon form.
    """
    if not m.entries:
        return QMat.identity(m.cols)
    return QMat.from_flint(nullspace(m.to_flint()))


def solve(m, b):
    """
    Some solution x of m x = b, or None if the system is inconsistent.

    Args:
        m (QMat): Coefficient matrix.
        b (dict): Right hand side as sparse dict row -> value.
    """
    augmented = QMat(m.rows, m.cols + 1, dict(m.entries))
    for r, value in b.items():
        if value:
            augmented.entries[(r, m.cols)] = Fraction(value)
    reduced, pivots = rref_pivots(augmented.to_flint())
    if pivots and pivots[-1] == m.cols:
        return None
    solution = {}
    for i, pivot in enumerate(pivots):
        value = to_fraction(reduced[i, m.cols])
        if value:
            solution[pivot] = value
    return solution
