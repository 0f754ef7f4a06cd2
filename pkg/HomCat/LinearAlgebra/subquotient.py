import logging

from flint import fmpq_mat

from ..core import ChainMapError
from .qmat import QMat, is_zero_matrix, nullspace, rank, rref_pivots, take_columns, take_rows


def _flint(matrix):
    return matrix.to_flint() if isinstance(matrix, QMat) else matrix


class Subquotient():

    def __init__(self, size, cycles, boundaries, differential = None) -> None:
        """
        Homology ker(d_out) / im(d_in) of one chain group with chosen representatives.

        The representatives are cycles independent modulo the boundaries. The projection
        vanishes on the boundaries and is the identity on the representatives, so it reads
        off the class of any cycle.

        Args:
            size (int): Dimension of the ambient chain group.
            cycles (QMat or fmpq_mat): Columns spanning the kernel of the outgoing differential.
            boundaries (QMat): Columns spanning the image of the incoming differential.
            differential (QMat): The outgoing differential, None if it is zero.
        """
        self.size = size
        self.boundaries = boundaries
        self.differential = differential
        cycles = _flint(cycles)
        self.dimension = 0
        self.representatives = fmpq_mat(size, 0)
        self.projection = fmpq_mat(0, size)
        if not size or not cycles.ncols():
            return
        # rows vanishing exactly on the span of the boundaries
        annihilator = nullspace(_flint(boundaries).transpose()).transpose()
        if not annihilator.nrows():
            return
        reduced = annihilator * cycles
        _, chosen = rref_pivots(reduced)
        if not chosen:
            return
        self.dimension = len(chosen)
        self.representatives = take_columns(cycles, chosen)
        independent = take_columns(reduced, chosen)
        _, rows = rref_pivots(independent.transpose())
        self.projection = take_rows(independent, rows).inv() * take_rows(annihilator, rows)

    def __repr__(self) -> str:
        return f"Subquotient(dimension={self.dimension}, ambient={self.size})"

    def is_cycle_block(self, vectors):
        if self.differential is None or not self.differential.rows:
            return True
        return is_zero_matrix(self.differential.to_flint() * vectors)

    def homology_coordinates(self, vector):
        """
        Coordinates of the class of a cycle in the representative basis.

        Raises:
            ChainMapError: If the vector is not a cycle.
        """
        column = QMat.from_columns([vector], self.size).to_flint()
        if not self.is_cycle_block(column):
            logging.error(f"Vector with support {sorted(vector)} is not a cycle.")
            raise ChainMapError("vector is not a cycle")
        if not self.dimension:
            return {}
        coordinates = QMat.from_flint(self.projection * column)
        return {r: value for (r, _), value in coordinates.entries.items()}


def homology(d_in, d_out):
    """
    Homology at the middle of C_in --d_in--> C --d_out--> C_out.

    Args:
        d_in (QMat): Incoming differential, rows = dim C.
        d_out (QMat): Outgoing differential, cols = dim C.

    Returns:
        Subquotient of C.
    """
    if d_in.rows != d_out.cols:
        logging.error(f"Differentials do not meet: d_in has {d_in.rows} rows, d_out has {d_out.cols} columns.")
        raise ChainMapError("shape mismatch between differentials")
    outgoing = d_out.to_flint()
    if d_in.entries and d_out.entries:
        composite = outgoing * d_in.to_flint()
        if not is_zero_matrix(composite):
            logging.error(f"d_out * d_in is non-zero on a {composite.nrows()}x{composite.ncols()} block.")
            raise ChainMapError("differential does not square to zero")
    return Subquotient(d_in.rows, nullspace(outgoing), d_in, d_out)


def free_homology(size):
    """
    Subquotient of a chain group with zero differentials on both sides.
    """
    return Subquotient(size, QMat.identity(size), QMat.zero(size, 0))


def _check_chain_map(chain, f, src, dst):
    if src.dimension and not dst.is_cycle_block(chain * src.representatives):
        logging.error("Image of a homology representative is not a cycle of the target.")
        raise ChainMapError("representative not mapped to a cycle")
    if src.boundaries.cols and f.entries:
        images = chain * src.boundaries.to_flint()
        if not dst.is_cycle_block(images) or (dst.dimension and not is_zero_matrix(dst.projection * images)):
            logging.error("Image of a boundary is not a boundary of the target.")
            raise ChainMapError("boundary not mapped to a boundary")


def induced_map(f, src, dst, check = True):
    """
    Matrix of the map induced on homology in the representative bases.

    Args:
        f (QMat): Chain level map from the ambient space of src to that of dst.
        src (Subquotient): Source homology.
        dst (Subquotient): Target homology.
        check (bool): Whether to verify that representatives go to cycles and boundaries to
            boundaries; the second test multiplies f with all boundaries of src.

    Returns:
        QMat of shape dst.dimension x src.dimension.

    Raises:
        ChainMapError: If f does not carry cycles to cycles or boundaries to boundaries.
    """
    if (f.rows, f.cols) != (dst.size, src.size):
        logging.error(f"Map of shape {f.rows}x{f.cols} does not fit {src.size} -> {dst.size}.")
        raise ChainMapError("map shape mismatch")
    chain = f.to_flint()
    if check:
        _check_chain_map(chain, f, src, dst)
    if not src.dimension or not dst.dimension:
        return QMat(dst.dimension, src.dimension)
    return QMat.from_flint(dst.projection * chain * src.representatives)


def complex_homology_dims(dims, differentials):
    """
    Dimensions of the homology of a finite complex of vector spaces.

    Args:
        dims (dict): degree -> dimension.
        differentials (dict): degree -> QMat from degree to degree + 1.

    Returns:
        dict degree -> homology dimension, zero entries dropped.
    """
    ranks = {degree: rank(matrix) for degree, matrix in differentials.items()}
    result = {}
    for degree, dim in dims.items():
        value = dim - ranks.get(degree, 0) - ranks.get(degree - 1, 0)
        if value < 0:
            logging.error(f"Negative homology dimension {value} in degree {degree}.")
            raise ChainMapError("inconsistent differentials")
        if value:
            result[degree] = value
    return result
