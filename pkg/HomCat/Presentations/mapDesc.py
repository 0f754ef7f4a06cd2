from fractions import Fraction
import logging
import threading

from ..core import ExtractError, MPoly
from ..LinearAlgebra.qmat import QMat


class Subst():

    def __init__(self, mapping) -> None:
        """
        Ring map sending each listed variable to a polynomial of the same degree, unlisted variables stay.

        Args:
            mapping (dict): Var -> MPoly or number.
        """
        self.mapping = {var: MPoly._coerce(image) for var, image in mapping.items()}
        for var, image in self.mapping.items():
            if image and (not image.is_homogeneous() or image.degree() != var.degree):
                logging.error(f"Image {image} of {var} is not homogeneous of degree {var.degree}.")
                raise ValueError(f"inhomogeneous substitution for {var}")

    @property
    def shift(self):
        return 0

    def apply(self, poly):
        return poly.subs(self.mapping)

    def __repr__(self) -> str:
        return f"Subst({self.mapping})"


class Mult():

    def __init__(self, factor) -> None:
        self.factor = MPoly._coerce(factor)
        if self.factor and not self.factor.is_homogeneous():
            logging.error(f"Multiplier {self.factor} is not homogeneous.")
            raise ValueError("inhomogeneous multiplier")

    @property
    def shift(self):
        return self.factor.degree() if self.factor else None

    def apply(self, poly):
        return poly * self.factor

    def __repr__(self) -> str:
        return f"Mult({self.factor})"


def reduce_monic(poly, var, relation):
    """
    Remainder of poly on division by a relation that is monic in var, as dict exponent -> coefficient.
    """
    coefficients = relation.coefficients_in(var)
    top = max(coefficients)
    if top == 0 or coefficients[top] != MPoly.constant(1):
        logging.error(f"Relation {relation} is not monic of positive degree in {var}.")
        raise ExtractError(f"relation not monic in {var}")
    tail = {exp: coeff for exp, coeff in coefficients.items() if exp < top}
    remainder = poly.coefficients_in(var)
    while True:
        high = [exp for exp in remainder if exp >= top]
        if not high:
            return remainder, top
        exp = max(high)
        lead = remainder.pop(exp)
        for k, coeff in tail.items():
            target = exp - top + k
            value = remainder.get(target, MPoly()) - lead * coeff
            if value:
                remainder[target] = value
            else:
                remainder.pop(target, None)


class Extract():

    def __init__(self, var, relation, power) -> None:
        """
        Projection onto the var^power summand of a free module with basis 1, var, ..., var^(r-1),
        where var satisfies a monic relation of degree r.

        Args:
            var (Var): The adjoined variable.
            relation (MPoly): Monic in var, coefficients free of var.
            power (int): Which coefficient to keep.
        """
        self.var = var
        self.relation = relation
        self.power = power
        degree = max(relation.coefficients_in(var))
        if not 0 <= power < degree:
            logging.error(f"Power {power} outside the basis 1..{var}^{degree - 1}.")
            raise ExtractError(f"power {power} not below relation degree {degree}")

    @property
    def shift(self):
        return -self.power * self.var.degree

    def apply(self, poly):
        remainder, _ = reduce_monic(poly, self.var, self.relation)
        return remainder.get(self.power, MPoly())

    def __repr__(self) -> str:
        return f"Extract({self.var}^{self.power} mod {self.relation})"


class MapDesc():

    def __init__(self, primitives, shift = None, name = "") -> None:
        """
        A homogeneous bimodule map as a sequence of substitutions, multiplications and projections applied in order.

        Args:
            primitives (list): Subst, Mult and Extract steps.
            shift (int): Declared q-degree shift, checked against the primitives when they determine it.
            name (str): Label used in logs and reports.
        """
        self.primitives = list(primitives)
        self.name = name
        computed = 0
        for primitive in self.primitives:
            step = primitive.shift
            if step is None:
                computed = None
                break
            computed += step
        if shift is None:
            if computed is None:
                logging.error(f"Map {name} has a zero multiplier, its shift must be declared.")
                raise ValueError("undetermined shift")
            shift = computed
        elif computed is not None and computed != shift:
            logging.error(f"Map {name} declares shift {shift} but its primitives shift by {computed}.")
            raise ValueError("shift mismatch")
        self.shift = shift
        self._cache = {}
        self._lock = threading.Lock()

    def __repr__(self) -> str:
        return f"MapDesc({self.name or '?'}, shift {self.shift}, {self.primitives})"

    @staticmethod
    def identity(name = "id"):
        return MapDesc([], 0, name)

    @staticmethod
    def zero(shift, name = "0"):
        return MapDesc([Mult(0)], shift, name)

    def apply(self, poly):
        for primitive in self.primitives:
            poly = primitive.apply(poly)
        return poly

    def then(self, other, name = None):
        """
        The composite: first this map, then other.
        """
        return MapDesc(self.primitives + other.primitives, self.shift + other.shift, name or f"{other.name}*{self.name}")

    def scaled(self, scalar, name = None):
        return MapDesc(self.primitives + [Mult(Fraction(scalar))], self.shift, name or f"{scalar}*{self.name}")

    def realize(self, src, dst, degree):
        """
        Matrix from the degree slice of src to the degree+shift slice of dst.
        """
        key = (src, dst, degree)
        matrix = self._cache.get(key)
        if matrix is None:
            matrix = realize(self, src, dst, degree)
            with self._lock:
                matrix = self._cache.setdefault(key, matrix)
        return matrix


def realize(f, src, dst, degree):
    """
    The matrix of f from the slice basis of src in the given degree to that of dst in degree + f.shift.

    Raises:
        ValueError: if an image contains variables foreign to dst.
        ExtractError: if a projection does not apply.
    """
    source = src.slice(degree)
    if degree + f.shift < 0:
        return QMat(0, source.dimension)
    target = dst.slice(degree + f.shift)
    entries = {}
    for col in range(source.dimension):
        image = f.apply(source.element(col))
        if not image:
            continue
        for row, value in target.coords(image).items():
            entries[(row, col)] = value
    return QMat(target.dimension, source.dimension, entries)
