from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple
import logging

import pandas as pd


Rat = Fraction


@dataclass(frozen=True, order=True)
class Var:
    """
    A polynomial variable with a fixed, even and positive q-degree.
    The i-th elementary symmetric variable of an edge has degree 2i.
    """
    name: str
    degree: int = 2

    def __post_init__(self):
        if self.degree <= 0 or self.degree % 2:
            logging.error(f"Variable {self.name} needs an even positive degree, got {self.degree}.")
            raise ValueError(f"bad degree {self.degree} for variable {self.name}")

    def __repr__(self) -> str:
        return self.name


def mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for var, exp in b:
        exps[var] = exps.get(var, 0) + exp
    return tuple(sorted(exps.items()))


def _mono_degree(mono):
    return sum(var.degree * exp for var, exp in mono)


class MPoly():

    __slots__ = ("terms",)

    def __init__(self, terms=None) -> None:
        """
        Sparse multivariate polynomial over the rationals.
        Monomials are sorted tuples of (Var, exponent) pairs, the constant monomial is the empty tuple.

        Args:
            terms (dict): Mapping monomial -> coefficient, zero coefficients are dropped.
        """
        self.terms: Dict[tuple, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff:
                    self.terms[mono] = Fraction(coeff)

    @staticmethod
    def constant(value):
        return MPoly({(): value})

    @staticmethod
    def variable(var, exponent = 1):
        return MPoly({((var, exponent),): 1}) if exponent else MPoly.constant(1)

    @staticmethod
    def monomial(exponents, coeff = 1):
        """
        Builds coeff * prod(var^exp) from a mapping var -> exponent.
        """
        mono = tuple(sorted((var, exp) for var, exp in exponents.items() if exp))
        return MPoly({mono: coeff})

    @staticmethod
    def _coerce(other):
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(other)
        return None

    def copy(self):
        result = MPoly()
        result.terms = dict(self.terms)
        return result

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self.terms)
        for mono, coeff in other.terms.items():
            value = result.get(mono, 0) + coeff
            if value:
                result[mono] = value
            else:
                result.pop(mono, None)
        poly = MPoly()
        poly.terms = result
        return poly

    __radd__ = __add__

    def __neg__(self):
        poly = MPoly()
        poly.terms = {mono: -coeff for mono, coeff in self.terms.items()}
        return poly

    def __sub__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return MPoly()
            poly = MPoly()
            poly.terms = {mono: coeff * other for mono, coeff in self.terms.items()}
            return poly
        if not isinstance(other, MPoly):
            return NotImplemented
        result = {}
        for mono_a, coeff_a in self.terms.items():
            for mono_b, coeff_b in other.terms.items():
                mono = mono_mul(mono_a, mono_b)
                result[mono] = result.get(mono, 0) + coeff_a * coeff_b
        return MPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            logging.error(f"Negative power {exponent} of a polynomial.")
            raise ValueError("negative exponent")
        result = MPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other):
        other = MPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key = lambda m: (-_mono_degree(m), m)):
            coeff = self.terms[mono]
            factors = "*".join(var.name if exp == 1 else f"{var.name}^{exp}" for var, exp in mono)
            if not factors:
                pieces.append(str(coeff))
            elif coeff == 1:
                pieces.append(factors)
            elif coeff == -1:
                pieces.append(f"-{factors}")
            else:
                pieces.append(f"{coeff}*{factors}")
        return " + ".join(pieces).replace("+ -", "- ")

    def variables(self):
        return sorted({var for mono in self.terms for var, _ in mono})

    def degrees(self):
        return {_mono_degree(mono) for mono in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def degree(self):
        """
        q-degree of a homogeneous non-zero polynomial.
        """
        degrees = self.degrees()
        if len(degrees) != 1:
            logging.error(f"Polynomial {self} has no single degree: {sorted(degrees)}.")
            raise ValueError("polynomial is zero or not homogeneous")
        return degrees.pop()

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def is_constant(self):
        return all(mono == () for mono in self.terms)

    def subs(self, mapping):
        """
        Substitutes variables by polynomials, unlisted variables stay.

        Args:
            mapping (dict): Var -> MPoly (or number).

        Returns:
            The substituted polynomial.
        """
        if not mapping:
            return self.copy()
        powers = {}
        result = MPoly()
        for mono, coeff in self.terms.items():
            term = MPoly.constant(coeff)
            kept = []
            for var, exp in mono:
                if var in mapping:
                    key = (var, exp)
                    if key not in powers:
                        image = MPoly._coerce(mapping[var])
                        powers[key] = image ** exp
                    term = term * powers[key]
                else:
                    kept.append((var, exp))
            if kept:
                term = term * MPoly({tuple(kept): 1})
            result = result + term
        return result

    def coefficients_in(self, var):
        """
        Splits the polynomial by powers of var.

        Returns:
            dict exponent -> MPoly free of var.
        """
        result = {}
        for mono, coeff in self.terms.items():
            exp = 0
            rest = []
            for other, e in mono:
                if other == var:
                    exp = e
                else:
                    rest.append((other, e))
            bucket = result.setdefault(exp, {})
            bucket[tuple(rest)] = bucket.get(tuple(rest), 0) + coeff
        return {exp: MPoly(terms) for exp, terms in result.items() if any(terms.values())}


class Partition():

    def __init__(self, parts = ()) -> None:
        """
        Integer partition, stored without trailing zeros.

        Args:
            parts (iterable): Weakly decreasing non-negative integers.
        """
        parts = tuple(int(p) for p in parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            logging.error(f"{parts} is not a weakly decreasing sequence of non-negative integers.")
            raise ValueError(f"invalid partition {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        self.parts = parts

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def __eq__(self, other):
        if not isinstance(other, Partition):
            other = Partition(other)
        return self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index] if index < len(self.parts) else 0

    @property
    def size(self):
        return sum(self.parts)

    def conjugate(self):
        if not self.parts:
            return Partition()
        return Partition(sum(1 for p in self.parts if p > col) for col in range(self.parts[0]))

    def contains(self, other):
        other = other if isinstance(other, Partition) else Partition(other)
        return len(other) <= len(self) and all(other[i] <= self[i] for i in range(len(other)))

    def complement(self, rows, cols):
        """
        Complement inside the rows x cols box, read from the bottom row up.
        """
        if len(self) > rows or (self.parts and self.parts[0] > cols):
            logging.error(f"{self} does not fit into a {rows}x{cols} box.")
            raise ValueError("partition outside box")
        return Partition(cols - self[rows - 1 - i] for i in range(rows))

    @staticmethod
    def in_box(rows, cols):
        """
        All partitions with at most rows parts, each at most cols, in lexicographic order.
        """
        def build(prefix, remaining, bound):
            if remaining == 0:
                yield Partition(prefix)
                return
            for part in range(bound + 1):
                yield from build(prefix + (part,), remaining - 1, part)
        return sorted(set(build((), rows, cols)), key = lambda p: (p.size, p.parts))


@dataclass(frozen=True)
class Prefactor:
    """
    Unexpanded factor sign_base^(t2/2) * t^(t2/2) * q^(q2/2) with half-integer exponents.
    """
    sign_base: int
    t2: int
    q2: int

    def __repr__(self) -> str:
        return f"({'-' if self.sign_base < 0 else ''}tq)^({self.t2}/2)"


class QTPoly():

    def __init__(self, terms = None, qmax2 = None, prefactor = None) -> None:
        """
        Laurent polynomial in q and t with doubled exponents, optionally a series truncated at q2 <= qmax2.

        Args:
            terms (dict): (q2, t2) -> coefficient.
            qmax2 (int): Doubled truncation bound, None for an exact polynomial.
            prefactor (Prefactor): Symbolic factor kept in front of the series.
        """
        self.qmax2 = qmax2
        self.prefactor = prefactor
        self.terms: Dict[Tuple[int, int], Fraction] = {}
        for (q2, t2), coeff in (terms or {}).items():
            if coeff and (qmax2 is None or q2 <= qmax2):
                self.terms[(q2, t2)] = self.terms.get((q2, t2), 0) + Fraction(coeff)
        self.terms = {key: value for key, value in self.terms.items() if value}

    @staticmethod
    def monomial(q2 = 0, t2 = 0, coeff = 1, qmax2 = None):
        return QTPoly({(q2, t2): coeff}, qmax2)

    def __repr__(self) -> str:
        body = " + ".join(f"{coeff}*q^({q2}/2)*t^({t2}/2)" for (q2, t2), coeff in sorted(self.terms.items())) or "0"
        prefix = f"{self.prefactor} * " if self.prefactor else ""
        suffix = f" + O(q^({self.qmax2 + 2}/2))" if self.qmax2 is not None else ""
        return prefix + body + suffix

    @staticmethod
    def _bound(a, b):
        bounds = [bound for bound in (a, b) if bound is not None]
        return min(bounds) if bounds else None

    def _check_prefactor(self, other):
        if self.prefactor != other.prefactor:
            logging.error(f"Cannot combine series with prefactors {self.prefactor} and {other.prefactor}.")
            raise ValueError("mismatched prefactors")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QTPoly.monomial(coeff = other)
        self._check_prefactor(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return QTPoly(terms, QTPoly._bound(self.qmax2, other.qmax2), self.prefactor)

    __radd__ = __add__

    def __neg__(self):
        return QTPoly({key: -coeff for key, coeff in self.terms.items()}, self.qmax2, self.prefactor)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QTPoly({key: coeff * other for key, coeff in self.terms.items()}, self.qmax2, self.prefactor)
        if self.prefactor and other.prefactor:
            logging.error("Cannot multiply two series that both carry a symbolic prefactor.")
            raise ValueError("double prefactor")
        # a truncated factor stays valid up to its bound plus the lowest q-degree of the other factor
        bound = None
        for series, partner in ((self, other), (other, self)):
            if series.qmax2 is not None:
                low = min((q2 for q2, _ in partner.terms), default = 0)
                candidate = series.qmax2 + low
                bound = candidate if bound is None else min(bound, candidate)
        terms = {}
        for (qa, ta), ca in self.terms.items():
            for (qb, tb), cb in other.terms.items():
                key = (qa + qb, ta + tb)
                terms[key] = terms.get(key, 0) + ca * cb
        return QTPoly(terms, bound, self.prefactor or other.prefactor)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QTPoly):
            return NotImplemented
        return (self.terms, self.qmax2, self.prefactor) == (other.terms, other.qmax2, other.prefactor)

    def coefficient(self, q2, t2 = 0):
        return self.terms.get((q2, t2), Fraction(0))

    def shift(self, q2 = 0, t2 = 0):
        bound = None if self.qmax2 is None else self.qmax2 + q2
        return QTPoly({(q + q2, t + t2): c for (q, t), c in self.terms.items()}, bound, self.prefactor)

    def truncate(self, qmax2):
        bound = qmax2 if self.qmax2 is None else min(qmax2, self.qmax2)
        return QTPoly(self.terms, bound, self.prefactor)

    def to_frame(self):
        rows = [{"t2": t2, "q2": q2, "coeff": str(coeff)} for (q2, t2), coeff in sorted(self.terms.items(), key = lambda kv: (kv[0][1], kv[0][0]))]
        return pd.DataFrame(rows, columns = ["t2", "q2", "coeff"])


@dataclass
class TriPoincare:
    """
    Triply graded dimension table with doubled degrees, truncated at q2 <= qmax2.
    """
    entries: Dict[Tuple[int, int, int], int] = field(default_factory=dict)
    qmax2: int = 0

    def __post_init__(self):
        for key, dim in self.entries.items():
            if dim < 0:
                logging.error(f"Negative dimension {dim} at {key}.")
                raise ValueError("negative dimension")
        self.entries = {key: dim for key, dim in self.entries.items() if dim and key[2] <= self.qmax2}

    @property
    def qmax(self):
        return Fraction(self.qmax2, 2)

    def dim(self, h2, hh2, q2):
        return self.entries.get((h2, hh2, q2), 0)

    def shift(self, h2 = 0, hh2 = 0, q2 = 0):
        return TriPoincare({(h + h2, hh + hh2, q + q2): d for (h, hh, q), d in self.entries.items()}, self.qmax2 + q2)

    def truncate(self, qmax2):
        return TriPoincare(dict(self.entries), min(qmax2, self.qmax2))

    def rows(self):
        return [(h2, hh2, q2, dim) for (h2, hh2, q2), dim in sorted(self.entries.items())]

    def agrees_with(self, other, qmax2 = None):
        """
        Compares both tables on their common truncation range.
        """
        bound = min(self.qmax2, other.qmax2) if qmax2 is None else qmax2
        return self.truncate(bound).entries == other.truncate(bound).entries

    def to_frame(self):
        return pd.DataFrame([{"h2": h2, "hh2": hh2, "q2": q2, "dim": dim} for h2, hh2, q2, dim in self.rows()],
                            columns = ["h2", "hh2", "q2", "dim"])


class WebError(ValueError):
    """Invalid braid, web or web file."""


class ChainMapError(ValueError):
    """A differential squares to a non-zero map or a map is not a chain map."""


class ExtractError(ValueError):
    """A projection assumed a free decomposition that does not exist."""
