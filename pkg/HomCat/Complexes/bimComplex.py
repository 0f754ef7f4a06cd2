from dataclasses import dataclass
import logging
import time

from ..core import ChainMapError
from ..Presentations.ringPres import RingPres


@dataclass(frozen=True, eq=False)
class ComplexObject:
    """
    One bimodule of a complex: presentation, homological degree and q-shift.
    """
    key: tuple
    pres: RingPres
    hom_degree: int
    q_shift: int


@dataclass
class DSquaredReport:
    ok: bool
    checked: int
    first_failure: dict = None

    def to_dict(self):
        return {"ok": self.ok, "checked": self.checked, "first_failure": self.first_failure}


class BimComplex():

    def __init__(self, objects, arrows, name = "") -> None:
        """
        Chain complex of presented bimodules with differentials raising the homological degree by one.

        Args:
            objects (list of ComplexObject): Objects with distinct keys.
            arrows (list of (src key, dst key, MapDesc)): Components of the differential.
            name (str): Label used in logs.
        """
        self.name = name
        self.objects = {}
        for obj in objects:
            if obj.key in self.objects:
                logging.error(f"Object key {obj.key} appears twice in {name}.")
                raise ValueError("duplicate object key")
            self.objects[obj.key] = obj
        self.arrows = []
        self._outgoing = {key: [] for key in self.objects}
        for src, dst, f in arrows:
            self.add_arrow(src, dst, f)

    def __repr__(self) -> str:
        return f"BimComplex({self.name}: {len(self.objects)} objects, {len(self.arrows)} arrows)"

    def add_arrow(self, src, dst, f):
        source, target = self.objects[src], self.objects[dst]
        if target.hom_degree != source.hom_degree + 1:
            logging.error(f"Arrow {src} -> {dst} does not raise the homological degree by one.")
            raise ChainMapError("arrow of wrong homological degree")
        if f.shift != source.q_shift - target.q_shift:
            logging.error(f"Arrow {src} -> {dst} shifts by {f.shift}, the objects need {source.q_shift - target.q_shift}.")
            raise ChainMapError("arrow of wrong q-degree")
        self.arrows.append((src, dst, f))
        self._outgoing[src].append((dst, f))

    def outgoing(self, key):
        return self._outgoing[key]

    def degrees(self):
        return sorted({obj.hom_degree for obj in self.objects.values()})

    def objects_at(self, hom_degree):
        return [obj for obj in self.objects.values() if obj.hom_degree == hom_degree]

    def min_shift(self):
        return min((obj.q_shift for obj in self.objects.values()), default = 0)

    def scaled_arrow(self, index, scalar):
        """
        Copy of the complex with one differential component multiplied by a scalar.
        """
        arrows = list(self.arrows)
        src, dst, f = arrows[index]
        arrows[index] = (src, dst, f.scaled(scalar))
        return BimComplex(list(self.objects.values()), arrows, self.name)

    def check_d_squared(self, qmax):
        """
        Realizes d o d out of every object on every slice of total q-degree up to qmax.

        Returns:
            DSquaredReport naming the first source object and degree with a non-zero composite.
        """
        t = time.process_time()
        checked = 0
        for src_key, source in self.objects.items():
            paths = {}
            for mid_key, first in self.outgoing(src_key):
                for dst_key, second in self.outgoing(mid_key):
                    paths.setdefault(dst_key, []).append((mid_key, first, second))
            for dst_key, routes in paths.items():
                target = self.objects[dst_key]
                for degree in range(0, qmax - source.q_shift + 1, 2):
                    total = None
                    for mid_key, first, second in routes:
                        middle = self.objects[mid_key]
                        product = second.realize(middle.pres, target.pres, degree + first.shift) * first.realize(source.pres, middle.pres, degree)
                        total = product if total is None else total + product
                    checked += 1
                    if not total.is_zero():
                        failure = {"source": str(src_key), "target": str(dst_key), "q": degree + source.q_shift}
                        logging.warning(f"d^2 != 0 in {self.name} from {src_key} to {dst_key} at q {degree + source.q_shift}.")
                        return DSquaredReport(False, checked, failure)
        logging.info(f"[{time.process_time()-t:.3f} s] Finished d^2 check of {self.name} on {checked} slices.")
        return DSquaredReport(True, checked)


def check_d_squared(complex, qmax):
    return complex.check_d_squared(qmax)
