from dataclasses import dataclass
from typing import Tuple
import logging

from ..core import WebError


BRAID_COLOURS = (1, 2)


@dataclass(frozen=True)
class ColouredBraid:
    """
    Strand colours at the bottom and a signed braid word; g > 0 crosses strands g, g+1 positively.
    """
    colours: Tuple[int, ...]
    word: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "colours", tuple(self.colours))
        object.__setattr__(self, "word", tuple(self.word))
        if not self.colours:
            logging.error("A braid needs at least one strand.")
            raise WebError("empty colour list")
        for colour in self.colours:
            if colour not in BRAID_COLOURS:
                logging.error(f"Strand colour {colour} is not one of {BRAID_COLOURS}.")
                raise WebError(f"strand colour {colour} out of range")
        for index, generator in enumerate(self.word):
            if generator == 0 or abs(generator) >= self.n:
                logging.error(f"Generator {generator} at word position {index} invalid for {self.n} strands.")
                raise WebError(f"generator {generator} out of range")

    @property
    def n(self):
        return len(self.colours)

    def levels(self):
        """
        Colour sequences before each crossing and after the last one.
        """
        sequence = list(self.colours)
        result = [tuple(sequence)]
        for generator in self.word:
            p = abs(generator) - 1
            sequence[p], sequence[p + 1] = sequence[p + 1], sequence[p]
            result.append(tuple(sequence))
        return result

    def crossings(self):
        """
        (position, left colour, right colour, sign) per crossing, position 1-based.
        """
        levels = self.levels()
        result = []
        for generator, level in zip(self.word, levels):
            p = abs(generator)
            result.append((p, level[p - 1], level[p], 1 if generator > 0 else -1))
        return result

    def is_closable(self):
        return self.levels()[-1] == self.colours


def _parse_ints(text, what):
    if isinstance(text, (list, tuple)):
        return tuple(int(value) for value in text)
    values = []
    for token in str(text).replace(" ", "").split(","):
        if token == "":
            continue
        try:
            values.append(int(token))
        except ValueError:
            logging.error(f"Cannot parse {what} token '{token}'.")
            raise WebError(f"invalid {what} token '{token}'")
    return tuple(values)


def parse_braid(colours, word):
    """
    Parses comma separated colour and word strings such as "2,2" and "1,-1".

    Raises:
        WebError: naming the first offending token.
    """
    colour_values = _parse_ints(colours, "colour")
    word_values = _parse_ints(word, "word")
    for value in colour_values:
        if value not in BRAID_COLOURS:
            logging.error(f"Colour token '{value}' is not one of {BRAID_COLOURS}.")
            raise WebError(f"invalid colour token '{value}'")
    for value in word_values:
        if value == 0 or abs(value) >= len(colour_values):
            logging.error(f"Word token '{value}' is not a generator for {len(colour_values)} strands.")
            raise WebError(f"invalid word token '{value}'")
    return ColouredBraid(colour_values, word_values)


@dataclass(frozen=True)
class DiagramStats:
    n1_plus: int = 0
    n1_minus: int = 0
    n2_plus: int = 0
    n2_minus: int = 0
    mixed_plus: int = 0
    mixed_minus: int = 0
    s1: int = 0
    s2: int = 0

    @property
    def writhe_shift2(self):
        """
        n1+ - n1- - s1 + 2 n2+ - 2 n2- - 2 s2, the doubled homological shift of the normalized homology.
        """
        return self.n1_plus - self.n1_minus - self.s1 + 2 * self.n2_plus - 2 * self.n2_minus - 2 * self.s2

    def to_dict(self):
        return {"n1_plus": self.n1_plus, "n1_minus": self.n1_minus, "n2_plus": self.n2_plus, "n2_minus": self.n2_minus,
                "mixed_plus": self.mixed_plus, "mixed_minus": self.mixed_minus, "s1": self.s1, "s2": self.s2}


def diagram_stats(braid):
    counts = {}
    for _, left, right, sign in braid.crossings():
        if left == right:
            key = f"n{left}_{'plus' if sign > 0 else 'minus'}"
        else:
            key = f"mixed_{'plus' if sign > 0 else 'minus'}"
        counts[key] = counts.get(key, 0) + 1
    return DiagramStats(s1 = braid.colours.count(1), s2 = braid.colours.count(2), **counts)
