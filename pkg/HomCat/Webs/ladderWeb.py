from dataclasses import dataclass
from typing import Tuple, Union
import json
import logging

from ..core import WebError


MAX_LABEL = 4


@dataclass(frozen=True)
class Split:
    """
    The edge at 1-based position pos splits into left and right.
    """
    pos: int
    left: int
    right: int

    def to_dict(self):
        return {"op": "split", "pos": self.pos, "left": self.left, "right": self.right}


@dataclass(frozen=True)
class Merge:
    """
    The edges at 1-based positions pos and pos + 1 merge.
    """
    pos: int

    def to_dict(self):
        return {"op": "merge", "pos": self.pos}


Slice = Union[Split, Merge]


def _apply(sequence, event, index):
    if isinstance(event, Split):
        if not 1 <= event.pos <= len(sequence):
            logging.error(f"Slice {index}: split position {event.pos} outside 1..{len(sequence)}.")
            raise WebError(f"slice {index}: split position {event.pos} out of range")
        if event.left < 1 or event.right < 1:
            logging.error(f"Slice {index}: split outputs must be positive, got {event.left}, {event.right}.")
            raise WebError(f"slice {index}: non-positive split label")
        label = sequence[event.pos - 1]
        if event.left + event.right != label:
            logging.error(f"Slice {index}: split of a {label}-edge into {event.left} + {event.right} violates flow conservation.")
            raise WebError(f"slice {index}: split {event.left}+{event.right} of a {label}-edge")
        return sequence[:event.pos - 1] + (event.left, event.right) + sequence[event.pos:]
    if isinstance(event, Merge):
        if not 1 <= event.pos < len(sequence):
            logging.error(f"Slice {index}: merge position {event.pos} needs two edges, sequence has {len(sequence)}.")
            raise WebError(f"slice {index}: merge position {event.pos} out of range")
        label = sequence[event.pos - 1] + sequence[event.pos]
        if label > MAX_LABEL:
            logging.error(f"Slice {index}: merge creates label {label} > {MAX_LABEL}.")
            raise WebError(f"slice {index}: merge creates label {label}")
        return sequence[:event.pos - 1] + (label,) + sequence[event.pos + 1:]
    logging.error(f"Slice {index}: unknown event {event!r}.")
    raise WebError(f"slice {index}: unknown event")


@dataclass(frozen=True)
class LadderWeb:
    """
    A MOY web in ladder form: bottom edge labels and a bottom-to-top sequence of split and merge slices.
    """
    bottom: Tuple[int, ...]
    slices: Tuple[Slice, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "bottom", tuple(int(label) for label in self.bottom))
        object.__setattr__(self, "slices", tuple(self.slices))
        for label in self.bottom:
            if not 1 <= label <= MAX_LABEL:
                logging.error(f"Bottom label {label} outside 1..{MAX_LABEL}.")
                raise WebError(f"bottom label {label} out of range")
        self.levels()

    def levels(self):
        """
        Edge label sequences below the first slice, between slices and above the last slice.
        """
        sequence = self.bottom
        result = [sequence]
        for index, event in enumerate(self.slices):
            sequence = _apply(sequence, event, index)
            result.append(sequence)
        return result

    @property
    def top(self):
        return self.levels()[-1]

    @staticmethod
    def identity(colours):
        return LadderWeb(tuple(colours))

    def stack(self, other):
        """
        Places other on top of this web.
        """
        if other.bottom != self.top:
            logging.error(f"Cannot stack a web with bottom {other.bottom} on top {self.top}.")
            raise WebError("boundary mismatch when stacking webs")
        return LadderWeb(self.bottom, self.slices + other.slices)

    def shifted(self, offset, colours):
        """
        Embeds a local web at strands offset+1.. into a wider web whose bottom is colours.
        """
        moved = []
        for event in self.slices:
            if isinstance(event, Split):
                moved.append(Split(event.pos + offset, event.left, event.right))
            else:
                moved.append(Merge(event.pos + offset))
        return LadderWeb(tuple(colours), tuple(moved))

    def mirror(self):
        """
        Reflection in a vertical axis.
        """
        slices = []
        levels = self.levels()
        for event, before in zip(self.slices, levels):
            width = len(before)
            if isinstance(event, Split):
                slices.append(Split(width - event.pos + 1, event.right, event.left))
            else:
                slices.append(Merge(width - event.pos))
        return LadderWeb(tuple(reversed(self.bottom)), tuple(slices))

    def to_dict(self):
        return {"bottom": list(self.bottom), "slices": [event.to_dict() for event in self.slices]}

    @staticmethod
    def from_dict(data):
        if not isinstance(data, dict) or "bottom" not in data:
            logging.error("Web description needs a 'bottom' list.")
            raise WebError("web description without bottom")
        slices = []
        for index, entry in enumerate(data.get("slices", [])):
            try:
                op = entry["op"]
                if op == "split":
                    slices.append(Split(int(entry["pos"]), int(entry["left"]), int(entry["right"])))
                elif op == "merge":
                    slices.append(Merge(int(entry["pos"])))
                else:
                    raise KeyError(op)
            except (KeyError, TypeError, ValueError) as error:
                logging.error(f"Slice {index}: malformed entry {entry!r}.")
                raise WebError(f"slice {index}: malformed entry") from error
        try:
            bottom = tuple(int(label) for label in data["bottom"])
        except (TypeError, ValueError) as error:
            logging.error(f"Malformed bottom labels {data['bottom']!r}.")
            raise WebError("malformed bottom labels") from error
        return LadderWeb(bottom, tuple(slices))


def load_web(path):
    """
    Reads a web JSON file such as {"bottom":[2,1], "slices":[{"op":"merge","pos":1}]}.
    """
    try:
        with open(path) as handle:
            data = json.load(handle)
    except json.JSONDecodeError as error:
        logging.error(f"{path} is not valid JSON: {error}.")
        raise WebError(f"malformed JSON in {path}") from error
    return LadderWeb.from_dict(data)


def dump_web(web, path):
    with open(path, "w") as handle:
        json.dump(web.to_dict(), handle)
