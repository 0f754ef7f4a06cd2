from fractions import Fraction
import logging
import threading

from ..core import MPoly, Var, WebError
from ..Webs.ladderWeb import Split


def union_elementaries(left, right):
    """
    Elementary symmetric functions of the union of two root sets given by their elementaries.
    """
    def e(block, k):
        if k == 0:
            return MPoly.constant(1)
        return block[k - 1] if k <= len(block) else MPoly()
    size = len(left) + len(right)
    return tuple(sum((e(left, a) * e(right, k - a) for a in range(0, k + 1)), MPoly()) for k in range(1, size + 1))


def root_polynomial(x, edge):
    """
    prod over the roots r of an edge of (x - r), written with its elementaries.
    """
    result = x ** len(edge)
    for k, e in enumerate(edge, start = 1):
        term = e * x ** (len(edge) - k)
        result = result + (term if k % 2 == 0 else -term)
    return result


def remove_root(edge, x):
    """
    Elementaries of the edge with the root x removed, by synthetic division of its root polynomial.
    """
    quotient = [MPoly.constant(1)]
    for e in edge[:-1]:
        quotient.append(e - x * quotient[-1])
    return tuple(quotient[1:])


def block_elementaries(block):
    return tuple(MPoly.variable(var) for var in block)


def block_variables(elementaries):
    """
    Inverse of block_elementaries for edges that carry their own variable block.
    """
    variables = []
    for poly in elementaries:
        if len(poly.terms) != 1 or len(poly.variables()) != 1 or poly.degree() != poly.variables()[0].degree:
            logging.error(f"Edge elementary {poly} is not a single variable.")
            raise WebError("edge without its own variable block")
        variables.append(poly.variables()[0])
    return tuple(variables)


class RingPres():

    def __init__(self, variables, relations, edges = None, bottom = (), top = (), name = "") -> None:
        """
        Graded polynomial ring modulo homogeneous relations, presenting the bimodule of a web.

        Args:
            variables (list of Var): Variables in creation order.
            relations (list of MPoly): Homogeneous relations.
            edges (dict): Edge key -> tuple of MPoly, the elementary symmetric functions of that edge.
            bottom (list of tuple of MPoly): Elementaries of the bottom boundary edges, left to right.
            top (list of tuple of MPoly): Elementaries of the top boundary edges, left to right.
            name (str): Label used in log messages.
        """
        self.variables = list(variables)
        self.relations = [r for r in relations if r]
        self.edges = dict(edges or {})
        self.bottom = [tuple(block) for block in bottom]
        self.top = [tuple(block) for block in top]
        self.name = name
        names = [var.name for var in self.variables]
        if len(set(names)) != len(names):
            logging.error(f"Presentation {name} declares a variable twice.")
            raise ValueError("duplicate variable names")
        for relation in self.relations:
            if not relation.is_homogeneous():
                logging.error(f"Relation {relation} of {name} is not homogeneous.")
                raise ValueError("inhomogeneous relation")
        self._lock = threading.Lock()
        self._reduction = None
        self._slices = {}

    def __repr__(self) -> str:
        return f"RingPres({self.name or 'anonymous'}: {len(self.variables)} variables, {len(self.relations)} relations)"

    @property
    def bottom_colours(self):
        return tuple(len(block) for block in self.bottom)

    @property
    def top_colours(self):
        return tuple(len(block) for block in self.top)

    def edge(self, key):
        return self.edges[key]

    def variable(self, name):
        for var in self.variables:
            if var.name == name:
                return var
        logging.error(f"No variable {name} in {self.name}.")
        raise KeyError(name)

    def reduction(self):
        """
        Lazily computed linear elimination, see eliminate_linear.
        """
        if self._reduction is None:
            with self._lock:
                if self._reduction is None:
                    self._reduction = eliminate_linear(self.variables, self.relations)
                    logging.debug(f"{self.name}: kept {len(self._reduction.kept)} of {len(self.variables)} variables, {len(self._reduction.relations)} relations.")
        return self._reduction

    def normal_form(self, poly):
        """
        Rewrites a polynomial in the kept variables.
        """
        return self.reduction().rewrite(poly, self.name)

    def slice(self, degree):
        from .sliceBasis import SliceBasis
        basis = self._slices.get(degree)
        if basis is None:
            basis = SliceBasis(self, degree)
            with self._lock:
                basis = self._slices.setdefault(degree, basis)
        return basis


class Reduction():

    def __init__(self, substitution, kept, relations) -> None:
        """
        Result of eliminating variables that occur linearly in a relation.

        Args:
            substitution (dict): Eliminated Var -> MPoly in kept variables.
            kept (list of Var): Remaining variables.
            relations (list of MPoly): Remaining relations in the kept variables.
        """
        self.substitution = substitution
        self.kept = kept
        self.kept_set = set(kept)
        self.relations = relations
        self.order = {var: i for i, var in enumerate(kept)}

    def rewrite(self, poly, name = ""):
        if any(var in self.substitution for mono in poly.terms for var, _ in mono):
            result = poly.subs(self.substitution)
        else:
            result = poly
        foreign = [var for var in result.variables() if var not in self.kept_set]
        if foreign:
            logging.error(f"Variables {foreign} do not belong to presentation {name}.")
            raise ValueError(f"foreign variables {foreign}")
        return result

    def monomial_key(self, mono):
        """
        Exponent vector in the order of the kept variables, used to pick leading monomials.
        """
        vector = [0] * len(self.kept)
        for var, exp in mono:
            vector[self.order[var]] = exp
        return tuple(vector)


def _linear_candidates(relation):
    counts = {}
    for mono in relation.terms:
        for var, _ in mono:
            counts[var] = counts.get(var, 0) + 1
    for mono in relation.terms:
        if len(mono) == 1 and mono[0][1] == 1 and counts[mono[0][0]] == 1:
            yield mono[0][0]


def eliminate_linear(variables, relations):
    """
    Repeatedly removes a variable that occurs in some relation only as a lone linear term,
    preferring the highest degree and then the latest created variable.

    Returns:
        Reduction.
    """
    creation = {var: i for i, var in enumerate(variables)}
    relations = [r for r in relations if r]
    substitution = {}
    while True:
        best = None
        for index, relation in enumerate(relations):
            for var in _linear_candidates(relation):
                key = (var.degree, creation.get(var, -1))
                if best is None or key > best[0]:
                    best = (key, var, index)
        if best is None:
            break
        _, var, index = best
        relation = relations.pop(index)
        coeff = relation.terms[((var, 1),)]
        image = (relation - MPoly.variable(var) * coeff) * (Fraction(-1) / coeff)
        step = {var: image}
        substitution = {old: value.subs(step) for old, value in substitution.items()}
        substitution[var] = image
        relations = [r for r in (relation.subs(step) for relation in relations) if r]
    kept = [var for var in variables if var not in substitution]
    return Reduction(substitution, kept, relations)


class PresentationBuilder():

    def __init__(self, prefix = "") -> None:
        """
        Collects variables, relations and named edges while a web is read from bottom to top.
        """
        self.prefix = prefix
        self.variables = []
        self.relations = []
        self.edges = {}

    def block(self, stem, colour):
        block = tuple(Var(f"{self.prefix}{stem}.{i}", 2 * i) for i in range(1, colour + 1))
        self.variables.extend(block)
        return block

    def relate(self, lhs, rhs):
        for a, b in zip(lhs, rhs):
            difference = a - b
            if difference:
                self.relations.append(difference)

    def build(self, bottom, top, name):
        return RingPres(self.variables, self.relations, self.edges, bottom, top, name)


def _top_owners(web):
    """
    Maps (slice index, side) of split outputs that reach the top boundary to their top position.
    """
    sequence = [("bottom", p) for p in range(1, len(web.bottom) + 1)]
    for index, event in enumerate(web.slices):
        p = event.pos - 1
        if isinstance(event, Split):
            sequence[p:p + 1] = [("split", index, 0), ("split", index, 1)]
        else:
            sequence[p:p + 2] = [("merge", index)]
    return {key: p + 1 for p, key in enumerate(sequence) if key[0] == "split"}


def present_web(web, prefix = "", bottom = None, name = None):
    """
    Polynomial presentation of the bimodule of a ladder web.

    One block of elementary symmetric variables per bottom edge and per split output, merge outputs
    are expressions in their inputs. A split output reaching the top is the top block, any other top
    edge gets a fresh block tied to its expression.

    Args:
        web (LadderWeb): The web.
        prefix (str): Prepended to all created variable names.
        bottom (list of tuple of Var): Existing variable blocks to use for the bottom edges.
        name (str): Label of the presentation.

    Returns:
        RingPres with edges keyed ("bottom", p), ("top", p), ("split", slice, 0 or 1), ("merge", slice).
    """
    builder = PresentationBuilder(prefix)
    extra_variables = []
    if bottom is None:
        bottom_blocks = [builder.block(f"b{p}", colour) for p, colour in enumerate(web.bottom, start = 1)]
    else:
        bottom_blocks = [tuple(block) for block in bottom]
        if tuple(len(block) for block in bottom_blocks) != web.bottom:
            logging.error(f"Bottom blocks of colours {[len(b) for b in bottom_blocks]} do not fit the web bottom {web.bottom}.")
            raise WebError("bottom blocks do not match the web")
        extra_variables = [var for block in bottom_blocks for var in block]
    owners = _top_owners(web)
    current = []
    for p, block in enumerate(bottom_blocks, start = 1):
        elementaries = block_elementaries(block)
        builder.edges[("bottom", p)] = elementaries
        current.append((elementaries, False))
    for index, event in enumerate(web.slices):
        p = event.pos - 1
        if isinstance(event, Split):
            source, _ = current[p]
            outputs = []
            for side, colour in ((0, event.left), (1, event.right)):
                owner = owners.get(("split", index, side))
                stem = f"t{owner}" if owner else f"s{index}{'LR'[side]}"
                elementaries = block_elementaries(builder.block(stem, colour))
                builder.edges[("split", index, side)] = elementaries
                outputs.append((elementaries, owner is not None))
            builder.relate(union_elementaries(outputs[0][0], outputs[1][0]), source)
            current[p:p + 1] = outputs
        else:
            merged = union_elementaries(current[p][0], current[p + 1][0])
            builder.edges[("merge", index)] = merged
            current[p:p + 2] = [(merged, False)]
    top_blocks = []
    for p, (elementaries, is_block) in enumerate(current, start = 1):
        if not is_block:
            fresh = block_elementaries(builder.block(f"t{p}", len(elementaries)))
            builder.relate(fresh, elementaries)
            elementaries = fresh
        builder.edges[("top", p)] = elementaries
        top_blocks.append(elementaries)
    pres = builder.build([builder.edges[("bottom", p)] for p in range(1, len(bottom_blocks) + 1)], top_blocks,
                         name or f"{prefix}web{web.bottom}")
    if extra_variables:
        pres.variables = extra_variables + pres.variables
    return pres


def combine_presentations(pieces, bottom, top, leading = (), name = ""):
    """
    Union of presentations sharing variables at their interfaces, as used for stacked braid pieces.

    Args:
        pieces (list of RingPres): Pieces; shared variables are declared once.
        bottom (list of tuple of MPoly): Bottom boundary elementaries of the union.
        top (list of tuple of MPoly): Top boundary elementaries of the union.
        leading (iterable of Var): Variables to declare before those of the pieces.
    """
    variables = []
    seen = set()
    for var in list(leading) + [var for piece in pieces for var in piece.variables]:
        if var not in seen:
            seen.add(var)
            variables.append(var)
    relations = [relation for piece in pieces for relation in piece.relations]
    edges = {}
    for k, piece in enumerate(pieces):
        for key, value in piece.edges.items():
            edges[(k,) + key] = value
    return RingPres(variables, relations, edges, bottom, top, name)
