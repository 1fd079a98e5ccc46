"""GF(2) quadratic-plus-linear Boolean forms for graph-state phase polynomials.

The quadratic part is kept strictly upper triangular (bit j of ``rows[i]`` set
only for j > i) so that form equality is plain data equality. Linear terms
record residual Z gates; global phases are not tracked here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphFormatError, LengthMismatchError, VertexRangeError
from .graph import Graph, mask_vertices, neighborhood

__all__ = [
    "QuadraticForm",
    "zero_form",
    "from_graph",
    "to_graph",
    "evaluate",
    "apply_lc_update",
    "elc_final_form",
    "monomials",
]


@dataclass(frozen=True)
class QuadraticForm:
    """p(x) = sum of x_i x_j over quad terms + sum of x_i over linear terms, mod 2."""

    n: int
    rows: tuple[int, ...]
    lin: int = 0

    def __post_init__(self):
        if self.n < 0 or len(self.rows) != self.n:
            raise GraphFormatError(f"row count {len(self.rows)} != n = {self.n}")
        full = (1 << self.n) - 1
        if self.lin & ~full:
            raise GraphFormatError("linear part has bits beyond the last variable")
        for i, row in enumerate(self.rows):
            if row & ~full or row & ((1 << (i + 1)) - 1):
                raise GraphFormatError(f"row {i} is not strictly upper triangular")

    def quad_term_count(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def symmetric_row(self, i: int) -> int:
        """Variables paired with x_i in the quadratic part, as a bitmask."""
        mask = self.rows[i]
        for j in range(i):
            mask |= ((self.rows[j] >> i) & 1) << j
        return mask


def zero_form(n: int) -> QuadraticForm:
    return QuadraticForm(n, (0,) * n, 0)


def _upper(mask: int, i: int) -> int:
    """Bits of mask strictly above position i."""
    return mask >> (i + 1) << (i + 1)


def from_graph(g: Graph) -> QuadraticForm:
    """Edge form of g: one x_i x_j term per edge, no linear part."""
    return QuadraticForm(g.n, tuple(_upper(row, i) for i, row in enumerate(g.rows)), 0)


def to_graph(qf: QuadraticForm) -> tuple[Graph, int]:
    """Split a form into its graph (quadratic part) and residual Z-gate mask."""
    rows = list(qf.rows)
    for i, row in enumerate(qf.rows):
        for j in mask_vertices(row):
            rows[j] |= 1 << i
    return Graph(qf.n, tuple(rows)), qf.lin


def evaluate(qf: QuadraticForm, x) -> int:
    """Evaluate the form mod 2 at an assignment (bitmask or 0/1 sequence)."""
    if isinstance(x, int):
        if x < 0 or x >> qf.n:
            raise LengthMismatchError(f"assignment 0b{x:b} does not fit {qf.n} variables")
        mask = x
    else:
        if len(x) != qf.n:
            raise LengthMismatchError(f"assignment length {len(x)} != n = {qf.n}")
        mask = 0
        for i, bit in enumerate(x):
            mask |= (bit & 1) << i
    acc = (qf.lin & mask).bit_count()
    probe = mask
    while probe:
        i = (probe & -probe).bit_length() - 1
        acc += (qf.rows[i] & mask).bit_count()
        probe &= probe - 1
    return acc & 1


def apply_lc_update(qf: QuadraticForm, a: int, include_linear: bool) -> QuadraticForm:
    """Local complementation at variable a on the quadratic part.

    Complements every pair inside the neighborhood read off the quad terms;
    with ``include_linear`` the residual Z record picks up the neighborhood as
    well (the local update rule's linear correction).
    """
    if not 0 <= a < qf.n:
        raise VertexRangeError(f"variable {a} out of range for n = {qf.n}")
    mask = qf.symmetric_row(a)
    rows = list(qf.rows)
    for u in mask_vertices(mask):
        rows[u] ^= _upper(mask, u)
    lin = qf.lin ^ mask if include_linear else qf.lin
    return QuadraticForm(qf.n, tuple(rows), lin)


def elc_final_form(g1: Graph, c1: int, g2: Graph, c2: int) -> QuadraticForm:
    """Closed form of ELC on the CZ-joined pair of graphs, on n1 + n2 variables.

    Terms: the c1-c2 edge, c1 against the old neighborhood of c2 and vice
    versa, the complete bipartite block N(c1) x N(c2), and every edge of
    either graph not incident to its core, untouched. g2's variables sit above
    g1's (offset by g1.n).
    """
    g1.check_vertex(c1)
    g2.check_vertex(c2)
    off = g1.n
    n = g1.n + g2.n
    nb1 = neighborhood(g1, c1)
    nb2 = neighborhood(g2, c2) << off
    c2_global = c2 + off
    rows = [0] * n
    for i, row in enumerate(g1.rows):
        if i != c1:
            rows[i] = _upper(row & ~(1 << c1), i)
    for i, row in enumerate(g2.rows):
        if i != c2:
            rows[i + off] = _upper((row & ~(1 << c2)) << off, i + off)

    def add_pair(u: int, v: int) -> None:
        lo, hi = (u, v) if u < v else (v, u)
        rows[lo] ^= 1 << hi

    add_pair(c1, c2_global)
    for v in mask_vertices(nb2):
        add_pair(c1, v)
    for u in mask_vertices(nb1):
        add_pair(c2_global, u)
        for v in mask_vertices(nb2):
            add_pair(u, v)
    return QuadraticForm(n, tuple(rows), 0)


def monomials(qf: QuadraticForm) -> str:
    """Render as a sorted monomial list, e.g. ``x0*x1 + x2``; empty form is ``0``."""
    terms = [f"x{i}*x{j}" for i, row in enumerate(qf.rows) for j in mask_vertices(row)]
    terms.extend(f"x{i}" for i in mask_vertices(qf.lin))
    return " + ".join(terms) if terms else "0"
