"""Cactus chain constructors and their closed recurrence systems.

Families:
  T   chain of n triangles, consecutive triangles sharing a cut vertex
  Q   para-chain of n squares (cut vertices of a square non-adjacent)
  O   ortho-chain of n squares (cut vertices adjacent)

Gadget variants attach extra structure at the chain's free terminal vertex:
  X+e    one pendant vertex
  Xtri   a triangle (sharing the terminal vertex)
  X2     a pendant path of length 2
  Qp     two pendant vertices
  Op     a diamond (K4 minus an edge), sharing a degree-3 vertex

The X2/Qp/Op shapes are fixed by oracle arbitration of the published
identities, not by the stated one-line descriptions: the two-pendant star
reproduces the n=0 base polynomial but fails every identity that consumes
the X(2) stream from n=1 on, while the pendant path satisfies all of them
(and symmetrically for the primed stream).  verify.py records the evidence.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .graph import Graph
from .poly import DomPoly

CHAIN_FAMILIES = ("T", "Q", "O")
GADGET_FAMILIES = ("Q+e", "Qtri", "Q2", "Qp", "O+e", "Otri", "O2", "Op")
FAMILY_NAMES = CHAIN_FAMILIES + GADGET_FAMILIES

ATTACHMENT_KINDS = ("pendant", "triangle", "pendant_path", "two_pendants", "diamond")

# adopted by oracle arbitration; see module docstring and verify.py
ADOPTED_ATTACHMENT = {
    "Q+e": "pendant",
    "Qtri": "triangle",
    "Q2": "pendant_path",
    "Qp": "two_pendants",
    "O+e": "pendant",
    "Otri": "triangle",
    "O2": "pendant_path",
    "Op": "diamond",
}

_EXTRA_VERTICES = {
    "pendant": 1,
    "triangle": 2,
    "pendant_path": 2,
    "two_pendants": 2,
    "diamond": 3,
}


class RecurrenceConfigError(RuntimeError):
    """A closed-recurrence stream produced a non-domination polynomial."""

    def __init__(self, identity: str, detail: str):
        super().__init__(f"{identity}: {detail}")
        self.identity = identity


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILY_NAMES}")
        low = 1 if self.family == "T" else 0
        if self.n < low:
            raise ValueError(f"family {self.family} requires n >= {low}, got {self.n}")

    def build(self) -> Graph:
        return build_chain(self.family, self.n)

    def order(self) -> int:
        return family_order(self.family, self.n)


def family_order(family: str, n: int) -> int:
    """Vertex count of the family member."""
    if family == "T":
        return 2 * n + 1
    base = 3 * n + 1
    if family in ("Q", "O"):
        return base
    return base + _EXTRA_VERTICES[ADOPTED_ATTACHMENT[family]]


# -- constructors ----------------------------------------------------------

def triangle_chain(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"triangle chain requires n >= 1, got {n}")
    edges = []
    for k in range(1, n + 1):
        c0, m, c1 = 2 * (k - 1), 2 * k - 1, 2 * k
        edges += [(c0, m), (m, c1), (c0, c1)]
    return Graph.from_edges(2 * n + 1, edges)


def para_chain(n: int) -> Graph:
    """Q_n; Q_0 is the single-vertex graph."""
    if n < 0:
        raise ValueError(f"chain length must be nonnegative, got {n}")
    edges = []
    for k in range(1, n + 1):
        c0, a, b, c1 = 3 * (k - 1), 3 * k - 2, 3 * k - 1, 3 * k
        edges += [(c0, a), (c0, b), (a, c1), (b, c1)]
    return Graph.from_edges(3 * n + 1, edges)


def ortho_chain(n: int) -> Graph:
    """O_n; O_0 is the single-vertex graph."""
    if n < 0:
        raise ValueError(f"chain length must be nonnegative, got {n}")
    edges = []
    for k in range(1, n + 1):
        c0, d, e, c1 = 3 * (k - 1), 3 * k - 2, 3 * k - 1, 3 * k
        edges += [(c0, c1), (c0, d), (d, e), (e, c1)]
    return Graph.from_edges(3 * n + 1, edges)


def attach_gadget(g: Graph, v: int, kind: str) -> Graph:
    """Attach the named structure at vertex v (new vertices labeled upward)."""
    g._check_vertex(v)
    n = g.n
    edges = list(g.edges())
    if kind == "pendant":
        edges += [(v, n)]
        extra = 1
    elif kind == "triangle":
        edges += [(v, n), (n, n + 1), (n + 1, v)]
        extra = 2
    elif kind == "pendant_path":
        edges += [(v, n), (n, n + 1)]
        extra = 2
    elif kind == "two_pendants":
        edges += [(v, n), (v, n + 1)]
        extra = 2
    elif kind == "diamond":
        # v and n+1 form the degree-3 pair of the diamond
        edges += [(v, n), (n, n + 1), (n + 1, v), (v, n + 2), (n + 1, n + 2)]
        extra = 3
    else:
        raise ValueError(f"unknown attachment kind {kind!r}")
    return Graph.from_edges(n + extra, edges)


def terminal_vertex(family: str, n: int) -> int:
    """The free end of the chain, where gadgets attach."""
    return 2 * n if family == "T" else 3 * n


def build_chain(family: str, n: int, attachment: str | None = None) -> Graph:
    """Build a chain or gadget graph; `attachment` overrides the adopted shape."""
    FamilySpec(family, n)  # validates name and range
    if family == "T":
        return triangle_chain(n)
    base_builder = para_chain if family.startswith("Q") else ortho_chain
    base = base_builder(n)
    if family in ("Q", "O"):
        if attachment is not None:
            raise ValueError("plain chains take no attachment")
        return base
    kind = attachment or ADOPTED_ATTACHMENT[family]
    return attach_gadget(base, terminal_vertex(family[0], n), kind)


# -- T chain: closed recurrences ---------------------------------------------

_D_T1 = DomPoly((0, 3, 3, 1))
_D_T2 = DomPoly((0, 1, 8, 10, 5, 1))
_T_MULT_1 = DomPoly((0, 2, 1))  # x^2 + 2x
_T_MULT_2 = DomPoly((0, 1, 1))  # x^2 + x

T0_COUNT_SEED = 2  # formal seed of the count sequence; T_0 is not a graph here
T1_COUNT = 7


def t_polynomial(n: int) -> DomPoly:
    """D(T_n,x) by the order-2 polynomial recurrence."""
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    if n == 1:
        return _D_T1
    prev, cur = _D_T1, _D_T2
    for _ in range(3, n + 1):
        prev, cur = cur, _T_MULT_1 * cur + _T_MULT_2 * prev
    return cur


def t_coefficient_table(n: int) -> list[int]:
    """Row of dominating-set counts d(T_n, k), k = 0..2n+1, by the two-variable recurrence."""
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    prev = list(_D_T1.coeffs)
    if n == 1:
        return prev + [0] * (4 - len(prev))
    cur = list(_D_T2.coeffs)
    for m in range(3, n + 1):
        size = 2 * m + 2
        row = [0] * size
        for k in range(size):
            v = 0
            if k >= 1:
                if k - 1 < len(cur):
                    v += 2 * cur[k - 1]
                if k - 1 < len(prev):
                    v += prev[k - 1]
            if k >= 2:
                if k - 2 < len(cur):
                    v += cur[k - 2]
                if k - 2 < len(prev):
                    v += prev[k - 2]
            row[k] = v
        prev, cur = cur, row
    return cur + [0] * (2 * n + 2 - len(cur))


def t_count_sequence(n_max: int) -> list[int]:
    """t_0..t_{n_max}: total dominating-set counts via t_n = 3 t_{n-1} + 2 t_{n-2}."""
    if n_max < 0:
        raise ValueError(f"n_max >= 0 required, got {n_max}")
    seq = [T0_COUNT_SEED, T1_COUNT]
    while len(seq) <= n_max:
        seq.append(3 * seq[-1] + 2 * seq[-2])
    return seq[: n_max + 1]


# -- Q and O chains: coupled stream recurrences --------------------------------

@dataclass(frozen=True)
class CoupledState:
    """Per-index record of the five stream polynomials of a square-chain family."""

    n: int
    chain: DomPoly       # D(X_n)
    plus_e: DomPoly      # D(X_n + e)
    triangle: DomPoly    # D(X_n^tri)
    double: DomPoly      # D(X_n(2))
    primed: DomPoly      # D(X_n')


_X = DomPoly.x()
_X2 = DomPoly.monomial(1, 2)
_ONE_PLUS_X = DomPoly((1, 1))

# stated initial conditions
_D_Q1 = DomPoly((0, 0, 6, 4, 1))
_D_Q2 = DomPoly((0, 0, 0, 15, 29, 21, 7, 1))
_D_Q1_PLUS_E = DomPoly((0, 0, 4, 9, 5, 1))
_D_Q0_TRIANGLE = DomPoly((0, 3, 3, 1))
_D_Q0_DOUBLE = DomPoly((0, 1, 3, 1))
_D_Q0_PRIME = DomPoly((0, 1, 3, 1))
_D_O1 = _D_Q1
_D_O1_PLUS_E = _D_Q1_PLUS_E
_D_O0_TRIANGLE = DomPoly((0, 3, 3, 1))
_D_O0_DOUBLE = DomPoly((0, 1, 3, 1))
_D_O0_PRIME = DomPoly((0, 2, 6, 4, 1))

# Q theorem multipliers
_Q_M1 = DomPoly((0, 1, 2, 1))      # x^3 + 2x^2 + x
_Q_M2 = DomPoly((0, 0, 2, 1))      # x^3 + 2x^2
_Q_M3 = DomPoly((0, 0, 3, 1))      # x^3 + 3x^2
_Q_M4 = DomPoly((0, 0, 0, 4, 2))   # 2x^4 + 4x^3
# O theorem multiplier
_O_M1 = DomPoly((0, 2, 1))         # x^2 + 2x


def _validated(p: DomPoly, order: int, identity: str) -> DomPoly:
    """Check the domination-polynomial invariants a stream value must satisfy."""
    if order == 0:
        expected_ok = p == DomPoly.one()
        if not expected_ok:
            raise RecurrenceConfigError(identity, f"expected constant 1, got {p.to_text()}")
        return p
    if p.degree != order:
        raise RecurrenceConfigError(identity, f"degree {p.degree} != vertex count {order}")
    if p[order] != 1:
        raise RecurrenceConfigError(identity, f"leading coefficient {p[order]} != 1")
    if p[0] != 0:
        raise RecurrenceConfigError(identity, f"nonzero constant term {p[0]}")
    if any(c < 0 for c in p.coeffs):
        raise RecurrenceConfigError(identity, "negative coefficient")
    return p


def q_stream(n: int, lemma_iii_power: int = 1) -> list[CoupledState]:
    """Bottom-up Q-stream states for k = 0..n.

    lemma_iii_power selects the coefficient on the primed back-reference in
    the primed-stream identity: 1 is the oracle-validated (adopted) form,
    2 is the variant appearing in the identity's published derivation.
    """
    if n < 0:
        raise ValueError(f"n >= 0 required, got {n}")
    if lemma_iii_power not in (1, 2):
        raise ValueError("lemma_iii_power must be 1 or 2")
    iii_coeff = _X if lemma_iii_power == 1 else _X2

    # unstated stream bases, derived by oracle on the tiny base graphs
    q0 = oracle.domination_polynomial(para_chain(0))
    q0e = oracle.domination_polynomial(attach_gadget(para_chain(0), 0, "pendant"))

    states: list[CoupledState] = []
    chain: list[DomPoly] = []
    plus_e: list[DomPoly] = []
    primed: list[DomPoly] = []
    for k in range(n + 1):
        if k == 0:
            ch, pe, pr = q0, q0e, _D_Q0_PRIME
            tri, dbl = _D_Q0_TRIANGLE, _D_Q0_DOUBLE
        else:
            if k == 1:
                ch, pe = _D_Q1, _D_Q1_PLUS_E
            elif k == 2:
                ch = _D_Q2
                pe = _X * (ch + chain[1]) + _X * primed[1] + DomPoly.monomial(2, 2) * primed[0]
            else:
                ch = (
                    _Q_M1 * chain[k - 1]
                    + _Q_M2 * chain[k - 2]
                    + _Q_M3 * primed[k - 2]
                    + _Q_M4 * primed[k - 3]
                )
                pe = (
                    _X * (ch + chain[k - 1])
                    + _X * primed[k - 1]
                    + DomPoly.monomial(2, 2) * primed[k - 2]
                )
            pr = _ONE_PLUS_X * pe - iii_coeff * primed[k - 1]
            tri = _ONE_PLUS_X * pe + _X * primed[k - 1]
            dbl = _X * (pe + ch + primed[k - 1])
        base = 3 * k + 1
        st = CoupledState(
            n=k,
            chain=_validated(ch, base, f"Q-chain n={k}"),
            plus_e=_validated(pe, base + 1, f"Q+e stream n={k}"),
            triangle=_validated(tri, base + 2, f"Qtri stream n={k}"),
            double=_validated(dbl, base + 2, f"Q2 stream n={k}"),
            primed=_validated(pr, base + 2, f"Qp stream n={k}"),
        )
        states.append(st)
        chain.append(st.chain)
        plus_e.append(st.plus_e)
        primed.append(st.primed)
    return states


def q_polynomial(n: int, lemma_iii_power: int = 1) -> DomPoly:
    """D(Q_n,x) via the coupled closed system."""
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    return q_stream(n, lemma_iii_power=lemma_iii_power)[n].chain


def o_stream(n: int) -> list[CoupledState]:
    """Bottom-up O-stream states for k = 0..n.

    The pendant-stream identity is applied with the primed back-reference at
    index n-1 (the adopted, degree-consistent form; the published index is
    off by one -- see verify.py).
    """
    if n < 0:
        raise ValueError(f"n >= 0 required, got {n}")
    o0 = oracle.domination_polynomial(ortho_chain(0))
    o0e = oracle.domination_polynomial(attach_gadget(ortho_chain(0), 0, "pendant"))

    states: list[CoupledState] = []
    chain: list[DomPoly] = []
    plus_e: list[DomPoly] = []
    double: list[DomPoly] = []
    primed: list[DomPoly] = []
    for k in range(n + 1):
        if k == 0:
            ch, pe = o0, o0e
            tri, dbl, pr = _D_O0_TRIANGLE, _D_O0_DOUBLE, _D_O0_PRIME
        else:
            if k == 1:
                ch, pe = _D_O1, _D_O1_PLUS_E
            else:
                ch = _X * chain[k - 1] + _O_M1 * plus_e[k - 1] + _X2 * double[k - 2]
                pe = _X * primed[k - 1] + _X * double[k - 1] + _X2 * double[k - 2]
            tri = _ONE_PLUS_X * pe + _X * double[k - 1]
            dbl = _X * (pe + ch + double[k - 1])
            pr = _ONE_PLUS_X * tri - _X * double[k - 1]
        base = 3 * k + 1
        st = CoupledState(
            n=k,
            chain=_validated(ch, base, f"O-chain n={k}"),
            plus_e=_validated(pe, base + 1, f"O+e stream n={k}"),
            triangle=_validated(tri, base + 2, f"Otri stream n={k}"),
            double=_validated(dbl, base + 2, f"O2 stream n={k}"),
            primed=_validated(pr, base + 3, f"Op stream n={k}"),
        )
        states.append(st)
        chain.append(st.chain)
        plus_e.append(st.plus_e)
        double.append(st.double)
        primed.append(st.primed)
    return states


def o_polynomial(n: int) -> DomPoly:
    """D(O_n,x) via the coupled closed system."""
    if n < 1:
        raise ValueError(f"n >= 1 required, got {n}")
    return o_stream(n)[n].chain


_STREAM_FIELD = {
    "+e": "plus_e",
    "tri": "triangle",
    "2": "double",
    "p": "primed",
}


def family_polynomial(family: str, n: int) -> DomPoly:
    """Recurrence-path polynomial for any family name, including gadget streams."""
    FamilySpec(family, n)  # validates name and range
    if family == "T":
        return t_polynomial(n)
    if family[0] == "Q":
        states = q_stream(n)
    else:
        states = o_stream(n)
    if family in ("Q", "O"):
        if n < 1:
            raise ValueError("chain recurrences start at n = 1")
        return states[n].chain
    return getattr(states[n], _STREAM_FIELD[family[1:]])
