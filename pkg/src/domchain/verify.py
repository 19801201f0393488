"""Cross-checks every published chain identity against the enumeration oracle.

Each check builds the actual graphs on both sides of an identity, evaluates
the right-hand side from oracle polynomials of the ingredient graphs, and
compares coefficient-exactly with the oracle polynomial of the subject graph.
Checks marked adopted=False exercise variants of the published system that
the oracle rejects; their mismatches are report content, not failures, and
feed the errata table.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import families, oracle
from .poly import DomPoly

_X = DomPoly.x()
_X2 = DomPoly.monomial(1, 2)
_ONE_PLUS_X = DomPoly((1, 1))


@dataclass(frozen=True)
class IdentityCheck:
    family: str
    n: int
    identity: str
    recurrence: DomPoly
    oracle_poly: DomPoly
    adopted: bool = True

    @property
    def match(self) -> bool:
        return self.recurrence == self.oracle_poly

    @property
    def first_mismatch(self) -> int | None:
        """Lowest coefficient index where the two sides differ, or None."""
        top = max(self.recurrence.degree, self.oracle_poly.degree)
        for i in range(top + 1):
            if self.recurrence[i] != self.oracle_poly[i]:
                return i
        return None

    def to_json_dict(self) -> dict:
        d = {
            "family": self.family,
            "n": self.n,
            "identity": self.identity,
            "recurrence": self.recurrence.coeff_strings(),
            "oracle": self.oracle_poly.coeff_strings(),
            "match": self.match,
            "adopted": self.adopted,
        }
        if not self.match:
            d["first_mismatch"] = self.first_mismatch
        return d


@dataclass(frozen=True)
class Erratum:
    identity: str
    stated: str
    validated: str
    evidence: str

    def to_json_dict(self) -> dict:
        return {
            "identity": self.identity,
            "stated": self.stated,
            "validated": self.validated,
            "evidence": self.evidence,
        }


@dataclass
class VerificationReport:
    max_n: int
    families: tuple[str, ...]
    checks: list[IdentityCheck] = field(default_factory=list)
    errata: list[Erratum] = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        """True iff every adopted-form check matches the oracle."""
        return all(c.match for c in self.checks if c.adopted)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok      " if c.match else "MISMATCH"
            tag = "" if c.adopted else "  [literal variant]"
            lines.append(f"{status}  {c.identity}  n={c.n}{tag}")
            if not c.match:
                lines.append(f"          recurrence: {c.recurrence.to_text()}")
                lines.append(f"          oracle:     {c.oracle_poly.to_text()}")
                lines.append(f"          first differing coefficient: x^{c.first_mismatch}")
        if self.errata:
            lines.append("")
            lines.append("errata:")
            for e in self.errata:
                lines.append(f"  - {e.identity}")
                lines.append(f"      stated:    {e.stated}")
                lines.append(f"      validated: {e.validated}")
                lines.append(f"      evidence:  {e.evidence}")
        n_adopted = sum(1 for c in self.checks if c.adopted)
        n_ok = sum(1 for c in self.checks if c.adopted and c.match)
        lines.append("")
        lines.append(
            f"adopted checks: {n_ok}/{n_adopted} match; "
            f"overall: {'ALL MATCH' if self.all_match else 'MISMATCH'}"
        )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "families": list(self.families),
            "all_match": self.all_match,
            "checks": [c.to_json_dict() for c in self.checks],
            "errata": [e.to_json_dict() for e in self.errata],
        }


class _OracleCache:
    """Oracle polynomials of family members, keyed by (family, n, attachment)."""

    def __init__(self, cap: int):
        self.cap = cap
        self._polys: dict[tuple, DomPoly] = {}

    def fits(self, family: str, n: int, attachment: str | None = None) -> bool:
        if attachment is None:
            return families.family_order(family, n) <= self.cap
        base = 2 * n + 1 if family == "T" else 3 * n + 1
        extra = {"pendant": 1, "triangle": 2, "pendant_path": 2,
                 "two_pendants": 2, "diamond": 3}[attachment]
        return base + extra <= self.cap

    def poly(self, family: str, n: int, attachment: str | None = None) -> DomPoly:
        key = (family, n, attachment)
        if key not in self._polys:
            g = families.build_chain(family, n, attachment=attachment)
            self._polys[key] = oracle.domination_polynomial(g, cap=self.cap)
        return self._polys[key]


def _const(value: int) -> DomPoly:
    return DomPoly((value,))


def verify_families(
    max_n: int = 6,
    family_subset: tuple[str, ...] | None = None,
    include_literal: bool = False,
    cap: int | None = None,
) -> VerificationReport:
    """Check every chain identity against the oracle for all n within the cap."""
    fams = tuple(family_subset) if family_subset else ("T", "Q", "O")
    for f in fams:
        if f not in ("T", "Q", "O"):
            raise ValueError(f"unknown family {f!r}; expected T, Q, or O")
    cap = oracle.DEFAULT_CAP if cap is None else cap
    c = _OracleCache(cap)
    report = VerificationReport(max_n=max_n, families=fams)
    add = report.checks.append

    if "T" in fams:
        _verify_t(max_n, c, add)
    if "Q" in fams:
        _verify_q(max_n, c, add, include_literal)
    if "O" in fams:
        _verify_o(max_n, c, add, include_literal)
    report.errata.extend(_errata(fams, include_literal))
    return report


def _verify_t(max_n, c, add):
    m1 = DomPoly((0, 2, 1))
    m2 = DomPoly((0, 1, 1))
    for n in range(3, max_n + 1):
        if not c.fits("T", n):
            break
        rhs = m1 * c.poly("T", n - 1) + m2 * c.poly("T", n - 2)
        add(IdentityCheck("T", n, "T-chain order-2 polynomial recurrence", rhs, c.poly("T", n)))
    for n in range(1, max_n + 1):
        if not c.fits("T", n):
            break
        row = DomPoly(families.t_coefficient_table(n))
        add(IdentityCheck("T", n, "d(T_n,k) coefficient-table recurrence", row, c.poly("T", n)))
        g = families.build_chain("T", n)
        t_n = families.t_count_sequence(n)[n]
        add(IdentityCheck(
            "T", n, "t_n = 3t_{n-1} + 2t_{n-2} total-count recurrence",
            _const(t_n), _const(oracle.count_dominating_sets(g, cap=c.cap)),
        ))


def _verify_q(max_n, c, add, include_literal):
    th1 = DomPoly((0, 1, 2, 1))
    th2 = DomPoly((0, 0, 2, 1))
    th3 = DomPoly((0, 0, 3, 1))
    th4 = DomPoly((0, 0, 0, 4, 2))
    for n in range(1, max_n + 1):
        if not c.fits("Qp", n):
            break
        pe = c.poly("Q+e", n)
        pr_prev = c.poly("Qp", n - 1)
        add(IdentityCheck("Q", n, "Q triangle-gadget identity (i)",
                          _ONE_PLUS_X * pe + _X * pr_prev, c.poly("Qtri", n)))
        add(IdentityCheck("Q", n, "Q pendant-pair identity (ii)",
                          _X * (pe + c.poly("Q", n) + pr_prev), c.poly("Q2", n)))
        add(IdentityCheck("Q", n, "Q primed identity (iii), adopted -x form",
                          _ONE_PLUS_X * pe - _X * pr_prev, c.poly("Qp", n)))
        if include_literal:
            add(IdentityCheck("Q", n, "Q primed identity (iii), proof-line -x^2 variant",
                              _ONE_PLUS_X * pe - _X2 * pr_prev, c.poly("Qp", n),
                              adopted=False))
            add(IdentityCheck("Q", n, "Q pendant-pair identity (ii), two-pendant star shape",
                              _X * (pe + c.poly("Q", n) + pr_prev),
                              c.poly("Q2", n, attachment="two_pendants"),
                              adopted=False))
        if n >= 2:
            add(IdentityCheck(
                "Q", n, "Q pendant identity (iv)",
                _X * (c.poly("Q", n) + c.poly("Q", n - 1))
                + _X * pr_prev + DomPoly.monomial(2, 2) * c.poly("Qp", n - 2),
                pe,
            ))
        if n >= 3:
            rhs = (th1 * c.poly("Q", n - 1) + th2 * c.poly("Q", n - 2)
                   + th3 * c.poly("Qp", n - 2) + th4 * c.poly("Qp", n - 3))
            add(IdentityCheck("Q", n, "Q-chain order-3 theorem recurrence", rhs, c.poly("Q", n)))
    # closed system end-to-end
    top = max_n
    while top >= 0 and not c.fits("Qp", top):
        top -= 1
    if top >= 0:
        states = families.q_stream(top)
        for n in range(1, top + 1):
            st = states[n]
            for fam, val in (("Q", st.chain), ("Q+e", st.plus_e), ("Qtri", st.triangle),
                             ("Q2", st.double), ("Qp", st.primed)):
                add(IdentityCheck("Q", n, f"closed {fam} stream vs oracle", val, c.poly(fam, n)))


def _verify_o(max_n, c, add, include_literal):
    m_pe = DomPoly((0, 2, 1))
    for n in range(1, max_n + 1):
        if not c.fits("Op", n):
            break
        pe = c.poly("O+e", n)
        dbl_prev = c.poly("O2", n - 1)
        tri = c.poly("Otri", n)
        add(IdentityCheck("O", n, "O triangle-gadget identity (i)",
                          _ONE_PLUS_X * pe + _X * dbl_prev, tri))
        add(IdentityCheck("O", n, "O pendant-pair identity (ii)",
                          _X * (pe + c.poly("O", n) + dbl_prev), c.poly("O2", n)))
        add(IdentityCheck("O", n, "O primed identity (iii)",
                          _ONE_PLUS_X * tri - _X * dbl_prev, c.poly("Op", n)))
        if include_literal:
            add(IdentityCheck("O", n, "O pendant-pair identity (ii), two-pendant star shape",
                              _X * (pe + c.poly("O", n) + dbl_prev),
                              c.poly("O2", n, attachment="two_pendants"),
                              adopted=False))
        if n >= 2:
            add(IdentityCheck(
                "O", n, "O pendant identity (iv), adopted index-shifted form",
                _X * c.poly("Op", n - 1) + _X * dbl_prev + _X2 * c.poly("O2", n - 2),
                pe,
            ))
            if include_literal:
                add(IdentityCheck(
                    "O", n, "O pendant identity (iv), literal unshifted form",
                    _X * c.poly("Op", n) + _X * dbl_prev + _X2 * c.poly("O2", n - 2),
                    pe,
                    adopted=False,
                ))
            add(IdentityCheck(
                "O", n, "O-chain theorem recurrence",
                _X * c.poly("O", n - 1) + m_pe * c.poly("O+e", n - 1)
                + _X2 * c.poly("O2", n - 2),
                c.poly("O", n),
            ))
    top = max_n
    while top >= 0 and not c.fits("Op", top):
        top -= 1
    if top >= 0:
        states = families.o_stream(top)
        for n in range(1, top + 1):
            st = states[n]
            for fam, val in (("O", st.chain), ("O+e", st.plus_e), ("Otri", st.triangle),
                             ("O2", st.double), ("Op", st.primed)):
                add(IdentityCheck("O", n, f"closed {fam} stream vs oracle", val, c.poly(fam, n)))


def _errata(fams: tuple[str, ...], include_literal: bool) -> list[Erratum]:
    out = []
    if "Q" in fams:
        out.append(Erratum(
            identity="Q primed identity (iii)",
            stated="statement subtracts x*D(Q_{n-1}'); the accompanying derivation "
                   "ends with x^2*D(Q_{n-1}') instead",
            validated="coefficient x (the statement form); the derivation's x^2 is a typo",
            evidence="the -x form matches the oracle for every checked n; the -x^2 "
                     "variant first diverges at n=1"
                     + (" (see the literal-variant checks above)" if include_literal else ""),
        ))
        out.append(Erratum(
            identity="Q_n(2) gadget shape",
            stated="two extra vertices at the terminal (figure-only definition, "
                   "base polynomial x^3+3x^2+x fits both a 2-pendant star and a "
                   "pendant 2-path)",
            validated="pendant path of length 2 at the terminal vertex",
            evidence="the star shape reproduces the n=0 base but fails the "
                     "pendant-pair identity (ii) from n=1 on; the path shape "
                     "matches the oracle for all checked n",
        ))
    if "O" in fams:
        out.append(Erratum(
            identity="O pendant identity (iv)",
            stated="x*D(O_n') + x*D(O_{n-1}(2)) + x^2*D(O_{n-2}(2))",
            validated="x*D(O_{n-1}') + x*D(O_{n-1}(2)) + x^2*D(O_{n-2}(2))",
            evidence="the stated form is degree-inconsistent (x*D(O_n') has degree "
                     "3n+5, the left side 3n+2) and fails the oracle for all n>=2; "
                     "shifting the primed index to n-1 matches exactly",
        ))
        out.append(Erratum(
            identity="O-chain theorem heading",
            stated="names O_n a para-chain",
            validated="O_n is the ortho-chain (adjacent cut vertices); Q_n is the "
                      "para-chain",
            evidence="naming only; no formula affected",
        ))
        out.append(Erratum(
            identity="O_n(2) gadget shape",
            stated="two extra vertices at the terminal (figure-only definition)",
            validated="pendant path of length 2 at the terminal vertex",
            evidence="as for Q_n(2): the star shape fails identities (i)-(iv) "
                     "from n=1 on, the path shape matches the oracle throughout",
        ))
    return out
