"""Integer linear programming bounds on the number of classical bits of hybrid codes.

Variables are the enumerators a = A_perp (of C0) and b = B_perp (of C); the
enumerators A (of C0*) and B (of C*) are their MacWilliams images. The
program is solved exactly: rational phase-1 simplex plus branch-and-bound on
the most fractional of a, b, A, B and, when constrained, the shadow.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import floor
from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd
import structlog
from pydantic import BaseModel, model_validator

from ..core.config import get_settings
from ..core.exceptions import require_qubits
from .krawtchouk import krawtchouk_matrix, shadow_matrix
from .simplex import LinearConstraint, find_feasible_point

logger = structlog.get_logger(__name__)

Vector = Tuple[Fraction, ...]


class BoundQuery(BaseModel):
    """Does an [[n, k:m, d]] qubit code survive the enumerator program?"""

    n: int
    k: int
    m: int
    d: int
    q: int = 2
    use_shadow: bool = True

    @model_validator(mode="after")
    def check_ranges(self) -> "BoundQuery":
        if self.k < 0 or self.m < 0 or self.k + self.m > self.n:
            raise ValueError(
                f"need 0 <= k, 0 <= m and k + m <= n, got n={self.n} k={self.k} m={self.m}"
            )
        if not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got d={self.d}")
        return self


class Verdict(str, Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LinearForm:
    """An integral quantity of the program as a linear form in (a, b)."""

    label: str
    coeffs: Vector

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, x) if c), Fraction(0))


@dataclass
class EnumeratorProgram:
    query: BoundQuery
    constraints: List[LinearConstraint]
    a_forms: List[LinearForm]
    b_forms: List[LinearForm]
    big_a_forms: List[LinearForm]
    big_b_forms: List[LinearForm]
    shadow_forms: List[LinearForm]

    @property
    def n(self) -> int:
        return self.query.n

    @property
    def num_variables(self) -> int:
        return 2 * (self.n + 1)

    @property
    def integral_forms(self) -> List[LinearForm]:
        """Branching order: a, b, A, B, then the shadow when it is constrained."""
        forms = self.a_forms + self.b_forms + self.big_a_forms + self.big_b_forms
        if self.query.use_shadow:
            forms = forms + self.shadow_forms
        return forms

    def assignment(self, a: Sequence[int], b: Sequence[int]) -> Vector:
        return tuple(Fraction(v) for v in list(a) + list(b))

    def derived(self, x: Sequence[Fraction]) -> Dict[str, List[Fraction]]:
        return {
            "a_perp": [f.value(x) for f in self.a_forms],
            "a": [f.value(x) for f in self.big_a_forms],
            "b_perp": [f.value(x) for f in self.b_forms],
            "b": [f.value(x) for f in self.big_b_forms],
        }


def _unit(size: int, index: int, scale: Fraction = Fraction(1)) -> Vector:
    return tuple(scale if j == index else Fraction(0) for j in range(size))


def _combine(*terms: Tuple[Fraction, Vector]) -> Vector:
    size = len(terms[0][1])
    return tuple(sum((s * v[j] for s, v in terms), Fraction(0)) for j in range(size))


def build_program(qy: BoundQuery) -> EnumeratorProgram:
    """Assemble every constraint of the enumerator program with exact coefficients."""
    require_qubits(qy.q)
    n, k, m, d = qy.n, qy.k, qy.m, qy.d
    size = 2 * (n + 1)
    zero = (Fraction(0),) * (n + 1)
    krawtchouk = krawtchouk_matrix(n)
    size_c0 = 2 ** (n - k)
    size_c = 2 ** (n - k - m)

    a_forms = [LinearForm(f"a_perp[{w}]", _unit(size, w)) for w in range(n + 1)]
    b_forms = [LinearForm(f"b_perp[{w}]", _unit(size, n + 1 + w)) for w in range(n + 1)]
    big_a_forms = [
        LinearForm(f"a[{w}]", tuple(Fraction(c, size_c0) for c in krawtchouk[w]) + zero)
        for w in range(n + 1)
    ]
    big_b_forms = [
        LinearForm(f"b[{w}]", zero + tuple(Fraction(c, size_c) for c in krawtchouk[w]))
        for w in range(n + 1)
    ]
    shadow = shadow_matrix(n)
    shadow_forms = [
        LinearForm(f"shadow[{w}]", tuple(Fraction(c, size_c0) for c in shadow[w]) + zero)
        for w in range(n + 1)
    ]

    one = Fraction(1)
    constraints: List[LinearConstraint] = []

    def add(label: str, coeffs: Vector, sense: str, rhs: int) -> None:
        constraints.append(LinearConstraint(coeffs, sense, Fraction(rhs), label))

    add("a_perp[0] = 1", a_forms[0].coeffs, "==", 1)
    add("a[0] = 1", big_a_forms[0].coeffs, "==", 1)
    add("b[0] = 1", big_b_forms[0].coeffs, "==", 1)
    add("b_perp[0] = 1", b_forms[0].coeffs, "==", 1)

    def total(forms: List[LinearForm]) -> Vector:
        return _combine(*((one, f.coeffs) for f in forms))

    add(f"sum a_perp = 2^{n - k}", total(a_forms), "==", 2 ** (n - k))
    add(f"sum a = 2^{n + k}", total(big_a_forms), "==", 2 ** (n + k))
    add(f"sum b_perp = 2^{n - k - m}", total(b_forms), "==", 2 ** (n - k - m))
    add(f"sum b = 2^{n + k + m}", total(big_b_forms), "==", 2 ** (n + k + m))

    def below(lower: LinearForm, upper: LinearForm) -> Vector:
        return _combine((one, lower.coeffs), (-one, upper.coeffs))

    for w in range(n + 1):
        add(f"b_perp[{w}] <= a_perp[{w}]", below(b_forms[w], a_forms[w]), "<=", 0)
        add(f"a_perp[{w}] <= a[{w}]", below(a_forms[w], big_a_forms[w]), "<=", 0)
        add(f"a[{w}] <= b[{w}]", below(big_a_forms[w], big_b_forms[w]), "<=", 0)
    for w in range(1, d):
        add(f"a_perp[{w}] = a[{w}]", below(a_forms[w], big_a_forms[w]), "==", 0)
        add(f"a[{w}] = b[{w}]", below(big_a_forms[w], big_b_forms[w]), "==", 0)
    if qy.use_shadow:
        for form in shadow_forms:
            add(f"{form.label} >= 0", form.coeffs, ">=", 0)

    return EnumeratorProgram(
        query=qy,
        constraints=constraints,
        a_forms=a_forms,
        b_forms=b_forms,
        big_a_forms=big_a_forms,
        big_b_forms=big_b_forms,
        shadow_forms=shadow_forms,
    )


@dataclass
class SolveStats:
    pivots: int = 0
    nodes: int = 0
    lp_solves: int = 0
    restarted: bool = False


@dataclass
class FeasibilityResult:
    verdict: Verdict
    certificate: Optional[Dict[str, List[Fraction]]] = None
    witness: Dict[str, Any] = field(default_factory=dict)
    stats: SolveStats = field(default_factory=SolveStats)

    @property
    def feasible(self) -> bool:
        return self.verdict == Verdict.FEASIBLE


def _fractional_part(v: Fraction) -> Fraction:
    return v - floor(v)


def _most_fractional(
    program: EnumeratorProgram, x: Sequence[Fraction]
) -> Tuple[Optional[int], Fraction, Fraction]:
    """(index, value, total fractionality) over the integral forms; index None if integral."""
    best: Optional[int] = None
    best_distance = Fraction(0)
    best_value = Fraction(0)
    total = Fraction(0)
    for i, form in enumerate(program.integral_forms):
        v = form.value(x)
        frac = _fractional_part(v)
        if frac == 0:
            continue
        distance = min(frac, 1 - frac)
        total += distance
        # strict comparison keeps the lowest index on ties
        if distance > best_distance:
            best, best_distance, best_value = i, distance, v
    return best, best_value, total


@dataclass(order=True)
class _Node:
    priority: Fraction
    seq: int
    bounds: Tuple[LinearConstraint, ...] = field(compare=False)


def ip_feasible(
    program: EnumeratorProgram, restart_nodes: Optional[int] = None
) -> FeasibilityResult:
    """Exact integer feasibility of the program by depth-first branch-and-bound.

    After ``restart_nodes`` nodes the open nodes are reordered best-first by
    the fractionality of their parent's LP solution.
    """
    restart_nodes = get_settings().bnb_restart_nodes if restart_nodes is None else restart_nodes
    stats = SolveStats()
    forms = program.integral_forms
    stack: List[_Node] = [_Node(Fraction(0), 0, ())]
    heap: List[_Node] = []
    seq = 1
    last_bound: Optional[str] = None

    while stack or heap:
        if heap:
            node = heapq.heappop(heap)
        else:
            node = stack.pop()
        stats.nodes += 1
        if not stats.restarted and stats.nodes >= restart_nodes and stack:
            stats.restarted = True
            heap = list(stack)
            heapq.heapify(heap)
            stack = []
            logger.info(
                "Branch-and-bound switched to best-first", nodes=stats.nodes, open=len(heap)
            )

        lp = find_feasible_point(
            program.num_variables, program.constraints + list(node.bounds)
        )
        stats.lp_solves += 1
        stats.pivots += lp.pivots
        if not lp.feasible:
            if node.bounds:
                last_bound = node.bounds[-1].label
            continue
        x = lp.values
        assert x is not None
        index, value, fractionality = _most_fractional(program, x)
        if index is None:
            logger.debug("Integer point found", nodes=stats.nodes, pivots=stats.pivots)
            return FeasibilityResult(
                verdict=Verdict.FEASIBLE,
                certificate=program.derived(x),
                stats=stats,
            )
        form = forms[index]
        low = floor(value)
        down = LinearConstraint(form.coeffs, "<=", Fraction(low), f"{form.label} <= {low}")
        up = LinearConstraint(form.coeffs, ">=", Fraction(low + 1), f"{form.label} >= {low + 1}")
        children = [
            _Node(fractionality, seq + 1, node.bounds + (up,)),
            _Node(fractionality, seq, node.bounds + (down,)),
        ]
        seq += 2
        if stats.restarted:
            for child in children:
                heapq.heappush(heap, child)
        else:
            # floor branch is explored first
            stack.extend(children)

    witness: Dict[str, Any] = {
        "reason": "relaxation infeasible" if stats.nodes == 1 else "branch-and-bound exhausted",
        "nodes": stats.nodes,
    }
    if last_bound is not None:
        witness["last_branch"] = last_bound
    return FeasibilityResult(verdict=Verdict.INFEASIBLE, witness=witness, stats=stats)


def check_certificate(
    program: EnumeratorProgram, certificate: Dict[str, Sequence[Fraction]]
) -> List[str]:
    """Labels of the constraints a certificate violates; empty when it is valid.

    The certificate is re-evaluated from its ``a_perp`` and ``b_perp`` vectors;
    the stated ``a`` and ``b`` must match their MacWilliams images and every
    enumerator must be integral.
    """
    x = tuple(Fraction(v) for v in list(certificate["a_perp"]) + list(certificate["b_perp"]))
    violated = [c.label for c in program.constraints if not c.holds(x)]
    recomputed = program.derived(x)
    for key in ("a", "b"):
        if key in certificate and [Fraction(v) for v in certificate[key]] != recomputed[key]:
            violated.append(f"{key} is not the MacWilliams image of {key}_perp")
    for form in program.integral_forms:
        if form.value(x).denominator != 1:
            violated.append(f"{form.label} is not an integer")
    return violated


def is_feasible(n: int, k: int, m: int, d: int, use_shadow: bool = True) -> FeasibilityResult:
    program = build_program(BoundQuery(n=n, k=k, m=m, d=d, use_shadow=use_shadow))
    return ip_feasible(program)


def max_m(n: int, k: int, d: int, use_shadow: bool = True) -> Optional[int]:
    """Largest m with a feasible program, scanning down from n - k; None if m = 0 fails."""
    soft_max = get_settings().lp_soft_max_n
    if n > soft_max:
        logger.warning("Bound query above the soft length limit", n=n, soft_max=soft_max)
    for m in range(n - k, -1, -1):
        result = is_feasible(n, k, m, d, use_shadow)
        logger.debug("Bound query", n=n, k=k, m=m, d=d, verdict=result.verdict.value)
        if result.feasible:
            return m
    return None


# Largest m for fixed n, d and k = 0, 1, ... as published; missing k means no code.
TABLE_I: Dict[int, Dict[int, Tuple[int, ...]]] = {
    3: {
        5: (2, 0),
        6: (3, 0),
        7: (4, 2),
        8: (4, 3, 1, 0),
        9: (5, 4, 3, 1),
        10: (6, 5, 4, 2, 1),
        11: (7, 6, 5, 4, 2, 0),
        12: (8, 7, 6, 5, 3, 2, 0),
        13: (9, 8, 7, 5, 5, 3, 1, 0),
        14: (10, 9, 8, 7, 6, 5, 3, 1, 0),
    },
    4: {
        5: (1,),
        6: (2,),
        7: (3,),
        8: (4,),
        9: (4,),
        10: (5, 3, 1),
        11: (6, 4, 2),
        12: (7, 5, 4, 2, 0),
        13: (8, 6, 5, 4, 2, 0),
        14: (9, 6, 6, 5, 3, 2, 0),
    },
    5: {
        5: (1,),
        6: (1,),
        7: (1,),
        8: (2,),
        9: (2,),
        10: (3,),
        11: (4, 0),
        12: (4, 2),
        13: (5, 4),
        14: (6, 5, 3, 1),
    },
}

# Cells whose published value relies on nonexistence results outside the program
STARRED_CELLS = {(4, 13, 5)}


@dataclass
class Table1Report:
    frame: pd.DataFrame

    @property
    def mismatches(self) -> pd.DataFrame:
        return self.frame[self.frame["status"] == "mismatch"]

    def text(self) -> str:
        """Aligned table per distance; LP values, published value in brackets when they differ."""
        blocks = []
        for d, by_d in self.frame.groupby("d", sort=True):
            max_k = int(by_d["k"].max())
            header = "n\\k " + " ".join(f"{k:>7}" for k in range(max_k + 1))
            lines = [f"d = {d}", header]
            for n, row in by_d.groupby("n", sort=True):
                cells = []
                for k in range(max_k + 1):
                    hit = row[row["k"] == k]
                    if hit.empty:
                        cells.append(f"{'':>7}")
                        continue
                    cell = hit.iloc[0]
                    value = "--" if pd.isna(cell["lp_m"]) else str(int(cell["lp_m"]))
                    if cell["status"] == "starred":
                        value += "*"
                    elif cell["status"] != "match" and not pd.isna(cell["published_m"]):
                        value += f"[{int(cell['published_m'])}]"
                    cells.append(f"{value:>7}")
                lines.append(f"{n:>3} " + " ".join(cells))
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    def to_json(self) -> List[Dict[str, Any]]:
        records = []
        for rec in self.frame.to_dict(orient="records"):
            records.append(
                {
                    key: (None if pd.isna(value) else int(value))
                    if key in ("lp_m", "published_m")
                    else (int(value) if key in ("d", "n", "k") else value)
                    for key, value in rec.items()
                }
            )
        return records


def _status(d: int, n: int, k: int, lp_m: Optional[int], published_m: Optional[int]) -> str:
    if (d, n, k) in STARRED_CELLS:
        return "starred"
    if published_m is None:
        return "extra" if lp_m is not None else "match"
    if lp_m == published_m:
        return "match"
    if k == 0:
        return "reported"
    return "mismatch"


def reproduce_table1(
    distances: Sequence[int] = (3, 4, 5),
    lengths: Optional[Sequence[int]] = None,
    use_shadow: bool = True,
) -> Table1Report:
    """Recompute the published grid of largest m and compare cell by cell.

    For every (d, n) the scan covers the published k values and continues
    until the program has no solution for any m.
    """
    rows = []
    for d in distances:
        published = TABLE_I.get(d, {})
        for n in lengths if lengths is not None else sorted(published):
            published_row = published.get(n, ())
            for k in range(n + 1):
                lp_m = max_m(n, k, d, use_shadow)
                published_m = published_row[k] if k < len(published_row) else None
                status = _status(d, n, k, lp_m, published_m)
                cell = {"d": d, "n": n, "k": k, "lp_m": lp_m, "published_m": published_m}
                rows.append({**cell, "status": status})
                logger.info("Table cell computed", **cell)
                if lp_m is None and k >= len(published_row):
                    break
    frame = pd.DataFrame(rows, columns=["d", "n", "k", "lp_m", "published_m", "status"])
    frame["lp_m"] = frame["lp_m"].astype("Int64")
    frame["published_m"] = frame["published_m"].astype("Int64")
    return Table1Report(frame=frame)
