"""Pydantic models for CLI reports; the human rendering is built from the same fields."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel


class VerifyReport(BaseModel):
    """Result of ``verify``."""

    code: str
    n: int
    k: int
    m: int
    method: str
    distance: Optional[int] = None
    distance_at_least: Optional[int] = None
    witness: Optional[str] = None
    claimed_d: Optional[int] = None
    confirmed: Optional[bool] = None
    impure: Optional[bool] = None
    naive_distance: Optional[int] = None
    translated_distance: Optional[int] = None
    union_distance: Optional[int] = None

    def render(self) -> str:
        if self.distance is not None:
            head = f"d = {self.distance}"
        else:
            head = f"d >= {self.distance_at_least}"
        if self.impure is not None:
            head += ", impure" if self.impure else ", pure"
        lines = [f"{self.code}: {head} ({self.method})"]
        if self.union_distance is not None:
            lines.append(f"union code distance d' = {self.union_distance}")
        if self.translated_distance is not None:
            lines.append(f"translated code distance d'' = {self.translated_distance}")
        if self.witness:
            lines.append(f"witness {self.witness}")
        if self.claimed_d is not None:
            verdict = "confirmed" if self.confirmed else "refuted"
            lines.append(f"claimed d = {self.claimed_d}: {verdict}")
        return "\n".join(lines)


class DistanceReport(BaseModel):
    code: str
    distance: Optional[int] = None
    sweep_target: Optional[int] = None
    holds: Optional[bool] = None
    witness: Optional[str] = None

    def render(self) -> str:
        if self.sweep_target is None:
            text = f"d = {self.distance}"
        else:
            text = f"d >= {self.sweep_target}: {'yes' if self.holds else 'no'}"
        if self.witness:
            text += f"\nwitness {self.witness}"
        return text


class EnumeratorReport(BaseModel):
    """Coefficients as decimal strings; they can exceed 64 bits."""

    code: str
    enumerators: Dict[str, List[str]]

    def render(self) -> str:
        width = max(len(name) for name in self.enumerators)
        return "\n".join(
            f"{name:<{width}}  " + " ".join(coeffs) for name, coeffs in self.enumerators.items()
        )


class BoundReport(BaseModel):
    n: int
    k: int
    d: int
    use_shadow: bool
    max_m: Optional[int] = None
    certificate: Optional[Dict[str, List[str]]] = None

    def render(self) -> str:
        if self.max_m is None:
            return f"no feasible m for n = {self.n}, k = {self.k}, d = {self.d}"
        return f"max m = {self.max_m}"


class TableReport(BaseModel):
    cells: List[Dict[str, Any]]
    mismatches: int
    text: str

    def render(self) -> str:
        return self.text.rstrip("\n") + f"\nmismatches: {self.mismatches}"


class CodeReport(BaseModel):
    """A code emitted by ``construct``, ``search`` or ``catalog NAME``."""

    label: str
    code: str
    source: Optional[str] = None
    trial: Optional[int] = None

    def render(self) -> str:
        return self.code.rstrip("\n")


class CatalogListing(BaseModel):
    entries: List[Dict[str, Any]]

    def render(self) -> str:
        return "\n".join(
            f"{e['name']:<10} [[{e['n']},{e['k']}:{e['m']},{e['claimed_d']}]]"
            + (f"  {e['note']}" if e["note"] else "")
            for e in self.entries
        )
