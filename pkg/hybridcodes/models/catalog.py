"""Built-in hybrid codes transcribed from their published generator matrices.

Each entry keeps the rows exactly as printed: stabilizer rows, the 2k rows
between the single and double rules (normalizer extension, not necessarily
in X/Z pair order), and the translation rows below the double rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..core.exceptions import CatalogLookupError
from .hybrid_code import HybridCode
from .symplectic import PauliVector


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    n: int
    k: int
    m: int
    claimed_d: int
    stabilizer: Tuple[str, ...]
    normalizer: Tuple[str, ...]
    translations: Tuple[str, ...]
    note: str = ""

    def build(self) -> HybridCode:
        return HybridCode.from_rows(
            self.n,
            [PauliVector.from_string(r) for r in self.stabilizer],
            [PauliVector.from_string(r) for r in self.normalizer],
            [PauliVector.from_string(r) for r in self.translations],
            claimed_d=self.claimed_d,
        )


_STABILIZER_11_1 = (
    "XXIIIIZZXIZ",
    "ZIIIIIIIIIX",
    "IZIIIIIIIIX",
    "IIXIIZIXZII",
    "IIZIIIIIXII",
    "IIIXIZYZXYX",
    "IIIZIIIIIXI",
    "IIIIXZZIIXI",
    "IIIIZZXXIII",
    "IIIIIYXYIXI",
)

_ENTRIES: List[CatalogEntry] = [
    CatalogEntry(
        name="7_1_1_3",
        n=7,
        k=1,
        m=1,
        claimed_d=3,
        stabilizer=(
            "XIIZYYZ",
            "ZIIIIIX",
            "IXIXZII",
            "IZIZIXX",
            "IIXXIZI",
            "IIZZXIX",
        ),
        normalizer=("IIIXZZX", "IIIZXXI"),
        translations=("IIIIXYY",),
    ),
    CatalogEntry(
        name="9_2_2_3",
        n=9,
        k=2,
        m=2,
        claimed_d=3,
        stabilizer=(
            "XIIZYZXXY",
            "ZIIIIXIII",
            "IXIZYIYIZ",
            "IZIIIIXII",
            "IIXZZIIIX",
            "IIZIYXIYI",
            "IIIXXXIZI",
        ),
        normalizer=("IIIZIIXYX", "IIIIXIIZY", "IIIIZIIXX", "IIIIIXXIX"),
        translations=("IIIIIZIZX", "IIIIIIYXZ"),
    ),
    CatalogEntry(
        name="10_3_2_3",
        n=10,
        k=3,
        m=2,
        claimed_d=3,
        stabilizer=(
            "XIXYIXZXXY",
            "ZIIIIIIIIX",
            "IXXXIYXYZX",
            "IZIIIIIIXI",
            "IIZZIIIIII",
            "IIIIXXYYII",
            "IIIIZZXXII",
        ),
        normalizer=(
            "IIXXIIIIIX",
            "IIIZIIIIXX",
            "IIIIIXIYXX",
            "IIIIIZIXIX",
            "IIIIIIXXXX",
            "IIIIIIZZIX",
        ),
        translations=("IIIXIIIZXY", "IIIIIIIYYZ"),
    ),
    CatalogEntry(
        name="11_1_2_4",
        n=11,
        k=1,
        m=2,
        claimed_d=4,
        stabilizer=_STABILIZER_11_1,
        normalizer=("IIIIIZIXIXX", "IIIIIIZZXXI"),
        translations=("IXIIIIIXYZI", "IIIIIIXIXYZ"),
    ),
    CatalogEntry(
        name="11_4_2_3",
        n=11,
        k=4,
        m=2,
        claimed_d=3,
        stabilizer=(
            "XXIXXYYZYIY",
            "ZIIIIIIIXII",
            "IZIIIIIIXII",
            "IIXIXZIZIXX",
            "IIZXIIZXIYY",
            "IIIZXXZXIXI",
            "IIIIZZYXIYZ",
        ),
        normalizer=(
            "IIIXIIIZIXI",
            "IIIIXIIZIZY",
            "IIIIIXIIIXZ",
            "IIIIIZIZIIX",
            "IIIIIIXZIXX",
            "IIIIIIZZIYZ",
            "IIIIIIIYIYX",
            "IIIIIIIIXXX",
        ),
        translations=("IXIIIIIIZYY", "IIIIIIIZZXZ"),
    ),
    CatalogEntry(
        name="13_1_4_4",
        n=13,
        k=1,
        m=4,
        claimed_d=4,
        stabilizer=tuple(row + "II" for row in _STABILIZER_11_1)
        + ("IIIIIIIIIIIZI", "IIIIIIIIIIIIZ"),
        normalizer=("IIIIIZIXIXXII", "IIIIIIZZXXIII"),
        translations=(
            "IXIIIIIIXYXXX",
            "IIIIIIXIXIIXX",
            "IIIIIIIXYXYXX",
            "IIIIIIIXIYYXI",
        ),
        note=(
            "as printed the translations admit the weight-3 word IYIIIIXIIYIII "
            "(stabilizer row 3 times the first two translations), so the certified distance is 3"
        ),
    ),
]

CATALOG: Dict[str, CatalogEntry] = {entry.name: entry for entry in _ENTRIES}


def catalog_names() -> List[str]:
    return [entry.name for entry in _ENTRIES]


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        raise CatalogLookupError(name, CATALOG) from None


def catalog(name: str) -> HybridCode:
    """The built-in code called ``name``, e.g. ``"7_1_1_3"``."""
    return catalog_entry(name).build()
