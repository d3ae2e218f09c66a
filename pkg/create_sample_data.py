#!/usr/bin/env python3
"""Create sample input files for the hybrid code toolkit."""

from pathlib import Path

from hybridcodes.models.catalog import catalog, catalog_names
from hybridcodes.models.classical import ClassicalCode
from hybridcodes.models.codefile import SeedCode, save_code, serialize_seeds
from hybridcodes.models.symplectic import PauliVector

# Stabilizer of the [[7,1:1,3]] catalog code, preceded by its logical Z
SEED_7 = (
    "IIIZXXI",
    "XIIZYYZ",
    "ZIIIIIX",
    "IXIXZII",
    "IZIZIXX",
    "IIXXIZI",
    "IIZZXIX",
)

# The [[2,0]] Bell state
SEED_2 = ("XX", "ZZ")


def create_data_directory() -> Path:
    """Create data directory if it doesn't exist."""
    data_dir = Path("data")
    data_dir.mkdir(exist_ok=True)
    return data_dir


def create_catalog_files(data_dir: Path) -> None:
    """Write every built-in code in the code file format."""
    codes_dir = data_dir / "codes"
    codes_dir.mkdir(exist_ok=True)
    for name in catalog_names():
        save_code(catalog(name), codes_dir / f"{name}.code")
    print(f"✅ Wrote {len(catalog_names())} catalog codes to {codes_dir}")


def create_seed_files(data_dir: Path) -> None:
    """Write the n = 7 and n = 2 seed files."""
    for rows, name in ((SEED_7, "seeds_7.txt"), (SEED_2, "seeds_2.txt")):
        gens = tuple(PauliVector.from_string(r) for r in rows)
        seed = SeedCode(n=len(rows[0]), generators=gens, source_id=name)
        (data_dir / name).write_text(serialize_seeds([seed]), encoding="utf-8")
        print(f"✅ Created {name}")


def create_classical_files(data_dir: Path) -> None:
    """Write the [3,1,3] repetition and [4,3,2] parity check codes."""
    for code, name in (
        (ClassicalCode.repetition(3), "repetition_3.txt"),
        (ClassicalCode.single_parity_check(4), "parity_4.txt"),
    ):
        (data_dir / name).write_text(code.to_text(), encoding="utf-8")
        print(f"✅ Created {name}")


def main() -> None:
    print("🚀 Creating sample data for the hybrid code toolkit...")
    data_dir = create_data_directory()
    create_catalog_files(data_dir)
    create_seed_files(data_dir)
    create_classical_files(data_dir)
    print("🎉 Sample data created in data/")


if __name__ == "__main__":
    main()
