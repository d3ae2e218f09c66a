"""Computational services: enumeration, analysis, constructions and bounds."""

from .analysis import (
    CodeEnumerators,
    ImpurityReport,
    WeightEnumerator,
    code_enumerators,
    hybrid_distance_full,
    hybrid_distance_witness,
    impurity_check,
    macwilliams,
    shadow,
    sweep_witness,
    translated_code_distance,
    union_code_distance,
    verify_distance_sweep,
    weight_enumerator,
)
from .constructions import (
    ConstructionXInput,
    append_zero_qubits,
    build_from_code_pair,
    construction_x,
    convert_all_to_classical,
    from_quantum_code,
    juxtapose,
    qudit_to_classical,
    realize_split,
)
from .dense_verifier import DenseVerificationReport, dense_verify
from .lp_bounds import (
    BoundQuery,
    FeasibilityResult,
    Table1Report,
    Verdict,
    build_program,
    check_certificate,
    ip_feasible,
    is_feasible,
    max_m,
    reproduce_table1,
)

__all__ = [
    "WeightEnumerator",
    "CodeEnumerators",
    "ImpurityReport",
    "weight_enumerator",
    "code_enumerators",
    "macwilliams",
    "shadow",
    "hybrid_distance_full",
    "hybrid_distance_witness",
    "union_code_distance",
    "translated_code_distance",
    "sweep_witness",
    "verify_distance_sweep",
    "impurity_check",
    "DenseVerificationReport",
    "dense_verify",
    "from_quantum_code",
    "qudit_to_classical",
    "convert_all_to_classical",
    "realize_split",
    "append_zero_qubits",
    "juxtapose",
    "build_from_code_pair",
    "ConstructionXInput",
    "construction_x",
    "BoundQuery",
    "Verdict",
    "FeasibilityResult",
    "Table1Report",
    "build_program",
    "ip_feasible",
    "is_feasible",
    "check_certificate",
    "max_m",
    "reproduce_table1",
]
