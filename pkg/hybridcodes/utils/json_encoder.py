"""JSON conversion for exact rationals, complex amplitudes and NumPy/Pandas values."""

from fractions import Fraction
from typing import Any

import numpy as np
import pandas as pd
from pydantic_core import to_jsonable_python


def toolkit_encoder(obj: Any) -> Any:
    """Fallback encoder for types pydantic does not serialize itself."""
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    if isinstance(obj, np.ndarray):
        return [toolkit_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, pd.DataFrame):
        return [toolkit_jsonable(r) for r in obj.to_dict(orient="records")]
    if isinstance(obj, pd.Series):
        return [toolkit_jsonable(v) for v in obj.to_list()]
    if obj is pd.NA:
        return None
    return str(obj)


def toolkit_jsonable(obj: Any) -> Any:
    """Convert ``obj`` to JSON-compatible data; Fractions become ``"p/q"`` strings."""
    if isinstance(obj, (Fraction, complex, np.generic, np.ndarray, pd.DataFrame, pd.Series)):
        return toolkit_encoder(obj)
    if obj is pd.NA or obj is None:
        return None
    if isinstance(obj, dict):
        return {str(k) if isinstance(k, tuple) else k: toolkit_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        return [toolkit_jsonable(v) for v in obj]
    return to_jsonable_python(obj, fallback=toolkit_encoder)
