"""Report serialization: schema-stamped JSON and the scan CSV."""
from __future__ import annotations

import json
from fractions import Fraction

import numpy as np

SCHEMA_VERSION = "thinlab-report-1"
SAFE_INT = 2 ** 53


def to_jsonable(obj):
    """Recursively convert report objects to JSON-safe values.

    Exact integers beyond 2^53 become strings so no consumer silently rounds
    them; Fractions are serialized as "p/q" strings.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) > SAFE_INT else obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.integer):
        return to_jsonable(int(obj))
    if isinstance(obj, np.floating):
        return float(obj)
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__} into a report")


def emit_report(payload: dict, kind: str) -> str:
    """Versioned JSON document with stable field order."""
    doc = {"schema": SCHEMA_VERSION, "kind": kind}
    doc.update(to_jsonable(payload))
    return json.dumps(doc, indent=2) + "\n"


def scan_csv(rows) -> str:
    """CSV for a spectral scan: columns p, V, lambda1, method, seconds."""
    lines = ["p,V,lambda1,method,seconds"]
    for r in rows:
        lam = "" if r.lambda1 is None else f"{r.lambda1:.9f}"
        lines.append(f"{r.prime},{r.num_vertices},{lam},{r.method},{r.seconds:.3f}")
    return "\n".join(lines) + "\n"
