"""JSON payloads and plain-text tables for the command line.

Every payload matches one schema under ``docs/schemas``. Element and
column indices are 1-based in all reports.
"""

import json
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..bounds import (
    conjectured_max,
    construction_lower_bound,
    frankl_rodl_bound,
    known_upper_bound,
    sperner_bound,
    theorem_backed_value,
)
from ..io.fam_format import encode_pair
from ..models.families import CrossPair
from ..models.params import CanonicalParams
from ..models.search import ClassificationResult, SearchReport
from ..models.spectra import RowClassification

Payload = Dict[str, Any]


def dumps(payload: Payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def table(rows: Sequence[Tuple[str, object]]) -> str:
    """Two-column text table with left-aligned keys."""
    width = max((len(key) for key, _ in rows), default=0)
    return "\n".join(f"{key.ljust(width)}  {value}" for key, value in rows)


def _conjectured_or_none(n: int, ell: int) -> Optional[int]:
    return conjectured_max(n, ell) if n >= 2 * ell else None


def params_payload(params: Optional[CanonicalParams]) -> Optional[Payload]:
    if params is None:
        return None
    return params.model_dump()


def construct_payload(
    kind: str, pair: CrossPair, params: Optional[Payload] = None
) -> Payload:
    return {
        "kind": kind,
        "n": pair.n,
        "ell": pair.ell,
        "size_a": len(pair.a),
        "size_b": len(pair.b),
        "product": pair.product,
        "params": params,
        "pair": encode_pair(pair),
    }


def verify_payload(pair: CrossPair, result: bool) -> Payload:
    return {
        "n": pair.n,
        "ell": pair.ell,
        "size_a": len(pair.a),
        "size_b": len(pair.b),
        "product": pair.product,
        "cross_intersecting": result,
    }


def search_payload(report: SearchReport) -> Payload:
    return {
        "n": report.n,
        "ell": report.ell,
        "value": report.value,
        "conjectured_max": _conjectured_or_none(report.n, report.ell),
        "frankl_rodl": frankl_rodl_bound(report.n, report.ell),
        "witnesses": [encode_pair(w) for w in report.witnesses],
        "nodes_visited": report.nodes_visited,
        "nodes_pruned": report.nodes_pruned,
        "elapsed_ms": round(report.elapsed_ms, 3),
    }


def search_table(report: SearchReport) -> str:
    conjectured = _conjectured_or_none(report.n, report.ell)
    rows: List[Tuple[str, object]] = [
        (f"P_{report.ell}({report.n})", report.value),
        ("conjectured max", "-" if conjectured is None else conjectured),
        ("frankl-rodl bound", frankl_rodl_bound(report.n, report.ell)),
        ("witnesses", len(report.witnesses)),
        ("nodes visited", report.nodes_visited),
        ("nodes pruned", report.nodes_pruned),
        ("elapsed ms", f"{report.elapsed_ms:.1f}"),
    ]
    text = table(rows)
    if report.witnesses:
        text += "\n\n" + encode_pair(report.witnesses[0]).rstrip("\n")
    return text


def bounds_payload(n: int, ell: int) -> Payload:
    return {
        "n": n,
        "ell": ell,
        "sperner": sperner_bound(n),
        "frankl_rodl": frankl_rodl_bound(n, ell),
        "conjectured_max": _conjectured_or_none(n, ell),
        "construction_lower_bound": construction_lower_bound(n, ell),
        "known_upper_bound": known_upper_bound(n, ell),
        "theorem_backed_value": theorem_backed_value(n, ell),
    }


def bounds_table(payload: Payload) -> str:
    return table(
        [
            (key.replace("_", " "), "-" if value is None else value)
            for key, value in payload.items()
        ]
    )


def analyze_payload(
    n: int,
    k: int,
    h: int,
    b1_index: int,
    pivot_cols: Sequence[int],
    rows: RowClassification,
    duality: Optional[bool],
) -> Payload:
    return {
        "n": n,
        "k": k,
        "h": h,
        "k_plus_h": k + h,
        "b1_index": b1_index,
        "pivot_cols": [c + 1 for c in pivot_cols],
        "r": rows.r,
        "s": rows.s,
        "c": rows.c,
        "selection_log": [
            {"column": col + 1, "rows": [i + 1 for i in removed]}
            for col, removed in rows.selection_log
        ],
        "duality": "n/a" if duality is None else duality,
    }


def classify_payload(result: ClassificationResult) -> Payload:
    return {
        "matched": result.matched,
        "params": params_payload(result.params),
        "swapped": result.swapped,
        "relabeling": list(result.relabeling),
        "extension_beyond_theorem": result.extension_beyond_theorem,
    }
