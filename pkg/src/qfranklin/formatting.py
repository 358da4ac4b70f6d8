"""Text and JSON renderings of series.

Text form lists nonzero terms by increasing q-exponent (then x-exponent),
e.g. ``1 - q - q^2 + q^5 + q^7`` or ``1 - x^2*q - x^3*q^2``.  Unit
coefficients are folded into the sign, so the output parses back through
:func:`qfranklin.dsl.parse`.  JSON carries coefficients as decimal strings.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List

from .series import QSeries, XQSeries

__all__ = [
    "format_terms",
    "format_qseries",
    "format_xqseries",
    "qseries_to_json",
    "xqseries_to_json",
    "qseries_from_json",
    "xqseries_from_json",
    "dumps",
]


def _monomial(a: int, b: int) -> str:
    parts = []
    if a:
        parts.append("x" if a == 1 else f"x^{a}")
    if b:
        parts.append("q" if b == 1 else f"q^{b}")
    return "*".join(parts)


def format_terms(terms) -> str:
    """Render ``(xexp, qexp, coeff)`` triples, already ordered."""
    out: List[str] = []
    for a, b, c in terms:
        mono = _monomial(a, b)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out) if out else "0"


def format_qseries(s: QSeries) -> str:
    return format_terms((0, i, c) for i, c in enumerate(s.coeffs) if c)


def format_xqseries(s: XQSeries) -> str:
    return format_terms(s.terms())


def qseries_to_json(s: QSeries) -> Dict[str, Any]:
    return {"qorder": s.order, "coeffs": [str(c) for c in s.coeffs]}


def xqseries_to_json(s: XQSeries) -> Dict[str, Any]:
    return {
        "qorder": s.qorder,
        "xorder": s.xorder,
        "rows": [[str(c) for c in row] for row in s.rows],
    }


def qseries_from_json(obj: Dict[str, Any]) -> QSeries:
    return QSeries([int(c) for c in obj["coeffs"]], int(obj["qorder"]))


def xqseries_from_json(obj: Dict[str, Any]) -> XQSeries:
    return XQSeries([[int(c) for c in row] for row in obj["rows"]],
                    int(obj["qorder"]), int(obj["xorder"]))


def dumps(s) -> str:
    if isinstance(s, QSeries):
        return json.dumps(qseries_to_json(s))
    return json.dumps(xqseries_to_json(s))
