import json
from typing import Any, Dict

from app.cli.schemas import CommandResult
from app.core.pipeline import reference_f
from app.core.polycore import HomBiPoly


def render_json(result: CommandResult) -> str:
    document: Dict[str, Any] = {"command": result.command, "status": result.status}
    document.update(result.payload)
    document["warnings"] = list(result.warnings)
    document["error"] = result.error.model_dump() if result.error else None
    return json.dumps(document, indent=2, ensure_ascii=False)


def _form_text(degree: int, coefficients: list[str]) -> str:
    return str(HomBiPoly(degree, tuple(int(c) for c in coefficients)))


def _derive_text(payload: Dict[str, Any]) -> list[str]:
    lines = [
        f"n = {payload['n']}, degree {payload['degree']}, "
        f"{'trivial' if payload['trivial'] else 'nontrivial'}"
    ]
    factored = payload.get("factored")
    if factored:
        lines.append(f"f(p, q) = {reference_f()}")
        lines.extend(f"{name} = {label}" for name, label in factored.items())
    else:
        for name, coefficients in payload["coefficients"].items():
            lines.append(f"{name} = {_form_text(payload['degree'], coefficients)}")
    if payload["removed_content"] != "1" or payload["removed_gcd_degree"]:
        lines.append(
            f"removed content {payload['removed_content']}, "
            f"common factor of degree {payload['removed_gcd_degree']}"
        )
    return lines


def _eval_text(payload: Dict[str, Any]) -> list[str]:
    lines = [f"{name} = {value}" for name, value in payload["values"].items()]
    lines.append(f"A^4 + B^4 = {payload['sums']['left']}")
    lines.append(f"C^4 + D^4 = {payload['sums']['right']}")
    lines.append(f"equal: {'yes' if payload['equal'] else 'no'}")
    return lines


def _audit_text(payload: Dict[str, Any]) -> list[str]:
    return [
        f"({check['index']}) {check['name']}: "
        + ("pass" if check["passed"] else f"FAIL, residual {check['residual']}")
        for check in payload["checks"]
    ]


def _search_text(payload: Dict[str, Any]) -> list[str]:
    return [
        f"{c['a']}^4 + {c['b']}^4 = {c['c']}^4 + {c['d']}^4 = {c['sum']}"
        for c in payload["coincidences"]
    ]


def _torsion_text(payload: Dict[str, Any]) -> list[str]:
    if payload["torsion_order"] is not None:
        return [f"P has order {payload['torsion_order']}"]
    return [
        f"deg X(nP), n = 1..{payload['bound']}: {' '.join(map(str, payload['x_degrees']))}",
        f"nondecreasing: {'yes' if payload['nondecreasing'] else 'no'}, "
        f"eventually increasing: {'yes' if payload['eventually_increasing'] else 'no'}",
        f"({payload['note']})",
    ]


TEXT_RENDERERS = {
    "derive": _derive_text,
    "eval": _eval_text,
    "audit": _audit_text,
    "search": _search_text,
    "torsion": _torsion_text,
}


def render_text(result: CommandResult) -> str:
    if not result.payload:
        return ""
    return "\n".join(TEXT_RENDERERS[result.command](result.payload))


def render(result: CommandResult, output_format: str = "text") -> str:
    return render_json(result) if output_format == "json" else render_text(result)
