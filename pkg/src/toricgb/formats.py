"""Instance files and result serialisation (text, JSON, Macaulay2)."""

from __future__ import annotations

import json
from pathlib import Path

from .core import Monomial, Presentation, validate_presentation


class InstanceParseError(ValueError):
    """The file exists but is not a well-formed instance document."""


def parse_text_instance(text: str) -> dict:
    """Header ``d alpha`` then one generator per line; ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if line:
            try:
                rows.append([int(tok) for tok in line.split()])
            except ValueError as exc:
                raise InstanceParseError(f"bad line {line!r}: {exc}") from None
    if not rows or len(rows[0]) != 2:
        raise InstanceParseError("the first line must read 'd alpha'")
    d, alpha = rows[0]
    return {"d": d, "alpha": alpha, "generators": rows[1:]}


def read_instance(path) -> dict:
    """Raw instance record from a JSON or plain-text file (not yet validated)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InstanceParseError(f"invalid JSON: {exc}") from None
        if not isinstance(raw, dict):
            raise InstanceParseError("instance JSON must be an object")
    else:
        raw = parse_text_instance(text)
    if raw.get("axis"):
        raw = dict(raw, generators=list(raw.get("generators", [])) + list(raw["axis"]))
    return raw


def load_instance(path) -> Presentation:
    return validate_presentation(read_instance(path))


def labels_from(raw: dict, pres: Presentation) -> tuple:
    labels = raw.get("labels") or {}
    xs = labels.get("x") or [f"x{i}" for i in range(1, pres.c + 1)]
    ys = labels.get("y") or [f"y{k}" for k in range(1, pres.d + 1)]
    if len(xs) != pres.c or len(ys) != pres.d:
        raise InstanceParseError("labels must name exactly c x-variables and d y-variables")
    return list(xs), list(ys)


def monomial_str(m: Monomial, labels=None) -> str:
    if labels is None:
        return m.format()
    names = list(labels[0]) + list(labels[1])
    parts = []
    for name, e in zip(names, m.exponents):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def monomial_json(m: Monomial) -> dict:
    return {"mu": list(m.mu), "nu": list(m.nu)}


# --- Groebner output ---------------------------------------------------------

def groebner_json(result, with_report: bool = False, labels=None) -> dict:
    out = {
        "instance": result.pres.to_dict(),
        "n0": [monomial_json(m) for m in result.n0],
        "basis": [
            {
                "lead": monomial_json(g.lead),
                "tail": monomial_json(g.tail),
                "text": f"{monomial_str(g.lead, labels)} - {monomial_str(g.tail, labels)}",
            }
            for g in result.basis
        ],
        "max_degree": result.max_degree,
    }
    if with_report:
        rep = result.degree_bound_report
        out["degree_bound_report"] = {
            "reduction_number_plus_one": rep.reduction_number_plus_one,
            "thm46_condition": rep.thm46_condition,
            "bound_holds_for_n": rep.bound_holds_for_n,
            "max_degree_candidates": rep.max_degree_candidates,
        }
    return out


def groebner_text(result, with_report: bool = False, labels=None) -> str:
    lines = [f"{len(result.basis)} generators"]
    if result.n0:
        lines.append("initial ideal: (" + ", ".join(monomial_str(m, labels) for m in result.n0) + ")")
        lines.append("reduced Groebner basis:")
        for g in result.basis:
            lines.append(f"  {monomial_str(g.lead, labels)} - {monomial_str(g.tail, labels)}")
    lines.append(f"max degree: {result.max_degree}")
    if with_report:
        rep = result.degree_bound_report
        lines.append(f"reduction number + 1: {rep.reduction_number_plus_one}")
        lines.append(f"max candidate degree: {rep.max_degree_candidates}")
        lines.append(f"linear-ideal condition: {str(rep.thm46_condition).lower()}")
        lines.append(f"candidate degrees within bound: {str(rep.bound_holds_for_n).lower()}")
    return "\n".join(lines) + "\n"


def groebner_m2(result, labels=None) -> str:
    pres = result.pres
    xs, ys = labels or ([f"x{i}" for i in range(1, pres.c + 1)],
                        [f"y{k}" for k in range(1, pres.d + 1)])
    names = ", ".join(list(xs) + list(ys))
    gens = [f"{monomial_str(g.lead, (xs, ys))} - {monomial_str(g.tail, (xs, ys))}"
            for g in result.basis]
    images = ", ".join(
        "{" + ", ".join(str(v) for v in gen) + "}" for gen in pres.hilbert_basis
    )
    lines = [
        f"R = QQ[{names}, MonomialOrder => GRevLex];",
        "G = ideal(" + (", ".join(gens) if gens else "0_R") + ");",
        f"A = transpose matrix {{{images}}};",
        '-- needsPackage "FourTiTwo"; toricGroebner(A, R) should generate ideal G',
    ]
    return "\n".join(lines) + "\n"


# --- decomposition output ------------------------------------------------------

def decomposition_json(report, pres: Presentation) -> dict:
    return {
        "instance": pres.to_dict(),
        "e": report.e,
        "summary": report.summary(),
        "classes": [
            {
                "members": [list(b) for b in cl.members],
                "h": list(cl.h),
                "ideal_gens": [list(g) for g in cl.ideal_gens],
            }
            for cl in report.classes
        ],
        "is_cohen_macaulay": report.is_cohen_macaulay,
        "is_buchsbaum": report.is_buchsbaum,
        "thm46_condition": report.thm46_condition,
        "reduction_number": report.reduction_number,
    }


def decomposition_text(report) -> str:
    lines = [f"e = {report.e}", report.summary()]
    for i, cl in enumerate(report.classes, start=1):
        gens = ", ".join(Monomial((), tuple(g)).format() for g in cl.ideal_gens)
        members = " < ".join(str(tuple(b)) for b in cl.members)
        lines.append(f"  class {i}: h = {tuple(cl.h)}, ideal = ({gens}), members {members}")
    lines.append(f"reduction number: {report.reduction_number}")
    lines.append(f"Cohen-Macaulay: {str(report.is_cohen_macaulay).lower()}")
    lines.append(f"Buchsbaum: {str(report.is_buchsbaum).lower()}")
    lines.append(f"linear-ideal condition: {str(report.thm46_condition).lower()}")
    return "\n".join(lines) + "\n"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
