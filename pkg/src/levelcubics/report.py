"""Per-level reports and level sweeps, rendered as JSON, Markdown or CSV.

Rationals are always serialized as ``"p/q"`` strings (integers as ``"p"``).
"""
import csv
import io
import json
from dataclasses import dataclass
from importlib import resources

from .congruence import CurveInvariants, Kind, SubgroupSpec, curve_invariants
from .quotient import SmoothnessReport, smoothness_verdict
from .seifert import SeifertData, Sphere3, recognize, seifert_data
from .trefoil import KComponentReport, cover_over_K


@dataclass(frozen=True)
class Report:
    spec: SubgroupSpec
    invariants: CurveInvariants
    smoothness: SmoothnessReport
    seifert: SeifertData
    homeomorphism: object
    cover: KComponentReport


def build_report(spec: SubgroupSpec) -> Report:
    sd = seifert_data(spec)
    return Report(
        spec=spec,
        invariants=curve_invariants(spec),
        smoothness=smoothness_verdict(spec),
        seifert=sd,
        homeomorphism=recognize(sd),
        cover=cover_over_K(spec.kind, spec.level),
    )


def rat(x) -> str:
    return str(x)


def homeomorphism_label(label) -> str:
    return label.describe()


def report_dict(rep: Report) -> dict:
    inv = rep.invariants
    sm = rep.smoothness
    return {
        "level": rep.spec.level,
        "structure": rep.spec.kind.value,
        "index_sl2": inv.index_sl2,
        "index_psl2": inv.index_psl2,
        "cusps": [{"rep": c.label, "width": c.width, "regular": c.regular} for c in inv.cusp_classes],
        "e2": inv.e2,
        "e3": inv.e3,
        "genus": inv.genus,
        "z2": rat(sm.z_sq),
        "zprime2": rat(sm.zprime_sq),
        "ztilde2": rat(sm.ztilde_sq),
        "singularities": [
            {
                "location": r.location,
                "type": r.type_label,
                "m": r.m,
                "q": r.q,
                "hj_chain": list(r.hj_chain),
                "correction": rat(r.correction),
            }
            for r in sm.singularities
        ],
        "curves": sm.graph.names,
        "intersection_matrix": sm.graph.integer_matrix(),
        "det": sm.det,
        "contraction_sequence": list(sm.contraction_sequence),
        "obstruction": sm.obstruction,
        "smooth_at_Q": sm.smooth_at_Q,
        "notes": list(sm.notes),
        "seifert": {
            "genus": rep.seifert.base_genus,
            "fibers": [{"multiplicity": f.multiplicity, "source": f.source}
                       for f in rep.seifert.exceptional_fibers],
            "euler": rat(rep.seifert.euler),
        },
        "homeomorphism": homeomorphism_label(rep.homeomorphism),
        "components_over_K": cover_list(rep.cover),
    }


def cover_list(cover: KComponentReport):
    return [{"cusp": c.cusp.label, "size": c.size, "b": c.b, "d": c.d} for c in cover.components]


def to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def report_schema() -> dict:
    text = resources.files("levelcubics").joinpath("report.schema.json").read_text()
    return json.loads(text)


def validate_report(data: dict) -> None:
    """Raise ``jsonschema.ValidationError`` if ``data`` does not match the schema."""
    import jsonschema

    jsonschema.validate(data, report_schema())


def render_report_md(rep: Report) -> str:
    d = report_dict(rep)
    lines = [f"# {rep.spec} (level {d['level']}, {d['structure']})", ""]
    lines += [
        f"- index in SL2(Z): {d['index_sl2']}; in PSL2(Z): {d['index_psl2']}",
        f"- genus: {d['genus']}; elliptic points e2 = {d['e2']}, e3 = {d['e3']}",
        "- cusps: " + ", ".join(
            f"{c['rep']} (width {c['width']}{'' if c['regular'] else ', irregular'})" for c in d["cusps"]),
        f"- Z^2 = {d['z2']}, Z'^2 = {d['zprime2']}, proper transform {d['ztilde2']}",
    ]
    if d["singularities"]:
        lines.append("- singularities:")
        for s in d["singularities"]:
            lines.append(f"  - {s['location']}: {s['type']}, chain {s['hj_chain']}, correction {s['correction']}")
    else:
        lines.append("- singularities: none")
    lines += [
        f"- curves {d['curves']}, intersection matrix {d['intersection_matrix']}, |det| = {d['det']}",
        f"- contractions: {', '.join(d['contraction_sequence']) or 'none'}",
        f"- smooth at Q: {'yes' if d['smooth_at_Q'] else 'no'}"
        + (f" ({d['obstruction']})" if d["obstruction"] else ""),
    ]
    for note in d["notes"]:
        lines.append(f"- note: {note}")
    fibers = ", ".join(f"{f['multiplicity']} ({f['source']})" for f in d["seifert"]["fibers"]) or "none"
    lines += [
        f"- Seifert data: base genus {d['seifert']['genus']}, exceptional fibers {fibers}, "
        f"Euler number {d['seifert']['euler']}",
        f"- homeomorphism type: {d['homeomorphism']}",
        "- components over K: " + "; ".join(
            f"cusp {c['cusp']}: {c['size']} points, b={c['b']}, d={c['d']}" for c in d["components_over_K"]),
    ]
    return "\n".join(lines) + "\n"


def render_cover_md(cover: KComponentReport) -> str:
    lines = [f"# Components over K for {cover.spec} ({cover.fiber_size} fiber points)", "",
             "| cusp | size | b | d |", "|---|---|---|---|"]
    for c in cover.components:
        lines.append(f"| {c.cusp.label} | {c.size} | {c.b} | {c.d} |")
    return "\n".join(lines) + "\n"


def cover_dict(cover: KComponentReport) -> dict:
    return {
        "level": cover.spec.level,
        "structure": cover.spec.kind.value,
        "fiber_size": cover.fiber_size,
        "components_over_K": cover_list(cover),
    }


# ---------------------------------------------------------------- tables

TABLE_COLUMNS = ["N", "#rho", "#i", "Z'^2", "Z~'^2", "genus", "verdict"]


def table_row(spec: SubgroupSpec) -> dict:
    sm = smoothness_verdict(spec)
    inv = curve_invariants(spec)
    if sm.smooth_at_Q:
        verdict = "smooth"
    elif sm.genus > 0:
        verdict = "singular (genus)"
    else:
        verdict = "singular"
    return {
        "N": spec.level,
        "#rho": inv.e3,
        "#i": inv.e2,
        "Z'^2": rat(sm.zprime_sq),
        "Z~'^2": rat(sm.ztilde_sq),
        "genus": inv.genus,
        "verdict": verdict,
    }


def table_rows(kind: Kind, max_level: int) -> list[dict]:
    return [table_row(SubgroupSpec(kind, N)) for N in range(2, max_level + 1)]


def render_table(rows, fmt="md") -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if fmt != "md":
        raise ValueError(f"unknown table format {fmt!r}")
    lines = ["| " + " | ".join(TABLE_COLUMNS) + " |", "|" + "---|" * len(TABLE_COLUMNS)]
    for r in rows:
        lines.append("| " + " | ".join(str(r[c]) for c in TABLE_COLUMNS) + " |")
    return "\n".join(lines) + "\n"


def is_sphere(label) -> bool:
    return isinstance(label, Sphere3)
