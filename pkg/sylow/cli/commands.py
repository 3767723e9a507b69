"""
Command implementations behind `sylow-orbit`.

Each command builds a CommandReport: a summary, an optional table of rows
and the JSON payload. Rendering is left to `sylow.cli.report`.
"""

import logging
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from sylow.characters.actions import CharacterSpace
from sylow.characters.linchar import LinChar
from sylow.core.config import JobConfig
from sylow.core.errors import ConfigError, PreconditionError, check
from sylow.cyclo.class_functions import ClassFunction, GroupTable, character_table
from sylow.cyclo.orbit_character import orbit_character
from sylow.geometry.regions import REGION_NAMES, region_members
from sylow.geometry.types import Family, LieType
from sylow.gf.field import FieldCtx, make_field, render
from sylow.group.elements import GroupElem
from sylow.group.group import ClassicalGroup
from sylow.orbits.classify import classify
from sylow.orbits.engine import OrbitEngine
from sylow.superchars.basic_sets import BasicSet, enumerate_basic_sets, supercharacter
from sylow.superchars.decomposition import decompose_AN, orthogonality_report
from sylow.superchars.elementary import ElementaryCharacters

logger = logging.getLogger(__name__)

# Commands that need a form (types B, C, D)
FORM_COMMANDS = ("orbits", "classify", "superchar", "verify")


@dataclass
class CommandReport:
    """Everything a command produces, independent of the output format."""

    command: str
    title: str
    summary: dict[str, Any] = field(default_factory=dict)
    columns: list[str] = field(default_factory=list)
    rows: list[dict[str, Any]] = field(default_factory=list)
    payload: dict[str, Any] = field(default_factory=dict)
    ok: bool = True


class Workspace:
    """
    The field, group, character space and engines for one JobConfig,
    built lazily and shared across a command run.
    """

    def __init__(self, cfg: JobConfig):
        self.cfg = cfg
        self.ctx: FieldCtx = make_field(cfg.p, cfg.e)
        self.t = LieType(Family(cfg.family), cfg.n)
        self.group = ClassicalGroup(self.t, self.ctx, cfg.budget)

    @cached_property
    def space(self) -> CharacterSpace:
        return CharacterSpace(self.group)

    @cached_property
    def engine(self) -> OrbitEngine:
        return OrbitEngine(self.space)

    @cached_property
    def table(self) -> GroupTable:
        return GroupTable(self.group)

    @cached_property
    def elementary(self) -> ElementaryCharacters:
        return ElementaryCharacters(self.space, self.table, self.cfg.seed)

    def rng(self) -> random.Random:
        return random.Random(self.cfg.seed)

    def char_json(self, a: LinChar | None) -> dict | None:
        return None if a is None else a.to_json(self.ctx)


def _positions(positions) -> list[list[int]]:
    return [[i, j] for i, j in positions]


# =========================================================
# gen / regions
# =========================================================


def run_gen(ws: Workspace) -> CommandReport:
    """Group data plus a seeded closure check on random pairs; optionally every element."""
    group, ctx, t = ws.group, ws.ctx, ws.t
    rng = ws.rng()
    pairs = ws.cfg.budget.sample_pairs
    for _ in range(pairs):
        u, v = group.random_element(rng), group.random_element(rng)
        check(group.is_member(group.multiply(u, v)), "U is closed under multiplication")

    summary = {
        "type": str(t),
        "N": t.N,
        "ntilde": t.ntilde,
        "q": ctx.q,
        "modulus": list(ctx.modulus),
        "pUP": len(group.pup),
        "order_U": group.order,
        "order_tilde_U": group.tilde_order,
        "root_elements": len(group.pup) * (ctx.q - 1),
        "closure_pairs_checked": pairs,
    }
    columns: list[str] = []
    rows: list[dict[str, Any]] = []
    payload: dict[str, Any] = {"group": summary}
    if ws.cfg.coordinates:
        columns = ["element", *(f"{i},{j}" for i, j in group.pup)]
        for k, u in enumerate(group.elements()):
            coords = {f"{i},{j}": render(ctx, v) for (i, j), v in group.extract(u).items()}
            rows.append({"element": k, **coords})
        payload["elements"] = rows
    return CommandReport(
        command="gen",
        title=f"Sylow p-subgroup of {t} over F_{ctx.q}",
        summary=summary,
        columns=columns,
        rows=rows,
        payload=payload,
    )


def run_regions(ws: Workspace) -> CommandReport:
    rows = []
    for name in REGION_NAMES:
        members = region_members(name, ws.t)
        rows.append({"region": name, "size": len(members), "positions": _positions(members)})
    return CommandReport(
        command="regions",
        title=f"Regions of the {ws.t.N}x{ws.t.N} matrix for {ws.t}",
        summary={"type": str(ws.t), "N": ws.t.N},
        columns=["region", "size", "positions"],
        rows=rows,
        payload={"regions": rows},
    )


# =========================================================
# Character tables
# =========================================================


def _class_label(ws: Workspace, u: GroupElem) -> str:
    """A class representative named by its nonzero pUP coordinates."""
    coords = [f"({i},{j})={render(ws.ctx, v)}" for (i, j), v in ws.group.extract(u).items() if v]
    return " ".join(coords) or "1"


def character_table_report(
    ws: Workspace, title: str, named: list[tuple[str, ClassFunction]]
) -> CommandReport:
    """Rows are characters, columns conjugacy classes, cells Z[ζ_p] coordinates."""
    ct = character_table(ws.table, [chi for _, chi in named])
    labels = [_class_label(ws, u) for u in ct.representatives]
    rows = []
    for (name, chi), values in zip(named, ct.values):
        row: dict[str, Any] = {"character": name, "degree": chi.degree()}
        row.update({label: list(v.coords) for label, v in zip(labels, values)})
        rows.append(row)
    classes = [{"representative": label, "size": size} for label, size in zip(labels, ct.class_sizes)]
    return CommandReport(
        command=ws.cfg.command,
        title=title,
        summary={"characters": len(rows), "classes": len(labels), "p": ws.ctx.p},
        columns=["character", "degree", *labels],
        rows=rows,
        payload={"character_table": {"classes": classes, "rows": rows}},
    )


# =========================================================
# orbits / classify
# =========================================================


def run_orbits(ws: Workspace) -> CommandReport:
    orbits = ws.engine.orbit_decomposition()
    if ws.cfg.character_table:
        named = [
            (str(o.representative), orbit_character(ws.space, ws.table, o.members)) for o in orbits
        ]
        title = f"Orbit characters of {ws.t}, q={ws.ctx.q}, on conjugacy classes"
        return character_table_report(ws, title, named)
    rows = []
    for orbit in orbits:
        c = orbit.conditions
        rows.append(
            {
                "representative": ws.char_json(orbit.representative),
                "mc": _positions(c.mc),
                "staircase": c.is_staircase,
                "verge": ws.char_json(c.verge),
                "core": ws.char_json(orbit.core_rep),
                "size": orbit.size,
                "places": _positions(orbit.places),
            }
        )
    summary = {
        "characters": ws.space.size,
        "orbits": len(rows),
        "staircase_orbits": sum(1 for r in rows if r["staircase"]),
    }
    return CommandReport(
        command="orbits",
        title=f"U-orbits on V̂ for {ws.t}, q={ws.ctx.q}",
        summary=summary,
        columns=["representative", "mc", "staircase", "core", "size", "places"],
        rows=rows,
        payload={"orbits": rows},
    )


def run_classify(ws: Workspace) -> CommandReport:
    report = classify(ws.engine, stabilizers=True)
    rows = []
    for r in report.records:
        rows.append(
            {
                "representative": ws.char_json(r.representative),
                "mc": _positions(r.mc),
                "staircase": r.staircase,
                "core": ws.char_json(r.core),
                "size": r.size,
                "places": _positions(r.places),
                "J": _positions(r.J),
                "verge_stabilizer_ok": r.verge_stabilizer_ok,
                "core_stabilizer_ok": r.core_stabilizer_ok,
                "staircase_image": ws.char_json(r.staircase_image),
            }
        )
    summary = {
        "orbits": len(report.records),
        "staircase_orbits": report.staircase_count,
        "cores": len(report.cores),
        "characters": report.total,
    }
    return CommandReport(
        command="classify",
        title=f"Classification of staircase orbits by cores, {ws.t}, q={ws.ctx.q}",
        summary=summary,
        columns=["mc", "core", "size", "places", "verge_stabilizer_ok", "core_stabilizer_ok"],
        rows=rows,
        payload={"classification": rows},
    )


# =========================================================
# superchar
# =========================================================


def basic_set_from_config(ws: Workspace) -> BasicSet:
    """The basic set named by --basic/--alpha (α defaults to 1 per position)."""
    positions = [tuple(pos) for pos in ws.cfg.basic]
    alphas = list(ws.cfg.alpha) or [1] * len(positions)
    if len(alphas) != len(positions):
        raise ConfigError(f"{len(positions)} basic positions but {len(alphas)} α values")
    bad = [a for a in alphas if not 0 <= a < ws.ctx.q]
    if bad:
        raise ConfigError(f"α values must be field encodings 0..{ws.ctx.q - 1}, got {bad}")
    return BasicSet.build(ws.t, dict(zip(positions, alphas)))


def run_superchar(ws: Workspace) -> CommandReport:
    """Decompose one basic set (from flags) or every basic set of the group."""
    if ws.cfg.basic:
        sets = [basic_set_from_config(ws)]
    else:
        sets = list(enumerate_basic_sets(ws.t, ws.ctx))
    logger.info(f"Decomposing {len(sets)} basic set(s) for {ws.t}")
    if ws.cfg.character_table:
        named = [(str(bs), supercharacter(bs, ws.elementary)) for bs in sets]
        title = f"André–Neto supercharacters of {ws.t}, q={ws.ctx.q}, on conjugacy classes"
        return character_table_report(ws, title, named)

    rows = []
    for bs in sets:
        elementary = []
        for pos, value in bs.phi:
            found = ws.elementary.identify(ws.elementary.datum(pos, value), ws.engine)
            elementary.append(
                {
                    "position": list(pos),
                    "alpha": render(ws.ctx, value),
                    "case": found.case,
                    "degree": found.degree,
                    "orbit_sizes": found.orbit_sizes,
                    "inner_products": {k: str(v) for k, v in sorted(found.inner_products.items())},
                }
            )
        dec = decompose_AN(bs, ws.engine, ws.elementary)
        rows.append(
            {
                "basic_set": str(bs),
                "D": _positions(sorted(bs.D)),
                "verge": ws.char_json(dec.verge),
                "degree": _degree(elementary),
                "tilde_orbit_size": dec.tilde_size,
                "cores": [{"core": ws.char_json(c), "size": s} for c, s in dec.cores],
                "exact": dec.exact,
                "multiplicity": str(dec.multiplicity),
                "elementary": elementary,
            }
        )

    payload: dict[str, Any] = {"supercharacters": rows}
    if len(sets) > 1:
        products = orthogonality_report(sets, ws.elementary)
        payload["orthogonality_pairs"] = len(products)
    summary = {"basic_sets": len(rows), "orbit_modules": sum(len(r["cores"]) for r in rows)}
    return CommandReport(
        command="superchar",
        title=f"André–Neto supercharacters of {ws.t}, q={ws.ctx.q}",
        summary=summary,
        columns=["basic_set", "degree", "tilde_orbit_size", "exact", "multiplicity"],
        rows=rows,
        payload=payload,
    )


def _degree(elementary: list[dict]) -> int:
    degree = 1
    for entry in elementary:
        degree *= entry["degree"]
    return degree


COMMANDS = {
    "gen": run_gen,
    "regions": run_regions,
    "orbits": run_orbits,
    "classify": run_classify,
    "superchar": run_superchar,
}


def require_form(cfg: JobConfig) -> None:
    if cfg.command in FORM_COMMANDS and cfg.family == "A":
        raise PreconditionError(f"{cfg.command} needs type B, C or D")
