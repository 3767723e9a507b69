"""
Classification of staircase orbits by their unique cores.

For every orbit of V̂ this records the main conditions, the core, the places
and J(A), and checks |O| = q^|Pl| = q^|Limb| = [U : U_{J(A)}]. With
stabilizer checks on, the verge stabilizer must equal U_{J(A)} as a set and
the core stabilizer must have order |U_{J(A)}|.
"""

import logging
from dataclasses import dataclass, field

from sylow.characters.linchar import LinChar
from sylow.core.errors import check
from sylow.geometry.types import Position
from sylow.orbits.engine import Orbit, OrbitEngine

logger = logging.getLogger(__name__)


@dataclass
class OrbitRecord:
    """One row of the classification."""

    representative: LinChar
    size: int
    mc: tuple[Position, ...]
    staircase: bool
    verge: LinChar
    core: LinChar | None = None
    places: tuple[Position, ...] = ()
    J: tuple[Position, ...] = ()
    staircase_image: LinChar | None = None

    # None when the check was not run
    verge_stabilizer_ok: bool | None = None
    core_stabilizer_ok: bool | None = None


@dataclass
class ClassificationReport:
    """All orbits of V̂ for one group."""

    label: str
    q: int
    records: list[OrbitRecord] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(r.size for r in self.records)

    @property
    def staircase_count(self) -> int:
        return sum(1 for r in self.records if r.staircase)

    @property
    def cores(self) -> list[LinChar]:
        return [r.core for r in self.records if r.core is not None]


def _record(engine: OrbitEngine, orbit: Orbit, stabilizers: bool) -> OrbitRecord:
    c = orbit.conditions
    record = OrbitRecord(
        representative=orbit.representative,
        size=orbit.size,
        mc=c.mc,
        staircase=c.is_staircase,
        verge=c.verge,
    )
    if not c.is_staircase:
        record.staircase_image = orbit.staircase_image
        return record

    q = engine.space.ctx.q
    J = engine.J_of(c)
    limb = orbit.limbs.limb
    index = len(engine.space.pup) - len(J)
    check(
        orbit.size == q ** len(limb) == q**index,
        "|O| = q^|Limb| = [U : U_J(A)]",
        f"|O|={orbit.size}, |Limb|={len(limb)}, index exponent {index}",
    )
    record.core = orbit.core_rep
    record.places = orbit.places
    record.J = tuple(sorted(J))

    if stabilizers:
        group = engine.space.group
        pattern = set(group.pattern_elements(J))
        record.verge_stabilizer_ok = set(engine.stabilizer(c.verge)) == pattern
        record.core_stabilizer_ok = len(engine.stabilizer(orbit.core_rep)) == len(pattern)
        check(
            record.verge_stabilizer_ok,
            "the verge stabilizer is U_J(A)",
            f"verge {c.verge}",
        )
        check(
            record.core_stabilizer_ok,
            "the core stabilizer has order |U_J(A)|",
            f"core {orbit.core_rep}",
        )
    return record


def classify(engine: OrbitEngine, stabilizers: bool = True) -> ClassificationReport:
    """Decompose V̂ and classify every staircase orbit by its core."""
    space = engine.space
    report = ClassificationReport(label=str(space.t), q=space.ctx.q)
    for orbit in engine.orbit_decomposition():
        report.records.append(_record(engine, orbit, stabilizers))

    cores = report.cores
    check(len(cores) == len(set(cores)), "distinct staircase orbits have distinct cores")
    logger.info(
        f"{report.label}, q={report.q}: {len(report.records)} orbits, "
        f"{report.staircase_count} staircase"
    )
    return report
