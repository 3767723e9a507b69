"""
Acceptance suites run by `sylow-orbit verify`.

Each suite checks one family of identities at the configured size and
either returns a short detail line or raises VerificationError naming the
claim that failed. Checks are exhaustive while the group is tiny and fall
back to seeded sampling beyond that.
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass

from sylow.characters.linchar import LinChar
from sylow.cli.commands import CommandReport, Workspace
from sylow.core.errors import PreconditionError, VerificationError, check
from sylow.cyclo.class_functions import ClassFunction, sum_class_functions
from sylow.cyclo.cycint import CycInt
from sylow.cyclo.orbit_character import monomial_trace, orbit_character
from sylow.orbits.classify import classify
from sylow.superchars.basic_sets import enumerate_basic_sets
from sylow.superchars.decomposition import decompose_AN, orthogonality_report
from sylow.superchars.elementary import degree_formula

logger = logging.getLogger(__name__)

# Largest |U| for which pair checks run exhaustively
EXHAUSTIVE_ORDER = 81

# Largest |V̂| for which root-element oracles run over every character (3^9)
EXHAUSTIVE_CHARACTERS = 19_683

# Largest |V̂| for the brute-force left-translate oracle
LEFT_ORACLE_SIZE = 27

# Largest |Ũ| for the induced-module comparison
INDUCED_ORACLE_ORDER = 27


@dataclass
class SuiteResult:
    name: str
    claim: str
    passed: bool
    detail: str
    anchor: str = ""


def _pairs(ws: Workspace, elements: list, samples: int):
    if len(elements) <= EXHAUSTIVE_ORDER:
        return ((u, v) for u in elements for v in elements)
    logger.warning(f"Sampling {samples} pairs on |U|={len(elements)}")
    rng = ws.rng()
    return ((rng.choice(elements), rng.choice(elements)) for _ in range(samples))


def suite_group(ws: Workspace) -> str:
    group = ws.group
    elements = list(group.elements())
    distinct = len(set(elements))
    check(distinct == group.order, "|U| = q^|pUP|", f"{distinct} vs {group.order}")
    check(all(group.is_member(u) for u in elements), "enumerated elements lie in U")
    for u, v in _pairs(ws, elements, ws.cfg.budget.sample_triples):
        check(group.is_member(group.multiply(u, v)), "U is closed under multiplication")
    return f"|U| = {group.order}"


def suite_cocycle(ws: Workspace) -> str:
    space = ws.space
    elements = list(ws.group.elements())
    for u, v in _pairs(ws, elements, ws.cfg.budget.sample_pairs):
        lhs = space.cocycle_f(ws.group.multiply(u, v))
        rhs = space.add(space.act(space.cocycle_f(u), v), space.cocycle_f(v))
        check(lhs == rhs, "f(uv) = f(u).v + f(v)", f"{lhs} vs {rhs}")
    images = {space.cocycle_f(u) for u in elements}
    check(len(images) == space.size, "f is a bijection from U onto V", f"{len(images)} images")
    return f"{len(elements)} elements"


def suite_regular(ws: Workspace) -> str:
    orbits = ws.engine.orbit_decomposition()
    chars = [orbit_character(ws.space, ws.table, o.members) for o in orbits]
    total = sum_class_functions(ws.table, chars)
    check(total == ClassFunction.regular(ws.table), "ℂV̂ affords the regular character")
    return f"{len(orbits)} orbits"


def suite_classification(ws: Workspace) -> str:
    report = classify(ws.engine, stabilizers=True)
    return f"{report.staircase_count} staircase orbits, {len(report.cores)} cores"


def suite_staircase(ws: Workspace) -> str:
    space, engine = ws.space, ws.engine
    characters: dict[frozenset[LinChar], ClassFunction] = {}

    def character_of(members: frozenset[LinChar]) -> ClassFunction:
        if members not in characters:
            characters[members] = orbit_character(space, ws.table, members)
        return characters[members]

    count = 0
    for orbit in engine.orbit_decomposition():
        if orbit.is_staircase:
            continue
        chi_a = character_of(orbit.members)
        for a in sorted(orbit.members, key=lambda c: c.sort_key(space.pup)):
            b, witness = engine.staircase_transform(a)
            check(engine.conditions(b).is_staircase, "the staircase image is a staircase", str(a))
            check(
                space.dot_left(witness, a) == b, "the staircase image is a left translate", str(a)
            )
            chi_b = character_of(engine.orbit_members(b))
            check(chi_a == chi_b, "ℂO_A ≅ ℂO_B for the staircase image B", f"{a}")
            count += 1
    return f"{count} non-staircase characters"


def suite_elementary(ws: Workspace) -> str:
    elementary = ws.elementary
    q = ws.ctx.q
    count = 0
    for pos in ws.group.pup:
        for alpha in ws.ctx.nonzero():
            d = elementary.datum(pos, alpha)
            check(elementary.check_normal(d), "U°_{i,j} is normal in U_{i,j}", f"{pos}")
            xi = elementary.character(d)
            check(xi.degree() == degree_formula(pos, ws.t, q), "deg ξ^{i,j}_α", f"{pos}")
            count += 1
        elementary.identify(elementary.datum(pos, 1), ws.engine)
    return f"{count} elementary characters"


def suite_decomposition(ws: Workspace) -> str:
    sets = list(enumerate_basic_sets(ws.t, ws.ctx))
    for bs in sets:
        decompose_AN(bs, ws.engine, ws.elementary)
    orthogonality_report(sets, ws.elementary)
    return f"{len(sets)} basic sets"


def _oracle_characters(ws: Workspace) -> list[LinChar]:
    space = ws.space
    if space.size <= EXHAUSTIVE_CHARACTERS:
        return list(space.characters())
    samples = ws.cfg.budget.sample_pairs
    logger.warning(f"Sampling {samples} characters on |V̂|={space.size}")
    rng = ws.rng()
    return [
        LinChar.from_dict({pos: rng.randrange(ws.ctx.q) for pos in space.pup})
        for _ in range(samples)
    ]


def suite_oracles(ws: Workspace) -> str:
    space, group = ws.space, ws.group
    p = ws.ctx.p
    chars = _oracle_characters(ws)
    for pos, alpha, x in group.generators():
        tilde = group.tilde_root(pos, alpha)
        for a in chars:
            check(
                space.root_action(a, pos, alpha) == space.dot_right(a, x),
                "column operations agree with π(A u^{-t})",
                f"x{pos}({alpha})",
            )
            check(
                space.row_op(pos, alpha, a) == space.dot_left(tilde, a),
                "row operations agree with π(u^{-t} A)",
                f"x̃{pos}({alpha})",
            )
            check(
                space.root_exponent(a, pos, alpha) == space.exponent_right(a, x),
                "root elements scale by θ(α A_ij)",
                f"x{pos}({alpha})",
            )

    if space.size <= LEFT_ORACLE_SIZE:
        for x in group.elements():
            for a in space.characters():
                try:
                    exponent, image = space.lambda_left_fast(x, a)
                except PreconditionError:
                    continue
                combo = space.lambda_left_general(x, a)
                check(
                    combo.denominator == 1
                    and combo.terms == ((image, CycInt.zeta(p, exponent)),),
                    "λ_x fast path agrees with the general formula",
                    f"{a}",
                )
        for orbit in ws.engine.orbit_decomposition():
            chi = orbit_character(space, ws.table, orbit.members)
            members = sorted(orbit.members, key=lambda b: b.sort_key(space.pup))
            for u in ws.table.elements:
                check(
                    chi(u) == monomial_trace(space, members, u),
                    "orbit character is the monomial trace",
                    f"{orbit.representative}",
                )

    if group.tilde_order <= INDUCED_ORACLE_ORDER:
        for u in group.tilde_elements():
            trace = space.module_trace(u)
            check(
                trace.is_rational() and trace.rational_part() == space.fixed_cosets(u),
                "ℂV̂ is induced from the trivial module of Ũ_J",
                f"{u.support()}",
            )
    return f"{len(group.generators())} root elements on {len(chars)} characters"


SUITES: list[tuple[str, str, str, Callable[[Workspace], str]]] = [
    ("group", "group construction", "order and closure of U", suite_group),
    ("cocycle", "cocycle and bijectivity of f", "cocycle theorem for f", suite_cocycle),
    ("regular", "regular-representation identity", "monomial module theorem", suite_regular),
    ("classification", "classification by cores", "classification by cores", suite_classification),
    ("staircase", "staircase reduction", "staircase reduction theorem", suite_staircase),
    (
        "elementary",
        "elementary characters",
        "identification of elementary characters",
        suite_elementary,
    ),
    (
        "decomposition",
        "decomposition of André–Neto modules",
        "decomposition of André–Neto modules",
        suite_decomposition,
    ),
    (
        "oracles",
        "fast paths against dense definitions",
        "restricted column and row operations",
        suite_oracles,
    ),
]


def run_suites(ws: Workspace) -> list[SuiteResult]:
    results = []
    for name, claim, anchor, suite in SUITES:
        logger.info(f"Running suite {name}")
        try:
            detail = suite(ws)
            results.append(SuiteResult(name, claim, True, detail, anchor))
        except VerificationError as e:
            e.with_anchor(anchor)
            logger.error(f"Suite {name} failed: {e}")
            results.append(SuiteResult(name, e.claim, False, e.detail, e.anchor))
    return results


def run_verify(ws: Workspace) -> CommandReport:
    results = run_suites(ws)
    rows = [
        {
            "suite": r.name,
            "passed": r.passed,
            "claim": r.claim,
            "anchor": r.anchor,
            "detail": r.detail,
        }
        for r in results
    ]
    passed = sum(1 for r in results if r.passed)
    return CommandReport(
        command="verify",
        title=f"Acceptance suites for {ws.t}, q={ws.ctx.q}",
        summary={"suites": len(results), "passed": passed, "failed": len(results) - passed},
        columns=["suite", "passed", "claim", "anchor", "detail"],
        rows=rows,
        payload={"suites": rows},
        ok=passed == len(results),
    )
