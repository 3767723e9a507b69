"""
Job configuration and budget caps.

Centralizes every size guard and sampling parameter so commands and tests
share one source of defaults. Values may be overridden through environment
variables (optionally loaded from a `.env` file).
"""

import os
from dataclasses import asdict, dataclass, field

from dotenv import load_dotenv

from sylow.core.errors import ConfigError

FAMILIES = ("A", "B", "C", "D")
COMMANDS = ("gen", "regions", "orbits", "classify", "superchar", "verify")
FORMATS = ("text", "json", "csv")


@dataclass
class Budget:
    """Size guards and sample sizes.

    All caps are counts of objects that would be enumerated; a guard trips
    before the enumeration starts.
    """

    # =========================================================
    # Enumeration Guards
    # =========================================================

    # Largest group that may be enumerated element by element
    max_group_size: int = 10**7

    # Largest orbit a BFS may grow to
    max_orbit_size: int = 10**6

    # =========================================================
    # Sampled Checks
    # =========================================================

    # Random pairs for checks that are exhaustive only at tiny scale
    sample_pairs: int = 500

    # Random triples for action/cocycle axioms
    sample_triples: int = 10_000

    def __post_init__(self) -> None:
        for name, value in asdict(self).items():
            if value <= 0:
                raise ConfigError(f"{name} must be positive, got {value}")


@dataclass
class JobConfig:
    """Configuration for one command run.

    The seed is echoed in every report so any sampled check can be rerun.
    """

    family: str = "B"
    n: int = 1
    q: str = "3"
    command: str = "gen"
    output: str = "text"
    seed: int = 0
    budget: Budget = field(default_factory=Budget)

    # Superchar command inputs: positions of D ∩ pUP and their values
    basic: list[tuple[int, int]] = field(default_factory=list)
    alpha: list[int] = field(default_factory=list)

    # Optional tables: element coordinates (gen), characters on classes (orbits, superchar)
    coordinates: bool = False
    character_table: bool = False

    # Derived from q
    p: int = field(init=False, default=0)
    e: int = field(init=False, default=0)

    def __post_init__(self) -> None:
        """Validate configuration."""
        self.family = self.family.upper()
        if self.family not in FAMILIES:
            raise ConfigError(f"type must be one of {', '.join(FAMILIES)}, got {self.family!r}")
        if self.n < 1:
            raise ConfigError(f"rank n must be at least 1, got {self.n}")
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.output not in FORMATS:
            raise ConfigError(f"output format must be one of {', '.join(FORMATS)}")
        self.p, self.e = parse_q(self.q)

    @property
    def field_size(self) -> int:
        return self.p**self.e

    def to_dict(self) -> dict:
        """Plain-dict form embedded in JSON reports."""
        return {
            "type": self.family,
            "n": self.n,
            "q": self.field_size,
            "p": self.p,
            "e": self.e,
            "command": self.command,
            "seed": self.seed,
            "budget": asdict(self.budget),
            "coordinates": self.coordinates,
            "character_table": self.character_table,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "JobConfig":
        """Create config from dictionary."""
        budget = data.get("budget") or {}
        return cls(
            family=data.get("type", "B"),
            n=data.get("n", 1),
            q=str(data.get("q", "3")),
            command=data.get("command", "gen"),
            output=data.get("output", "text"),
            seed=data.get("seed", 0),
            budget=Budget(**budget),
            basic=[tuple(pos) for pos in data.get("basic", [])],
            alpha=list(data.get("alpha", [])),
            coordinates=bool(data.get("coordinates", False)),
            character_table=bool(data.get("character_table", False)),
        )


def parse_q(text: str) -> tuple[int, int]:
    """Parse a field size given as `p^e` or as the integer q.

    Returns:
        (p, e). Primality and oddness of p are checked by the field module;
        here only the shape is validated.
    """
    text = str(text).strip()
    try:
        if "^" in text:
            base, exp = text.split("^", 1)
            p, e = int(base), int(exp)
        else:
            q = int(text)
            p, e = _split_prime_power(q)
    except ValueError as exc:
        raise ConfigError(f"cannot parse field size {text!r}: {exc}") from exc
    if p < 2 or e < 1:
        raise ConfigError(f"field size must be p^e with p prime and e >= 1, got {text!r}")
    return p, e


def _split_prime_power(q: int) -> tuple[int, int]:
    from sympy import factorint

    if q < 2:
        raise ValueError("q must be at least 2")
    factors = factorint(q)
    if len(factors) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, e),) = factors.items()
    return int(p), int(e)


def budget_from_env(env_path: str | None = None) -> Budget:
    """
    Create a Budget from environment variables.

    Looks for:
    - SYLOW_MAX_GROUP_SIZE (optional)
    - SYLOW_MAX_ORBIT_SIZE (optional)
    - SYLOW_SAMPLE_PAIRS (optional)
    - SYLOW_SAMPLE_TRIPLES (optional)
    """
    if env_path:
        load_dotenv(env_path)
    else:
        load_dotenv()

    defaults = Budget()
    values = {}
    for name in asdict(defaults):
        raw = os.getenv(f"SYLOW_{name.upper()}")
        if raw is None:
            continue
        try:
            values[name] = int(raw)
        except ValueError as exc:
            raise ConfigError(f"SYLOW_{name.upper()} must be an integer, got {raw!r}") from exc
    return Budget(**values)


def env_default(name: str, fallback: str) -> str:
    """Read `SYLOW_<NAME>` after `budget_from_env` has loaded the .env file."""
    return os.getenv(f"SYLOW_{name.upper()}", fallback)


DEFAULT_BUDGET = Budget()
DEFAULT_CONFIG = JobConfig()
