from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import BaseModel, validator

#: ``2^19`` subsets times 40 automorphisms (``p = 5``) fits under this
DEFAULT_MAX_WORK = 2**25

#: Orbit sweeps are never attempted beyond this prime
HARD_MAX_PRIME = 7


class OracleBudget(BaseModel):
    """
    Limits for the exhaustive orbit sweeps.

    The work of a sweep is ``2^n * |group|`` for ``n`` permuted points.  The
    default admits ``p`` in ``{2, 3, 5}``; ``p = 7`` needs an explicit, larger
    ``max_work``.
    """

    #: largest admissible ``2^n * |group|``
    max_work: int = DEFAULT_MAX_WORK
    #: sweeps are refused above this prime whatever max_work says
    max_prime: int = HARD_MAX_PRIME
    #: disjoint bitmask ranges swept independently
    partitions: int = 1
    #: each partition is swept in blocks of ``2^block_bits`` masks
    block_bits: int = 20

    @validator("max_work", "partitions")
    def positive(cls, val: int):
        if val < 1:
            raise ValueError("must be positive")
        return val

    @validator("max_prime")
    def within_hard_limit(cls, val: int):
        if not 2 <= val <= HARD_MAX_PRIME:
            raise ValueError(f"max_prime must lie between 2 and {HARD_MAX_PRIME}")
        return val

    @validator("block_bits")
    def sane_block(cls, val: int):
        if not 8 <= val <= 26:
            raise ValueError("block_bits must lie between 8 and 26")
        return val

    def admits(self, points: int, group_order: int) -> bool:
        return (1 << points) * group_order <= self.max_work


def load_budget(config_file: Optional[Path] = None, **overrides: Any) -> OracleBudget:
    """
    Build an :py:class:`OracleBudget` from an optional YAML file, then apply
    the non-``None`` keyword overrides (typically CLI options).
    """
    data: dict[str, Any] = {}
    if config_file is not None:
        if not config_file.exists():
            raise FileNotFoundError(f"{config_file} does not exist.")
        with config_file.open("r") as yaml_file:
            data = yaml.safe_load(yaml_file) or {}
        data = data.get("oracle", data)
    data.update({key: val for key, val in overrides.items() if val is not None})
    return OracleBudget(**data)
