"""
Pydantic models for everything the package reports: counts, orbit sweeps and
formula-versus-oracle comparisons.
"""
from enum import Enum
from typing import Optional

from pydantic import BaseModel, root_validator, validator

#: Bumped whenever a field of a serialized document changes meaning
SCHEMA_VERSION = 1


class GroupTag(str, Enum):
    #: the automorphisms ``alpha_{s,t}``
    ALPHA_FAMILY = "alpha_family"
    #: every automorphism, found by brute force
    FULL_AUT = "full_aut"
    #: ``Z_{2p}^*`` acting by multiplication on ``Z_{2p} - {0}``
    CIRCULANT_UNITS = "circulant_units"


class Provenance(str, Enum):
    CLOSED_FORM = "closed_form"
    GENERATING_FUNCTION = "generating_function"
    ORACLE = "oracle"
    PUBLISHED_TABLE = "published_table"


class FrozenModel(BaseModel):
    class Config:
        allow_mutation = False
        use_enum_values = True


class Count(FrozenModel):
    value: int
    provenance: Provenance

    @validator("value")
    def non_negative(cls, val: int):
        if val < 0:
            raise ValueError("a count cannot be negative")
        return val


class DegreeCounts(FrozenModel):
    """
    Counts of digraphs with out-degree ``k``: all of them, the circulant ones
    (``S`` inside ``<a>``) and the connected ones.
    """

    k: int
    total: Count
    circulant: Optional[Count] = None
    connected: Count


class CountReport(FrozenModel):
    """
    Exact counts for one prime ``p``.

    ``total`` is the number of digraphs up to isomorphism, ``circulant`` the
    number with ``S`` inside ``<a>``, and ``connected`` the number of connected
    ones; ``per_degree`` splits all three by out-degree ``0 .. 4p-1``.
    """

    schema_version: int = SCHEMA_VERSION
    p: int
    group_tag: GroupTag = GroupTag.ALPHA_FAMILY
    total: Count
    circulant: Optional[Count] = None
    connected: Count
    per_degree: list[DegreeCounts]
    #: for ``p == 2``: the same counts under the full automorphism group
    full_aut: Optional["CountReport"] = None

    @root_validator(skip_on_failure=True)
    def check_sums(cls, values: dict) -> dict:
        p, rows = values["p"], values["per_degree"]
        top = 4 * p - 1
        if [row.k for row in rows] != list(range(top + 1)):
            raise ValueError(f"per_degree must cover out-degrees 0..{top}")
        totals = [row.total.value for row in rows]
        if sum(totals) != values["total"].value:
            raise ValueError("per-degree totals do not add up to the total")
        if totals != totals[::-1]:
            raise ValueError("per-degree totals are not palindromic")
        if sum(row.connected.value for row in rows) != values["connected"].value:
            raise ValueError("per-degree connected counts do not add up to the connected total")
        if rows[0].connected.value or rows[1].connected.value:
            raise ValueError("out-degree 0 and 1 digraphs cannot be connected")
        circulant = values.get("circulant")
        if circulant is not None:
            in_range = [row.circulant.value for row in rows[: 2 * p] if row.circulant is not None]
            if len(in_range) == 2 * p and sum(in_range) != circulant.value:
                raise ValueError("per-degree circulant counts do not add up to the circulant total")
        return values

    def degree_vector(self, connected: bool = False) -> list[int]:
        if connected:
            return [row.connected.value for row in self.per_degree]
        return [row.total.value for row in self.per_degree]

    def connected_row(self) -> list[int]:
        """
        The connected counts for out-degrees ``2 .. 4p-1``.
        """
        return self.degree_vector(connected=True)[2:]


CountReport.update_forward_refs()


class OrbitSummary(FrozenModel):
    """
    Result of an exhaustive sweep over all subsets of the permuted points.
    """

    p: int
    group_tag: GroupTag
    group_order: int
    total: int
    by_size: list[int]
    connected_by_size: Optional[list[int]] = None
    #: canonical (least) bitmask of each orbit, keyed by subset size
    representatives: Optional[dict[int, list[int]]] = None

    @root_validator(skip_on_failure=True)
    def check_sums(cls, values: dict) -> dict:
        if sum(values["by_size"]) != values["total"]:
            raise ValueError("per-size orbit counts do not add up to the total")
        connected = values.get("connected_by_size")
        if connected is not None:
            if len(connected) != len(values["by_size"]):
                raise ValueError("connected counts must be given for every size")
            if any(c > n for c, n in zip(connected, values["by_size"])):
                raise ValueError("more connected orbits than orbits")
        return values

    @property
    def connected_total(self) -> Optional[int]:
        if self.connected_by_size is None:
            return None
        return sum(self.connected_by_size)


class Comparison(FrozenModel):
    name: str
    expected: Optional[int]
    expected_source: Provenance
    actual: Optional[int]
    actual_source: Provenance
    #: reported but never fails a verification run
    informational: bool = False
    #: why one side could not be computed; such a comparison never passes
    error: Optional[str] = None

    @root_validator(skip_on_failure=True)
    def values_or_error(cls, values: dict) -> dict:
        if values.get("error") is None and None in (values.get("expected"), values.get("actual")):
            raise ValueError("a comparison without an error needs both values")
        return values

    @property
    def passed(self) -> bool:
        return self.error is None and self.expected == self.actual


class VerificationReport(FrozenModel):
    schema_version: int = SCHEMA_VERSION
    p: int
    comparisons: list[Comparison]
    notes: list[str] = []

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.comparisons if not c.informational)

    def failures(self) -> list[Comparison]:
        return [c for c in self.comparisons if not c.informational and not c.passed]
