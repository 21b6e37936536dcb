from enum import Enum
from pathlib import Path
from typing import Optional, Type

from .config import OracleBudget
from .exporters import AbstractDigraphExporter, ArcListExporter, DotExporter
from .group import ConnectionSet
from .oracle import build_cayley_digraph, representatives
from .schema import GroupTag


class ExportFormat(str, Enum):
    ARCLIST = "arclist"
    DOT = "dot"


class RepresentativeExport:
    """
    Writes one file per orbit representative: the Cayley digraph of the
    canonical connection set of every orbit of the chosen size.

    Args:
        destination: directory receiving the files; created if missing
        p: the prime of ``T_{4p}``
        k: only orbits of connection sets of this size; ``None`` for all
        connected_only: skip disconnected digraphs
        export_format: which exporter renders each digraph
        budget: sweep limits for finding the representatives
    """

    exporters: dict[str, Type[AbstractDigraphExporter]] = {
        ExportFormat.ARCLIST.value: ArcListExporter,
        ExportFormat.DOT.value: DotExporter,
    }

    def __init__(
        self,
        destination: Path,
        p: int,
        k: Optional[int] = None,
        connected_only: bool = False,
        export_format: ExportFormat = ExportFormat.ARCLIST,
        budget: Optional[OracleBudget] = None,
        group_tag: GroupTag = GroupTag.ALPHA_FAMILY,
    ) -> None:
        self.destination = destination
        self.p = p
        self.k = k
        self.connected_only = connected_only
        self.export_format = ExportFormat(export_format)
        self.budget = budget
        self.group_tag = group_tag

    @property
    def exporter_class(self) -> Type[AbstractDigraphExporter]:
        return self.exporters[self.export_format.value]

    def connection_sets(self) -> list[ConnectionSet]:
        return representatives(
            self.p, self.k, self.connected_only, group_tag=self.group_tag, budget=self.budget
        )

    def generate(self) -> list[Path]:
        """
        Write every file and return their paths in increasing bitmask order.
        """
        self.destination.mkdir(parents=True, exist_ok=True)
        written = []
        for mask in self.connection_sets():
            exporter = self.exporter_class(build_cayley_digraph(self.p, mask))
            written.append(exporter.write(self.destination))
        return written
