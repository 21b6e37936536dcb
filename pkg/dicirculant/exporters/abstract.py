from pathlib import Path

import networkx as nx


class AbstractDigraphExporter:
    """
    Turns one Cayley digraph into the text of a single file.

    Args:
        graph: a digraph from :py:func:`dicirculant.oracle.build_cayley_digraph`
    """

    #: File name suffix, without the dot
    suffix: str

    def __init__(self, graph: nx.DiGraph) -> None:
        self.graph = graph

    @property
    def p(self) -> int:
        return self.graph.graph["p"]

    @property
    def connection_set(self) -> int:
        return self.graph.graph["connection_set"]

    @property
    def out_degree(self) -> int:
        return self.graph.graph["out_degree"]

    @property
    def data(self) -> str:
        raise NotImplementedError

    def file_name(self) -> str:
        """
        ``p<p>_k<|S|>_0x<mask>.<suffix>``, the mask in lowercase hexadecimal.
        """
        return f"p{self.p}_k{self.out_degree}_0x{self.connection_set:x}.{self.suffix}"

    def write(self, destination: Path) -> Path:
        path = destination / Path(self.file_name())
        with path.open("w") as file:
            file.write(self.data)
        return path
