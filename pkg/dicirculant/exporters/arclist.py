import networkx as nx

from .abstract import AbstractDigraphExporter


class ArcListExporter(AbstractDigraphExporter):
    """
    Header ``p=<p> n=<4p> k=<|S|>`` followed by one ``u v`` line per arc.
    """

    suffix = "arcs"

    @property
    def data(self) -> str:
        header = f"p={self.p} n={self.graph.number_of_nodes()} k={self.out_degree}"
        lines = [header, *nx.generate_edgelist(self.graph, data=False)]
        return "\n".join(lines) + "\n"
