from string import Template

from .abstract import AbstractDigraphExporter

DOT_TEMPLATE = Template(
    """digraph "$name" {
$nodes
$arcs
}
"""
)


class DotExporter(AbstractDigraphExporter):
    """
    Graphviz ``digraph`` with vertices labelled ``a^i`` and ``a^i.b``.
    """

    suffix = "dot"

    @property
    def data(self) -> str:
        nodes = [f'  {node} [label="{label}"];' for node, label in self.graph.nodes(data="label")]
        arcs = [f"  {u} -> {v};" for u, v in self.graph.edges()]
        return DOT_TEMPLATE.substitute(
            name=f"Cay(T_{4 * self.p}, 0x{self.connection_set:x})",
            nodes="\n".join(nodes),
            arcs="\n".join(arcs),
        )
