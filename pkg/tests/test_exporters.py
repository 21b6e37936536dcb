from pathlib import Path

from dicirculant.exporters import ArcListExporter, DotExporter
from dicirculant.group import dicyclic_group
from dicirculant.oracle import build_cayley_digraph
from dicirculant.project import ExportFormat, RepresentativeExport


def _rotation_digraph():
    group = dicyclic_group(2)
    return build_cayley_digraph(2, group.mask_of([group.a(1)]))


def test_arclist():
    exporter = ArcListExporter(_rotation_digraph())
    lines = exporter.data.splitlines()
    assert lines[0] == "p=2 n=8 k=1"
    assert sorted(lines[1:]) == sorted(
        ["0 1", "1 2", "2 3", "3 0", "4 5", "5 6", "6 7", "7 4"]
    )
    assert exporter.file_name() == "p2_k1_0x1.arcs"


def test_arclist_of_empty_set():
    data = ArcListExporter(build_cayley_digraph(3, 0)).data
    assert data == "p=3 n=12 k=0\n"


def test_dot():
    exporter = DotExporter(_rotation_digraph())
    data = exporter.data
    assert data.startswith('digraph "Cay(T_8, 0x1)" {')
    assert '  4 [label="a^0.b"];' in data
    assert '  3 [label="a^3"];' in data
    assert "  3 -> 0;" in data
    assert exporter.file_name() == "p2_k1_0x1.dot"


def test_write(tmp_path):
    path = ArcListExporter(_rotation_digraph()).write(tmp_path)
    assert path == tmp_path / Path("p2_k1_0x1.arcs")
    assert path.read_text().startswith("p=2 n=8 k=1\n")


def test_representative_export(tmp_path):
    destination = tmp_path / Path("q8")
    written = RepresentativeExport(destination, 2, 1).generate()
    assert [path.name for path in written] == [
        "p2_k1_0x1.arcs",
        "p2_k1_0x2.arcs",
        "p2_k1_0x8.arcs",
    ]


def test_representative_export_connected_dot(tmp_path):
    written = RepresentativeExport(
        tmp_path, 3, 2, connected_only=True, export_format=ExportFormat.DOT
    ).generate()
    assert len(written) == 4
    assert all(path.suffix == ".dot" for path in written)
