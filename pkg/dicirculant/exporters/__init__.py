from .abstract import AbstractDigraphExporter
from .arclist import ArcListExporter
from .dot import DotExporter

__all__ = ["AbstractDigraphExporter", "ArcListExporter", "DotExporter"]
