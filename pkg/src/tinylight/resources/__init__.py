from . import atoms
from .models import BUILTIN_MODELS, META, report, report_subgraph
from .report import CostItem, ResourceReport

__all__ = ["atoms", "BUILTIN_MODELS", "META", "report", "report_subgraph",
           "CostItem", "ResourceReport"]
