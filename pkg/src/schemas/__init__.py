"""Schema definitions for graph-dirac."""

from .evolution import EvolutionParams
from .gluing import GluingSpec
from .graph import GraphDocument
from .reports import GluingCaseTerm, GluingIdentityReport, PartialSumReport, RootCheckReport
from .settings import SettingsDocument

__all__ = [
    "EvolutionParams",
    "GluingCaseTerm",
    "GluingIdentityReport",
    "GluingSpec",
    "GraphDocument",
    "PartialSumReport",
    "RootCheckReport",
    "SettingsDocument",
]
