"""Data models for the landscape package."""

from .models import (
    CampaignSummary,
    ClusterReport,
    DistributionComparison,
    EnsembleConfig,
    Formula,
    Genotype,
    ImplicationDigraph,
    Incompatibility,
    Literal,
    ReachabilityIndex,
    SccDecomposition,
    SplittingPair,
    TheoryValues,
    TrialRecord,
    VerificationFailure,
    VerificationReport,
    ViableSubgraph,
)

__all__ = [
    "Literal",
    "Genotype",
    "Incompatibility",
    "Formula",
    "ImplicationDigraph",
    "ReachabilityIndex",
    "SccDecomposition",
    "SplittingPair",
    "ClusterReport",
    "ViableSubgraph",
    "EnsembleConfig",
    "TrialRecord",
    "TheoryValues",
    "DistributionComparison",
    "CampaignSummary",
    "VerificationFailure",
    "VerificationReport",
]
