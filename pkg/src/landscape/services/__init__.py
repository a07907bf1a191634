"""Services package for the landscape package."""

from .campaign import CampaignExecutor
from .export import records_to_csv, summary_to_dict, theory_to_dict, to_json
from .svg import render_histogram_svg

__all__ = [
    "CampaignExecutor",
    "records_to_csv",
    "summary_to_dict",
    "theory_to_dict",
    "to_json",
    "render_histogram_svg",
]
