"""Experiment runner, report rendering and the analysis entry point."""
from core.services.report.analysis_service import AnalysisService
from core.services.report.experiment import prepare_annotations, run_experiment
from core.services.report.report_renderer import FORMATS, parse_report, render_report

__all__ = [
    "AnalysisService",
    "FORMATS",
    "prepare_annotations",
    "parse_report",
    "render_report",
    "run_experiment",
]
