"""Scenario documents, analysis reports and core plots."""

##############################################################################
# Local imports.
from .plot import CorePlotGeometry, plot_geometry, quantize, render_core_plot
from .report import AnalysisReport, ReportFormat, analyse, emit_report, report_json
from .scenario import (
    SCHEMA_VERSION,
    FirmDetails,
    OperationalConflict,
    ParseError,
    Scenario,
    ScenarioError,
    SchemaVersionUnsupported,
    UnknownField,
    UnwritableValue,
    dump_scenario,
    load_scenario,
    read_scenario,
)

##############################################################################
# Exports.
__all__ = [
    "analyse",
    "AnalysisReport",
    "CorePlotGeometry",
    "dump_scenario",
    "emit_report",
    "FirmDetails",
    "load_scenario",
    "OperationalConflict",
    "ParseError",
    "plot_geometry",
    "quantize",
    "read_scenario",
    "render_core_plot",
    "report_json",
    "ReportFormat",
    "Scenario",
    "ScenarioError",
    "SCHEMA_VERSION",
    "SchemaVersionUnsupported",
    "UnknownField",
    "UnwritableValue",
]

### __init__.py ends here
