"""Text, TSV and JSON renderings of a scheme report."""
import json
from typing import Dict, List

from pydantic import ValidationError

from core.models.report import ReportMetadata, SchemeReport, SchemeRow
from core.services.errors.exceptions import ConfigurationError

FORMATS = ("text", "tsv", "json")
METADATA_PREFIX = "# metadata "


def _check_format(fmt: str) -> None:
    if fmt not in FORMATS:
        raise ConfigurationError(f"unknown report format {fmt!r} (expected one of {', '.join(FORMATS)})")


def _orders(report: SchemeReport) -> List[int]:
    return list(range(1, report.metadata.max_n + 1))


def _render_text(report: SchemeReport) -> str:
    orders = _orders(report)
    width = max(len(row.label) for row in report.rows)
    header = "Scheme".ljust(width) + "".join(f"{'H' + str(n):>9}" for n in orders)
    lines = [header, "-" * len(header)]
    for row in report.rows:
        lines.append(row.label.ljust(width) + "".join(f"{row.values[n]:9.3f}" for n in orders))
    lines.append("")
    lines.append(f"Change from {report.baseline.label}")
    for row in report.rows:
        lines.append(row.label.ljust(width) + "".join(f"{row.deltas[n]:+9.3f}" for n in orders))
    meta = report.metadata
    lines.append("")
    lines.append(
        f"H0 = {meta.h0:.3f} ({meta.corpus.tagset_size} symbols); "
        f"{meta.corpus.sentence_count} sentences, mean length {meta.corpus.mean_length:.1f} tokens; "
        f"{meta.excluded_count} excluded"
    )
    windows = "per sentence" if meta.per_sentence_windows else "across sentences"
    lines.append(f"n-gram windows {windows}")
    if meta.annotation_sources:
        sources = ", ".join(f"{name}: {source}" for name, source in sorted(meta.annotation_sources.items()))
        lines.append(f"Annotations: {sources}")
    return "\n".join(lines) + "\n"


def _render_tsv(report: SchemeReport) -> str:
    orders = _orders(report)
    columns = ["scheme", "label"] + [f"H{n}" for n in orders] + [f"dH{n}" for n in orders]
    lines = [METADATA_PREFIX + report.metadata.model_dump_json(), "\t".join(columns)]
    for row in report.rows:
        fields = [row.scheme, row.label]
        fields += [repr(row.values[n]) for n in orders]
        fields += [repr(row.deltas[n]) for n in orders]
        lines.append("\t".join(fields))
    return "\n".join(lines) + "\n"


def render_report(report: SchemeReport, fmt: str = "text") -> str:
    """
    Render a report.
    
    Text mode prints three decimals; tsv and json keep full float
    precision so `parse_report` recovers every value exactly.
    """
    _check_format(fmt)
    if fmt == "json":
        return report.model_dump_json(indent=2) + "\n"
    if fmt == "tsv":
        return _render_tsv(report)
    return _render_text(report)


def _parse_tsv(data: str) -> SchemeReport:
    lines = [line for line in data.splitlines() if line.strip()]
    if len(lines) < 2 or not lines[0].startswith(METADATA_PREFIX):
        raise ConfigurationError("tsv report must start with a metadata line and a header")
    metadata = ReportMetadata.model_validate_json(lines[0][len(METADATA_PREFIX):])
    header = lines[1].split("\t")
    rows = []
    for line in lines[2:]:
        record: Dict[str, str] = dict(zip(header, line.split("\t")))
        values = {int(key[1:]): float(value) for key, value in record.items() if key.startswith("H")}
        deltas = {int(key[2:]): float(value) for key, value in record.items() if key.startswith("dH")}
        rows.append(SchemeRow(scheme=record["scheme"], label=record["label"], values=values, deltas=deltas))
    return SchemeReport(rows=rows, metadata=metadata)


def parse_report(data: str, fmt: str) -> SchemeReport:
    """Read a tsv or json rendering back into a report."""
    _check_format(fmt)
    try:
        if fmt == "json":
            return SchemeReport.model_validate_json(data)
        if fmt == "tsv":
            return _parse_tsv(data)
    except (ValidationError, ValueError, KeyError) as e:
        raise ConfigurationError(f"cannot parse {fmt} report: {str(e)}") from e
    raise ConfigurationError("text reports cannot be parsed back")
