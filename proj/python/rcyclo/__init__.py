"""Python access to the rcyclo core; results come back as parsed JSON documents."""

import json

from . import _rcyclo

WindowError = _rcyclo.WindowError
UndeterminedDifferential = _rcyclo.UndeterminedDifferential


def tcr(p=2, lo=-6, hi=6):
    return json.loads(_rcyclo.tcr(p, lo, hi))


def tcr_minus(lo=-6, hi=6):
    return json.loads(_rcyclo.tcr_minus(lo, hi))


def tpr(lo=-6, hi=6):
    return json.loads(_rcyclo.tpr(lo, hi))


def gfp(lo=-4, hi=4, t_max=24):
    return json.loads(_rcyclo.gfp(lo, hi, t_max))


def tcr_perfect(p, n, prec=5):
    return json.loads(_rcyclo.tcr_perfect(p, n, prec))


def page(which, page, s_range, t_range, p=2):
    return json.loads(_rcyclo.page(which, page, *s_range, *t_range, p))


def chart(which, page, s_range, t_range, format="ascii"):
    """Rendered chart text (ASCII grid or SVG document)."""
    return _rcyclo.chart(which, page, *s_range, *t_range, format)


def markers(report):
    """Degree -> marker list of a pi table or of the fiber inside a report."""
    table = report.get("fiber", report)
    rows = table.get("degrees", table.get("entries", []))
    return {row["degree"]: row["markers"] for row in rows}
