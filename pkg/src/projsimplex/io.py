"""Record CSV, SVG scatter and JSON vector-file formats."""

from __future__ import annotations

import csv
import io
import json
import math
from pathlib import Path
from xml.sax.saxutils import escape

import numpy as np

from .errors import ContractError
from .experiments import ExperimentRecord

CSV_HEADER = ("kind", "n", "seed", "d_min", "abs_det")


def fmt_real(x: float) -> str:
    """17 significant digits: enough to round-trip any double."""
    return format(float(x), ".17g")


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow((r.kind, r.n, r.seed, fmt_real(r.d_min), fmt_real(r.abs_det)))
    return buf.getvalue()


def write_records_csv(records, path) -> None:
    Path(path).write_bytes(records_to_csv(records).encode("utf-8"))


def read_records_csv(path) -> list[ExperimentRecord]:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ContractError(f"{path}: missing header {','.join(CSV_HEADER)}")
    return [
        ExperimentRecord(kind, int(n), int(seed), float(d), float(D))
        for kind, n, seed, d, D in rows[1:]
    ]


# --- SVG ----------------------------------------------------------------

_SIZE = 480
_PAD = 50
_STYLE = {
    "random": 'fill="#4a6fa5" fill-opacity="0.5"',
    "isosceles": 'fill="none" stroke="#c0392b" stroke-width="1.2"',
    "regular": 'fill="#27ae60"',
}


def _xy(d_min: float, abs_det: float) -> tuple[float, float]:
    span = _SIZE - 2 * _PAD
    return _PAD + d_min * span, _SIZE - _PAD - abs_det * span


def records_to_svg(records, n: int) -> str:
    """Scatter of |D| against d_min with the curves |D| = d_min and |D| = d_min^n.

    Random and isosceles records are circles (isosceles hollow), regular
    records are squares. Every record becomes one element of class "point".
    """
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SIZE}" height="{_SIZE}" '
        f'viewBox="0 0 {_SIZE} {_SIZE}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="white"/>',
    ]
    x0, y0 = _xy(0, 0)
    x1, y1 = _xy(1, 1)
    out.append(f'<path d="M{x0},{y0} H{x1} M{x0},{y0} V{y1}" stroke="black" fill="none"/>')
    out.append(f'<text x="{(x0 + x1) / 2:.1f}" y="{_SIZE - 15}" text-anchor="middle">d_min</text>')
    out.append(f'<text x="15" y="{(y0 + y1) / 2:.1f}" text-anchor="middle">|D|</text>')
    for label, power in ((f"|D| = d_min^{n}", n), ("|D| = d_min", 1)):
        pts = " ".join(
            "{:.2f},{:.2f}".format(*_xy(t, t**power)) for t in np.linspace(0.0, 1.0, 101)
        )
        out.append(f'<polyline class="curve" points="{pts}" stroke="gray" fill="none"/>')
        lx, ly = _xy(0.62, 0.62**power)
        out.append(f'<text x="{lx + 6:.1f}" y="{ly + 14:.1f}" font-size="11">{escape(label)}</text>')
    for r in records:
        x, y = _xy(r.d_min, r.abs_det)
        if r.kind == "regular":
            out.append(
                f'<rect class="point" x="{x - 3:.2f}" y="{y - 3:.2f}" width="6" height="6" {_STYLE[r.kind]}/>'
            )
        else:
            rad = 4 if r.kind == "isosceles" else 1.6
            out.append(f'<circle class="point" cx="{x:.2f}" cy="{y:.2f}" r="{rad}" {_STYLE[r.kind]}/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(records, n: int, path) -> None:
    Path(path).write_bytes(records_to_svg(records, n).encode("utf-8"))


# --- vector files ----------------------------------------------------------


def _reject_constant(name):
    raise ContractError(f"non-finite number {name} in input")


def parse_config(text: str) -> tuple[str, np.ndarray]:
    """Parse ``{"mode": ..., "vectors": [[[re, im], ...], ...]}``.

    Returns (mode, rows) with rows a complex array. Raises ContractError on
    any malformed input.
    """
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ContractError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ContractError("top level must be an object")
    mode = doc.get("mode", "vertices")
    if mode not in ("vertices", "faces"):
        raise ContractError(f'mode must be "vertices" or "faces", got {mode!r}')
    vecs = doc.get("vectors")
    if not isinstance(vecs, list) or not vecs:
        raise ContractError('"vectors" must be a non-empty array')
    rows = []
    for i, row in enumerate(vecs):
        if not isinstance(row, list) or not row:
            raise ContractError(f"vector {i} must be a non-empty array")
        entries = []
        for z in row:
            if (
                not isinstance(z, list)
                or len(z) != 2
                or not all(isinstance(t, (int, float)) and not isinstance(t, bool) for t in z)
            ):
                raise ContractError(f"vector {i}: entries must be [re, im] pairs")
            if not all(math.isfinite(t) for t in z):
                raise ContractError(f"vector {i}: non-finite entry")
            entries.append(complex(z[0], z[1]))
        rows.append(entries)
    m = len(rows[0])
    if any(len(r) != m for r in rows):
        raise ContractError("all vectors must have the same length")
    if len(rows) not in (2, m):
        raise ContractError(f"need 2 rows (point pair) or {m} rows (simplex), got {len(rows)}")
    return mode, np.array(rows, dtype=np.complex128)


def load_config(path) -> tuple[str, np.ndarray]:
    return parse_config(Path(path).read_text(encoding="utf-8"))


def dump_config(mode: str, rows) -> str:
    rows = np.asarray(rows, dtype=np.complex128)
    doc = {
        "mode": mode,
        "vectors": [[[float(z.real), float(z.imag)] for z in row] for row in rows],
    }
    return json.dumps(doc)
