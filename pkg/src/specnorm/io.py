"""Matrix, scan, and certificate file formats.

Matrices travel as JSON with (re, im) pairs; Python's shortest round-trip
float formatting preserves every bit through a write/read cycle.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import SpecnormError
from .kernels import as_square
from .scan import GridScan


class MatrixFormatError(SpecnormError):
    """Malformed matrix file."""


def matrix_to_dict(a, meta: dict | None = None) -> dict:
    a = as_square(a)
    doc = {
        "n": int(a.shape[0]),
        "entries": [[[z.real, z.imag] for z in row] for row in a],
    }
    if meta:
        doc["meta"] = meta
    return doc


def matrix_from_dict(doc: dict) -> np.ndarray:
    try:
        n = int(doc["n"])
        entries = doc["entries"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MatrixFormatError(f"matrix document missing n/entries: {exc}") from exc
    if len(entries) != n:
        raise MatrixFormatError(f"expected {n} rows, found {len(entries)}")
    a = np.zeros((n, n), dtype=np.complex128)
    for i, row in enumerate(entries):
        if len(row) != n:
            raise MatrixFormatError(f"row {i}: expected {n} entries, found {len(row)}")
        for j, pair in enumerate(row):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise MatrixFormatError(f"row {i}, col {j}: expected a [re, im] pair")
            a[i, j] = complex(float(pair[0]), float(pair[1]))
    return as_square(a)


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_matrix(path, a, meta: dict | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(matrix_to_dict(a, meta)))


def read_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"{path}: invalid JSON at line {exc.lineno}") from exc
    return matrix_from_dict(doc)


def scan_csv(scan: GridScan) -> str:
    lines = ["re,im,s,d,ratio,flag"]
    for smp in scan.samples:
        lines.append(
            f"{smp.z.real!r},{smp.z.imag!r},{smp.s!r},{smp.d!r},{smp.ratio!r},{smp.flag}"
        )
    return "\n".join(lines) + "\n"


def write_scan_csv(path, scan: GridScan) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(scan_csv(scan))


def scan_to_dict(scan: GridScan) -> dict:
    return {
        "region": [scan.re_min, scan.re_max, scan.im_min, scan.im_max],
        "nx": scan.nx,
        "ny": scan.ny,
        "failures": scan.failures,
        "samples": [
            {
                "z": [s.z.real, s.z.imag],
                "s": s.s,
                "d": s.d,
                "ratio": s.ratio,
                "flag": s.flag,
            }
            for s in scan.samples
        ],
    }


def write_certificate(path, cert_doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_json(cert_doc))
