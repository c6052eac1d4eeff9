"""Plain-text matrix formats, code files, and JSON catalogs.

A generator matrix is serialized as a header line ``p n k`` followed by k
rows of bare digits and a terminating blank line.  A ring code file is a
``ring n`` header followed by the binary block then the ternary block.  A
list file is just consecutive matrix blocks.

Catalogs are JSON with sorted keys and no volatile fields, so the same
inputs always produce byte-identical output; files are written to a
temporary name and renamed into place.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Iterable

from . import __version__
from .classify import ClassificationRecord
from .codes import HzCode
from .errors import ParseError
from .gf import LinearCode
from .ring import RingId


def format_matrix(code: LinearCode) -> str:
    lines = [f"{code.p} {code.n} {code.k}"]
    for row in code.gen:
        lines.append("".join(str(int(x)) for x in row))
    lines.append("")
    return "\n".join(lines) + "\n"


def format_matrix_list(codes: Iterable[LinearCode]) -> str:
    return "".join(format_matrix(c) for c in codes)


def format_hzcode(code: HzCode) -> str:
    return (
        f"{code.ring} {code.n}\n"
        + format_matrix(code.ca)
        + format_matrix(code.cb)
    )


class _Lines:
    def __init__(self, text: str):
        self.lines = text.splitlines()
        self.pos = 0

    def eof(self) -> bool:
        while self.pos < len(self.lines) and not self.lines[self.pos].strip():
            self.pos += 1
        return self.pos >= len(self.lines)

    def next_nonblank(self) -> str:
        if self.eof():
            raise ParseError("unexpected end of input")
        line = self.lines[self.pos].strip()
        self.pos += 1
        return line

    def next_raw(self) -> str:
        if self.pos >= len(self.lines):
            return ""
        line = self.lines[self.pos].strip()
        self.pos += 1
        return line


def _parse_matrix(src: _Lines) -> LinearCode:
    header = src.next_nonblank().split()
    if len(header) != 3:
        raise ParseError(f"matrix header must be 'p n k', got {header}")
    try:
        p, n, k = (int(t) for t in header)
    except ValueError as exc:
        raise ParseError(f"bad matrix header {header}") from exc
    if p not in (2, 3):
        raise ParseError(f"p must be 2 or 3, got {p}")
    if n < 0 or k < 0 or k > n:
        raise ParseError(f"bad dimensions n={n}, k={k}")
    rows = []
    for _ in range(k):
        line = src.next_raw()
        if not line:
            raise ParseError(f"expected {k} matrix rows, got {len(rows)}")
        if len(line) != n or any(ch not in "012" for ch in line):
            raise ParseError(f"bad matrix row {line!r} for n={n}")
        row = [int(ch) for ch in line]
        if any(x >= p for x in row):
            raise ParseError(f"row {line!r} has entries outside F{p}")
        rows.append(row)
    tail = src.next_raw()
    if tail:
        raise ParseError(f"expected blank line after matrix, got {tail!r}")
    code = LinearCode(p, rows, n=n)
    if code.k != k:
        raise ParseError(f"rows are dependent: header says k={k}, rank is {code.k}")
    return code


def parse_matrix(text: str) -> LinearCode:
    src = _Lines(text)
    code = _parse_matrix(src)
    if not src.eof():
        raise ParseError("trailing content after matrix")
    return code


def parse_matrix_list(text: str) -> list[LinearCode]:
    src = _Lines(text)
    out = []
    while not src.eof():
        out.append(_parse_matrix(src))
    return out


def parse_hzcode(text: str) -> HzCode:
    src = _Lines(text)
    header = src.next_nonblank().split()
    if len(header) != 2:
        raise ParseError(f"code header must be 'ring n', got {header}")
    try:
        ring = RingId(header[0])
    except ValueError as exc:
        raise ParseError(f"unknown ring {header[0]!r}") from exc
    try:
        n = int(header[1])
    except ValueError as exc:
        raise ParseError(f"bad length {header[1]!r}") from exc
    ca = _parse_matrix(src)
    cb = _parse_matrix(src)
    if not src.eof():
        raise ParseError("trailing content after code blocks")
    if ca.n != n or cb.n != n:
        raise ParseError(f"component lengths {ca.n}, {cb.n} do not match header n={n}")
    if ca.p != 2 or cb.p != 3:
        raise ParseError("blocks must be the F2 component then the F3 component")
    return HzCode(ring, ca, cb)


def read_text(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def write_text_atomic(path: str, text: str) -> None:
    """Write via a sibling temp file and rename, so readers never see halves."""
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w", encoding="ascii") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("ascii")).hexdigest()


def _matrix_rows(code: LinearCode) -> list[str]:
    return ["".join(str(int(x)) for x in row) for row in code.gen]


def catalog_dict(
    ring: RingId,
    n: int,
    target: str,
    records: list[ClassificationRecord],
    la: list[LinearCode],
    lb: list[LinearCode],
) -> dict:
    """The catalog as a plain dict; digests are over canonical list texts."""
    recs = []
    for rec in records:
        recs.append(
            {
                "ring": str(rec.ring),
                "n": rec.n,
                "ca": rec.ca_index,
                "cb": rec.cb_index,
                "sigma": [i + 1 for i in rec.sigma.images],
                "ca_gen": _matrix_rows(rec.code.ca),
                "cb_gen": _matrix_rows(rec.code.cb),
                "flags": rec.flags,
                "size": rec.size,
            }
        )
    summary = {"total": len(records)}
    for key in ("so", "sd", "qsd", "nice", "lcd"):
        summary[key] = sum(1 for rec in records if rec.flags[key])
    return {
        "meta": {
            "tool": "symhex",
            "version": __version__,
            "ring": str(ring),
            "n": n,
            "target": target,
            "ca_list_sha256": _digest(format_matrix_list(la)),
            "cb_list_sha256": _digest(format_matrix_list(lb)),
            "ca_count": len(la),
            "cb_count": len(lb),
        },
        "records": recs,
        "summary": summary,
    }


def catalog_text(catalog: dict) -> str:
    return json.dumps(catalog, indent=2, sort_keys=True) + "\n"


def write_catalog(path: str, catalog: dict) -> None:
    write_text_atomic(path, catalog_text(catalog))


def read_catalog(path: str) -> dict:
    with open(path, "r", encoding="ascii") as fh:
        return json.load(fh)
