"""JSON wire format for PCMs and IPCMs.

PCM::

    {"scale": "multiplicative", "entries": [[1, 2], [0.5, 1]]}

IPCM::

    {"scale": "additive", "n": 3, "entries": [[[0, 0], [4, 7], ...], ...]}

In either form ``null`` may stand for a diagonal entry (filled with the
identity) or for a lower-triangle entry (filled with the reciprocal of its
mirror).  Entries that are given are validated, never overwritten.  Numbers
may also be written as fraction strings such as ``"1/7"``.  An optional
``"label"`` names the matrix in reports.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Union

from .alo_group import DEFAULT_TOL, AloGroup, get_scale
from .errors import InvalidMatrix
from .interval import identity_interval, make_interval, recip_interval
from .ipcm import Ipcm
from .pcm import Pcm

Matrix = Union[Pcm, Ipcm]


def _number(x: Any) -> Any:
    if isinstance(x, str):
        try:
            return float(Fraction(x.strip()))
        except (ValueError, ZeroDivisionError):
            raise InvalidMatrix(f"{x!r} is not a number") from None
    if isinstance(x, bool):
        raise InvalidMatrix(f"{x!r} is not a number")
    return x


def _cell(x: Any) -> Any:
    if isinstance(x, (list, tuple)):
        return [_number(v) for v in x]
    return None if x is None else _number(x)


def _is_interval_entry(x: Any) -> bool:
    return isinstance(x, (list, tuple))


def matrix_from_dict(data: dict[str, Any], scale: str | AloGroup | None = None, tol: float = DEFAULT_TOL) -> Matrix:
    """Build a PCM or IPCM from its decoded JSON form.

    ``scale`` overrides the scale declared in the data; every value is then
    re-validated against the new domain.
    """
    if not isinstance(data, dict):
        raise InvalidMatrix("matrix document must be a JSON object")
    if scale is None:
        if "scale" not in data:
            raise InvalidMatrix("missing 'scale'")
        scale = data["scale"]
    group = get_scale(scale)
    rows = data.get("entries")
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise InvalidMatrix("'entries' must be a non-empty list of rows")
    n = len(rows)
    if "n" in data and data["n"] != n:
        raise InvalidMatrix(f"'n' is {data['n']} but there are {n} rows")
    if any(len(r) != n for r in rows):
        raise InvalidMatrix("'entries' is not square")

    interval_form = any(_is_interval_entry(x) for r in rows for x in r)
    cells: list[list[Any]] = [[_cell(x) for x in r] for r in rows]
    for i in range(n):
        for j in range(n):
            if cells[i][j] is not None:
                if _is_interval_entry(cells[i][j]) != interval_form:
                    raise InvalidMatrix(f"entry ({i}, {j}) mixes numbers and intervals")
                continue
            if i == j:
                cells[i][j] = identity_interval(group) if interval_form else group.identity
            elif i > j and cells[j][i] is not None:
                mirror = cells[j][i]
                cells[i][j] = recip_interval(make_interval(*mirror, group)) if interval_form else group.inv(mirror)
            else:
                raise InvalidMatrix(f"entry ({i}, {j}) is missing and cannot be inferred")
    if interval_form:
        return Ipcm(group, cells, tol=tol)
    return Pcm(group, cells, tol=tol)


def matrix_to_dict(M: Matrix, label: str | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if label:
        out["label"] = label
    out["scale"] = M.group.name
    if isinstance(M, Ipcm):
        out["n"] = M.n
    out["entries"] = M.to_lists()
    return out


def load_matrix(path: str | Path, scale: str | None = None, tol: float = DEFAULT_TOL) -> tuple[str, Matrix]:
    """Read one matrix file and return ``(label, matrix)``.

    The label defaults to the file stem.
    """
    path = Path(path)
    with path.open(encoding="utf-8") as fh:
        data = json.load(fh)
    label = data.get("label") if isinstance(data, dict) else None
    return str(label or path.stem), matrix_from_dict(data, scale, tol)


def dumps_matrix(M: Matrix, label: str | None = None) -> str:
    """JSON text with one matrix row per line."""
    doc = matrix_to_dict(M, label)
    rows = doc.pop("entries")
    head = [f"  {json.dumps(k)}: {json.dumps(v)}," for k, v in doc.items()]
    body = ",\n".join(f"    {json.dumps(r)}" for r in rows)
    return "{\n" + "\n".join(head) + '\n  "entries": [\n' + body + "\n  ]\n}\n"
