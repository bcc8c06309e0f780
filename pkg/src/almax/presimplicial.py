"""Partial presimplicial sets: graded cell sets with partially defined face maps.

Face maps obey d_i d_j = d_{j-1} d_i (i < j) under zero-extension, where an
undefined face counts as 0 and every face of 0 is 0.  The chain complex of
the pointed geometric realization is produced at chain level only: no
topological data structure is built.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .homology import IntegerChainComplex, IntMatrix


class PPSError(ValueError):
    """Structurally invalid partial presimplicial set data."""


@dataclass(frozen=True)
class AxiomViolation:
    """Witness of a failed face-map identity d_i d_j = d_{j-1} d_i."""

    dimension: int
    cell: str
    i: int
    j: int
    left: str | None   # d_i(d_j(cell)), None meaning 0
    right: str | None  # d_{j-1}(d_i(cell))

    def describe(self) -> str:
        fmt = lambda x: x if x is not None else "0"
        return (
            f"cell {self.cell!r} in dimension {self.dimension}: "
            f"d_{self.i} d_{self.j} = {fmt(self.left)} but "
            f"d_{self.j - 1} d_{self.i} = {fmt(self.right)}"
        )


@dataclass(frozen=True)
class PartialPresimplicialSet:
    """Cells per dimension 0..top_dim with partial face maps.

    ``cells[k]`` is the ordered tuple of cell ids in dimension k; a missing
    entry in ``faces[k][cell]`` means that face is undefined.  ``top_dim``
    is -1 for the empty set.
    """

    top_dim: int
    cells: dict[int, tuple[str, ...]] = field(default_factory=dict)
    faces: dict[int, dict[str, dict[int, str]]] = field(default_factory=dict)

    def __post_init__(self):
        if self.top_dim < -1:
            raise PPSError(f"top_dim must be >= -1, got {self.top_dim}")
        for k, names in self.cells.items():
            if not 0 <= k <= self.top_dim:
                raise PPSError(f"cell dimension {k} outside 0..{self.top_dim}")
            if len(set(names)) != len(names):
                raise PPSError(f"duplicate cell ids in dimension {k}")
        for k, per_cell in self.faces.items():
            if k < 1:
                raise PPSError(f"face maps start at dimension 1, found dimension {k}")
            known = set(self.cells.get(k, ()))
            below = set(self.cells.get(k - 1, ()))
            for cell, fmap in per_cell.items():
                if cell not in known:
                    raise PPSError(f"faces listed for unknown cell {cell!r} in dimension {k}")
                for i, target in fmap.items():
                    if not 0 <= i <= k:
                        raise PPSError(f"face index {i} out of range for dimension {k}")
                    if target not in below:
                        raise PPSError(
                            f"dangling face target: d_{i}({cell!r}) = {target!r} "
                            f"is not a cell of dimension {k - 1}"
                        )

    def cells_in(self, k: int) -> tuple[str, ...]:
        return self.cells.get(k, ())

    def face(self, k: int, cell: str, i: int) -> str | None:
        """d_i of a k-cell, or None when undefined."""
        return self.faces.get(k, {}).get(cell, {}).get(i)

    @property
    def is_empty(self) -> bool:
        return all(not names for names in self.cells.values())

    def is_proper(self) -> bool:
        """True iff some face in the valid index range is undefined."""
        for k in range(1, self.top_dim + 1):
            for cell in self.cells_in(k):
                fmap = self.faces.get(k, {}).get(cell, {})
                if len(fmap) < k + 1:
                    return True
        return False


EMPTY_PPS = PartialPresimplicialSet(top_dim=-1)


def validate_pps(pps: PartialPresimplicialSet) -> AxiomViolation | None:
    """Check d_i d_j = d_{j-1} d_i (0 <= i < j <= k) under zero-extension.

    Returns the first violation found (cells in listed order, then (i, j)
    lexicographically), or None when the face maps are consistent.
    """
    for k in range(2, pps.top_dim + 1):
        for cell in pps.cells_in(k):
            for i in range(k):
                di = pps.face(k, cell, i)
                for j in range(i + 1, k + 1):
                    dj = pps.face(k, cell, j)
                    left = pps.face(k - 1, dj, i) if dj is not None else None
                    right = pps.face(k - 1, di, j - 1) if di is not None else None
                    if left != right:
                        return AxiomViolation(k, cell, i, j, left, right)
    return None


def chain_complex(pps: PartialPresimplicialSet, reduced: bool = True) -> IntegerChainComplex:
    """Cellular chain complex of the realization, boundary = sum (-1)^i d_i.

    Undefined faces contribute 0.  With ``reduced`` set the complex
    computes the reduced homology of the pointed realization: when some
    face is undefined the collapsed basepoint absorbs the augmentation and
    the plain zero-extension complex already computes reduced homology
    (degree -1 carries nothing); when every face is defined no basepoint
    is added and the usual augmentation (an extra generator in degree -1
    hit once by every 0-cell) reduces degree 0.  The empty set comes out
    with a single Z in degree -1.
    """
    violation = validate_pps(pps)
    if violation is not None:
        raise PPSError(f"face-map axiom fails: {violation.describe()}")

    ranks = {k: len(pps.cells_in(k)) for k in range(0, pps.top_dim + 1)}
    boundaries: dict[int, IntMatrix] = {}
    for k in range(1, pps.top_dim + 1):
        sources = pps.cells_in(k)
        targets = {name: r for r, name in enumerate(pps.cells_in(k - 1))}
        mat = IntMatrix(len(targets), len(sources))
        for col, cell in enumerate(sources):
            for i in range(k + 1):
                target = pps.face(k, cell, i)
                if target is not None:
                    mat.add(targets[target], col, -1 if i % 2 else 1)
        boundaries[k] = mat

    if reduced and not pps.is_proper():
        ranks[-1] = 1
        zero_cells = pps.cells_in(0)
        aug = IntMatrix(1, len(zero_cells))
        for col in range(len(zero_cells)):
            aug.add(0, col, 1)
        boundaries[0] = aug
    elif reduced:
        ranks[-1] = 0
    return IntegerChainComplex(ranks=ranks, boundaries=boundaries, step=1)


def pps_to_json_dict(pps: PartialPresimplicialSet) -> dict:
    cells = {str(k): list(pps.cells_in(k)) for k in range(0, pps.top_dim + 1)}
    faces: dict[str, dict] = {}
    for k in sorted(pps.faces):
        per_cell = {}
        for cell in pps.cells_in(k):
            fmap = pps.faces.get(k, {}).get(cell)
            if fmap:
                per_cell[cell] = {str(i): fmap[i] for i in sorted(fmap)}
        if per_cell:
            faces[str(k)] = per_cell
    return {"top_dim": pps.top_dim, "cells": cells, "faces": faces}


def pps_from_json_dict(doc: dict) -> PartialPresimplicialSet:
    if not isinstance(doc, dict):
        raise PPSError("PPS JSON must be an object")
    unknown = set(doc) - {"top_dim", "cells", "faces"}
    if unknown:
        raise PPSError(f"unknown keys in PPS JSON: {sorted(unknown)}")
    try:
        top_dim = int(doc["top_dim"])
    except (KeyError, TypeError, ValueError):
        raise PPSError("'top_dim' must be an integer") from None
    cells: dict[int, tuple[str, ...]] = {}
    for key, names in (doc.get("cells") or {}).items():
        if not isinstance(names, list) or any(not isinstance(n, str) for n in names):
            raise PPSError(f"cells[{key!r}] must be a list of string ids")
        cells[int(key)] = tuple(names)
    faces: dict[int, dict[str, dict[int, str]]] = {}
    for key, per_cell in (doc.get("faces") or {}).items():
        if not isinstance(per_cell, dict):
            raise PPSError(f"faces[{key!r}] must be an object")
        fk: dict[str, dict[int, str]] = {}
        for cell, fmap in per_cell.items():
            if not isinstance(fmap, dict):
                raise PPSError(f"faces[{key!r}][{cell!r}] must be an object")
            fk[cell] = {int(i): str(t) for i, t in fmap.items()}
        faces[int(key)] = fk
    return PartialPresimplicialSet(top_dim=top_dim, cells=cells, faces=faces)


def pps_to_json(pps: PartialPresimplicialSet) -> str:
    return json.dumps(pps_to_json_dict(pps), indent=2)


def pps_from_json(text: str) -> PartialPresimplicialSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PPSError(f"not valid JSON: {exc}") from None
    return pps_from_json_dict(doc)
