"""Built-in base manifolds and the JSON base-file format."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InvalidBase
from .fgab import Z, AbelianGroup
from .graded import BaseManifold, validate_base

__all__ = ["CATALOG", "ALIASES", "get_base", "load_base_file", "base_from_document", "base_to_document"]


def _free(name: str, dim: int, ranks: dict[int, int]) -> BaseManifold:
    return BaseManifold.from_groups(name, dim, {d: AbelianGroup(r) for d, r in ranks.items()})


def _sphere(dim: int) -> BaseManifold:
    return _free(f"S{dim}", dim, {0: 1, dim: 1})


def _cp(m: int) -> BaseManifold:
    return _free(f"CP{m}", 2 * m, {2 * i: 1 for i in range(m + 1)})


_ENTRIES = [
    _sphere(4), _sphere(6), _sphere(8), _sphere(10),
    _cp(2),
    _free("S2xS2", 4, {0: 1, 2: 2, 4: 1}),
    _free("S2xS4", 6, {0: 1, 2: 1, 4: 1, 6: 1}),
    _free("S3xS3", 6, {0: 1, 3: 2, 6: 1}),
    _cp(3),
    _free("CP2xS2", 6, {0: 1, 2: 2, 4: 2, 6: 1}),
    _free("S2xS6", 8, {0: 1, 2: 1, 6: 1, 8: 1}),
    _free("S4xS4", 8, {0: 1, 4: 2, 8: 1}),
    _cp(4),
    # synthetic 6-dimensional base with 2-torsion in H^2 (and its linking partner in H^5)
    BaseManifold.from_groups("T6Z2", 6, {0: Z, 2: AbelianGroup(0, (2,)),
                                          5: AbelianGroup(0, (2,)), 6: Z}),
]

CATALOG: dict[str, BaseManifold] = {M.name: M for M in _ENTRIES}
ALIASES = {"M8": "S8"}


def get_base(name: str) -> BaseManifold:
    key = ALIASES.get(name, name)
    try:
        return CATALOG[key]
    except KeyError:
        raise InvalidBase(f"unknown base {name!r}; known: {', '.join(CATALOG)}") from None


def base_to_document(M: BaseManifold) -> dict:
    return {
        "name": M.name,
        "dim": M.dim,
        "groups": [{"degree": d, **g.to_dict()} for d, g in M.cohomology.nonzero().items()],
    }


def base_from_document(doc) -> BaseManifold:
    try:
        dim = int(doc["dim"])
        groups = {}
        for entry in doc["groups"]:
            d = int(entry["degree"])
            if d in groups:
                raise InvalidBase(f"degree {d} listed twice")
            groups[d] = AbelianGroup.from_factors(int(entry["rank"]), entry.get("torsion", []))
        M = BaseManifold.from_groups(str(doc.get("name", "inline")), dim, groups)
    except InvalidBase:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidBase(f"malformed base document: {exc}") from exc
    problems = validate_base(M)
    if problems:
        raise InvalidBase(f"{M.name}: " + "; ".join(problems))
    return M


def load_base_file(path: str | Path) -> BaseManifold:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InvalidBase(f"cannot read base file {path}: {exc}") from exc
    return base_from_document(doc)
