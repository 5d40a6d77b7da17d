"""Canonical JSON forms shared by the CLI, the cache, and oracle fixtures.

The symmetric function schema is {"basis":"h","terms":[...]} with terms
sorted by (degree, reverse-lex partition) and coefficients as decimal
strings, so files are bit-exact across platforms and big coefficients
survive readers without arbitrary precision integers.
"""

from __future__ import annotations

import json

from .errors import KatalanError
from .partitions import Partition, term_sort_key
from .symfunc import SymFunc


def symfunc_to_json(f: SymFunc) -> dict:
    terms = [{"partition": list(p), "coeff": str(c)} for p, c in f.items()]
    return {"basis": "h", "terms": terms}


def symfunc_from_json(data: dict) -> SymFunc:
    if data.get("basis") != "h":
        raise KatalanError("expected h-basis symmetric function JSON")
    total = SymFunc.zero()
    for term in data["terms"]:
        p = tuple(term["partition"])
        total = total + SymFunc.term(p, int(term["coeff"]))
    return total


def sorted_partitions(parts: list[Partition]) -> list[Partition]:
    return sorted(parts, key=term_sort_key)


def canonical_json(data) -> str:
    """Compact deterministic rendering; what every writer in this package emits."""
    return json.dumps(data, separators=(",", ":"), ensure_ascii=True)


def dump_canonical(data, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(canonical_json(data))
        fh.write("\n")
