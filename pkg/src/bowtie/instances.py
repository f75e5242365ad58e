"""Instance descriptions: JSON documents naming a quadruple (A, I, M, N).

The document shape:

    {
      "ring":                 {"zn": 6}
                            | {"product": [<ring>, <ring>]}
                            | {"tables": {"add": [[...]], "mul": [[...]],
                                          "labels": ["0", ...]?}},
      "ideal_generators":     ["3"],
      "module":               "regular"
                            | {"tables": {"add": [[...]], "act": [[...]],
                                          "labels": [...]?}},
      "submodule_generators": ["0"]           # optional; omitted => {0}
    }

Element references are labels: decimal strings for Z_n, bracketed pairs
like "(1,4)" for products. Parsing either yields a valid quadruple or
raises SpecError naming the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, NamedTuple

from .rings import Ideal, TableRing, direct_product, ideal_generated, make_zn, validate_ring
from .modules import (
    Submodule,
    TableModule,
    ring_as_module,
    submodule_generated,
    validate_module,
)


class SpecError(ValueError):
    """An instance document that does not describe a valid quadruple."""


class Quadruple(NamedTuple):
    ring: TableRing
    ideal: Ideal
    module: TableModule
    submodule: Submodule


def _require(cond: bool, where: str, msg: str) -> None:
    if not cond:
        raise SpecError(f"{where}: {msg}")


def _as_matrix(obj: Any, where: str) -> tuple[tuple[int, ...], ...]:
    _require(isinstance(obj, list) and obj, where, "expected a nonempty matrix")
    rows = []
    for r, row in enumerate(obj):
        _require(isinstance(row, list), f"{where}[{r}]", "expected a list")
        for c, v in enumerate(row):
            _require(
                isinstance(v, int) and not isinstance(v, bool),
                f"{where}[{r}][{c}]", "expected an integer",
            )
        rows.append(tuple(row))
    return tuple(rows)


def _build_ring(desc: Any, where: str = "ring") -> TableRing:
    _require(isinstance(desc, dict) and len(desc) == 1, where,
             'expected exactly one of {"zn": n}, {"product": [..]}, {"tables": {..}}')
    kind, body = next(iter(desc.items()))
    if kind == "zn":
        _require(isinstance(body, int) and not isinstance(body, bool) and body >= 1,
                 f"{where}.zn", "expected a positive integer")
        return make_zn(body)
    if kind == "product":
        _require(isinstance(body, list) and len(body) == 2, f"{where}.product",
                 "expected a two-element list of ring descriptions")
        left = _build_ring(body[0], f"{where}.product[0]")
        right = _build_ring(body[1], f"{where}.product[1]")
        return direct_product(left, right)
    if kind == "tables":
        _require(isinstance(body, dict), f"{where}.tables", "expected an object")
        _require("add" in body and "mul" in body, f"{where}.tables",
                 'expected "add" and "mul" matrices')
        add = _as_matrix(body["add"], f"{where}.tables.add")
        mul = _as_matrix(body["mul"], f"{where}.tables.mul")
        k = len(add)
        _require(all(len(r) == k for r in add) and len(mul) == k
                 and all(len(r) == k for r in mul),
                 f"{where}.tables", "add and mul must be square of the same size")
        labels = body.get("labels", [str(i) for i in range(k)])
        _require(isinstance(labels, list) and len(labels) == k
                 and all(isinstance(s, str) for s in labels),
                 f"{where}.tables.labels", f"expected {k} strings")
        zero = body.get("zero", 0)
        one = body.get("one")
        _require(isinstance(zero, int) and 0 <= zero < k, f"{where}.tables.zero",
                 "expected a carrier index")
        if one is None:
            # the unique u with u*x == x for all x; rings require one
            one = next(
                (u for u in range(k) if mul[u] == tuple(range(k))), None)
            _require(one is not None, f"{where}.tables",
                     "no multiplicative identity row found; supply \"one\"")
        _require(isinstance(one, int) and 0 <= one < k, f"{where}.tables.one",
                 "expected a carrier index")
        ring = TableRing(size=k, add=add, mul=mul, zero=zero, one=one,
                         labels=tuple(labels), name=body.get("name", "ring"))
        try:
            validate_ring(ring)
        except ValueError as exc:
            raise SpecError(f"{where}.tables: {exc}") from exc
        return ring
    raise SpecError(f'{where}: unknown ring kind {kind!r}')


def _resolve_labels(labels: Any, universe: tuple[str, ...], where: str) -> tuple[int, ...]:
    _require(isinstance(labels, list), where, "expected a list of element labels")
    index = {lab: i for i, lab in enumerate(universe)}
    out = []
    for pos, lab in enumerate(labels):
        _require(isinstance(lab, str), f"{where}[{pos}]", "expected a string label")
        token = lab.replace(" ", "")
        _require(token in index, f"{where}[{pos}]",
                 f"unknown element {lab!r}; valid labels look like {universe[0]!r}")
        out.append(index[token])
    return tuple(out)


def _build_module(desc: Any, ring: TableRing, where: str = "module") -> TableModule:
    if desc == "regular":
        return ring_as_module(ring)
    _require(isinstance(desc, dict) and list(desc.keys()) == ["tables"], where,
             'expected "regular" or {"tables": {..}}')
    body = desc["tables"]
    _require(isinstance(body, dict) and "add" in body and "act" in body,
             f"{where}.tables", 'expected "add" and "act" matrices')
    add = _as_matrix(body["add"], f"{where}.tables.add")
    act = _as_matrix(body["act"], f"{where}.tables.act")
    k = len(add)
    _require(all(len(r) == k for r in add), f"{where}.tables.add", "must be square")
    _require(len(act) == ring.size and all(len(r) == k for r in act),
             f"{where}.tables.act", f"must be {ring.size} rows of length {k}")
    labels = body.get("labels", [str(i) for i in range(k)])
    _require(isinstance(labels, list) and len(labels) == k
             and all(isinstance(s, str) for s in labels),
             f"{where}.tables.labels", f"expected {k} strings")
    zero = body.get("zero", 0)
    _require(isinstance(zero, int) and 0 <= zero < k, f"{where}.tables.zero",
             "expected a carrier index")
    module = TableModule(ring=ring, size=k, add=add, act=act, zero=zero,
                         labels=tuple(labels), name=body.get("name", "module"))
    try:
        validate_module(module)
    except ValueError as exc:
        raise SpecError(f"{where}.tables: {exc}") from exc
    return module


@dataclass(frozen=True)
class InstanceSpec:
    """A parsed instance document in canonical form.

    Round-trip contract: to_dict() of a parsed spec re-parses to a spec
    that builds an identical quadruple.
    """

    ring_desc: Any
    ideal_generators: tuple[str, ...]
    module_desc: Any
    submodule_generators: tuple[str, ...] | None = None
    name: str = ""

    @staticmethod
    def from_dict(data: Any, name: str = "") -> "InstanceSpec":
        _require(isinstance(data, dict), "instance", "expected a JSON object")
        unknown = set(data) - {"ring", "ideal_generators", "module",
                               "submodule_generators", "name"}
        _require(not unknown, "instance", f"unknown fields {sorted(unknown)}")
        _require("ring" in data, "instance", 'missing field "ring"')
        _require("ideal_generators" in data, "instance",
                 'missing field "ideal_generators"')
        _require("module" in data, "instance", 'missing field "module"')
        gens = data["ideal_generators"]
        _require(isinstance(gens, list) and all(isinstance(g, str) for g in gens),
                 "ideal_generators", "expected a list of element labels")
        sub = data.get("submodule_generators")
        if sub is not None:
            _require(isinstance(sub, list) and all(isinstance(g, str) for g in sub),
                     "submodule_generators", "expected a list of element labels")
            sub = tuple(sub)
        return InstanceSpec(
            ring_desc=data["ring"],
            ideal_generators=tuple(gens),
            module_desc=data["module"],
            submodule_generators=sub,
            name=data.get("name", name) or name,
        )

    @staticmethod
    def from_path(path: str | Path) -> "InstanceSpec":
        p = Path(path)
        try:
            data = json.loads(p.read_text())
        except OSError as exc:
            raise SpecError(f"cannot read {p}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise SpecError(f"{p}: not valid JSON: {exc}") from exc
        return InstanceSpec.from_dict(data, name=p.stem)

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "ring": self.ring_desc,
            "ideal_generators": list(self.ideal_generators),
            "module": self.module_desc,
        }
        if self.submodule_generators is not None:
            out["submodule_generators"] = list(self.submodule_generators)
        if self.name:
            out["name"] = self.name
        return out

    def build(self) -> Quadruple:
        ring = _build_ring(self.ring_desc)
        gens = _resolve_labels(list(self.ideal_generators), ring.labels,
                               "ideal_generators")
        ideal = ideal_generated(ring, gens)
        module = _build_module(self.module_desc, ring)
        if self.submodule_generators is None:
            sub = submodule_generated(module, ())
        else:
            mgens = _resolve_labels(list(self.submodule_generators), module.labels,
                                    "submodule_generators")
            sub = submodule_generated(module, mgens)
        return Quadruple(ring, ideal, module, sub)


# Built-in instances: the running Z_6 example and the three finite stand-ins
# for the integer examples (kZ and I = jZ realized inside Z_n with n = lcm
# scaled so that the containment I*M <= N_relevant survives).
SEEDS: dict[str, dict] = {
    "z6-weakly-prime": {
        "ring": {"zn": 6},
        "ideal_generators": ["3"],
        "module": "regular",
        "submodule_generators": [],
        "name": "z6-weakly-prime",
    },
    "z6-remark": {
        "ring": {"zn": 6},
        "ideal_generators": ["3"],
        "module": "regular",
        "submodule_generators": [],
        "name": "z6-remark",
    },
    "z12-prime": {
        "ring": {"zn": 12},
        "ideal_generators": ["4"],
        "module": "regular",
        "submodule_generators": ["3"],
        "name": "z12-prime",
    },
    "z20-primary": {
        "ring": {"zn": 20},
        "ideal_generators": ["4"],
        "module": "regular",
        "submodule_generators": ["5"],
        "name": "z20-primary",
    },
    "z16-primary-not-prime": {
        "ring": {"zn": 16},
        "ideal_generators": ["4"],
        "module": "regular",
        "submodule_generators": ["8"],
        "name": "z16-primary-not-prime",
    },
}


def seed_spec(name: str) -> InstanceSpec:
    if name not in SEEDS:
        known = ", ".join(sorted(SEEDS))
        raise SpecError(f"unknown seed {name!r}; built-ins: {known}")
    return InstanceSpec.from_dict(SEEDS[name])
