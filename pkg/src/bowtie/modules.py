"""Finite unital modules over a TableRing.

A module is an addition table plus a scalar-action table (ring index x
module index). Submodules are canonically stored as sorted index tuples,
so every enumeration and witness is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import numpy as np

from .rings import (
    DEFAULT_VALIDATION_LIMIT,
    _BLOCK,
    _additive_closure,
    Ideal,
    RingAxiomError,
    TableRing,
)


@dataclass(frozen=True, eq=False)
class TableModule:
    """A finite unital module on the carrier 0..size-1."""

    ring: TableRing
    size: int
    add: tuple[tuple[int, ...], ...]
    act: tuple[tuple[int, ...], ...]  # act[r][m], r a ring index
    zero: int
    labels: tuple[str, ...]
    name: str = "module"

    @cached_property
    def neg(self) -> tuple[int, ...]:
        out = [0] * self.size
        for m in range(self.size):
            out[m] = self.add[m].index(self.zero)
        return tuple(out)

    def sub(self, m: int, n: int) -> int:
        return self.add[m][self.neg[n]]

    def label(self, m: int) -> str:
        return self.labels[m]

    def label_set(self, members: Iterable[int]) -> str:
        return "{" + ",".join(self.labels[m] for m in sorted(members)) + "}"

    def __repr__(self) -> str:
        return f"TableModule({self.name}, size={self.size}, over={self.ring.name})"


def validate_module(module: TableModule, limit: int | None = None) -> None:
    """Exhaustive abelian-group and action axioms; skipped above the limit."""
    limit = DEFAULT_VALIDATION_LIMIT if limit is None else limit
    k = module.size
    r = module.ring.size
    if k == 0:
        raise RingAxiomError("empty module carrier")
    if max(k, r) > limit:
        return
    add = np.asarray(module.add, dtype=np.int32)
    act = np.asarray(module.act, dtype=np.int32)
    radd = np.asarray(module.ring.add, dtype=np.int32)
    rmul = np.asarray(module.ring.mul, dtype=np.int32)
    idx = np.arange(k, dtype=np.int32)
    if add.shape != (k, k) or add.min() < 0 or add.max() >= k:
        raise RingAxiomError("module add is not a total operation")
    if act.shape != (r, k) or act.min() < 0 or act.max() >= k:
        raise RingAxiomError("action table has the wrong shape")
    if not np.array_equal(add, add.T):
        raise RingAxiomError("module add is not commutative")
    if not np.array_equal(add[module.zero], idx):
        raise RingAxiomError("module zero is not an identity")
    if not np.all((add == module.zero).any(axis=1)):
        raise RingAxiomError("some module element has no additive inverse")
    if not np.array_equal(act[module.ring.one], idx):
        raise RingAxiomError("action is not unital")
    for lo in range(0, k, _BLOCK):
        rows = np.arange(lo, min(lo + _BLOCK, k), dtype=np.int32)
        lhs = add[add[rows][:, :, None], idx[None, None, :]]
        rhs = add[rows[:, None, None], add[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise RingAxiomError("module add is not associative")
    for lo in range(0, r, _BLOCK):
        rows = np.arange(lo, min(lo + _BLOCK, r), dtype=np.int32)
        # r(m+n) == rm + rn
        lhs = act[rows[:, None, None], add[None, :, :]]
        ab = act[rows]
        rhs = add[ab[:, :, None], ab[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise RingAxiomError("action is not additive in the module argument")
        # (r+s)m == rm + sm; rhs[i, s, m] = add[act[rows[i], m], act[s, m]]
        lhs = act[radd[rows], :]
        rhs = add[ab[:, None, :], act[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise RingAxiomError("action is not additive in the scalar argument")
        # (rs)m == r(sm)
        lhs = act[rmul[rows], :]
        rhs = act[rows[:, None, None], act[None, :, :]]
        if not np.array_equal(lhs, rhs):
            raise RingAxiomError("action does not respect ring multiplication")


class Submodule:
    """A subset closed under addition and the full scalar action."""

    __slots__ = ("module", "members", "member_set")

    def __init__(self, module: TableModule, members: Iterable[int], _checked: bool = False):
        mset = frozenset(int(m) for m in members)
        self.module = module
        self.members: tuple[int, ...] = tuple(sorted(mset))
        self.member_set: frozenset[int] = mset
        if not _checked:
            self._validate()

    def _validate(self) -> None:
        mod = self.module
        if mod.zero not in self.member_set:
            raise ValueError("submodule must contain zero")
        for a in self.members:
            for b in self.members:
                if mod.add[a][b] not in self.member_set:
                    raise ValueError(
                        f"not add-closed at ({mod.labels[a]},{mod.labels[b]})"
                    )
            for s in range(mod.ring.size):
                if mod.act[s][a] not in self.member_set:
                    raise ValueError(
                        f"not action-closed at {mod.ring.labels[s]}*{mod.labels[a]}"
                    )

    @property
    def is_proper(self) -> bool:
        return len(self.members) < self.module.size

    @property
    def is_zero(self) -> bool:
        return self.members == (self.module.zero,)

    def __contains__(self, m: int) -> bool:
        return m in self.member_set

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Submodule)
            and other.module is self.module
            and other.members == self.members
        )

    def __hash__(self) -> int:
        return hash((id(self.module), self.members))

    def label_set(self) -> str:
        return self.module.label_set(self.members)

    def __repr__(self) -> str:
        return f"Submodule({self.module.name}, {self.label_set()})"


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """A total map between modules over the same ring, as an index table."""

    source: TableModule
    target: TableModule
    table: tuple[int, ...]

    def __call__(self, m: int) -> int:
        return self.table[m]


def ring_as_module(ring: TableRing) -> TableModule:
    """The regular module: the ring acting on itself by multiplication."""
    return TableModule(
        ring=ring,
        size=ring.size,
        add=ring.add,
        act=ring.mul,
        zero=ring.zero,
        labels=ring.labels,
        name=f"{ring.name}-reg",
    )


def zero_submodule(module: TableModule) -> Submodule:
    return Submodule(module, (module.zero,), _checked=True)


def whole_submodule(module: TableModule) -> Submodule:
    return Submodule(module, range(module.size), _checked=True)


def cyclic_members(module: TableModule, x: int) -> frozenset[int]:
    """The cyclic submodule generated by one element, as a member set."""
    return frozenset(module.act[s][x] for s in range(module.ring.size))


def submodule_generated(module: TableModule, gens: Iterable[int]) -> Submodule:
    """Closure of the generators under action and addition."""
    seed = {module.zero}
    for g in gens:
        g = int(g)
        if not 0 <= g < module.size:
            raise ValueError(f"generator index {g} out of range")
        seed.update(cyclic_members(module, g))
    closed = _additive_closure(module.add, seed, module.zero)
    return Submodule(module, closed, _checked=True)


def enumerate_submodules(module: TableModule) -> list[Submodule]:
    """All submodules, as joins of cyclic ones, in (size, members) order."""
    cyclics: list[frozenset[int]] = [frozenset((module.zero,))]
    seen: set[frozenset[int]] = {cyclics[0]}
    for g in range(module.size):
        c = cyclic_members(module, g)
        if c not in seen:
            seen.add(c)
            cyclics.append(c)
    found = set(cyclics)
    work = list(cyclics)
    add = module.add
    while work:
        cur = work.pop()
        for c in cyclics:
            if c <= cur:
                continue
            # sum of two submodules is the pointwise sum set
            joined = frozenset(add[x][y] for x in cur for y in c)
            if joined not in found:
                found.add(joined)
                work.append(joined)
    ordered = sorted(found, key=lambda s: (len(s), tuple(sorted(s))))
    return [Submodule(module, s, _checked=True) for s in ordered]


def _same_module(n: Submodule, k: Submodule) -> TableModule:
    if n.module is not k.module:
        raise ValueError("submodules live in different modules")
    return n.module


def colon_into_ring(n: Submodule, k: Submodule) -> Ideal:
    """The ideal {a in ring : a*K inside N}."""
    mod = _same_module(n, k)
    members = [
        a
        for a in range(mod.ring.size)
        if all(mod.act[a][x] in n.member_set for x in k.members)
    ]
    return Ideal(mod.ring, members, _checked=True)


def colon_by_scalar(n: Submodule, a: int) -> Submodule:
    """The submodule {m : a*m in N}; always contains N."""
    mod = n.module
    members = [m for m in range(mod.size) if mod.act[a][m] in n.member_set]
    return Submodule(mod, members, _checked=True)


def annihilator(k: Submodule) -> Ideal:
    return colon_into_ring(zero_submodule(k.module), k)


def is_faithful(module: TableModule) -> bool:
    return annihilator(whole_submodule(module)).is_zero


class CyclicResult(NamedTuple):
    holds: bool
    generator: int | None


def is_cyclic(module: TableModule) -> CyclicResult:
    """Whether one element generates everything; first generator if so."""
    for g in range(module.size):
        if len(cyclic_members(module, g)) == module.size:
            return CyclicResult(True, g)
    return CyclicResult(False, None)


def submodule_sum(n: Submodule, k: Submodule) -> Submodule:
    mod = _same_module(n, k)
    add = mod.add
    members = frozenset(add[x][y] for x in n.members for y in k.members)
    return Submodule(mod, members, _checked=True)


def submodule_intersection(n: Submodule, k: Submodule) -> Submodule:
    mod = _same_module(n, k)
    return Submodule(mod, n.member_set & k.member_set, _checked=True)


def quotient_module(
    module: TableModule, n: Submodule, limit: int | None = None
) -> tuple[TableModule, ModuleMap]:
    """Cosets of a submodule, indexed by minimal member.

    Returns the quotient and the projection map.
    """
    if n.module is not module:
        raise ValueError("submodule belongs to a different module")
    rep_of = [-1] * module.size
    reps: list[int] = []
    for m in range(module.size):
        if rep_of[m] >= 0:
            continue
        coset = sorted(module.add[m][x] for x in n.members)
        rep = coset[0]
        reps.append(rep)
        for c in coset:
            rep_of[c] = rep
    reps.sort()
    index = {rep: i for i, rep in enumerate(reps)}
    add = tuple(
        tuple(index[rep_of[module.add[x][y]]] for y in reps) for x in reps
    )
    act = tuple(
        tuple(index[rep_of[module.act[s][x]]] for x in reps)
        for s in range(module.ring.size)
    )
    quo = TableModule(
        ring=module.ring,
        size=len(reps),
        add=add,
        act=act,
        zero=index[rep_of[module.zero]],
        labels=tuple(f"[{module.labels[rep]}]" for rep in reps),
        name=f"{module.name}/N",
    )
    validate_module(quo, limit)
    projection = ModuleMap(
        source=module,
        target=quo,
        table=tuple(index[rep_of[m]] for m in range(module.size)),
    )
    return quo, projection


def check_module_map(f: ModuleMap) -> bool:
    """Pointwise additivity and action compatibility."""
    src, tgt = f.source, f.target
    if src.ring is not tgt.ring:
        raise ValueError("source and target are over different rings")
    t = f.table
    for x in range(src.size):
        for y in range(src.size):
            if t[src.add[x][y]] != tgt.add[t[x]][t[y]]:
                return False
    for s in range(src.ring.size):
        for x in range(src.size):
            if t[src.act[s][x]] != tgt.act[s][t[x]]:
                return False
    return True


def kernel(f: ModuleMap) -> Submodule:
    members = [m for m in range(f.source.size) if f.table[m] == f.target.zero]
    return Submodule(f.source, members)


def image(f: ModuleMap) -> Submodule:
    return Submodule(f.target, set(f.table))
