"""Amalgamated duplication of a ring along an ideal, and of a module.

For a ring A with ideal I, the duplication is the subring
{(a, a+i) : a in A, i in I} of A x A. For an A-module M it is the set of
pairs (m, m') with m - m' in IM, which is a module over the duplicated
ring under (a, a+i).(m, m') = (a m, (a+i) m'). Everything is carried in
pair notation end to end: witnesses decode to pairs of base elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .rings import Ideal, TableRing, direct_product, subring_from_subset
from .modules import (
    Submodule,
    TableModule,
    _additive_closure,
    validate_module,
)


@dataclass(frozen=True, eq=False)
class BowtieInstance:
    """A built duplication: base data, duplicated ring and module, decodes."""

    base_ring: TableRing
    ideal: Ideal
    base_module: TableModule
    im: Submodule  # the submodule I*M of the base module
    bowtie_ring: TableRing
    bowtie_module: TableModule
    ring_pairs: tuple[tuple[int, int], ...]  # ring index -> (a, a+i) base indices
    module_pairs: tuple[tuple[int, int], ...]

    @cached_property
    def ring_pair_index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.ring_pairs)}

    @cached_property
    def module_pair_index(self) -> dict[tuple[int, int], int]:
        return {p: i for i, p in enumerate(self.module_pairs)}

    def __repr__(self) -> str:
        return (
            f"BowtieInstance({self.base_ring.name}, I={self.ideal.label_set()},"
            f" |ring|={self.bowtie_ring.size}, |module|={self.bowtie_module.size})"
        )


def product_submodule(ideal: Ideal, module: TableModule) -> Submodule:
    """The submodule I*M: additive closure of the products i*m."""
    if ideal.ring is not module.ring:
        raise ValueError("ideal and module are over different rings")
    prods = {
        module.act[i][m] for i in ideal.members for m in range(module.size)
    }
    closed = _additive_closure(module.add, prods, module.zero)
    return Submodule(module, closed, _checked=True)


def predicted_sizes(ring: TableRing, ideal: Ideal, module: TableModule) -> tuple[int, int]:
    """(|A join I|, |M join I|) without building anything large."""
    im = product_submodule(ideal, module)
    return ring.size * len(ideal), module.size * len(im)


def build_bowtie(
    ring: TableRing, ideal: Ideal, module: TableModule, limit: int | None = None
) -> BowtieInstance:
    """Construct the duplicated ring and module with full validation."""
    if ideal.ring is not ring:
        raise ValueError("ideal belongs to a different ring")
    if module.ring is not ring:
        raise ValueError("module is over a different ring")
    im = product_submodule(ideal, module)

    ambient = direct_product(ring, ring, limit=limit)
    subset = {a * ring.size + ring.add[a][i] for a in range(ring.size) for i in ideal.members}
    bowtie_ring, decode = subring_from_subset(ambient, subset, limit=limit)
    ring_pairs = tuple((amb // ring.size, amb % ring.size) for amb in decode)

    # module carrier: pairs (m, m') with m - m' in IM, in lexicographic order
    module_pairs = tuple(
        (m, mp)
        for m in range(module.size)
        for mp in range(module.size)
        if module.sub(m, mp) in im.member_set
    )
    pair_index = {p: i for i, p in enumerate(module_pairs)}
    add = tuple(
        tuple(
            pair_index[(module.add[m1][m2], module.add[n1][n2])]
            for (m2, n2) in module_pairs
        )
        for (m1, n1) in module_pairs
    )
    act = tuple(
        tuple(
            pair_index[(module.act[a][m], module.act[a2][mp])]
            for (m, mp) in module_pairs
        )
        for (a, a2) in ring_pairs
    )
    bowtie_module = TableModule(
        ring=bowtie_ring,
        size=len(module_pairs),
        add=add,
        act=act,
        zero=pair_index[(module.zero, module.zero)],
        labels=tuple(
            f"({module.labels[m]},{module.labels[mp]})" for (m, mp) in module_pairs
        ),
        name=f"{module.name}><{ideal.label_set()}",
    )
    validate_module(bowtie_module, limit)

    inst = BowtieInstance(
        base_ring=ring,
        ideal=ideal,
        base_module=module,
        im=im,
        bowtie_ring=bowtie_ring,
        bowtie_module=bowtie_module,
        ring_pairs=ring_pairs,
        module_pairs=module_pairs,
    )
    _check_diagonal(inst)
    return inst


def _check_diagonal(inst: BowtieInstance) -> None:
    """The map a -> (a, a) must be an injective unital ring homomorphism."""
    base = inst.base_ring
    dup = inst.bowtie_ring
    emb = [inst.ring_pair_index[(a, a)] for a in range(base.size)]
    if len(set(emb)) != base.size:
        raise AssertionError("diagonal embedding is not injective")
    if emb[base.one] != dup.one or emb[base.zero] != dup.zero:
        raise AssertionError("diagonal embedding misses the identities")
    for a in range(base.size):
        for b in range(base.size):
            if emb[base.add[a][b]] != dup.add[emb[a]][emb[b]]:
                raise AssertionError("diagonal embedding is not additive")
            if emb[base.mul[a][b]] != dup.mul[emb[a]][emb[b]]:
                raise AssertionError("diagonal embedding is not multiplicative")


def diagonal_embed(inst: BowtieInstance, a: int) -> int:
    """The duplicated-ring index of (a, a)."""
    return inst.ring_pair_index[(a, a)]


def bowtie_submodule(inst: BowtieInstance, n: Submodule) -> Submodule:
    """N join I: the pairs whose first component lies in N."""
    if n.module is not inst.base_module:
        raise ValueError("submodule belongs to a different module")
    members = [
        idx for idx, (m, _mp) in enumerate(inst.module_pairs) if m in n.member_set
    ]
    return Submodule(inst.bowtie_module, members)


def zero_cross_i(inst: BowtieInstance) -> Ideal:
    """The ideal 0 x I of the duplicated ring."""
    zero = inst.base_ring.zero
    members = [
        idx for idx, (a, _b) in enumerate(inst.ring_pairs) if a == zero
    ]
    return Ideal(inst.bowtie_ring, members)


def distinguished_submodules(inst: BowtieInstance) -> tuple[Submodule, Submodule]:
    """The submodules 0 x IM and IM x IM, with the product identity checked.

    The ideal product (0 x I) * (M join I) must equal 0 x IM exactly.
    """
    mod = inst.bowtie_module
    zero = inst.base_module.zero
    zero_cross_im = Submodule(
        mod,
        [i for i, (m, mp) in enumerate(inst.module_pairs)
         if m == zero and mp in inst.im.member_set],
    )
    im_cross_im = Submodule(
        mod,
        [i for i, (m, mp) in enumerate(inst.module_pairs)
         if m in inst.im.member_set and mp in inst.im.member_set],
    )
    ideal = zero_cross_i(inst)
    prods = {mod.act[j][p] for j in ideal.members for p in range(mod.size)}
    closed = _additive_closure(mod.add, prods, mod.zero)
    if closed != zero_cross_im.member_set:
        raise AssertionError("(0 x I)(M join I) differs from 0 x IM")
    return zero_cross_im, im_cross_im


def restrict_scalars(
    inst: BowtieInstance, which: str = "first", base: TableModule | None = None
) -> TableModule:
    """Turn a base-ring module into one over the duplicated ring.

    The pair (a, a+i) acts through its first or second component. Defaults
    to the base module of the instance.
    """
    if which not in ("first", "second"):
        raise ValueError("which must be 'first' or 'second'")
    m0 = inst.base_module if base is None else base
    if m0.ring is not inst.base_ring:
        raise ValueError("module is over a different base ring")
    comp = 0 if which == "first" else 1
    act = tuple(m0.act[pair[comp]] for pair in inst.ring_pairs)
    out = TableModule(
        ring=inst.bowtie_ring,
        size=m0.size,
        add=m0.add,
        act=act,
        zero=m0.zero,
        labels=m0.labels,
        name=f"{m0.name}|{which}",
    )
    validate_module(out)
    return out


def detect_bowtie_form(inst: BowtieInstance, s: Submodule) -> Submodule | None:
    """Recover N with (N join I) = S, when S has that shape.

    N must be the set of first components of S, must itself be a
    submodule, and rebuilding from it must reproduce S exactly.
    """
    if s.module is not inst.bowtie_module:
        raise ValueError("submodule belongs to a different module")
    firsts = {inst.module_pairs[idx][0] for idx in s.members}
    try:
        n = Submodule(inst.base_module, firsts)
    except ValueError:
        return None
    rebuilt = bowtie_submodule(inst, n)
    if rebuilt.members == s.members:
        return n
    return None
