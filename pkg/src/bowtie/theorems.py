"""Executable checkers for the duplication transfer and structure statements.

Each checker evaluates one numbered claim on one finite instance, as a
biconditional where the claim is stated as one, and returns a TheoremReport
whose failure rows carry replayable witnesses. The hunter sweeps a corpus
of Z_n instances deterministically, so report files are byte-stable across
worker counts.

Checker ids:

  L1               colon identity (N><I : M><I) = (N : M) >< I
  L2               prime submodule transfer, both directions
  C_WP             weakly prime (af) transfer, both directions
  P_PRIMARY        primary submodule transfer, both directions
  L3i              weakly prime <=> every colon into a non-contained
                   submodule is a prime ideal (reading selects the
                   quantifier domain)
  L3ii             weakly prime => those colons form a chain
  C_PPW            prime <=> primary and weakly prime
  T4               weakly prime <=> unequal element colons force the
                   two-sum intersection identity
  R_T4             prime => (x in N><I or a(y,y') in N><I) whenever
                   a(x,x') lands in N><I
  C_IRR            weakly prime => intersection identity, and
                   irreducible => prime
  L_COLON_PROD     weakly prime <=> colon by a product of scalars equals
                   the colon by one factor
  R_CEX            probe: is (N><I : M><I) a weakly prime ideal
                   (fail = counterexample found)
  P_FAITHFUL       faithful cyclic M><I and weakly prime N><I =>
                   the colon is a weakly prime ideal
  L_RADICAL        primary <=> every element colon outside N><I lies in
                   the radical of the big colon
  P_COLON_PRIMARY  primary => the colon equals Ann(M><I / N><I) and is a
                   primary ideal
  C_RADICAL_PRIME  primary => the radical of the colon is a prime ideal
  L8               the two canonical quotient isomorphisms of M><I
  T_FINAL          weakly-prime-module characterization of M><I and the
                   0 x IM submodule
  DIVERGENCE       probe: do the af and behboodi readings of
                   "weakly prime" agree on the zero submodule of M
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .rings import Ideal, TableRing, make_zn, enumerate_ideals, radical
from .modules import (
    ModuleMap,
    Submodule,
    TableModule,
    annihilator,
    check_module_map,
    colon_into_ring,
    cyclic_members,
    enumerate_submodules,
    image,
    is_cyclic,
    is_faithful,
    kernel,
    quotient_module,
    ring_as_module,
    whole_submodule,
    zero_submodule,
)
from .classify import (
    Verdict,
    is_prime_ideal,
    is_prime_submodule,
    is_primary_ideal,
    is_primary_submodule,
    is_weakly_prime_ideal,
    is_weakly_prime_module,
    is_weakly_prime_submodule_af,
    is_weakly_prime_submodule_azizi,
    is_weakly_prime_submodule_behboodi,
    is_irreducible_submodule,
)
from .duplication import (
    BowtieInstance,
    build_bowtie,
    bowtie_submodule,
    distinguished_submodules,
    predicted_sizes,
    restrict_scalars,
)

THEOREM_IDS = (
    "L1",
    "L2",
    "C_WP",
    "P_PRIMARY",
    "L3i",
    "L3ii",
    "C_PPW",
    "T4",
    "R_T4",
    "C_IRR",
    "L_COLON_PROD",
    "R_CEX",
    "P_FAITHFUL",
    "L_RADICAL",
    "P_COLON_PRIMARY",
    "C_RADICAL_PRIME",
    "L8",
    "T_FINAL",
    "DIVERGENCE",
)

# checkers parameterized by the weakly-prime definition variant
VARIANTED = frozenset({"L3i", "L3ii", "C_PPW", "T4", "C_IRR", "L_COLON_PROD", "P_FAITHFUL"})
# checkers whose submodule quantifier has two defensible readings
READABLE = frozenset({"L3i", "L3ii"})
# checkers evaluated once per (ring, ideal), independent of N
INSTANCE_LEVEL = frozenset({"L8", "T_FINAL", "DIVERGENCE"})

READINGS = ("bowtie", "all-submodules")

DEFAULT_BUDGET = 256


def default_budget() -> int:
    """The |M><I| cap, overridable through the BOWTIE_BUDGET variable."""
    raw = os.environ.get("BOWTIE_BUDGET", "")
    if raw.strip():
        try:
            return int(raw)
        except ValueError as exc:
            raise ValueError(f"BOWTIE_BUDGET must be an integer, got {raw!r}") from exc
    return DEFAULT_BUDGET


@dataclass(frozen=True)
class TheoremReport:
    """One checker outcome on one instance.

    Serialized as six tab-separated columns: instance key, theorem id,
    variant, reading, outcome, witness (or note). Witnesses use pair
    notation via element labels, so every failure replays by hand.
    """

    instance_key: str
    theorem_id: str
    variant: str = "-"
    reading: str = "-"
    outcome: str = "pass"  # pass | fail | na | skip
    witness_text: str = ""
    notes: str = ""
    stats: dict = field(default_factory=dict, compare=False)

    def line(self) -> str:
        detail = self.witness_text or self.notes or "-"
        return "\t".join(
            (self.instance_key, self.theorem_id, self.variant, self.reading,
             self.outcome, detail)
        )


class Instance:
    """A built duplication plus memoized enumerations shared by checkers."""

    def __init__(
        self,
        ring: TableRing,
        ideal: Ideal,
        module: TableModule,
        key: str | None = None,
        limit: int | None = None,
    ):
        self.inst: BowtieInstance = build_bowtie(ring, ideal, module, limit)
        self.base_key = key or f"{ring.name}|I={ideal.label_set()}"
        self._bowtie_n: dict[tuple[int, ...], Submodule] = {}
        self._colon: dict[tuple[int, ...], Ideal] = {}
        self._prime: dict[tuple[int, ...], Verdict] = {}
        self._primary: dict[tuple[int, ...], Verdict] = {}
        self._wp: dict[tuple[tuple[int, ...], str], Verdict] = {}
        self._npack: dict[tuple[int, ...], dict] = {}

    def key_for(self, n: Submodule | None) -> str:
        if n is None:
            return self.base_key
        return f"{self.base_key}|N={n.label_set()}"

    @cached_property
    def base_submodules(self) -> list[Submodule]:
        return enumerate_submodules(self.inst.base_module)

    @cached_property
    def bowtie_submodules(self) -> list[Submodule]:
        return enumerate_submodules(self.inst.bowtie_module)

    @cached_property
    def bowtie_whole(self) -> Submodule:
        return whole_submodule(self.inst.bowtie_module)

    def bowtie(self, n: Submodule) -> Submodule:
        key = n.members
        if key not in self._bowtie_n:
            self._bowtie_n[key] = bowtie_submodule(self.inst, n)
        return self._bowtie_n[key]

    def colon(self, nb: Submodule) -> Ideal:
        key = nb.members
        if key not in self._colon:
            self._colon[key] = colon_into_ring(nb, self.bowtie_whole)
        return self._colon[key]

    def prime(self, nb: Submodule) -> Verdict:
        key = nb.members
        if key not in self._prime:
            self._prime[key] = is_prime_submodule(nb)
        return self._prime[key]

    def primary(self, nb: Submodule) -> Verdict:
        key = nb.members
        if key not in self._primary:
            self._primary[key] = is_primary_submodule(nb)
        return self._primary[key]

    def weakly_prime(self, nb: Submodule, variant: str) -> Verdict:
        key = (nb.members, variant)
        if key not in self._wp:
            if variant == "af":
                v = is_weakly_prime_submodule_af(nb)
            elif variant == "azizi":
                v = is_weakly_prime_submodule_azizi(nb, self.bowtie_submodules)
            elif variant == "behboodi":
                v = is_weakly_prime_submodule_behboodi(nb)
            else:
                raise ValueError(f"unknown variant {variant!r}")
            self._wp[key] = v
        return self._wp[key]

    def npack(self, nb: Submodule) -> dict:
        """Per-N geometry shared by T4 and C_IRR.

        sum_id[x]: canonical id of the submodule N><I + cyclic(x);
        sum_sets[id]: its member set; col_id[x]: canonical id of the
        element colon {a : a x in N><I}; pair_ok: cache of
        "intersection of two sum-sets equals N><I" per id pair.
        """
        key = nb.members
        if key in self._npack:
            return self._npack[key]
        mod = self.inst.bowtie_module
        rsize = self.inst.bowtie_ring.size
        sum_ids: list[int] = []
        sum_sets: list[frozenset[int]] = []
        sum_index: dict[frozenset[int], int] = {}
        col_ids: list[int] = []
        col_index: dict[frozenset[int], int] = {}
        for x in range(mod.size):
            cyc = cyclic_members(mod, x)
            s = frozenset(mod.add[p][q] for p in nb.members for q in cyc)
            sid = sum_index.setdefault(s, len(sum_index))
            if sid == len(sum_sets):
                sum_sets.append(s)
            sum_ids.append(sid)
            col = frozenset(a for a in range(rsize) if mod.act[a][x] in nb.member_set)
            col_ids.append(col_index.setdefault(col, len(col_index)))
        pack = {
            "sum_ids": sum_ids,
            "sum_sets": sum_sets,
            "col_ids": col_ids,
            "pair_ok": {},
            "n_set": nb.member_set,
        }
        self._npack[key] = pack
        return pack

    def pair_meets_n(self, pack: dict, sid1: int, sid2: int) -> bool:
        """Does (N><I + A x) intersect (N><I + A y) in exactly N><I."""
        key = (sid1, sid2) if sid1 <= sid2 else (sid2, sid1)
        ok = pack["pair_ok"].get(key)
        if ok is None:
            ok = (pack["sum_sets"][sid1] & pack["sum_sets"][sid2]) == pack["n_set"]
            pack["pair_ok"][key] = ok
        return ok


def make_zn_instance(
    n: int, ideal_members: Iterable[int], limit: int | None = None
) -> Instance:
    """Convenience builder: Z_n with its regular module."""
    ring = make_zn(n)
    ideal = Ideal(ring, ideal_members)
    return Instance(ring, ideal, ring_as_module(ring), limit=limit)


# -------------------------------------------------------------- checkers


def check_L1(ctx: Instance, n: Submodule) -> TheoremReport:
    """(N><I : M><I) must decode to {(a, a+i) : a in (N:M), i in I}."""
    inst = ctx.inst
    nb = ctx.bowtie(n)
    lhs = colon_into_ring(nb, ctx.bowtie_whole)
    base_colon = colon_into_ring(n, whole_submodule(inst.base_module))
    rhs = {
        inst.ring_pair_index[(a, inst.base_ring.add[a][i])]
        for a in base_colon.members
        for i in inst.ideal.members
    }
    key = ctx.key_for(n)
    if lhs.member_set == rhs:
        return TheoremReport(key, "L1", notes=f"both sides = {lhs.label_set()}")
    first_diff = min(lhs.member_set ^ rhs)
    side = "left only" if first_diff in lhs.member_set else "right only"
    return TheoremReport(
        key,
        "L1",
        outcome="fail",
        witness_text=(
            f"{inst.bowtie_ring.labels[first_diff]} is on one side only ({side});"
            f" colon={lhs.label_set()}"
        ),
    )


_TRANSFER = {
    "prime": ("L2", is_prime_submodule, "prime"),
    "weakly_prime_af": ("C_WP", is_weakly_prime_submodule_af, "weakly prime (af)"),
    "primary": ("P_PRIMARY", is_primary_submodule, "primary"),
}


def check_transfer(ctx: Instance, n: Submodule, notion: str) -> TheoremReport:
    """notion(N) must agree with notion(N><I), in both directions."""
    if notion not in _TRANSFER:
        raise ValueError(f"unknown transfer notion {notion!r}")
    theorem_id, pred, noun = _TRANSFER[notion]
    vb = pred(n)
    vd = pred(ctx.bowtie(n))
    key = ctx.key_for(n)
    stats = {"base": vb.holds, "duplicate": vd.holds}
    if vb.holds == vd.holds:
        return TheoremReport(
            key, theorem_id, notes=f"base={vb.holds} duplicate={vd.holds}", stats=stats
        )
    if vb.holds:
        text = f"statement gap (base to duplicate): N is {noun} but N><I is not; {vd.witness_text}"
    else:
        text = f"statement gap (duplicate to base): N><I is {noun} but N is not; {vb.witness_text}"
    return TheoremReport(key, theorem_id, outcome="fail", witness_text=text, stats=stats)


def _quantifier_domain(ctx: Instance, reading: str) -> list[Submodule]:
    """The submodules of M><I that 'every submodule K><I' ranges over."""
    if reading == "bowtie":
        return [ctx.bowtie(k0) for k0 in ctx.base_submodules]
    if reading == "all-submodules":
        return ctx.bowtie_submodules
    raise ValueError(f"unknown reading {reading!r}")


def check_L3i(ctx: Instance, n: Submodule, variant: str, reading: str) -> TheoremReport:
    """Weakly prime <=> every colon into a non-contained K is a prime ideal."""
    nb = ctx.bowtie(n)
    wp = ctx.weakly_prime(nb, variant)
    rhs_witness = ""
    rhs_holds = True
    for k in _quantifier_domain(ctx, reading):
        if k.member_set <= nb.member_set:
            continue
        col = colon_into_ring(nb, k)
        v = is_prime_ideal(col)
        if not v.holds:
            rhs_holds = False
            rhs_witness = (
                f"K={k.label_set()} gives colon {col.label_set()},"
                f" not prime: {v.witness_text}"
            )
            break
    key = ctx.key_for(n)
    if wp.holds == rhs_holds:
        return TheoremReport(
            key, "L3i", variant, reading,
            notes=f"weakly_prime={wp.holds} all-colons-prime={rhs_holds}",
        )
    if wp.holds:
        text = f"statement gap (forward): N><I is weakly prime ({variant}) but {rhs_witness}"
    else:
        text = (
            "statement gap (backward): every eligible colon is prime but N><I"
            f" is not weakly prime ({variant}): {wp.witness_text}"
        )
    return TheoremReport(key, "L3i", variant, reading, outcome="fail", witness_text=text)


def check_L3ii(ctx: Instance, n: Submodule, variant: str, reading: str) -> TheoremReport:
    """Weakly prime => colons into non-contained submodules form a chain."""
    nb = ctx.bowtie(n)
    wp = ctx.weakly_prime(nb, variant)
    key = ctx.key_for(n)
    if not wp.holds:
        return TheoremReport(
            key, "L3ii", variant, reading, outcome="na",
            notes=f"hypothesis fails: N><I is not weakly prime ({variant})",
        )
    domain = [
        k for k in _quantifier_domain(ctx, reading)
        if not k.member_set <= nb.member_set
    ]
    colons = [colon_into_ring(nb, k).member_set for k in domain]
    for i in range(len(domain)):
        for j in range(i + 1, len(domain)):
            a, b = colons[i], colons[j]
            if not (a <= b or b <= a):
                ring = ctx.inst.bowtie_ring
                onlya = ring.labels[min(a - b)]
                onlyb = ring.labels[min(b - a)]
                return TheoremReport(
                    key, "L3ii", variant, reading, outcome="fail",
                    witness_text=(
                        f"K={domain[i].label_set()} L={domain[j].label_set()}:"
                        f" colon(K) has {onlya} outside colon(L),"
                        f" colon(L) has {onlyb} outside colon(K)"
                    ),
                )
    return TheoremReport(key, "L3ii", variant, reading, notes="colons form a chain")


def check_C_PPW(ctx: Instance, n: Submodule, variant: str) -> TheoremReport:
    """Prime <=> primary and weakly prime."""
    nb = ctx.bowtie(n)
    p = ctx.prime(nb)
    pr = ctx.primary(nb)
    wp = ctx.weakly_prime(nb, variant)
    key = ctx.key_for(n)
    lhs, rhs = p.holds, pr.holds and wp.holds
    if lhs == rhs:
        return TheoremReport(
            key, "C_PPW", variant,
            notes=f"prime={p.holds} primary={pr.holds} weakly_prime={wp.holds}",
        )
    if lhs:
        missing = "primary" if not pr.holds else f"weakly prime ({variant})"
        inner = pr.witness_text if not pr.holds else wp.witness_text
        text = f"statement gap (forward): N><I is prime but not {missing}; {inner}"
    else:
        text = (
            f"statement gap (backward): N><I is primary and weakly prime ({variant})"
            f" but not prime; {p.witness_text}"
        )
    return TheoremReport(key, "C_PPW", variant, outcome="fail", witness_text=text)


def check_T4(ctx: Instance, n: Submodule, variant: str) -> TheoremReport:
    """Weakly prime <=> unequal element colons force the two-sum identity."""
    nb = ctx.bowtie(n)
    wp = ctx.weakly_prime(nb, variant)
    pack = ctx.npack(nb)
    mod = ctx.inst.bowtie_module
    sum_ids, col_ids = pack["sum_ids"], pack["col_ids"]
    cond_witness = ""
    cond = True
    for x in range(mod.size):
        cx, sx = col_ids[x], sum_ids[x]
        for y in range(mod.size):
            if col_ids[y] == cx:
                continue
            if not ctx.pair_meets_n(pack, sx, sum_ids[y]):
                cond = False
                extra = min(
                    (pack["sum_sets"][sx] & pack["sum_sets"][sum_ids[y]])
                    - pack["n_set"]
                )
                cond_witness = (
                    f"x={mod.labels[x]} y={mod.labels[y]}: colons differ but the"
                    f" intersection keeps {mod.labels[extra]} outside N><I"
                )
                break
        if not cond:
            break
    key = ctx.key_for(n)
    if wp.holds == cond:
        return TheoremReport(
            key, "T4", variant,
            notes=f"weakly_prime={wp.holds} intersection-condition={cond}",
        )
    if wp.holds:
        text = f"statement gap (forward): N><I is weakly prime ({variant}) but {cond_witness}"
    else:
        text = (
            "statement gap (backward): the intersection condition holds but N><I"
            f" is not weakly prime ({variant}): {wp.witness_text}"
        )
    return TheoremReport(key, "T4", variant, outcome="fail", witness_text=text)


def check_R_T4(ctx: Instance, n: Submodule) -> TheoremReport:
    """For prime N><I: a(x,x') in N><I forces x in N><I or a(y,y') in N><I."""
    nb = ctx.bowtie(n)
    p = ctx.prime(nb)
    key = ctx.key_for(n)
    if not p.holds:
        return TheoremReport(
            key, "R_T4", outcome="na", notes="hypothesis fails: N><I is not prime",
        )
    mod = ctx.inst.bowtie_module
    colon = ctx.colon(nb).member_set
    for a in range(ctx.inst.bowtie_ring.size):
        if a in colon:
            continue
        row = mod.act[a]
        for x in range(mod.size):
            if x in nb.member_set or row[x] not in nb.member_set:
                continue
            y = next(yy for yy in range(mod.size) if row[yy] not in nb.member_set)
            return TheoremReport(
                key, "R_T4", outcome="fail",
                witness_text=(
                    f"a={ctx.inst.bowtie_ring.labels[a]} x={mod.labels[x]}"
                    f" y={mod.labels[y]}: ax in N><I but x is outside and ay is outside"
                ),
            )
    return TheoremReport(key, "R_T4", notes="disjunction holds for all triples")


def check_C_IRR(ctx: Instance, n: Submodule, variant: str) -> TheoremReport:
    """Under weakly prime N><I: the intersection identity, and irreducible => prime."""
    nb = ctx.bowtie(n)
    wp = ctx.weakly_prime(nb, variant)
    key = ctx.key_for(n)
    if not wp.holds:
        return TheoremReport(
            key, "C_IRR", variant, outcome="na",
            notes=f"hypothesis fails: N><I is not weakly prime ({variant})",
        )
    inst = ctx.inst
    mod = inst.bowtie_module
    pack = ctx.npack(nb)
    sum_ids = pack["sum_ids"]
    part1_witness = ""
    for a in range(inst.bowtie_ring.size):
        row = mod.act[a]
        xs = [x for x in range(mod.size) if row[x] in nb.member_set]
        if not xs:
            continue
        # distinct right-hand sum ids reachable through this scalar
        bad_right = {
            sum_ids[row[y]]
            for y in range(mod.size)
        }
        found = False
        for x in xs:
            sx = sum_ids[x]
            if all(ctx.pair_meets_n(pack, sx, sr) for sr in bad_right):
                continue
            for y in range(mod.size):
                if not ctx.pair_meets_n(pack, sx, sum_ids[row[y]]):
                    part1_witness = (
                        f"a={inst.bowtie_ring.labels[a]} x={mod.labels[x]}"
                        f" y={mod.labels[y]}: ax in N><I but the intersection"
                        " identity fails"
                    )
                    found = True
                    break
            if found:
                break
        if found:
            break
    irr = is_irreducible_submodule(nb, ctx.bowtie_submodules)
    p = ctx.prime(nb)
    part2_witness = ""
    if irr.holds and not p.holds:
        part2_witness = (
            f"N><I is irreducible yet not prime: {p.witness_text}"
        )
    if not part1_witness and not part2_witness:
        return TheoremReport(
            key, "C_IRR", variant,
            notes=f"identity holds; irreducible={irr.holds} prime={p.holds}",
        )
    pieces = []
    if part1_witness:
        pieces.append(f"part 1: {part1_witness}")
    if part2_witness:
        pieces.append(f"part 2: {part2_witness}")
    return TheoremReport(
        key, "C_IRR", variant, outcome="fail", witness_text="; ".join(pieces)
    )


def check_L_colon_prod(ctx: Instance, n: Submodule, variant: str) -> TheoremReport:
    """Weakly prime <=> colon by a scalar product equals a factor colon."""
    nb = ctx.bowtie(n)
    wp = ctx.weakly_prime(nb, variant)
    inst = ctx.inst
    mod = inst.bowtie_module
    rsize = inst.bowtie_ring.size
    ids: dict[frozenset[int], int] = {}
    cid = []
    csets = []
    for s in range(rsize):
        col = frozenset(m for m in range(mod.size) if mod.act[s][m] in nb.member_set)
        i = ids.setdefault(col, len(ids))
        if i == len(csets):
            csets.append(col)
        cid.append(i)
    mul = inst.bowtie_ring.mul
    cond = True
    cond_witness = ""
    for s1 in range(rsize):
        row = mul[s1]
        for s2 in range(rsize):
            cp = cid[row[s2]]
            if cp != cid[s1] and cp != cid[s2]:
                cond = False
                labels = inst.bowtie_ring.labels
                cond_witness = (
                    f"s={labels[s1]} t={labels[s2]}: (N><I : st) matches neither"
                    f" (N><I : s) nor (N><I : t)"
                )
                break
        if not cond:
            break
    key = ctx.key_for(n)
    if wp.holds == cond:
        return TheoremReport(
            key, "L_COLON_PROD", variant,
            notes=f"weakly_prime={wp.holds} colon-product-condition={cond}",
        )
    if wp.holds:
        text = f"statement gap (forward): N><I is weakly prime ({variant}) but {cond_witness}"
    else:
        text = (
            "statement gap (backward): the colon condition holds but N><I is"
            f" not weakly prime ({variant}): {wp.witness_text}"
        )
    return TheoremReport(key, "L_COLON_PROD", variant, outcome="fail", witness_text=text)


def check_R_CEX(ctx: Instance, n: Submodule) -> TheoremReport:
    """Probe: fail exactly when (N><I : M><I) is not a weakly prime ideal."""
    nb = ctx.bowtie(n)
    col = ctx.colon(nb)
    v = is_weakly_prime_ideal(col)
    key = ctx.key_for(n)
    if v.holds:
        return TheoremReport(
            key, "R_CEX", notes=f"colon {col.label_set()} is a weakly prime ideal"
        )
    return TheoremReport(
        key, "R_CEX", outcome="fail",
        witness_text=f"colon {col.label_set()} is not weakly prime: {v.witness_text}",
    )


def check_P_faithful(ctx: Instance, n: Submodule, variant: str) -> TheoremReport:
    """Faithful cyclic M><I with weakly prime N><I: colon is weakly prime."""
    nb = ctx.bowtie(n)
    mod = ctx.inst.bowtie_module
    faithful = is_faithful(mod)
    cyc = is_cyclic(mod)
    wp = ctx.weakly_prime(nb, variant)
    key = ctx.key_for(n)
    missing = []
    if not faithful:
        missing.append("M><I is not faithful")
    if not cyc.holds:
        missing.append("M><I is not cyclic")
    if not wp.holds:
        missing.append(f"N><I is not weakly prime ({variant})")
    if missing:
        return TheoremReport(
            key, "P_FAITHFUL", variant, outcome="na",
            notes="hypothesis fails: " + "; ".join(missing),
        )
    v = is_weakly_prime_ideal(ctx.colon(nb))
    if v.holds:
        return TheoremReport(
            key, "P_FAITHFUL", variant, notes="colon is a weakly prime ideal"
        )
    return TheoremReport(
        key, "P_FAITHFUL", variant, outcome="fail",
        witness_text=f"colon is not a weakly prime ideal: {v.witness_text}",
    )


def check_L_radical(ctx: Instance, n: Submodule) -> TheoremReport:
    """Primary <=> every element colon outside N><I sits inside the radical."""
    nb = ctx.bowtie(n)
    lhs = ctx.primary(nb)
    mod = ctx.inst.bowtie_module
    rad = radical(ctx.colon(nb)).member_set
    rhs_holds = True
    rhs_witness = ""
    for b in range(mod.size):
        if b in nb.member_set:
            continue
        bad = next(
            (a for a in range(ctx.inst.bowtie_ring.size)
             if mod.act[a][b] in nb.member_set and a not in rad),
            None,
        )
        if bad is not None:
            rhs_holds = False
            rhs_witness = (
                f"b={mod.labels[b]}: a={ctx.inst.bowtie_ring.labels[bad]} sends b"
                " into N><I but no power of a lands in the colon"
            )
            break
    key = ctx.key_for(n)
    if lhs.holds == rhs_holds:
        return TheoremReport(
            key, "L_RADICAL",
            notes=f"primary={lhs.holds} radical-condition={rhs_holds}",
        )
    if lhs.holds:
        text = f"statement gap (forward): N><I is primary but {rhs_witness}"
    else:
        text = (
            "statement gap (backward): the radical condition holds but N><I is"
            f" not primary: {lhs.witness_text}"
        )
    return TheoremReport(key, "L_RADICAL", outcome="fail", witness_text=text)


def check_P_colon_primary(ctx: Instance, n: Submodule) -> TheoremReport:
    """For primary N><I: colon = Ann(M><I / N><I) and it is a primary ideal."""
    nb = ctx.bowtie(n)
    col = ctx.colon(nb)
    quo, _ = quotient_module(ctx.inst.bowtie_module, nb)
    ann = annihilator(whole_submodule(quo))
    key = ctx.key_for(n)
    if ann.member_set != col.member_set:
        return TheoremReport(
            key, "P_COLON_PRIMARY", outcome="fail",
            witness_text=(
                f"colon {col.label_set()} differs from the quotient annihilator"
                f" {ann.label_set()}"
            ),
        )
    if not ctx.primary(nb).holds:
        return TheoremReport(
            key, "P_COLON_PRIMARY", outcome="na",
            notes="hypothesis fails: N><I is not primary (annihilator identity verified)",
        )
    v = is_primary_ideal(col)
    if v.holds:
        return TheoremReport(
            key, "P_COLON_PRIMARY",
            notes=f"colon = quotient annihilator = {col.label_set()}, primary",
        )
    return TheoremReport(
        key, "P_COLON_PRIMARY", outcome="fail",
        witness_text=f"colon is not a primary ideal: {v.witness_text}",
    )


def check_C_radical_prime(ctx: Instance, n: Submodule) -> TheoremReport:
    """For primary N><I: the radical of the colon is a prime ideal."""
    nb = ctx.bowtie(n)
    key = ctx.key_for(n)
    if not ctx.primary(nb).holds:
        return TheoremReport(
            key, "C_RADICAL_PRIME", outcome="na",
            notes="hypothesis fails: N><I is not primary",
        )
    rad = radical(ctx.colon(nb))
    v = is_prime_ideal(rad)
    if v.holds:
        return TheoremReport(
            key, "C_RADICAL_PRIME", notes=f"radical {rad.label_set()} is prime"
        )
    return TheoremReport(
        key, "C_RADICAL_PRIME", outcome="fail",
        witness_text=f"radical {rad.label_set()} is not prime: {v.witness_text}",
    )


def _induced_map(
    source_quotient: TableModule,
    projection: ModuleMap,
    f: ModuleMap,
) -> ModuleMap:
    """The map the quotient inherits from f along the projection."""
    table = [-1] * source_quotient.size
    for x in range(f.source.size):
        c = projection.table[x]
        if table[c] < 0:
            table[c] = f.table[x]
    return ModuleMap(source=source_quotient, target=f.target, table=tuple(table))


def check_L8(ctx: Instance) -> TheoremReport:
    """Both canonical quotient isomorphisms of M><I, by explicit maps."""
    inst = ctx.inst
    mod = inst.bowtie_module
    zero_cross_im, im_cross_im = distinguished_submodules(inst)
    problems: list[str] = []

    # first projection onto M (scalars through the first component)
    t1 = restrict_scalars(inst, "first")
    f1 = ModuleMap(mod, t1, tuple(m for (m, _mp) in inst.module_pairs))
    if not check_module_map(f1):
        problems.append("first projection is not a module map")
    if len(image(f1)) != t1.size:
        problems.append("first projection is not surjective")
    k1 = kernel(f1)
    if k1.members != zero_cross_im.members:
        problems.append("kernel of the first projection is not 0 x IM")
    q1, proj1 = quotient_module(mod, zero_cross_im)
    g1 = _induced_map(q1, proj1, f1)
    if not check_module_map(g1) or len(set(g1.table)) != q1.size or q1.size != t1.size:
        problems.append("induced map M><I / (0 x IM) -> M is not bijective")

    # coset projection onto M / IM
    base_quo, bproj = quotient_module(inst.base_module, inst.im)
    t2 = restrict_scalars(inst, "first", base_quo)
    f2 = ModuleMap(mod, t2, tuple(bproj.table[m] for (m, _mp) in inst.module_pairs))
    if not check_module_map(f2):
        problems.append("coset projection is not a module map")
    if len(image(f2)) != t2.size:
        problems.append("coset projection is not surjective")
    k2 = kernel(f2)
    if k2.members != im_cross_im.members:
        problems.append("kernel of the coset projection is not IM x IM")
    q2, proj2 = quotient_module(mod, im_cross_im)
    g2 = _induced_map(q2, proj2, f2)
    if not check_module_map(g2) or len(set(g2.table)) != q2.size or q2.size != t2.size:
        problems.append("induced map M><I / (IM x IM) -> M/IM is not bijective")

    key = ctx.key_for(None)
    if problems:
        return TheoremReport(
            key, "L8", outcome="fail", witness_text="; ".join(problems)
        )
    return TheoremReport(
        key, "L8", notes=f"quotient sizes {q1.size} and {q2.size}",
        stats={"q1": q1.size, "q2": q2.size},
    )


def check_T_final(ctx: Instance) -> TheoremReport:
    """Weakly-prime-module characterization of M><I and of 0 x IM."""
    inst = ctx.inst
    key = ctx.key_for(None)
    if inst.base_module.size == 1:
        return TheoremReport(
            key, "T_FINAL", variant="behboodi", outcome="na",
            notes="hypothesis fails: M is the zero module",
        )
    wp_dup = is_weakly_prime_module(inst.bowtie_module)
    wp_base = is_weakly_prime_module(inst.base_module)
    im_zero = inst.im.is_zero
    zero_cross_im, _ = distinguished_submodules(inst)
    wp_sub = is_weakly_prime_submodule_behboodi(zero_cross_im)
    part1 = wp_dup.holds == (im_zero and wp_base.holds)
    part2 = wp_sub.holds == wp_base.holds
    note = (
        f"M><I wp-module={wp_dup.holds} IM=0:{im_zero} M wp-module={wp_base.holds}"
        f" 0xIM wp-submodule={wp_sub.holds}"
    )
    if part1 and part2:
        return TheoremReport(key, "T_FINAL", variant="behboodi", notes=note)
    pieces = []
    if not part1:
        inner = wp_dup.witness_text or wp_base.witness_text
        pieces.append(f"part 1 biconditional breaks ({note}); {inner}")
    if not part2:
        inner = wp_sub.witness_text or wp_base.witness_text
        pieces.append(f"part 2 biconditional breaks ({note}); {inner}")
    return TheoremReport(
        key, "T_FINAL", variant="behboodi", outcome="fail",
        witness_text="; ".join(pieces),
    )


def check_divergence(ctx: Instance) -> TheoremReport:
    """Probe: af versus behboodi on the zero submodule of the base module.

    A fail outcome means the two definitions disagree there, which is the
    phenomenon this probe exists to surface.
    """
    inst = ctx.inst
    key = ctx.key_for(zero_submodule(inst.base_module)) if inst.base_module.size > 1 else ctx.key_for(None)
    if inst.base_module.size == 1:
        return TheoremReport(
            key, "DIVERGENCE", outcome="na",
            notes="zero module has no proper zero submodule",
        )
    zn = zero_submodule(inst.base_module)
    af = is_weakly_prime_submodule_af(zn)
    bb = is_weakly_prime_submodule_behboodi(zn)
    if af.holds == bb.holds:
        return TheoremReport(
            key, "DIVERGENCE", notes=f"af={af.holds} behboodi={bb.holds}: agree"
        )
    loser = bb if not bb.holds else af
    return TheoremReport(
        key, "DIVERGENCE", outcome="fail",
        witness_text=(
            f"af={af.holds} behboodi={bb.holds}: definitions disagree;"
            f" {loser.witness_text}"
        ),
    )


# ----------------------------------------------------------------- hunt


@dataclass(frozen=True)
class CorpusSpec:
    """A finite instance family: Z_n for 1 <= n <= max_n, every ideal."""

    family: str = "zn"
    max_n: int = 6

    def __post_init__(self) -> None:
        if self.family != "zn":
            raise ValueError(f"unknown corpus family {self.family!r}")
        if self.max_n < 0:
            raise ValueError("max_n must be nonnegative")


def normalize_theorems(theorems: Iterable[str] | None) -> tuple[str, ...]:
    if theorems is None:
        return THEOREM_IDS
    by_lower = {t.lower(): t for t in THEOREM_IDS}
    out = []
    for t in theorems:
        key = t.strip().lower()
        if key == "transfer-all":
            out.extend(["L2", "C_WP", "P_PRIMARY"])
            continue
        if key not in by_lower:
            raise ValueError(f"unknown theorem id {t!r}")
        out.append(by_lower[key])
    # stable registry order, deduplicated
    chosen = set(out)
    return tuple(t for t in THEOREM_IDS if t in chosen)


def run_checker(
    ctx: Instance,
    theorem: str,
    n: Submodule | None,
    variant: str = "-",
    reading: str = "-",
) -> TheoremReport:
    """Dispatch a single checker; n is ignored for instance-level checks."""
    if theorem not in THEOREM_IDS:
        raise ValueError(f"unknown theorem {theorem!r}")
    if theorem == "L8":
        return check_L8(ctx)
    if theorem == "T_FINAL":
        return check_T_final(ctx)
    if theorem == "DIVERGENCE":
        return check_divergence(ctx)
    assert n is not None
    if theorem == "L1":
        return check_L1(ctx, n)
    if theorem == "L2":
        return check_transfer(ctx, n, "prime")
    if theorem == "C_WP":
        return check_transfer(ctx, n, "weakly_prime_af")
    if theorem == "P_PRIMARY":
        return check_transfer(ctx, n, "primary")
    if theorem == "L3i":
        return check_L3i(ctx, n, variant, reading)
    if theorem == "L3ii":
        return check_L3ii(ctx, n, variant, reading)
    if theorem == "C_PPW":
        return check_C_PPW(ctx, n, variant)
    if theorem == "T4":
        return check_T4(ctx, n, variant)
    if theorem == "R_T4":
        return check_R_T4(ctx, n)
    if theorem == "C_IRR":
        return check_C_IRR(ctx, n, variant)
    if theorem == "L_COLON_PROD":
        return check_L_colon_prod(ctx, n, variant)
    if theorem == "R_CEX":
        return check_R_CEX(ctx, n)
    if theorem == "P_FAITHFUL":
        return check_P_faithful(ctx, n, variant)
    if theorem == "L_RADICAL":
        return check_L_radical(ctx, n)
    if theorem == "P_COLON_PRIMARY":
        return check_P_colon_primary(ctx, n)
    if theorem == "C_RADICAL_PRIME":
        return check_C_radical_prime(ctx, n)
    raise ValueError(f"unknown theorem id {theorem!r}")


def rows_for_submodule(
    ctx: Instance,
    n: Submodule,
    theorems: Sequence[str],
    variants: Sequence[str],
    readings: Sequence[str],
) -> list[TheoremReport]:
    """Rows of every selected per-submodule checker on one N, registry order."""
    rows: list[TheoremReport] = []
    for theorem in theorems:
        if theorem in INSTANCE_LEVEL:
            continue
        if not n.is_proper and theorem != "L1":
            continue
        if theorem in VARIANTED:
            for variant in variants:
                if theorem in READABLE:
                    for reading in readings:
                        rows.append(run_checker(ctx, theorem, n, variant, reading))
                else:
                    rows.append(run_checker(ctx, theorem, n, variant))
        else:
            rows.append(run_checker(ctx, theorem, n))
    return rows


def run_instance(
    ctx: Instance,
    theorems: Sequence[str],
    variants: Sequence[str],
    readings: Sequence[str],
    zero_ideal_probe: bool = True,
) -> list[TheoremReport]:
    """All selected checker rows for one instance, in canonical order."""
    rows: list[TheoremReport] = []
    for theorem in ("L8", "T_FINAL"):
        if theorem in theorems:
            rows.append(run_checker(ctx, theorem, None))
            if theorem == "L8" and rows[-1].outcome == "fail":
                raise RuntimeError(
                    "construction bug: the canonical quotient maps failed on "
                    + ctx.base_key
                )
    if "DIVERGENCE" in theorems and zero_ideal_probe:
        rows.append(run_checker(ctx, "DIVERGENCE", None))
    if any(t not in INSTANCE_LEVEL for t in theorems):
        for n in ctx.base_submodules:
            rows.extend(rows_for_submodule(ctx, n, theorems, variants, readings))
    return rows


def _hunt_task(
    args: tuple[int, tuple[int, ...], tuple[str, ...], tuple[str, ...], tuple[str, ...], int]
) -> list[TheoremReport]:
    n, ideal_members, theorems, variants, readings, budget = args
    ring = make_zn(n)
    ideal = Ideal(ring, ideal_members)
    module = ring_as_module(ring)
    key = f"Z{n}|I={ideal.label_set()}"
    _, module_size = predicted_sizes(ring, ideal, module)
    if module_size > budget:
        return [
            TheoremReport(
                key, theorem, outcome="skip",
                notes=f"budget exceeded: |M><I| = {module_size} > {budget}",
            )
            for theorem in theorems
        ]
    ctx = Instance(ring, ideal, module, key=key)
    zero_probe = ideal.is_zero
    return run_instance(ctx, theorems, variants, readings, zero_ideal_probe=zero_probe)


def hunt(
    corpus: CorpusSpec,
    theorems: Iterable[str] | None = None,
    variants: Sequence[str] | None = None,
    readings: Sequence[str] | None = None,
    workers: int = 0,
    budget: int | None = None,
) -> list[TheoremReport]:
    """Run the selected checkers over the whole corpus, deterministically.

    The report order is a function of the corpus alone: instances ascend
    by (n, ideal enumeration index), and rows within an instance follow
    submodule enumeration and registry order. Worker count never changes
    the output.
    """
    chosen = normalize_theorems(theorems)
    variants = tuple(variants) if variants else ("af", "azizi", "behboodi")
    readings = tuple(readings) if readings else READINGS
    budget = default_budget() if budget is None else budget
    tasks = []
    for n in range(1, corpus.max_n + 1):
        ring = make_zn(n)
        for ideal in enumerate_ideals(ring):
            tasks.append((n, ideal.members, chosen, variants, readings, budget))
    if workers and workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_hunt_task, tasks))
    else:
        chunks = [_hunt_task(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def serialize_reports(
    reports: Iterable[TheoremReport], header: str | None = None
) -> str:
    lines = [] if header is None else [f"# {header}"]
    lines.extend(r.line() for r in reports)
    return "\n".join(lines) + "\n"


def summarize(reports: Sequence[TheoremReport]) -> str:
    """Pass/fail/na/skip counts per theorem and variant, plus probe firsts."""
    counts: dict[tuple[str, str], dict[str, int]] = {}
    for r in reports:
        cell = counts.setdefault((r.theorem_id, r.variant),
                                 {"pass": 0, "fail": 0, "na": 0, "skip": 0})
        cell[r.outcome] += 1
    lines = ["theorem\tvariant\tpass\tfail\tna\tskip"]
    for theorem in THEOREM_IDS:
        for (tid, variant), cell in sorted(counts.items()):
            if tid != theorem:
                continue
            lines.append(
                f"{tid}\t{variant}\t{cell['pass']}\t{cell['fail']}\t{cell['na']}\t{cell['skip']}"
            )
    first_div = next(
        (r for r in reports if r.theorem_id == "DIVERGENCE" and r.outcome == "fail"),
        None,
    )
    if first_div is not None:
        lines.append(f"first divergence: {first_div.instance_key}: {first_div.witness_text}")
    skips = sum(1 for r in reports if r.outcome == "skip")
    if skips:
        lines.append(f"budget skips: {skips} (raise BOWTIE_BUDGET to cover them)")
    return "\n".join(lines)
