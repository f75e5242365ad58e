"""Decision procedures with witnesses for prime-like conditions.

Three inequivalent notions travel under the name "weakly prime" in the
literature, so each gets its own predicate:

  af        proper N with: 0 != a*x in N implies x in N or a*M inside N
            (Atani and Farzalipour's definition)
  azizi     proper N with: a*b*T inside N implies a*T inside N or
            b*T inside N, for all scalars a, b and all submodules T
            (Azizi's definition; T ranges over every submodule,
            including M and the zero submodule)
  behboodi  N is weakly prime when M/N is a weakly prime module, where a
            module is weakly prime when the annihilator of every nonzero
            submodule is a prime ideal (Behboodi and Koohy's definition)

All scans run in canonical index order, so a returned witness is always
the lexicographically first violation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .rings import Ideal, radical
from .modules import (
    Submodule,
    TableModule,
    annihilator,
    colon_into_ring,
    enumerate_submodules,
    quotient_module,
    submodule_intersection,
    whole_submodule,
)

VARIANTS = ("af", "azizi", "behboodi")


class ImproperError(ValueError):
    """Raised when a predicate requiring a proper input gets the whole thing."""


@dataclass(frozen=True)
class Verdict:
    """Outcome of a predicate: truth value plus a minimal counterexample.

    ``witness`` is a structured tuple of carrier indices (shape depends on
    the predicate); ``witness_text`` renders it with element labels. A
    witness is present exactly when the verdict is negative.
    """

    holds: bool
    variant: str = "n/a"
    witness: tuple[Any, ...] | None = None
    witness_text: str = ""
    notes: str = ""

    def __post_init__(self) -> None:
        if self.holds and self.witness is not None:
            raise ValueError("a positive verdict cannot carry a witness")
        if not self.holds and self.witness is None:
            raise ValueError("a negative verdict needs a witness")


def _require_proper_ideal(j: Ideal) -> None:
    if not j.is_proper:
        raise ImproperError("predicate requires a proper ideal")


def _require_proper(n: Submodule) -> None:
    if not n.is_proper:
        raise ImproperError("predicate requires a proper submodule")


# ---------------------------------------------------------------- ideals


def is_prime_ideal(j: Ideal) -> Verdict:
    """ab in J implies a in J or b in J."""
    _require_proper_ideal(j)
    r = j.ring
    for a in range(r.size):
        if a in j.member_set:
            continue
        row = r.mul[a]
        for b in range(r.size):
            if b in j.member_set:
                continue
            if row[b] in j.member_set:
                return Verdict(
                    holds=False,
                    witness=(a, b),
                    witness_text=f"a={r.labels[a]} b={r.labels[b]} ab={r.labels[row[b]]}",
                )
    return Verdict(holds=True)


def violates_prime_ideal(j: Ideal, a: int, b: int) -> bool:
    r = j.ring
    return a not in j.member_set and b not in j.member_set and r.mul[a][b] in j.member_set


def is_weakly_prime_ideal(j: Ideal) -> Verdict:
    """0 != ab in J implies a in J or b in J."""
    _require_proper_ideal(j)
    r = j.ring
    for a in range(r.size):
        if a in j.member_set:
            continue
        row = r.mul[a]
        for b in range(r.size):
            if b in j.member_set:
                continue
            ab = row[b]
            if ab != r.zero and ab in j.member_set:
                return Verdict(
                    holds=False,
                    witness=(a, b),
                    witness_text=f"a={r.labels[a]} b={r.labels[b]} ab={r.labels[ab]}",
                )
    return Verdict(holds=True)


def violates_weakly_prime_ideal(j: Ideal, a: int, b: int) -> bool:
    r = j.ring
    ab = r.mul[a][b]
    return (
        a not in j.member_set
        and b not in j.member_set
        and ab in j.member_set
        and ab != r.zero
    )


def is_primary_ideal(j: Ideal) -> Verdict:
    """ab in J implies a in J or some power of b lands in J."""
    _require_proper_ideal(j)
    r = j.ring
    rad = radical(j)
    for a in range(r.size):
        if a in j.member_set:
            continue
        row = r.mul[a]
        for b in range(r.size):
            if b in rad.member_set:
                continue
            if row[b] in j.member_set:
                return Verdict(
                    holds=False,
                    witness=(a, b),
                    witness_text=(
                        f"a={r.labels[a]} b={r.labels[b]} ab={r.labels[row[b]]}"
                        f" and no power of b enters {j.label_set()}"
                    ),
                )
    return Verdict(holds=True)


def violates_primary_ideal(j: Ideal, a: int, b: int) -> bool:
    return (
        a not in j.member_set
        and b not in radical(j).member_set
        and j.ring.mul[a][b] in j.member_set
    )


# ------------------------------------------------------------- submodules


def is_prime_submodule(n: Submodule) -> Verdict:
    """a*x in N implies x in N or a in (N : M)."""
    _require_proper(n)
    mod = n.module
    colon = colon_into_ring(n, whole_submodule(mod)).member_set
    for a in range(mod.ring.size):
        if a in colon:
            continue
        row = mod.act[a]
        for x in range(mod.size):
            if x in n.member_set:
                continue
            if row[x] in n.member_set:
                return Verdict(
                    holds=False,
                    witness=(a, x),
                    witness_text=(
                        f"a={mod.ring.labels[a]} x={mod.labels[x]} ax={mod.labels[row[x]]}"
                    ),
                )
    return Verdict(holds=True)


def violates_prime_submodule(n: Submodule, a: int, x: int) -> bool:
    mod = n.module
    colon = colon_into_ring(n, whole_submodule(mod)).member_set
    return (
        a not in colon and x not in n.member_set and mod.act[a][x] in n.member_set
    )


def is_weakly_prime_submodule_af(n: Submodule) -> Verdict:
    """0 != a*x in N implies x in N or a in (N : M)."""
    _require_proper(n)
    mod = n.module
    colon = colon_into_ring(n, whole_submodule(mod)).member_set
    for a in range(mod.ring.size):
        if a in colon:
            continue
        row = mod.act[a]
        for x in range(mod.size):
            if x in n.member_set:
                continue
            ax = row[x]
            if ax != mod.zero and ax in n.member_set:
                return Verdict(
                    holds=False,
                    variant="af",
                    witness=(a, x),
                    witness_text=(
                        f"a={mod.ring.labels[a]} x={mod.labels[x]} ax={mod.labels[ax]}"
                    ),
                )
    return Verdict(holds=True, variant="af")


def violates_weakly_prime_submodule_af(n: Submodule, a: int, x: int) -> bool:
    mod = n.module
    colon = colon_into_ring(n, whole_submodule(mod)).member_set
    ax = mod.act[a][x]
    return (
        a not in colon
        and x not in n.member_set
        and ax in n.member_set
        and ax != mod.zero
    )


def is_primary_submodule(n: Submodule) -> Verdict:
    """a*x in N implies x in N or a in radical((N : M))."""
    _require_proper(n)
    mod = n.module
    rad = radical(colon_into_ring(n, whole_submodule(mod))).member_set
    for a in range(mod.ring.size):
        if a in rad:
            continue
        row = mod.act[a]
        for x in range(mod.size):
            if x in n.member_set:
                continue
            if row[x] in n.member_set:
                return Verdict(
                    holds=False,
                    witness=(a, x),
                    witness_text=(
                        f"a={mod.ring.labels[a]} x={mod.labels[x]} ax={mod.labels[row[x]]}"
                        " and no power of a multiplies M into N"
                    ),
                )
    return Verdict(holds=True)


def violates_primary_submodule(n: Submodule, a: int, x: int) -> bool:
    mod = n.module
    rad = radical(colon_into_ring(n, whole_submodule(mod))).member_set
    return a not in rad and x not in n.member_set and mod.act[a][x] in n.member_set


def is_weakly_prime_submodule_azizi(
    n: Submodule, submodules: list[Submodule] | None = None
) -> Verdict:
    """a*b*T in N implies a*T in N or b*T in N, over every submodule T.

    T ranges over the full submodule lattice in enumeration order; pass a
    precomputed list to avoid re-enumerating.
    """
    _require_proper(n)
    mod = n.module
    subs = enumerate_submodules(mod) if submodules is None else submodules
    rsize = mod.ring.size
    # in_n[c][t]: does scalar c send submodule t into N
    in_n = [
        [all(mod.act[c][x] in n.member_set for x in t.members) for t in subs]
        for c in range(rsize)
    ]
    mul = mod.ring.mul
    for a in range(rsize):
        row_a = in_n[a]
        for b in range(rsize):
            row_ab = in_n[mul[a][b]]
            row_b = in_n[b]
            for t in range(len(subs)):
                if row_ab[t] and not row_a[t] and not row_b[t]:
                    return Verdict(
                        holds=False,
                        variant="azizi",
                        witness=(a, b, t),
                        witness_text=(
                            f"a={mod.ring.labels[a]} b={mod.ring.labels[b]}"
                            f" T={subs[t].label_set()}"
                        ),
                    )
    return Verdict(holds=True, variant="azizi")


def violates_weakly_prime_submodule_azizi(
    n: Submodule, a: int, b: int, t: Submodule
) -> bool:
    mod = n.module
    ab = mod.ring.mul[a][b]

    def sends(c: int) -> bool:
        return all(mod.act[c][x] in n.member_set for x in t.members)

    return sends(ab) and not sends(a) and not sends(b)


def is_weakly_prime_module(module: TableModule) -> Verdict:
    """Every nonzero submodule has a prime annihilator."""
    if module.size == 1:
        raise ImproperError("the zero module has no nonzero submodules")
    for s_index, s in enumerate(enumerate_submodules(module)):
        if s.is_zero:
            continue
        ann = annihilator(s)
        # s nonzero forces ann proper, so the primality test is legal
        sub_verdict = is_prime_ideal(ann)
        if not sub_verdict.holds:
            a, b = sub_verdict.witness
            return Verdict(
                holds=False,
                variant="behboodi",
                witness=(s_index, a, b),
                witness_text=(
                    f"S={s.label_set()} has non-prime annihilator {ann.label_set()}:"
                    f" {sub_verdict.witness_text}"
                ),
            )
    return Verdict(holds=True, variant="behboodi")


def is_weakly_prime_submodule_behboodi(n: Submodule) -> Verdict:
    """N is weakly prime when M/N is a weakly prime module."""
    _require_proper(n)
    quo, _ = quotient_module(n.module, n)
    inner = is_weakly_prime_module(quo)
    if inner.holds:
        return Verdict(holds=True, variant="behboodi")
    return Verdict(
        holds=False,
        variant="behboodi",
        witness=inner.witness,
        witness_text=f"in M/N: {inner.witness_text}",
    )


def is_irreducible_submodule(
    n: Submodule, submodules: list[Submodule] | None = None
) -> Verdict:
    """No two strictly larger submodules intersect exactly in N."""
    _require_proper(n)
    mod = n.module
    subs = enumerate_submodules(mod) if submodules is None else submodules
    candidates = [
        (i, s) for i, s in enumerate(subs)
        if s.members != n.members and n.member_set <= s.member_set
    ]
    for pos_k in range(len(candidates)):
        i, k = candidates[pos_k]
        for pos_l in range(pos_k + 1, len(candidates)):
            j, l = candidates[pos_l]
            if k.member_set & l.member_set == n.member_set:
                return Verdict(
                    holds=False,
                    witness=(i, j),
                    witness_text=f"K={k.label_set()} L={l.label_set()}",
                )
    return Verdict(holds=True)


def violates_irreducible_submodule(n: Submodule, k: Submodule, l: Submodule) -> bool:
    return (
        k.members != n.members
        and l.members != n.members
        and submodule_intersection(k, l).members == n.members
    )


def weakly_prime_submodule(
    n: Submodule, variant: str, submodules: list[Submodule] | None = None
) -> Verdict:
    """Dispatch on the definitional variant tag."""
    if variant == "af":
        return is_weakly_prime_submodule_af(n)
    if variant == "azizi":
        return is_weakly_prime_submodule_azizi(n, submodules)
    if variant == "behboodi":
        return is_weakly_prime_submodule_behboodi(n)
    raise ValueError(f"unknown weakly-prime variant: {variant!r}")


def classify_ideal(j: Ideal) -> dict[str, Verdict]:
    """All ideal predicates at once."""
    return {
        "prime": is_prime_ideal(j),
        "weakly_prime": is_weakly_prime_ideal(j),
        "primary": is_primary_ideal(j),
    }


def classify_submodule(
    n: Submodule, submodules: list[Submodule] | None = None
) -> dict[str, Verdict]:
    """All submodule predicates at once (shared submodule list optional)."""
    subs = enumerate_submodules(n.module) if submodules is None else submodules
    return {
        "prime": is_prime_submodule(n),
        "weakly_prime_af": is_weakly_prime_submodule_af(n),
        "weakly_prime_azizi": is_weakly_prime_submodule_azizi(n, subs),
        "weakly_prime_behboodi": is_weakly_prime_submodule_behboodi(n),
        "primary": is_primary_submodule(n),
        "irreducible": is_irreducible_submodule(n, subs),
    }
