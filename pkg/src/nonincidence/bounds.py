"""Exact integer bounds on nonincident point/block sets in an STS(v).

Everything here is arbitrary-precision integer arithmetic; there is no
floating point anywhere, so results are identical across platforms and
exact at the orders where 24v+25 is a perfect square.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt


def _check_admissible(v: int) -> None:
    if v < 1 or v % 6 not in (1, 3):
        raise ValueError(f"order {v} is not a positive integer 1 or 3 mod 6")


def disjoint_block_bound_divmod(v: int, s: int) -> tuple[int, int]:
    """Floor and remainder of (v(v-1) + s^2 - s(2v-1)) / 6.

    The numerator is not always divisible by 6 (e.g. v=9, s=1) and goes
    negative for large s; Python floor division handles both exactly.
    """
    _check_admissible(v)
    if not 0 <= s <= v:
        raise ValueError(f"point-set size {s} outside 0..{v}")
    num = v * (v - 1) + s * s - s * (2 * v - 1)
    return divmod(num, 6)


def disjoint_block_bound(v: int, s: int) -> int:
    """Max number of blocks disjoint from any s-point set in an STS(v)."""
    return disjoint_block_bound_divmod(v, s)[0]


def nonincidence_upper_bound(v: int) -> int:
    """Largest s admitting s points and s mutually nonincident blocks.

    This is floor((2v+5 - sqrt(24v+25)) / 2), computed by integer square
    root and comparison-by-squaring only.
    """
    _check_admissible(v)
    disc = 24 * v + 25
    t = isqrt(disc)
    a = 2 * v + 5
    s = (a - t) // 2
    while s > 0 and (a - 2 * s) ** 2 < disc:
        s -= 1
    while a - 2 * (s + 1) >= 0 and (a - 2 * (s + 1)) ** 2 >= disc:
        s += 1
    return s


def subsystem_complement_count(v: int, w: int) -> int:
    """Blocks disjoint from the complement of a sub-STS(w) in an STS(v).

    Always equals w(w-1)/6, the block count of the subsystem itself;
    the identity is asserted since a failure would mean an arithmetic bug.
    """
    if not (v >= 2 * w + 1 or v == w):
        raise ValueError(f"no proper sub-STS({w}) fits in an STS({v})")
    got = disjoint_block_bound(v, v - w)
    expect = w * (w - 1) // 6
    if got != expect:
        raise AssertionError(
            f"complement count {got} != subsystem block count {expect}"
        )
    return got


# Family key: (u as a function of z, sign in t = 6u +/- 1).
# Families 1,2 have t = 6u+1 with u = 12z+1, 12z+5; families 3,4 have
# t = 6u-1 with u = 12z+4, 12z+8.
_FAMILIES = {
    1: (1, +1),
    2: (5, +1),
    3: (4, -1),
    4: (8, -1),
}


@dataclass(frozen=True)
class EqualityFamilyRecord:
    """An order v where the upper bound is attained, with its parameters.

    w = v - s is the order of the subsystem whose complement realizes the
    bound; t is the exact square root of 24v+25 and u relates to it by
    t = 6u+1 (families 1, 2) or t = 6u-1 (families 3, 4).
    """

    family: int
    z: int
    v: int
    s: int
    w: int
    t: int
    u: int

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "z": self.z,
            "v": self.v,
            "s": self.s,
            "w": self.w,
            "t": self.t,
            "u": self.u,
        }


def _record(family: int, z: int) -> EqualityFamilyRecord:
    base, sign = _FAMILIES[family]
    u = 12 * z + base
    t = 6 * u + sign
    v = (t * t - 25) // 24
    s = v - (t - 5) // 2
    rec = EqualityFamilyRecord(family=family, z=z, v=v, s=s, w=v - s, t=t, u=u)
    # Internal consistency; cheap enough to keep on.
    assert 24 * rec.v + 25 == t * t
    assert rec.v % 6 in (1, 3) and rec.w % 6 in (1, 3)
    assert rec.v >= 2 * rec.w + 1 or rec.v == rec.w
    return rec


def enumerate_equality_orders(z_max: int) -> list[EqualityFamilyRecord]:
    """All equality-family records for z = 0..z_max, sorted by v."""
    if z_max < 0:
        raise ValueError("z_max must be non-negative")
    out = [
        _record(fam, z) for z in range(z_max + 1) for fam in sorted(_FAMILIES)
    ]
    out.sort(key=lambda r: r.v)
    return out


def classify_equality_order(v: int) -> EqualityFamilyRecord | None:
    """The family record for v, or None when equality is impossible there."""
    if v < 1 or v % 6 not in (1, 3):
        return None
    disc = 24 * v + 25
    t = isqrt(disc)
    if t * t != disc:
        return None
    s = (2 * v + 5 - t) // 2
    w = v - s
    if s < 0 or w % 6 not in (1, 3):
        return None
    if not (v >= 2 * w + 1 or v == w):
        return None
    if t % 6 == 1:
        u = (t - 1) // 6
        if u % 12 == 1:
            family = 1
        elif u % 12 == 5:
            family = 2
        else:
            return None
    else:
        u = (t + 1) // 6
        if u % 12 == 4:
            family = 3
        elif u % 12 == 8:
            family = 4
        else:
            return None
    base, _ = _FAMILIES[family]
    return _record(family, (u - base) // 12)


@dataclass(frozen=True)
class CurveData:
    """Tabulated disjoint-block bound versus the diagonal for one order.

    rows are (s, bound, s) for s = 0..v.  When 24v+25 is a perfect
    square the two curves cross at the integer point (crossing, crossing);
    otherwise the crossing lies strictly inside crossing_bracket.
    """

    v: int
    rows: tuple[tuple[int, int, int], ...]
    crossing: int | None
    crossing_bracket: tuple[int, int]

    def to_csv(self) -> str:
        lines = ["s,bound,diagonal"]
        lines.extend(f"{s},{b},{diag}" for s, b, diag in self.rows)
        return "\n".join(lines) + "\n"


def intersection_curve_data(v: int) -> CurveData:
    _check_admissible(v)
    rows = tuple(
        (s, disjoint_block_bound(v, s), s) for s in range(v + 1)
    )
    s_max = nonincidence_upper_bound(v)
    disc = 24 * v + 25
    exact = isqrt(disc) ** 2 == disc
    return CurveData(
        v=v,
        rows=rows,
        crossing=s_max if exact else None,
        crossing_bracket=(s_max, s_max + 1),
    )
