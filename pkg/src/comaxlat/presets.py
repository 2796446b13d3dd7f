"""Built-in example lattices.

Five small multiplicative lattices that exercise every corner of the
classification: L1 (prime-power factorizations exist, primary ones do
not), L2 (primary but not prime-power), L3 (no comaximal prime-radical
factorization at all), L4 (prime-radical only), and E16 (a
two-dimensional domain whose product is the meet).

L1 to L4 share the order 0 < a < b,c < d < 1; E16 is ordered by
a <= b <= c, b <= d with 0 below and 1 on top.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .core import FiniteMultLattice, LatticeSpec, mul_key, validate_lattice

__all__ = ["PRESET_NAMES", "preset_spec", "preset"]

_DIAMOND_ORDER = (
    ("0", "a"),
    ("a", "b"),
    ("a", "c"),
    ("b", "d"),
    ("c", "d"),
    ("d", "1"),
)


def _table(**entries: str) -> dict[tuple[str, str], str]:
    return {mul_key(k[0], k[1]): v for k, v in entries.items()}


_SPECS = {
    "L1": LatticeSpec(
        name="L1",
        elements=("0", "a", "b", "c", "d", "1"),
        order_pairs=_DIAMOND_ORDER,
        mul_entries=_table(
            aa="a", ab="a", ac="a", ad="a", bc="a", cc="a", cd="a",
            bb="b", bd="b", dd="b",
        ),
    ),
    "L2": LatticeSpec(
        name="L2",
        elements=("0", "a", "b", "c", "d", "1"),
        order_pairs=_DIAMOND_ORDER,
        mul_entries={
            mul_key(x, y): "a" for x, y in combinations_with_replacement("abcd", 2)
        },
    ),
    "L3": LatticeSpec(
        name="L3",
        elements=("0", "a", "b", "c", "d", "1"),
        order_pairs=_DIAMOND_ORDER,
        mul_entries=_table(
            aa="a", ab="a", ac="a", ad="a", bc="a",
            bb="b", bd="b", cc="c", cd="c", dd="d",
        ),
    ),
    "L4": LatticeSpec(
        name="L4",
        elements=("0", "a", "b", "c", "d", "1"),
        order_pairs=_DIAMOND_ORDER,
        mul_entries=_table(
            aa="0", ab="0", bb="0",
            ac="a", ad="a", bc="a", bd="a",
            cc="c", cd="c", dd="c",
        ),
    ),
    # product = meet
    "E16": LatticeSpec(
        name="E16",
        elements=("0", "a", "b", "c", "d", "1"),
        order_pairs=(
            ("0", "a"),
            ("a", "b"),
            ("b", "c"),
            ("b", "d"),
            ("c", "1"),
            ("d", "1"),
        ),
        mul_entries=_table(
            aa="a", ab="a", ac="a", ad="a",
            bb="b", bc="b", bd="b",
            cc="c", cd="b", dd="d",
        ),
    ),
}

PRESET_NAMES = tuple(_SPECS)

_CACHE: dict[str, FiniteMultLattice] = {}


def preset_spec(name: str) -> LatticeSpec:
    """The spec of a built-in lattice; raises KeyError for unknown names."""
    return _SPECS[name]


def preset(name: str) -> FiniteMultLattice:
    """A validated built-in lattice (memoized)."""
    if name not in _CACHE:
        _CACHE[name] = validate_lattice(_SPECS[name])
    return _CACHE[name]
