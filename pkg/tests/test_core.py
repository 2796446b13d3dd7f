"""Core model: validation, order/monoid operations, element predicates."""

import pytest

from comaxlat.core import (
    InvalidSpec,
    LatticeSpec,
    ValidationError,
    mul_key,
    validate_lattice,
)
from comaxlat.presets import preset, preset_spec


def _labels(L, xs):
    return [L.label(x) for x in xs]


# -- validation ---------------------------------------------------------------


def test_l1_validates_with_expected_primes():
    L = preset("L1")
    assert _labels(L, L.spectrum()) == ["0", "c", "d"]


def test_two_element_spec_needs_no_products():
    spec = LatticeSpec(
        name="two",
        elements=("0", "1"),
        order_pairs=(("0", "1"),),
        mul_entries={},
    )
    L = validate_lattice(spec)
    assert L.n == 2
    assert L.mul2(L.bottom, L.bottom) == L.bottom
    assert L.mul2(L.top, L.top) == L.top


def test_mutated_l1_fails_associativity_or_distributivity():
    base = preset_spec("L1")
    entries = dict(base.mul_entries)
    entries[mul_key("b", "b")] = "a"
    bad = LatticeSpec(
        name="L1x",
        elements=base.elements,
        order_pairs=base.order_pairs,
        mul_entries=entries,
    )
    with pytest.raises(ValidationError) as exc:
        validate_lattice(bad)
    codes = exc.value.codes()
    assert codes & {"NotAssociative", "NotDistributive"}
    assert all(len(v.witness) == 3 for v in exc.value.violations)


def test_bottom_equals_top_rejected():
    spec = LatticeSpec(
        name="point",
        elements=("0",),
        order_pairs=(),
        mul_entries={},
        bottom="0",
        top="0",
    )
    with pytest.raises(ValidationError) as exc:
        validate_lattice(spec)
    assert exc.value.codes() == {"BottomEqualsTop"}


def test_missing_product_reported_per_pair():
    base = preset_spec("L1")
    entries = dict(base.mul_entries)
    del entries[mul_key("b", "c")]
    del entries[mul_key("c", "d")]
    bad = LatticeSpec("L1x", base.elements, base.order_pairs, entries)
    with pytest.raises(ValidationError) as exc:
        validate_lattice(bad)
    assert [str(v) for v in exc.value.violations] == [
        "MissingProduct b c",
        "MissingProduct c d",
    ]


def test_order_cycle_rejected():
    spec = LatticeSpec(
        name="cyc",
        elements=("0", "x", "y", "1"),
        order_pairs=(("0", "x"), ("x", "y"), ("y", "x"), ("y", "1")),
        mul_entries={mul_key("x", "x"): "x", mul_key("x", "y"): "x",
                     mul_key("y", "y"): "y"},
    )
    with pytest.raises(ValidationError) as exc:
        validate_lattice(spec)
    assert exc.value.codes() == {"NotAPartialOrder"}


def test_missing_bound_rejected():
    # crown: x and y have two incomparable minimal upper bounds, no join
    spec = LatticeSpec(
        name="crown",
        elements=("0", "x", "y", "z", "w", "1"),
        order_pairs=(("0", "x"), ("0", "y"), ("x", "z"), ("x", "w"),
                     ("y", "z"), ("y", "w"), ("z", "1"), ("w", "1")),
        mul_entries={},
    )
    with pytest.raises(ValidationError) as exc:
        validate_lattice(spec)
    assert exc.value.codes() == {"NotALattice"}


def test_designated_bottom_must_be_least():
    spec = LatticeSpec(
        name="offbot",
        elements=("0", "x", "1"),
        order_pairs=(("x", "0"), ("0", "1")),
        mul_entries={},
    )
    with pytest.raises(ValidationError) as exc:
        validate_lattice(spec)
    assert exc.value.codes() == {"NotALattice"}


def test_bad_specs_raise_invalid_spec():
    with pytest.raises(InvalidSpec):
        validate_lattice(
            LatticeSpec("dup", ("0", "0", "1"), (("0", "1"),), {})
        )
    with pytest.raises(InvalidSpec):
        validate_lattice(
            LatticeSpec("unknown", ("0", "1"), (("0", "q"),), {})
        )
    with pytest.raises(InvalidSpec):
        validate_lattice(
            LatticeSpec("nobot", ("x", "1"), (("x", "1"),), {}, bottom="0")
        )


def test_explicit_bound_products_are_checked():
    spec = LatticeSpec(
        name="badbot",
        elements=("0", "m", "1"),
        order_pairs=(("0", "m"), ("m", "1")),
        mul_entries={mul_key("m", "m"): "m", mul_key("0", "m"): "m"},
    )
    with pytest.raises(ValidationError) as exc:
        validate_lattice(spec)
    assert "BottomNotAbsorbing" in exc.value.codes()


# -- order and monoid operations ----------------------------------------------


def test_join_meet_golden_values():
    L1 = preset("L1")
    b, c = L1.index("b"), L1.index("c")
    assert L1.label(L1.join([b, c])) == "d"
    assert L1.label(L1.meet([b, c])) == "a"
    assert L1.join([]) == L1.bottom
    assert L1.meet([]) == L1.top
    E = preset("E16")
    assert E.label(E.meet([E.index("c"), E.index("d")])) == "b"


def test_mul_golden_values():
    L1 = preset("L1")
    c = L1.index("c")
    assert L1.label(L1.mul([c, c])) == "a"
    for x in L1.elements():
        assert L1.mul([L1.top, x]) == x
    L4 = preset("L4")
    assert L4.label(L4.mul([L4.index("b"), L4.index("c")])) == "a"
    assert L1.mul([]) == L1.top  # empty product is the identity


def test_mul_is_order_independent():
    L = preset("L3")
    xs = [L.index("b"), L.index("c"), L.index("d")]
    assert L.mul(xs) == L.mul(list(reversed(xs)))


def test_quotient_golden_values():
    L1 = preset("L1")
    a, b, c = (L1.index(x) for x in "abc")
    assert L1.label(L1.quotient(a, c)) == "d"
    for y in L1.elements():
        assert L1.quotient(y, L1.top) == y
    # frozen from a direct scan of {x : x*b <= a} (b*c = a puts c in the set)
    assert L1.label(L1.quotient(a, b)) == "c"


def test_radical_golden_values():
    L1, L4 = preset("L1"), preset("L4")
    assert L1.label(L1.radical(L1.index("a"))) == "c"
    assert L4.label(L4.radical(L4.index("a"))) == "b"
    for L in (L1, L4):
        for p in L.spectrum():
            assert L.radical(p) == p


def test_spectrum_and_min_primes():
    L3, L2 = preset("L3"), preset("L2")
    assert _labels(L3, L3.spectrum()) == ["0", "b", "c", "d"]
    assert _labels(L3, L3.min_primes(L3.index("a"))) == ["b", "c"]
    assert _labels(L2, L2.min_primes(L2.index("a"))) == ["d"]
    assert L2.min_primes(L2.top) == ()
    for L in (L2, L3):
        assert set(L.max_elements()) <= set(L.spectrum())


def test_dimension():
    assert preset("E16").dimension() == 2
    assert preset("L1").dimension() == 2
    two = validate_lattice(
        LatticeSpec("two", ("0", "1"), (("0", "1"),), {})
    )
    assert two.dimension() == 0


def test_element_profiles():
    L1, L2, L4 = preset("L1"), preset("L2"), preset("L4")
    pa = L1.element_profile(L1.index("a"))
    assert not pa.is_primary
    assert pa.is_prime_power
    assert pa.prime_power_witness == (L1.index("c"), 2)
    assert L2.element_profile(L2.index("b")).is_primary
    qa = L4.element_profile(L4.index("a"))
    assert not qa.is_prime_power and not qa.is_primary
    for L in (L1, L2, L4):
        for x in L.elements():
            assert L.element_profile(x).is_compact


def test_profile_flag_relations():
    for name in ("L1", "L2", "L3", "L4", "E16"):
        L = preset(name)
        for x in L.elements():
            p = L.element_profile(x)
            assert p.is_principal == (p.is_meet_principal and p.is_join_principal)
            if p.is_prime:
                assert p.is_primary and p.is_radical
            if p.is_maximal:
                assert p.is_prime
            if p.is_meet_principal:
                assert p.is_weak_meet_principal
            if p.is_join_principal:
                assert p.is_weak_join_principal


def test_lattice_profiles():
    assert not preset("L3").lattice_profile().is_treed
    assert preset("E16").lattice_profile().is_domain
    two = validate_lattice(LatticeSpec("two", ("0", "1"), (("0", "1"),), {}))
    assert two.lattice_profile().generated_by_principal


def test_bounds_are_always_principal():
    for name in ("L1", "L2", "L3", "L4", "E16"):
        L = preset(name)
        assert L.bottom in L.principal_elements()
        assert L.top in L.principal_elements()


def test_labels_and_spec_round_trip():
    L = preset("E16")
    assert L.index("c") == 3
    assert L.label(3) == "c"
    with pytest.raises(KeyError):
        L.index("zz")
    again = validate_lattice(L.to_spec())
    assert again.labels == L.labels
    assert all(
        again.mul2(x, y) == L.mul2(x, y)
        for x in L.elements()
        for y in L.elements()
    )


def test_power_chain():
    L1 = preset("L1")
    d = L1.index("d")
    chain = L1.power_chain(d)
    assert chain[0] == d
    assert _labels(L1, chain) == ["d", "b"]
    assert L1.power(d, 1) == d
    assert L1.label(L1.power(d, 2)) == "b"
    assert L1.power(d, 9) == chain[-1]
