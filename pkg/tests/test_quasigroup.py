"""k-ary quasigroups built from permutation polynomials."""

import json
import random

import pytest

from unitpoly import (
    BudgetExceeded,
    CarrierError,
    Context,
    Mode,
    NotAPermutation,
    QuasigroupSpec,
    ReducedPoly,
    random_permutational_poly,
    reduce,
)
from unitpoly import induces_permutation_on_units
from unitpoly.oracle import oracle_is_latin_square


def _spec(n, mode, coeff_rows, h_rows=None):
    ctx = Context(n)
    p = [reduce(row, ctx) for row in coeff_rows]
    h = [reduce(row, ctx) for row in h_rows] if h_rows is not None else None
    return QuasigroupSpec(ctx, mode, p, h)


def test_random_poly_is_canonical_and_permutes(rng):
    ctx = Context(6)
    for _ in range(40):
        rp = random_permutational_poly(ctx, rng)
        assert isinstance(rp, ReducedPoly)
        assert induces_permutation_on_units(rp.coeffs)


def test_random_poly_is_seeded():
    ctx = Context(8)
    a = [random_permutational_poly(ctx, random.Random(3)) for _ in range(5)]
    b = [random_permutational_poly(ctx, random.Random(3)) for _ in range(5)]
    assert a == b


# -- the three composition modes ----------------------------------------------


def test_unit_product_hand_example():
    # f(a, b) = a * (b + 2) on the odd residues mod 16
    spec = _spec(4, Mode.UNIT_PRODUCT, [(0, 1), (2, 1)])
    assert spec.apply((3, 5)) == 3 * 7 % 16
    assert spec.adjoint(1, (5, 5)) == 3
    assert spec.adjoint(2, (3, 7)) == 11
    assert list(spec.carrier()) == list(range(1, 16, 2))


def test_ring_additive_hand_example():
    # both pieces are the identity, so the operation is plain addition
    spec = _spec(4, Mode.RING_ADDITIVE, [(0, 1), (0, 1)])
    assert spec.apply((2, 3)) == 5
    assert spec.apply((14, 15)) == 13
    assert spec.adjoint(2, (4, 9)) == 5
    assert list(spec.carrier()) == list(range(16))


def test_ring_glued_hand_example():
    # odd inputs go through x, even ones through the shifted copy of 2+x
    spec = _spec(4, Mode.RING_GLUED, [(0, 1)], [(2, 1)])
    assert spec.apply((3,)) == 3
    assert spec.apply((2,)) == 4
    assert spec.adjoint(1, (4,)) == 2
    assert spec.adjoint(1, (3,)) == 3


@pytest.mark.parametrize("mode", list(Mode))
@pytest.mark.parametrize("k", (1, 2, 3))
def test_adjoint_round_trip(mode, k, rng):
    ctx = Context(6)
    spec = QuasigroupSpec.random(ctx, k, mode, rng)
    carrier = list(spec.carrier())
    for _ in range(50):
        args = [rng.choice(carrier) for _ in range(k)]
        value = spec.apply(args)
        for i in range(1, k + 1):
            probe = list(args)
            probe[i - 1] = value
            assert spec.adjoint(i, probe) == args[i - 1]


@pytest.mark.parametrize("mode", list(Mode))
def test_latin_check_passes(mode, rng):
    ctx = Context(4)
    spec = QuasigroupSpec.random(ctx, 2, mode, rng)
    assert spec.latin_check()


def test_latin_check_budget():
    ctx = Context(4)
    spec = QuasigroupSpec.random(ctx, 3, Mode.RING_ADDITIVE, random.Random(0))
    with pytest.raises(BudgetExceeded):
        spec.latin_check(budget=100)


def test_binary_case_really_is_a_latin_square(rng):
    ctx = Context(3)
    spec = QuasigroupSpec.random(ctx, 2, Mode.RING_ADDITIVE, rng)
    carrier = list(spec.carrier())
    table = [[spec.apply((a, b)) for b in carrier] for a in carrier]
    assert oracle_is_latin_square(table)


def test_huge_modulus_round_trip(rng):
    ctx = Context(256)
    spec = QuasigroupSpec.random(ctx, 3, Mode.UNIT_PRODUCT, rng)
    args = [rng.randrange(1 << 256) | 1 for _ in range(3)]
    value = spec.apply(args)
    probe = [args[0], value, args[2]]
    assert spec.adjoint(2, probe) == args[1]


# -- validation ----------------------------------------------------------------


def test_polys_must_permute():
    ctx = Context(4)
    with pytest.raises(NotAPermutation):
        QuasigroupSpec(ctx, Mode.UNIT_PRODUCT, [ReducedPoly((4, 4, 1), 4)])


def test_poly_modulus_must_match_context():
    ctx = Context(4)
    with pytest.raises(ValueError):
        QuasigroupSpec(ctx, Mode.UNIT_PRODUCT, [ReducedPoly((2, 1), 5)])


def test_h_polys_only_in_glued_mode():
    ctx = Context(4)
    ident = reduce((0, 1), ctx)
    with pytest.raises(ValueError):
        QuasigroupSpec(ctx, Mode.UNIT_PRODUCT, [ident], [ident])
    with pytest.raises(ValueError):
        QuasigroupSpec(ctx, Mode.RING_GLUED, [ident])
    with pytest.raises(ValueError):
        QuasigroupSpec(ctx, Mode.RING_GLUED, [ident, ident], [ident])


def test_argument_validation():
    spec = _spec(4, Mode.UNIT_PRODUCT, [(0, 1), (2, 1)])
    with pytest.raises(ValueError):
        spec.apply((3,))
    with pytest.raises(CarrierError):
        spec.apply((2, 3))
    with pytest.raises(CarrierError):
        spec.apply((3, 17))
    with pytest.raises(ValueError):
        spec.adjoint(0, (3, 5))
    with pytest.raises(ValueError):
        spec.adjoint(3, (3, 5))


def test_ring_modes_accept_even_arguments():
    spec = _spec(4, Mode.RING_ADDITIVE, [(0, 1), (0, 1)])
    assert spec.apply((0, 0)) == 0
    with pytest.raises(CarrierError):
        spec.apply((0, 16))


# -- serialization -------------------------------------------------------------


def test_json_round_trip(rng):
    ctx = Context(6)
    for mode in Mode:
        spec = QuasigroupSpec.random(ctx, 2, mode, rng)
        clone = QuasigroupSpec.from_json(spec.to_json())
        assert clone.to_json() == spec.to_json()
        args = (3, 5)
        assert clone.apply(args) == spec.apply(args)


def test_document_shape():
    spec = _spec(4, Mode.RING_GLUED, [(0, 1)], [(2, 1)])
    data = spec.to_dict()
    assert data == {
        "n": 4,
        "k": 1,
        "mode": "RING_GLUED",
        "p": [["0", "1", "0"]],
        "h": [["2", "1", "0"]],
    }
    assert json.loads(spec.to_json()) == data


def test_mode_names_parse_case_insensitively():
    spec = _spec(4, Mode.UNIT_PRODUCT, [(0, 1)])
    data = spec.to_dict()
    data["mode"] = "unit_product"
    clone = QuasigroupSpec.from_dict(data)
    assert clone.mode is Mode.UNIT_PRODUCT


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("n"),
        lambda d: d.pop("mode"),
        lambda d: d.update(mode="DIAGONAL"),
        lambda d: d.update(k=3),
        lambda d: d.update(p=[["4", "4", "1"]]),
    ],
)
def test_malformed_documents_rejected(mutate):
    spec = _spec(4, Mode.UNIT_PRODUCT, [(0, 1)])
    data = spec.to_dict()
    mutate(data)
    with pytest.raises((ValueError, NotAPermutation)):
        QuasigroupSpec.from_dict(data)


def test_from_json_rejects_bad_text():
    with pytest.raises(ValueError):
        QuasigroupSpec.from_json("not json at all")


def test_random_spec_is_deterministic():
    ctx = Context(32)
    a = QuasigroupSpec.random(ctx, 2, Mode.RING_GLUED, random.Random(9))
    b = QuasigroupSpec.random(ctx, 2, Mode.RING_GLUED, random.Random(9))
    assert a.to_json() == b.to_json()
