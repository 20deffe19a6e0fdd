import random

import pytest

from dihedralcodes.errors import (
    MixedContextsError,
    NoSuchRootError,
    NotMonicError,
    NotPrimeError,
    ReducibleError,
    ZeroElementError,
)
from dihedralcodes.gf import (
    arith_tables,
    element_order,
    make_field,
    parse_element,
    parse_field_spec,
    primitive_nth_root,
)

GF13 = make_field(13, [0, 1])
GF25 = make_field(5, [2, 0, 1])


# ---------------------------------------------------------------------------
# independent brute-force oracles (no reuse of library internals)


def brute_roots(coeffs, p):
    roots = []
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            roots.append(x)
    return roots


def _poly_mod(a, b, p):
    a = list(a)
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        c = (a[-1] * pow(b[-1], p - 2, p)) % p
        shift = len(a) - len(b)
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        while a and a[-1] == 0:
            a.pop()
    return a


def _all_monic(degree, p):
    def rec(d):
        if d == 0:
            yield []
            return
        for tail in rec(d - 1):
            for c in range(p):
                yield [c] + tail

    for lower in rec(degree):
        yield lower + [1]


def brute_irreducible(coeffs, p):
    """Trial division by every monic polynomial of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for divisor in _all_monic(d, p):
            if not _poly_mod(coeffs, divisor, p):
                return False
    return True


def _find_irreducible(p, degree, rng):
    while True:
        coeffs = [rng.randrange(p) for _ in range(degree)] + [1]
        if brute_irreducible(coeffs, p):
            return coeffs


# ---------------------------------------------------------------------------
# construction


def test_make_field_rejects_reducible_quadratic():
    with pytest.raises(ReducibleError) as exc:
        make_field(5, [1, 0, 1])  # x^2 + 1 = (x-2)(x+2) over GF(5)
    assert exc.value.root == 2


def test_make_field_accepts_irreducible_quadratic():
    assert GF25.q == 25
    assert GF25.m == 2


def test_make_field_prime_field():
    assert GF13.q == 13
    assert GF13.m == 1


def test_make_field_rejects_nonprime():
    with pytest.raises(NotPrimeError):
        make_field(12, [0, 1])


def test_make_field_rejects_nonmonic():
    with pytest.raises(NotMonicError):
        make_field(5, [1, 0, 2])
    with pytest.raises(NotMonicError):
        make_field(5, [1])


def test_quadratic_residue_rule_over_gf5():
    # x^2 + c factors over GF(5) exactly when -c is a square
    squares = {(x * x) % 5 for x in range(5)}
    for c in range(5):
        reducible = (-c) % 5 in squares
        if reducible:
            with pytest.raises(ReducibleError):
                make_field(5, [c, 0, 1])
        else:
            make_field(5, [c, 0, 1])


def test_irreducibility_matches_root_search_small_degrees():
    rng = random.Random(0)
    for p in (2, 3, 5, 13, 47):
        for m in (2, 3):
            if p <= 3:
                candidates = list(_all_monic(m, p))
            else:
                candidates = [
                    [rng.randrange(p) for _ in range(m)] + [1] for _ in range(40)
                ]
            for coeffs in candidates:
                has_root = bool(brute_roots(coeffs, p))
                if has_root:
                    with pytest.raises(ReducibleError):
                        make_field(p, coeffs)
                else:
                    # degree 2 and 3: no root means irreducible
                    make_field(p, coeffs)


def test_irreducibility_ladder_degree_four():
    # degree 4 exercises the gcd-ladder path; oracle is trial division
    for coeffs in _all_monic(4, 3):
        expected = brute_irreducible(coeffs, 3)
        if expected:
            ctx = make_field(3, coeffs)
            assert ctx.q == 81
        else:
            with pytest.raises(ReducibleError):
                make_field(3, coeffs)


# ---------------------------------------------------------------------------
# arithmetic


def test_extension_square_reduces():
    y = GF25.element([0, 1])
    assert y * y == GF25.element(3)  # y^2 = -2 = 3


def test_inverse_in_prime_field():
    assert GF13.element(3).inverse() == GF13.element(9)
    assert GF13.element(2) ** -1 == GF13.element(7)


def test_pow_signs():
    x = GF13.element(2)
    assert x**0 == GF13.one()
    assert x**-3 == (x**3).inverse()
    assert GF25.element([1, 1]) ** 24 == GF25.one()


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GF13.element(1) / GF13.zero()
    with pytest.raises(ZeroDivisionError):
        GF25.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        GF13.zero() ** -1


def test_mixed_contexts_rejected():
    with pytest.raises(MixedContextsError):
        GF13.element(1) + GF25.element(1)
    with pytest.raises(MixedContextsError):
        GF25.element(1) * GF13.element(1)


def test_int_coercion_in_arithmetic():
    assert GF13.element(5) + 10 == GF13.element(2)
    assert 3 * GF13.element(5) == GF13.element(2)
    assert GF13.element(1) / 2 == GF13.element(7)


def test_field_axioms_random():
    rng = random.Random(1)
    cubic = _find_irreducible(7, 3, rng)
    for ctx in (GF13, GF25, make_field(7, cubic)):
        one = ctx.one()
        for _ in range(30):
            x = ctx.random_nonzero(rng)
            assert x * x.inverse() == one
            assert x ** (ctx.q - 1) == one
            y = ctx.random_element(rng)
            z = ctx.random_element(rng)
            assert x * (y + z) == x * y + x * z


# ---------------------------------------------------------------------------
# orders and roots of unity


def test_element_order_examples():
    assert element_order(GF13.element(2)) == 12
    assert element_order(GF13.element(1)) == 1
    assert element_order(GF13.element(3)) == 3


def test_element_order_of_zero():
    with pytest.raises(ZeroElementError):
        element_order(GF13.zero())


def test_element_order_matches_iteration_oracle():
    rng = random.Random(2)
    for ctx in (GF13, GF25):
        for _ in range(20):
            x = ctx.random_nonzero(rng)
            t = 1
            acc = x
            while acc != ctx.one():
                acc = acc * x
                t += 1
            assert element_order(x) == t
            assert (ctx.q - 1) % t == 0


def test_canonical_generator():
    assert GF13.generator() == GF13.element(2)
    assert GF25.generator() == GF25.element([1, 1])  # x+1, order 24


def test_extension_field_orders():
    assert element_order(GF25.element([1, 1])) == 24  # x+1
    assert element_order(GF25.element([2, 1])) == 3  # x+2 = (x+1)^8
    assert element_order(GF25.element([0, 1])) == 8  # x: x^2 = 3, ord(3) = 4


def test_primitive_nth_root_examples():
    assert primitive_nth_root(GF13, 3) == GF13.element(3)
    assert primitive_nth_root(GF13, 1) == GF13.one()
    with pytest.raises(NoSuchRootError):
        primitive_nth_root(GF13, 5)


def test_primitive_nth_root_has_exact_order():
    for ctx, n in ((GF13, 3), (GF13, 4), (GF13, 12), (GF25, 3), (GF25, 8), (GF25, 24)):
        xi = primitive_nth_root(ctx, n)
        assert xi**n == ctx.one()
        for k in range(1, n):
            assert xi**k != ctx.one()


# ---------------------------------------------------------------------------
# encoding


def test_element_text_forms():
    assert GF25.element([4, 3]).text() == "3x+4"
    assert GF25.element([0, 1]).text() == "x"
    assert GF25.element([2, 0]).text() == "2"
    assert GF25.zero().text() == "0"
    cubic_ctx = make_field(2, [1, 1, 0, 1])
    assert cubic_ctx.element([1, 1, 1]).text() == "x^2+x+1"


def test_parse_element_both_forms():
    assert parse_element(GF25, "3x+4") == GF25.element([4, 3])
    assert parse_element(GF25, "[4,3]") == GF25.element([4, 3])
    assert parse_element(GF25, "4 + 3x") == GF25.element([4, 3])
    assert parse_element(GF25, "x") == GF25.element([0, 1])
    assert parse_element(GF13, "7") == GF13.element(7)
    assert parse_element(GF25, "-x+1") == GF25.element([1, 4])


def test_parse_element_rejects_garbage():
    with pytest.raises(ValueError):
        parse_element(GF13, "x")  # degree 1 term in a prime field
    with pytest.raises(ValueError):
        parse_element(GF25, "3z+4")


def test_field_spec_roundtrip():
    assert GF25.spec() == "p=5;mod=[2,0,1]"
    assert parse_field_spec(GF25.spec()) == GF25
    assert parse_field_spec("p=13") == GF13
    with pytest.raises(ValueError):
        parse_field_spec("q=25")


def test_index_roundtrip():
    for ctx in (GF13, GF25):
        for i in range(ctx.q):
            assert ctx.from_index(i).to_index() == i


def test_arith_tables_match_element_ops():
    rng = random.Random(3)
    for ctx in (GF13, GF25):
        tables = arith_tables(ctx)
        for _ in range(50):
            a = ctx.random_element(rng)
            b = ctx.random_element(rng)
            ia, ib = a.to_index(), b.to_index()
            assert tables.add[ia][ib] == (a + b).to_index()
            assert tables.sub[ia][ib] == (a - b).to_index()
            assert tables.mul[ia][ib] == (a * b).to_index()
            if b:
                assert tables.inv[ib] == b.inverse().to_index()
        assert tables.add_np[2, 3] == tables.add[2][3]
        assert tables.mul_np[2, 3] == tables.mul[2][3]
