import random

import pytest

from dihedralcodes.codes import (
    FAMILY_2N_MINUS_2,
    FAMILY_2N_MINUS_3_MINUS,
    FAMILY_2N_MINUS_3_PLUS,
    CodeFamily,
    LinearCode,
    construct_code,
    generator_matrix_presentation,
    left_ideal_closure_ok,
    load_code,
)
from dihedralcodes.dihedral import DihedralAlgebra
from dihedralcodes.errors import (
    BadOrderError,
    BetaIsNthRootError,
    CapExceededError,
    EvenNError,
    NotCoprimeError,
    UnsupportedStyleError,
    ZeroElementError,
)
from dihedralcodes.gf import make_field
from dihedralcodes.linalg import MatrixGF
from dihedralcodes.wedderburn import code_from_ideal_spec, random_ideal_spec

GF13 = make_field(13, [0, 1])
GF25 = make_field(5, [2, 0, 1])


def code_13_2n2():
    return construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_2, beta=2))


# ---------------------------------------------------------------------------
# construction and gates


def test_construct_dimensions():
    assert code_13_2n2().k == 4
    plus = construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_3_PLUS, beta=2))
    assert plus.k == 3
    minus = construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_3_MINUS, beta=2))
    assert minus.k == 3


def test_generator_has_rank_four():
    # the 4x6 generator of the [6,4] code row-reduces to rank 4
    assert code_13_2n2().generator.rank() == 4


def test_bad_order_gate():
    with pytest.raises(BadOrderError) as exc:
        construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_2, beta=3))
    assert "ord(beta)=3 <= 2n=6" in str(exc.value)
    with pytest.raises(BadOrderError):
        construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_3_MINUS, beta=3))


def test_nth_root_gate_for_plus_family():
    with pytest.raises(BetaIsNthRootError):
        construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_3_PLUS, beta=3))


def test_zero_beta_rejected():
    for tag in (FAMILY_2N_MINUS_2, FAMILY_2N_MINUS_3_PLUS):
        with pytest.raises(ZeroElementError):
            construct_code(GF13, 3, CodeFamily(tag=tag, beta=0))


def test_twist_index_gate():
    gf19 = make_field(19, [0, 1])
    with pytest.raises(NotCoprimeError):
        construct_code(gf19, 9, CodeFamily(tag=FAMILY_2N_MINUS_2, s=3))  # gcd(3,9)=3
    with pytest.raises(NotCoprimeError):
        construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_2, s=2))  # s > (n-1)/2
    with pytest.raises(NotCoprimeError):
        construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_2, s=0))


def test_even_n_rejected():
    with pytest.raises(EvenNError):
        construct_code(GF13, 4, CodeFamily(tag=FAMILY_2N_MINUS_2))
    with pytest.raises(ValueError):
        construct_code(GF13, 1, CodeFamily(tag=FAMILY_2N_MINUS_2))


def test_unknown_family_rejected():
    with pytest.raises(ValueError):
        construct_code(GF13, 3, CodeFamily(tag="2n-1"))


def test_default_beta_is_canonical_generator():
    code = construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_2))
    assert code.provenance.beta == GF13.element(2)


# ---------------------------------------------------------------------------
# presentations


def test_paper_style_rows_frozen():
    gm = generator_matrix_presentation(code_13_2n2(), "paper")
    expected = MatrixGF.from_rows(
        GF13,
        [
            [1, 1, 1, 0, 0, 0],
            [0, 0, 0, 1, 1, 1],
            [1, 9, 3, 2, 6, 5],
            [2, 6, 5, 1, 9, 3],
        ],
    )
    assert gm == expected


def test_paper_style_minus_first_row():
    code = construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_3_MINUS, beta=2))
    gm = generator_matrix_presentation(code, "paper")
    assert gm.row(0) == [GF13.element(c) for c in [1, 1, 1, 12, 12, 12]]


def test_paper_style_plus_first_row():
    code = construct_code(GF13, 3, CodeFamily(tag=FAMILY_2N_MINUS_3_PLUS, beta=2))
    gm = generator_matrix_presentation(code, "paper")
    assert gm.row(0) == [GF13.one()] * 6


def test_styles_share_row_space():
    for tag in (FAMILY_2N_MINUS_2, FAMILY_2N_MINUS_3_MINUS, FAMILY_2N_MINUS_3_PLUS):
        code = construct_code(GF13, 3, CodeFamily(tag=tag, beta=2))
        paper = generator_matrix_presentation(code, "paper")
        rref = generator_matrix_presentation(code, "rref")
        assert paper.rows == code.k
        assert paper.vstack(rref).rank() == code.k


def test_paper_style_needs_provenance():
    hand = LinearCode(MatrixGF.identity(GF13, 6))
    with pytest.raises(UnsupportedStyleError):
        generator_matrix_presentation(hand, "paper")
    with pytest.raises(UnsupportedStyleError):
        generator_matrix_presentation(hand, "fancy")


# ---------------------------------------------------------------------------
# distance and MDS verdicts


def test_min_distance_trivial_codes():
    repetition = LinearCode(MatrixGF.from_rows(GF13, [[1] * 6]))
    assert repetition.min_distance("exhaustive") == 6
    assert repetition.min_distance("dual") == 6
    identity = LinearCode(MatrixGF.identity(GF13, 6))
    assert identity.min_distance("dual") == 1
    assert identity.min_distance("exhaustive", cap=13**6) == 1
    assert identity.is_mds()


def test_min_distance_construction():
    code = code_13_2n2()
    assert code.min_distance("exhaustive") == 3
    assert code.min_distance("dual") == 3
    assert code.is_mds()
    assert code.parameters() == (6, 4, 3)


def test_parity_check_columns_of_mds_code():
    # H of the [6,4,3] code: every pair of columns independent (d >= 3)
    from itertools import combinations

    H = code_13_2n2().generator.kernel_basis()
    assert H.rows == 2
    G = code_13_2n2().generator
    prod = G @ H.transpose()
    assert all(
        prod[i, j] == GF13.zero() for i in range(prod.rows) for j in range(prod.cols)
    )
    for pair in combinations(range(6), 2):
        assert H.columns_rank(pair) == 2


def test_cap_exceeded():
    code = code_13_2n2()
    with pytest.raises(CapExceededError):
        code.min_distance("exhaustive", cap=100)


def test_auto_method_selection():
    code = code_13_2n2()
    # under the default cap q^k - 1 = 28560 fits: auto = exhaustive
    assert code.min_distance("auto") == 3
    assert code.min_distance("auto", cap=100) == 3  # falls back to dual


def test_zero_code_distance_undefined():
    zero_code = LinearCode(MatrixGF.zeros(GF13, 1, 6))
    assert zero_code.k == 0
    with pytest.raises(ValueError):
        zero_code.min_distance()


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        code_13_2n2().min_distance("magic")


def test_methods_agree_on_random_ideal_codes():
    rng = random.Random(0)
    for ctx, n in ((GF13, 3), (GF25, 3)):
        for _ in range(25):
            spec = random_ideal_spec(ctx, n, rng)
            code = LinearCode(code_from_ideal_spec(ctx, n, spec))
            if ctx.q**code.k - 1 > 10**6:
                continue
            d_dual = code.min_distance("dual")
            d_exh = code.min_distance("exhaustive")
            assert d_dual == d_exh
            assert d_dual <= code.singleton_bound


def test_constructed_codes_are_left_ideals():
    for tag in (FAMILY_2N_MINUS_2, FAMILY_2N_MINUS_3_MINUS, FAMILY_2N_MINUS_3_PLUS):
        code = construct_code(GF13, 3, CodeFamily(tag=tag, beta=2))
        assert left_ideal_closure_ok(code)


def test_random_ideal_codes_are_left_ideals():
    rng = random.Random(1)
    alg = DihedralAlgebra(GF13, 3)
    for _ in range(10):
        spec = random_ideal_spec(GF13, 3, rng)
        code = LinearCode(code_from_ideal_spec(GF13, 3, spec))
        assert left_ideal_closure_ok(code, alg)


def test_json_roundtrip():
    code = code_13_2n2()
    doc = code.to_json()
    assert doc["family"] == FAMILY_2N_MINUS_2
    assert doc["beta"] == [2]
    loaded = load_code(doc)
    assert loaded.generator == code.generator
    assert loaded.parameters() == code.parameters()


def test_min_dependent_columns_matches_subset_oracle():
    # third route: brute-force over all column subsets via columns_rank
    from itertools import combinations

    from dihedralcodes.codes import _min_dependent_columns
    from dihedralcodes.gf import arith_tables

    rng = random.Random(5)
    tables = arith_tables(GF13)
    for _ in range(15):
        rows = rng.randrange(1, 4)
        cols = rng.randrange(rows + 1, 7)
        m = MatrixGF(
            GF13,
            [[GF13.random_element(rng) for _ in range(cols)] for _ in range(rows)],
        )
        int_cols = [[m[i, j].to_index() for i in range(rows)] for j in range(cols)]
        got = _min_dependent_columns(int_cols, tables.sub, tables.mul, tables.inv)
        expected = None
        for w in range(1, cols + 1):
            if any(m.columns_rank(c) < w for c in combinations(range(cols), w)):
                expected = w
                break
        assert got == expected


def test_gf25_example_codes():
    c1 = construct_code(GF25, 3, CodeFamily(tag=FAMILY_2N_MINUS_2))
    assert c1.parameters("exhaustive") == (6, 4, 3)
    c2 = construct_code(GF25, 3, CodeFamily(tag=FAMILY_2N_MINUS_3_PLUS))
    assert c2.parameters("exhaustive") == (6, 3, 4)
    assert c1.is_mds() and c2.is_mds()
