"""MDS code constructions in F_q D_2n (n odd) and exact verification.

Three families, each a left ideal realized through its idempotent
generators (s is the twist index, beta the twist scalar):

  "2n-2"        sum of R e_j over j not in {s, n-s}, plus R(e_s + beta b e_(n-s));
                dimension 2n-2, distance 3; needs ord(beta) > 2n.
  "2n-3-minus"  drops R e_0 and adds R((1-b)/2 e_0); dimension 2n-3,
                distance 4; needs ord(beta) > 2n.
  "2n-3-plus"   same with (1+b)/2 e_0; dimension 2n-3, distance 4; needs
                beta != 0 and beta^n != 1 (2n <= q-1 holds automatically
                whenever n | q-1 and q is odd).

Minimum distance is computed two independent ways: exhaustive codeword
enumeration (vectorized over integer lookup tables) and the parity-check
route (least number of linearly dependent columns of a kernel basis,
found by a depth-first search over column subsets in pure exact
arithmetic).  Both are exact; the pair serves as a cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dihedral import DihedralAlgebra, left_ideal_basis, phi_inv
from .errors import (
    BadOrderError,
    BetaIsNthRootError,
    CapExceededError,
    EvenNError,
    NotCoprimeError,
    UnsupportedStyleError,
    ZeroElementError,
)
from .gf import FieldCtx, FieldElement, arith_tables, element_order
from .idempotents import cyclic_idempotent
from .linalg import MatrixGF

FAMILY_2N_MINUS_2 = "2n-2"
FAMILY_2N_MINUS_3_MINUS = "2n-3-minus"
FAMILY_2N_MINUS_3_PLUS = "2n-3-plus"
FAMILIES = (FAMILY_2N_MINUS_2, FAMILY_2N_MINUS_3_MINUS, FAMILY_2N_MINUS_3_PLUS)

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class CodeFamily:
    """Which construction to run: family tag, twist index s, twist scalar beta.

    beta=None selects the canonical primitive element of F_q (order q-1).
    """

    tag: str
    s: int = 1
    beta: object = None


@dataclass(frozen=True)
class Provenance:
    ctx: FieldCtx
    n: int
    tag: str
    s: int
    beta: FieldElement


class LinearCode:
    """A linear code of length 2n given by an RREF generator matrix."""

    def __init__(self, generator: MatrixGF, provenance: Provenance | None = None):
        reduced, rank, _ = generator.rref()
        self.generator = reduced.nonzero_rows()
        self.k = rank
        self.length = generator.cols
        self.provenance = provenance
        self._distance: dict[str, int] = {}

    @property
    def singleton_bound(self) -> int:
        return self.length - self.k + 1

    def min_distance(self, method: str = "auto", cap: int = DEFAULT_CAP) -> int:
        """Exact minimum weight of a nonzero codeword.

        method "exhaustive" enumerates all q^k - 1 codewords (requires
        q^k - 1 <= cap); "dual" searches for the least number of linearly
        dependent parity-check columns; "auto" picks exhaustive when it
        fits under the cap.
        """
        if self.k == 0:
            raise ValueError("minimum distance of the zero code is undefined")
        if method == "auto":
            method = (
                "exhaustive" if self.ctx.q**self.k - 1 <= cap else "dual"
            )
        if method not in ("exhaustive", "dual"):
            raise ValueError(f"unknown distance method {method!r}")
        if method not in self._distance:
            if method == "exhaustive":
                self._distance[method] = _exhaustive_distance(self.generator, cap)
            else:
                self._distance[method] = _dual_distance(self.generator)
        return self._distance[method]

    def is_mds(self, method: str = "auto", cap: int = DEFAULT_CAP) -> bool:
        return self.min_distance(method, cap) == self.singleton_bound

    @property
    def ctx(self) -> FieldCtx:
        return self.generator.ctx

    def contains(self, vector) -> bool:
        return self.generator.row_space_contains(vector)

    def parameters(self, method: str = "auto", cap: int = DEFAULT_CAP):
        return (self.length, self.k, self.min_distance(method, cap))

    def to_json(self) -> dict:
        doc = {
            "field": self.ctx.spec(),
            "length": self.length,
            "k": self.k,
            "generator": self.generator.to_json(),
        }
        if self.provenance is not None:
            doc["n"] = self.provenance.n
            doc["family"] = self.provenance.tag
            doc["s"] = self.provenance.s
            doc["beta"] = self.provenance.beta.to_list()
        return doc

    @classmethod
    def from_generator_rows(cls, ctx: FieldCtx, rows) -> "LinearCode":
        return cls(MatrixGF.from_rows(ctx, rows))

    def __repr__(self):
        return f"LinearCode([{self.length},{self.k}] over GF({self.ctx.q}))"


def load_code(doc: dict) -> LinearCode:
    """Rebuild a code from its JSON document (provenance not required)."""
    return LinearCode(MatrixGF.from_json(doc["generator"]))


# ---------------------------------------------------------------------------
# construction


def _resolve_beta(ctx: FieldCtx, beta) -> FieldElement:
    if beta is None:
        return ctx.generator()
    beta = ctx.element(beta)
    if not beta:
        raise ZeroElementError("beta must be a nonzero field element")
    return beta


def construct_code(ctx: FieldCtx, n: int, family: CodeFamily) -> LinearCode:
    """Build one of the three ideal families as a LinearCode of length 2n."""
    if n % 2 == 0:
        raise EvenNError(f"code constructions require odd n, got n={n}")
    if n < 3:
        raise ValueError(f"code constructions require n >= 3, got n={n}")
    if family.tag not in FAMILIES:
        raise ValueError(f"unknown family tag {family.tag!r}")
    algebra = DihedralAlgebra(ctx, n)
    s = family.s
    if not isinstance(s, int) or not 1 <= s <= (n - 1) // 2 or math.gcd(s, n) != 1:
        raise NotCoprimeError(
            f"s={s} must satisfy 1 <= s <= (n-1)/2={(n - 1) // 2} and gcd(s, n) = 1"
        )
    e = [cyclic_idempotent(ctx, n, i) for i in range(n)]
    beta = _resolve_beta(ctx, family.beta)
    if family.tag in (FAMILY_2N_MINUS_2, FAMILY_2N_MINUS_3_MINUS):
        ord_beta = element_order(beta)
        if ord_beta <= 2 * n:
            raise BadOrderError(f"ord(beta)={ord_beta} <= 2n={2 * n}")
    else:
        if beta**n == ctx.one():
            raise BetaIsNthRootError(
                f"beta={beta.text()} satisfies beta^{n} = 1; need beta^n != 1"
            )
    b = algebra.b()
    one = algebra.one()
    inv2 = ctx.element(2).inverse()
    mixed = e[s] + (b * e[n - s]).scale(beta)
    if family.tag == FAMILY_2N_MINUS_2:
        gens = [e[j] for j in range(n) if j not in (s, n - s)] + [mixed]
    else:
        sign = one - b if family.tag == FAMILY_2N_MINUS_3_MINUS else one + b
        gens = [e[j] for j in range(1, n) if j not in (s, n - s)]
        gens.append((sign * e[0]).scale(inv2))
        gens.append(mixed)
    generator = left_ideal_basis(gens)
    prov = Provenance(ctx=ctx, n=n, tag=family.tag, s=s, beta=beta)
    return LinearCode(generator, provenance=prov)


def generator_matrix_presentation(code: LinearCode, style: str = "rref") -> MatrixGF:
    """Generator matrix in the requested style.

    "rref" is the canonical reduced form.  "paper" lays out one row per
    ideal generator orbit, scaled so rows read (1, xi^-j, ..., | ...):
    the constant row(s) first, then the twisted pair, then the remaining
    idempotent rows in ascending index order.  Only available for codes
    built by construct_code.
    """
    if style == "rref":
        return code.generator
    if style != "paper":
        raise UnsupportedStyleError(f"unknown style {style!r}")
    prov = code.provenance
    if prov is None:
        raise UnsupportedStyleError(
            "structured presentation requires a code built by construct_code"
        )
    ctx, n, s, beta = prov.ctx, prov.n, prov.s, prov.beta
    algebra = DihedralAlgebra(ctx, n)
    e = [cyclic_idempotent(ctx, n, i) for i in range(n)]
    b = algebra.b()
    one = algebra.one()
    n_scalar = ctx.element(n)
    mixed1 = (e[s] + (b * e[n - s]).scale(beta)).scale(n_scalar)
    mixed2 = ((b * e[s]) + e[n - s].scale(beta)).scale(n_scalar)
    rows: list[list[FieldElement]] = []
    if prov.tag == FAMILY_2N_MINUS_2:
        rows.append(e[0].scale(n_scalar).phi())
        rows.append((b * e[0]).scale(n_scalar).phi())
    else:
        sign = one - b if prov.tag == FAMILY_2N_MINUS_3_MINUS else one + b
        rows.append(((sign * e[0]).scale(n_scalar)).phi())
    rows.append(mixed1.phi())
    rows.append(mixed2.phi())
    for j in range(1, n):
        if j in (0, s, n - s):
            continue
        rows.append(e[j].scale(n_scalar).phi())
        rows.append((b * e[j]).scale(n_scalar).phi())
    return MatrixGF(ctx, rows)


def left_ideal_closure_ok(code: LinearCode, algebra: DihedralAlgebra | None = None) -> bool:
    """Check g * row stays in the row space for every group monomial g."""
    if algebra is None:
        if code.provenance is None:
            raise ValueError("need an algebra context for a hand-supplied code")
        algebra = DihedralAlgebra(code.provenance.ctx, code.provenance.n)
    if code.length != 2 * algebra.n:
        raise ValueError("code length does not match the algebra")
    for i in range(code.generator.rows):
        u = phi_inv(algebra, code.generator.row(i))
        for g in algebra.monomials():
            if not code.contains((g * u).phi()):
                return False
    return True


# ---------------------------------------------------------------------------
# module-level wrappers matching the operation names


def min_distance(code: LinearCode, method: str = "auto", cap: int = DEFAULT_CAP) -> int:
    return code.min_distance(method, cap)


def is_mds(code: LinearCode, method: str = "auto", cap: int = DEFAULT_CAP) -> bool:
    return code.is_mds(method, cap)


# ---------------------------------------------------------------------------
# distance engines


def _exhaustive_distance(gen: MatrixGF, cap: int) -> int:
    ctx = gen.ctx
    q, k, ncols = ctx.q, gen.rows, gen.cols
    count = q**k - 1
    if count > cap:
        raise CapExceededError(f"q^k - 1 = {count} exceeds cap = {cap}")
    tables = arith_tables(ctx)
    add_np, mul_np = tables.add_np, tables.mul_np
    dtype = add_np.dtype
    words = np.zeros((1, ncols), dtype=dtype)
    for i in range(k):
        row = np.array([e.to_index() for e in gen.data[i]], dtype=dtype)
        multiples = mul_np[:, row]  # (q, ncols): every scalar multiple of the row
        words = add_np[words[:, None, :], multiples[None, :, :]].reshape(-1, ncols)
    weights = np.count_nonzero(words, axis=1)
    return int(weights[weights > 0].min())


def _dual_distance(gen: MatrixGF) -> int:
    H = gen.kernel_basis()
    if H.rows == 0:
        return 1
    tables = arith_tables(gen.ctx)
    cols = [
        [H.data[i][j].to_index() for i in range(H.rows)] for j in range(H.cols)
    ]
    return _min_dependent_columns(cols, tables.sub, tables.mul, tables.inv)


def _min_dependent_columns(cols, sub, mul, inv) -> int:
    """Least w such that some w of the given columns are linearly dependent.

    Iterative deepening over the subset size keeps the answer minimal; at
    each size the subsets are walked depth-first, carrying normalized pivot
    columns so extending a subset costs one column reduction.
    """
    ncols = len(cols)
    h = len(cols[0])
    if any(not any(c) for c in cols):
        return 1
    for w in range(2, h + 1):
        if _has_dependent_subset(cols, w, sub, mul, inv):
            return w
    return h + 1  # any h+1 vectors in F_q^h are dependent


def _has_dependent_subset(cols, w, sub, mul, inv) -> bool:
    ncols = len(cols)
    h = len(cols[0])
    pivots: list[tuple[int, list[int]]] = []

    def dfs(start: int, depth: int) -> bool:
        remaining = w - depth
        for i in range(start, ncols - remaining + 1):
            v = list(cols[i])
            for lead, pvec in pivots:
                f = v[lead]
                if f:
                    mf = mul[f]
                    v = [sub[a][mf[b]] for a, b in zip(v, pvec)]
            lead = next((t for t in range(h) if v[t]), None)
            if lead is None:
                # smaller subsets were exhausted at earlier sizes
                return True
            if depth + 1 < w:
                mi = mul[inv[v[lead]]]
                pivots.append((lead, [mi[c] for c in v]))
                if dfs(i + 1, depth + 1):
                    return True
                pivots.pop()
        return False

    return dfs(0, 0)
