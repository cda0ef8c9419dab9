"""Degree-zero Picard groups of covers, deck actions, and character pieces.

The Picard group is read off the Smith form of the total graph's Laplacian:
the cokernel of L has free rank 1 (connected graph) and its torsion is the
degree-zero part.  A deck transformation permutes vertices, hence acts on
divisors by a permutation matrix; conjugating through the Smith transform
expresses the action on the cokernel generators.  Character pieces of the
p-primary part A and of the mod-p quotient C are computed from projectors,
with the fixed-point sweep over C available as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product
from math import prod

from .arith import p_part, p_valuation
from .characters import Character
from .groupring import CyclicGroup, GroupRingElement, idempotent_mod
from .padic import PAdicInt, PrecisionExhausted
from .serre import SerreGraph
from .snf import integer_determinant, smith_normal_form
from .voltage import DerivedCover, DisconnectedCover, require_connected_cover

ENUMERATION_BUDGET = 10**6


def spanning_tree_count(g: SerreGraph) -> int:
    """Number of spanning trees, as a principal minor of the Laplacian."""
    if not g.is_connected():
        raise ValueError("spanning trees are only counted for connected graphs")
    n = g.num_vertices
    if n == 1:
        return 1
    lap = g.laplacian_matrix()
    minor = [row[: n - 1] for row in lap[: n - 1]]
    kappa = integer_determinant(minor)
    assert kappa > 0
    return kappa


def picard_factors(g: SerreGraph) -> tuple[int, ...]:
    """Invariant factors (> 1) of the degree-zero Picard group of a graph."""
    if not g.is_connected():
        raise ValueError("graph must be connected")
    dec = smith_normal_form(g.laplacian_matrix())
    zeros = [d for d in dec.diagonal if d == 0]
    assert len(zeros) == 1, "connected graph Laplacian has corank 1"
    return tuple(d for d in dec.diagonal if d > 1)


class PicardModule:
    """Torsion of coker(Laplacian) together with the deck action on it."""

    def __init__(self, cover: DerivedCover):
        require_connected_cover(cover)
        self.cover = cover
        total = cover.total
        n = total.num_vertices
        self.laplacian = total.laplacian_matrix()
        dec = smith_normal_form(self.laplacian)
        self.decomposition = dec
        zero_idx = [i for i, d in enumerate(dec.diagonal) if d == 0]
        if len(zero_idx) != 1:
            raise DisconnectedCover("Laplacian corank exceeds 1")
        self.full_diagonal = dec.diagonal
        self.torsion_indices = tuple(i for i, d in enumerate(dec.diagonal) if d > 1)
        self.factors = tuple(dec.diagonal[i] for i in self.torsion_indices)
        self.generators = tuple(dec.generator(i) for i in self.torsion_indices)
        self.order = prod(self.factors) if self.factors else 1

        # Transported action on coker(L): T = U * Pi * U^-1 per unit.
        # Coordinates with invariant factor 1 are zero classes, so only the
        # torsion block plus the free coordinate are ever needed.
        u = [list(r) for r in dec.left]
        uinv = [list(r) for r in dec.left_inverse]
        free = zero_idx[0]
        support = self.torsion_indices + (free,)
        self._support_indices = support
        self._support_factors = self.factors + (0,)
        self._support_actions: dict[int, list[list[int]]] = {}
        for tau in range(1, cover.p):
            perm = cover.deck_vertex_map(tau)
            # (Pi * Uinv)[w][j] = Uinv[perm^-1(w)][j]; gather rows by pullback.
            inv_positions = [0] * n
            for w, img in enumerate(perm):
                inv_positions[img] = w
            block = [
                [
                    sum(u[i][k] * uinv[inv_positions[k]][j] for k in range(n))
                    for j in support
                ]
                for i in support
            ]
            self._support_actions[tau] = block
        r = len(self.torsion_indices)
        for tau, block in self._support_actions.items():
            for j in range(r):
                assert block[r][j] == 0, "torsion class acquired a free component"

        self.actions: dict[int, tuple[tuple[int, ...], ...]] = {}
        for tau, block in self._support_actions.items():
            mat = tuple(
                tuple(block[i][j] % self.factors[i] for j in range(r)) for i in range(r)
            )
            self.actions[tau] = mat
        iden = tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))
        assert self.actions.get(1, iden) == iden, "identity deck element must act trivially"

    @property
    def p(self) -> int:
        return self.cover.p

    def rank(self) -> int:
        return len(self.factors)

    def act_matrix(self, tau: int) -> tuple[tuple[int, ...], ...]:
        return self.actions[tau % self.p]

    def apply_group_ring(self, elem: GroupRingElement) -> list[list[int]]:
        """Integer matrix of elem acting on the torsion generators."""
        r = self.rank()
        out = [[0] * r for _ in range(r)]
        for k, c in enumerate(elem.coeffs):
            if c == 0:
                continue
            mat = self.actions[elem.group.element(k)]
            for i in range(r):
                for j in range(r):
                    out[i][j] += c * mat[i][j]
        return out

    def annihilated_by(self, elem: GroupRingElement) -> bool:
        """Whether elem kills the whole cokernel of the Laplacian.

        Classes with invariant factor 1 are trivially killed, so the check
        runs on the torsion block plus the free coordinate: entries must
        vanish modulo the row's factor, exactly on the free row.
        """
        if elem.augmentation() != 0:
            return False
        size = len(self._support_indices)
        combined = [[0] * size for _ in range(size)]
        for k, c in enumerate(elem.coeffs):
            if c == 0:
                continue
            block = self._support_actions[elem.group.element(k)]
            for i in range(size):
                row = block[i]
                ci = combined[i]
                for j in range(size):
                    ci[j] += c * row[j]
        for i in range(size):
            d = self._support_factors[i]
            for j in range(size):
                v = combined[i][j]
                if d == 0:
                    if v != 0:
                        return False
                elif v % d != 0:
                    return False
        return True


def picard_module(cover: DerivedCover) -> PicardModule:
    return PicardModule(cover)


@dataclass(frozen=True)
class SylowPModule:
    """p-primary part of the Picard module: p-power factors plus the action."""

    p: int
    exponents: tuple[int, ...]
    actions: dict[int, tuple[tuple[int, ...], ...]]

    @property
    def exponent(self) -> int:
        return max(self.exponents) if self.exponents else 0

    @property
    def factors(self) -> tuple[int, ...]:
        return tuple(self.p**a for a in self.exponents)

    @property
    def order(self) -> int:
        return self.p ** sum(self.exponents)

    def rank(self) -> int:
        return len(self.exponents)


def sylow_p_module(pm: PicardModule, p: int) -> SylowPModule:
    """Restrict the Picard module to its p-power invariant factors."""
    keep = [i for i, d in enumerate(pm.factors) if d % p == 0]
    exponents = tuple(p_valuation(pm.factors[i], p) for i in keep)
    k = max(exponents) if exponents else 0
    modulus = p**k if k else 1
    actions: dict[int, tuple[tuple[int, ...], ...]] = {}
    for tau, mat in pm.actions.items():
        actions[tau] = tuple(
            tuple(mat[i][j] % modulus for j in keep) for i in keep
        )
    return SylowPModule(p=p, exponents=exponents, actions=actions)


def _projector_matrix(m: SylowPModule, chi: Character, modulus: int) -> list[list[int]]:
    """Integer lift of the idempotent's action on the module, mod modulus."""
    p = m.p
    r = m.rank()
    inv_order = pow(p - 1, -1, modulus)
    out = [[0] * r for _ in range(r)]
    for sigma in range(1, p):
        v = chi.value(sigma)
        v = v.value if isinstance(v, PAdicInt) else v
        mat = m.actions[pow(sigma, -1, p)]
        for i in range(r):
            for j in range(r):
                out[i][j] += v * mat[i][j]
    return [[x * inv_order % modulus for x in row] for row in out]


def eigenspace_order_A(m: SylowPModule, chi: Character) -> int:
    """Order of the chi-component of the p-primary part A.

    The idempotent's image inside A = Z^r / diag(p^a) is the lattice spanned
    by the projector columns together with the relations; its order is the
    quotient of #A by that lattice's index in Z^r.
    """
    if m.rank() == 0:
        return 1
    k = m.exponent
    if chi.precision is None:
        if k > 1:
            raise PrecisionExhausted("module exponent exceeds F_p character precision")
    elif chi.precision < k:
        raise PrecisionExhausted(
            f"character precision {chi.precision} below module exponent {k}"
        )
    modulus = m.p**k
    proj = _projector_matrix(m, chi, modulus)
    r = m.rank()
    # Image inside Z^r / diag(p^{a_i}): adjoin the relation columns.
    aug = [
        proj[i] + [m.factors[i] if i == j else 0 for j in range(r)] for i in range(r)
    ]
    dec = smith_normal_form(aug)
    index = prod(dec.diagonal)
    assert index != 0
    order, rem = divmod(m.order, index)
    assert rem == 0, "image index must divide the module order"
    return order


def _rank_mod_p(mat: list[list[int]], p: int) -> int:
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for col in range(cols):
        pivot = None
        for i in range(rank, rows):
            if m[i][col] % p != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col] % p, -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(rows):
            if i != rank and m[i][col] % p != 0:
                c = m[i][col] % p
                m[i] = [(x - c * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


class _ModPSpan:
    """Row-echelon basis of a subspace of F_p^k with linear reduction."""

    def __init__(self, p: int, vectors):
        self.p = p
        self.rows: dict[int, list[int]] = {}  # pivot coordinate -> echelon row
        for vec in vectors:
            self.add(vec)

    def add(self, vec) -> None:
        p = self.p
        row = [x % p for x in vec]
        for pivot, basis_row in self.rows.items():
            c = row[pivot]
            if c:
                row = [(x - c * y) % p for x, y in zip(row, basis_row)]
        for j, x in enumerate(row):
            if x:
                inv = pow(x, -1, p)
                self.rows[j] = [v * inv % p for v in row]
                return

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list[int]:
        """Residual of vec against the echelon rows (linear in vec)."""
        p = self.p
        row = [x % p for x in vec]
        for pivot, basis_row in self.rows.items():
            c = row[pivot]
            if c:
                row = [(x - c * y) % p for x, y in zip(row, basis_row)]
        return row

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))


@dataclass(frozen=True)
class ElementaryQuotient:
    """The mod-p quotient C presented on explicit degree-zero divisors.

    ``basis`` lifts an F_p-basis of C to integer divisors.  Because the
    sublattice p*Div0 + Pr contains p*Div0, membership only depends on the
    divisor mod p, so ``membership`` is the mod-p span of the Laplacian
    columns in the difference coordinates w_i - w_0.
    """

    p: int
    basis: tuple[tuple[int, ...], ...]
    membership: _ModPSpan

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def delta_coords(self, divisor) -> list[int]:
        """Difference-basis coordinates of a degree-zero divisor."""
        if sum(divisor) != 0:
            raise ValueError("divisor must have degree zero")
        return list(divisor[1:])

    def contains(self, divisor: list[int]) -> bool:
        """Whether an (integer, degree-zero) divisor lies in p*Div0 + Pr."""
        return self.membership.contains(self.delta_coords(divisor))


def elementary_quotient(cover: DerivedCover) -> ElementaryQuotient:
    require_connected_cover(cover)
    p = cover.p
    lap = cover.total.laplacian_matrix()
    n = len(lap)
    # Columns of the Laplacian in difference coordinates span the image of
    # the principal divisors inside Div0/p*Div0.
    span = _ModPSpan(p, ([lap[i][j] for i in range(1, n)] for j in range(n)))
    basis = []
    for j in range(n - 1):
        if j not in span.rows:
            eps = [0] * n
            eps[0], eps[j + 1] = -1, 1
            basis.append(tuple(eps))
    return ElementaryQuotient(p=p, basis=tuple(basis), membership=span)


def act_divisor(cover: DerivedCover, elem: GroupRingElement, divisor) -> list[int]:
    """Apply a group-ring element to a divisor through the deck action."""
    n = cover.total.num_vertices
    out = [0] * n
    for k, c in enumerate(elem.coeffs):
        if c == 0:
            continue
        perm = cover.deck_vertex_map(elem.group.element(k))
        for w, x in enumerate(divisor):
            if x:
                out[perm[w]] += c * x
    return out


def _fixed_point_count(
    cover: DerivedCover,
    q: ElementaryQuotient,
    f_lift: GroupRingElement,
) -> int:
    """Number of classes of C fixed by the lifted idempotent.

    The defect f*alpha - alpha is linear in the coefficients of alpha, so the
    sweep over all of C combines precomputed residuals of the basis defects.
    """
    p = q.p
    m = q.dimension
    residuals = []
    support: set[int] = set()
    for eps in q.basis:
        defect = act_divisor(cover, f_lift, eps)
        defect = [a - b for a, b in zip(defect, eps)]
        resid = q.membership.reduce(q.delta_coords(defect))
        residuals.append(resid)
        support.update(j for j, x in enumerate(resid) if x)
    positions = sorted(support)
    vecs = [[resid[j] for j in positions] for resid in residuals]
    count = 0
    for lam in iter_product(range(p), repeat=m):
        ok = True
        for col in range(len(positions)):
            s = 0
            for k in range(m):
                s += lam[k] * vecs[k][col]
            if s % p != 0:
                ok = False
                break
        count += ok
    return count


def eigenspace_dim_C(
    q: ElementaryQuotient,
    pm: PicardModule,
    chi: Character,
    enumeration_budget: int = ENUMERATION_BUDGET,
) -> int:
    """F_p-dimension of the chi-component of C, via the mod-p projector rank.

    When p^dim(C) fits in the budget, the fixed-point sweep of the lifted
    idempotent over all classes recomputes the dimension independently and
    the two answers are required to agree.
    """
    if chi.precision is not None:
        raise ValueError("eigenspace_dim_C expects an F_p-valued character")
    p = chi.group.p
    if pm.p != p:
        raise ValueError("character prime does not match the cover")
    sylow = sylow_p_module(pm, p)
    if sylow.rank() == 0:
        return 0
    proj = _projector_matrix(sylow, chi, p)
    dim = _rank_mod_p(proj, p)
    if p**q.dimension <= enumeration_budget:
        f_lift = idempotent_mod(chi, 1)
        count = _fixed_point_count(pm.cover, q, f_lift)
        assert count == p**dim, (
            f"projector rank {dim} disagrees with fixed-point count {count}"
        )
    return dim


def trivial_character_check(m: SylowPModule, base: SerreGraph, p: int) -> bool:
    """Order of the trivial-character piece of A against the base tree count."""
    if not base.is_connected():
        raise ValueError("base graph must be connected")
    if m.p != p:
        raise ValueError("module prime does not match")
    chi0 = Character(CyclicGroup.for_prime(p), 0, max(m.exponent, 1))
    order = eigenspace_order_A(m, chi0)
    return order == p_part(spanning_tree_count(base), p)
