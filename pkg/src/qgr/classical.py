"""Classical cohomology of G(k, n) over the integers.

Cohomology classes are finitely supported integer combinations of
basis diagrams, stored sparsely by rank.  The cup product is computed
from Littlewood-Richardson coefficients by direct tableau counting and
truncated to the box; this is the independent classical oracle against
which the degree-preserving part of the quantum product is checked.
"""

from __future__ import annotations

from functools import lru_cache

from .partitions import degree, poincare_dual, trim


class CohomClass:
    """Sparse integer combination of basis diagrams of one context.

    terms maps basis rank to a nonzero integer coefficient; the zero
    class has an empty map.  Instances are treated as immutable.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx, terms=None):
        self.ctx = ctx
        self.terms = {}
        if terms:
            dim = ctx.dim
            for r, c in terms.items():
                if c == 0:
                    continue
                if not 0 <= r < dim:
                    raise ValueError(f"rank {r} outside the basis of {ctx}")
                self.terms[r] = c

    def sorted_terms(self):
        """(rank, coefficient) pairs in basis order."""
        return sorted(self.terms.items())

    def coefficient(self, lam):
        """Coefficient of a diagram (given as a partition tuple)."""
        return self.terms.get(self.ctx.rank(lam), 0)

    def homogeneous_part(self, d):
        """Sub-sum of terms of degree d."""
        basis = self.ctx.basis
        return CohomClass(self.ctx, {r: c for r, c in self.terms.items()
                                     if degree(basis[r]) == d})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, CohomClass) and self.ctx == other.ctx
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ctx, tuple(self.sorted_terms())))

    def __add__(self, other):
        _same_ctx(self, other)
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out.get(r, 0) + c
        return CohomClass(self.ctx, out)

    def __sub__(self, other):
        _same_ctx(self, other)
        out = dict(self.terms)
        for r, c in other.terms.items():
            out[r] = out.get(r, 0) - c
        return CohomClass(self.ctx, out)

    def __neg__(self):
        return CohomClass(self.ctx, {r: -c for r, c in self.terms.items()})

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return CohomClass(self.ctx, {r: scalar * c
                                     for r, c in self.terms.items()})

    __mul__ = __rmul__

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for r, c in self.sorted_terms():
            lam = trim(self.ctx.basis[r])
            name = "(" + ",".join(map(str, lam)) + ")" if lam else "1"
            bits.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(bits)


def _same_ctx(a, b):
    if a.ctx != b.ctx:
        raise ValueError(f"context mismatch: {a.ctx} vs {b.ctx}")


def zero_class(ctx):
    return CohomClass(ctx, {})


def unit_class(ctx):
    return CohomClass(ctx, {0: 1})


def basis_class(ctx, lam):
    return CohomClass(ctx, {ctx.rank(lam): 1})


def row_class(ctx, r):
    """The single-row class (r, 0, ..., 0); r = 0 gives the unit."""
    if not 0 <= r <= ctx.k:
        raise ValueError(f"row length {r} outside 0..k={ctx.k}")
    return basis_class(ctx, (r,) + (0,) * (ctx.l - 1))


def column_class(ctx):
    """The full-column class (1, ..., 1)."""
    return basis_class(ctx, (1,) * ctx.l)


def point_class(ctx):
    """The top class (k, ..., k)."""
    return basis_class(ctx, (ctx.k,) * ctx.l)


def class_from_parts(ctx, items):
    """Build a class from (partition, coefficient) pairs."""
    out = {}
    for lam, c in items:
        r = ctx.rank(ctx.validate(lam))
        out[r] = out.get(r, 0) + c
    return CohomClass(ctx, out)


def _contains(nu, lam):
    return all(lam[i] <= nu[i] if i < len(nu) else lam[i] == 0
               for i in range(len(lam)))


@lru_cache(maxsize=None)
def _lr_count(lam, mu, nu):
    # Count column-strict fillings of nu/lam with content mu whose
    # reverse reading word (rows right-to-left, top to bottom) is a
    # lattice word.  Cells are filled in reading order so the lattice
    # and row conditions prune immediately.
    rows = len(nu)
    lam = lam + (0,) * (rows - len(lam))
    m = len(mu)
    cells = []
    for i in range(rows):
        for col in range(nu[i] - 1, lam[i] - 1, -1):
            cells.append((i, col))
    grid = [[0] * nu[i] for i in range(rows)]
    counts = [0] * (m + 1)
    total = 0

    def fill(pos):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, col = cells[pos]
        hi = m
        if col + 1 < nu[i]:
            hi = min(hi, grid[i][col + 1])  # weakly increasing along rows
        above = grid[i - 1][col] if i > 0 and col < nu[i - 1] and col >= lam[i - 1] else 0
        for v in range(above + 1, hi + 1):  # strictly increasing down columns
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # lattice word prefix condition
            counts[v] += 1
            grid[i][col] = v
            fill(pos + 1)
            grid[i][col] = 0
            counts[v] -= 1

    fill(0)
    return total


def lr_coefficient(lam, mu, nu):
    """Littlewood-Richardson coefficient of general partitions.

    Counts column-strict skew tableaux of shape nu/lam and content mu
    whose reverse reading word is a lattice word.  Returns 0 when the
    degrees do not add up or the shapes are not nested.
    """
    lam, mu, nu = trim(lam), trim(mu), trim(nu)
    for p in (lam, mu, nu):
        if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or any(x < 0 for x in p):
            raise ValueError(f"{p} is not a partition")
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if not _contains(nu, lam) or not _contains(nu, mu):
        return 0
    if not mu:
        return 1
    return _lr_count(lam, mu, nu)


_CUP_CACHE = {}


def _cup_basis(ctx, ra, rb):
    key = (ctx.k, ctx.n)
    cache = _CUP_CACHE.setdefault(key, {})
    pair = (ra, rb) if ra <= rb else (rb, ra)
    hit = cache.get(pair)
    if hit is not None:
        return hit
    lam, mu = ctx.basis[pair[0]], ctx.basis[pair[1]]
    target = degree(lam) + degree(mu)
    items = []
    if target <= ctx.top_degree:
        tl, tm = trim(lam), trim(mu)
        for nr in ctx.ranks_by_degree[target]:
            c = lr_coefficient(tl, tm, trim(ctx.basis[nr]))
            if c:
                items.append((nr, c))
    items = tuple(items)
    cache[pair] = items
    return items


def cup_product(a, b):
    """Cup product, truncated to diagrams inside the box.

    Bilinear extension of the Littlewood-Richardson rule; every output
    term has degree equal to the sum of the input degrees.
    """
    _same_ctx(a, b)
    out = {}
    for ra, ca in a.terms.items():
        for rb, cb in b.terms.items():
            w = ca * cb
            for nr, c in _cup_basis(a.ctx, ra, rb):
                out[nr] = out.get(nr, 0) + w * c
    return CohomClass(a.ctx, out)


def classical_pieri(lam, r, ctx):
    """Sum of diagrams obtained by adding a horizontal r-strip in the box.

    Equals the cup product of the single-row class (r) with the class
    of lam; all coefficients are 0 or 1.
    """
    if not 0 <= r <= ctx.k:
        raise ValueError(f"row length {r} outside 0..k={ctx.k}")
    l = ctx.l
    out = {}

    def build(i, remaining, prev, acc):
        if i == l:
            if remaining == 0:
                out[ctx.rank(tuple(acc))] = 1
            return
        # interlacing nu_1 >= lam_1 >= nu_2 >= lam_2 >= ... keeps the
        # added strip horizontal and nu weakly decreasing
        cap = min(prev, lam[i] + remaining)
        for nu_i in range(lam[i], cap + 1):
            acc.append(nu_i)
            build(i + 1, remaining - (nu_i - lam[i]), lam[i], acc)
            acc.pop()

    build(0, r, ctx.k, [])
    return CohomClass(ctx, out)


def pairing(a, b):
    """Poincare pairing: sum of coeff_a(T) * coeff_b(dual T)."""
    _same_ctx(a, b)
    ctx = a.ctx
    total = 0
    for r, c in a.terms.items():
        dual_rank = ctx.rank(poincare_dual(ctx.basis[r], ctx.k))
        other = b.terms.get(dual_rank, 0)
        if other:
            total += c * other
    return total
