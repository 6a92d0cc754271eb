"""Exact integer-lattice algebra and the complex of rank-1 summands.

Matrices are plain lists of rows of Python ints, so all arithmetic is
arbitrary precision.  Smith normal form is computed by fraction-free
elimination pivoting on a minimal absolute value; every snf() call
verifies U A V = D and the unimodularity of U and V before returning.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

Matrix = list[list[int]]


def identity(k: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    cols = len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(len(b)))
             for j in range(cols)] for i in range(len(a))]


def det(a: Matrix) -> int:
    """Exact determinant (Bareiss)."""
    k = len(a)
    if any(len(row) != k for row in a):
        raise ValueError("determinant needs a square matrix")
    if k == 0:
        return 1
    if k == 1:
        return a[0][0]
    if k == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for t in range(k - 1):
        if m[t][t] == 0:
            for i in range(t + 1, k):
                if m[i][t] != 0:
                    m[t], m[i] = m[i], m[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, k):
            for j in range(t + 1, k):
                m[i][j] = (m[i][j] * m[t][t] - m[i][t] * m[t][j]) // prev
            m[i][t] = 0
        prev = m[t][t]
    return sign * m[k - 1][k - 1]


def matrix_rank(a: Matrix) -> int:
    """Exact rank over the rationals (fraction-free elimination)."""
    if not a or not a[0]:
        return 0
    m = [row[:] for row in a]
    rows, cols = len(m), len(m[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = next((i for i in range(row, rows) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for i in range(row + 1, rows):
            if m[i][col] != 0:
                p, q = m[row][col], m[i][col]
                m[i] = [p * x - q * y for x, y in zip(m[i], m[row])]
                g = 0
                for x in m[i]:
                    g = gcd(g, x)
                if g > 1:
                    m[i] = [x // g for x in m[i]]
        row += 1
        rank += 1
        if row == rows:
            break
    return rank


@dataclass
class SnfResult:
    U: Matrix
    D: Matrix
    V: Matrix

    def invariants(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D),
                                                len(self.D[0]) if self.D else 0))
                if self.D[i][i] != 0]


def _snf_raw(a: Matrix) -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """(U, D, V, Vinv) with U a V = D, no verification."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    d = [row[:] for row in a]
    u = identity(rows)
    v = identity(cols)
    vinv = identity(cols)

    def row_swap(p, q):
        d[p], d[q] = d[q], d[p]
        u[p], u[q] = u[q], u[p]

    def col_swap(p, q):
        for row in d:
            row[p], row[q] = row[q], row[p]
        for row in v:
            row[p], row[q] = row[q], row[p]
        vinv[p], vinv[q] = vinv[q], vinv[p]

    def row_add(p, q, t):
        # row q += t * row p
        d[q] = [x + t * y for x, y in zip(d[q], d[p])]
        u[q] = [x + t * y for x, y in zip(u[q], u[p])]

    def col_add(p, q, t):
        # col q += t * col p
        for row in d:
            row[q] += t * row[p]
        for row in v:
            row[q] += t * row[p]
        vinv[p] = [x - t * y for x, y in zip(vinv[p], vinv[q])]

    def row_neg(p):
        d[p] = [-x for x in d[p]]
        u[p] = [-x for x in u[p]]

    t = 0
    while t < min(rows, cols):
        # minimal nonzero pivot in the trailing block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if d[i][j] != 0 and (best is None
                                     or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        dirty = False
        for i in range(t + 1, rows):
            if d[i][t] != 0:
                q = d[i][t] // d[t][t]
                row_add(t, i, -q)
                dirty = dirty or d[i][t] != 0
        for j in range(t + 1, cols):
            if d[t][j] != 0:
                q = d[t][j] // d[t][t]
                col_add(t, j, -q)
                dirty = dirty or d[t][j] != 0
        if dirty:
            continue
        # pivot must divide the rest of the block for the invariant chain
        offender = next(((i, j) for i in range(t + 1, rows)
                         for j in range(t + 1, cols)
                         if d[i][j] % d[t][t] != 0), None)
        if offender is not None:
            row_add(offender[0], t, 1)
            continue
        if d[t][t] < 0:
            row_neg(t)
        t += 1
    return u, d, v, vinv


def _is_diagonal_chain(d: Matrix) -> bool:
    rows = len(d)
    cols = len(d[0]) if rows else 0
    diag = [d[i][i] for i in range(min(rows, cols))]
    for i in range(rows):
        for j in range(cols):
            if i != j and d[i][j] != 0:
                return False
    for a, b in zip(diag, diag[1:]):
        if a < 0 or b < 0:
            return False
        if b != 0 and (a == 0 or b % a != 0):
            return False
    return True


def snf(a: Matrix) -> SnfResult:
    """Smith normal form with verified transforms."""
    if a and any(len(row) != len(a[0]) for row in a):
        raise ValueError("ragged matrix")
    u, d, v, _ = _snf_raw(a)
    if mat_mul(mat_mul(u, a), v) != d:
        raise AssertionError("snf: U A V != D")
    if abs(det(u)) != 1 or abs(det(v)) != 1:
        raise AssertionError("snf: transform not unimodular")
    if not _is_diagonal_chain(d):
        raise AssertionError("snf: bad diagonal")
    return SnfResult(u, d, v)


def smith_invariants(a: Matrix) -> list[int]:
    return snf(a).invariants()


def is_primitive(v: list[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def spans_summand(vectors: list[list[int]]) -> bool:
    """True iff the span of the rows is a direct summand of Z^n of rank
    len(vectors): full rank and every Smith invariant equal to 1."""
    if not vectors:
        return True
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("mixed lengths")
    if len(vectors) > n:
        return False
    _, d, _, _ = _snf_raw([list(v) for v in vectors])
    diag = [d[i][i] for i in range(len(vectors))]
    return all(x == 1 for x in diag)


def complete_basis(vectors: list[list[int]], n: int) -> Matrix:
    """Extend rows spanning a summand of Z^n to a basis of Z^n.

    The output is an n x n unimodular matrix whose first rows are the
    inputs, exactly.  From U A V = [I | 0] we get A V = [U^-1 | 0], so
    the input rows extended by the trailing rows of V^-1 have
    determinant det(U^-1) times det(V^-1), which is a unit.
    """
    k = len(vectors)
    if k > n or any(len(v) != n for v in vectors):
        raise ValueError(f"need at most {n} vectors of length {n}")
    if not spans_summand([list(v) for v in vectors]):
        raise ValueError("input rows do not span a summand")
    if k == 0:
        return identity(n)
    _, d, _, vinv = _snf_raw([list(v) for v in vectors])
    if any(d[i][i] != 1 for i in range(k)):
        raise AssertionError("summand precondition slipped through")
    out = [list(v) for v in vectors] + [vinv[i][:] for i in range(k, n)]
    if abs(det(out)) != 1:
        raise AssertionError("completion is not unimodular")
    return out


# --- FS(Z^n): the complex of rank-1 summands, truncated -------------------

def fs_vertices(n: int, bound: int) -> list[tuple[int, ...]]:
    """Primitive vectors with max-norm <= bound, one per sign pair
    (first nonzero entry positive), sorted."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out = []
    for v in itertools.product(range(-bound, bound + 1), repeat=n):
        first = next((x for x in v if x != 0), 0)
        if first > 0 and is_primitive(list(v)):
            out.append(v)
    return sorted(out)


def fs_is_simplex(vertices: list[tuple[int, ...]]) -> bool:
    """A vertex family spans a simplex iff the vectors are distinct and
    their span is a summand of full rank.  Order-insensitive."""
    if len(set(vertices)) != len(vertices):
        return False
    return spans_summand([list(v) for v in vertices])


def fs_edges(n: int, bound: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    verts = fs_vertices(n, bound)
    return [(u, v) for u, v in itertools.combinations(verts, 2)
            if spans_summand([list(u), list(v)])]


def _components(verts, edges) -> int:
    parent = {v: v for v in verts}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    return len({find(v) for v in verts})


def fs_connected(n: int, bound: int) -> bool:
    verts = fs_vertices(n, bound)
    return _components(verts, fs_edges(n, bound)) == 1


def fs_h1_rank(n: int, bound: int) -> int:
    """Rank of H_1 of the truncated 2-skeleton, by exact boundary ranks.

    This is a truncation statistic: evidence about the full complex,
    not a proof.
    """
    verts = fs_vertices(n, bound)
    edges = fs_edges(n, bound)
    vert_index = {v: i for i, v in enumerate(verts)}
    edge_index = {e: i for i, e in enumerate(edges)}
    triangles = [t for t in itertools.combinations(verts, 3)
                 if fs_is_simplex(list(t))]

    d1 = [[0] * len(verts) for _ in edges]
    for e, (u, v) in enumerate(edges):
        d1[e][vert_index[u]] = -1
        d1[e][vert_index[v]] = 1
    d2 = [[0] * len(edges) for _ in triangles]
    for t, (u, v, w) in enumerate(triangles):
        d2[t][edge_index[(v, w)]] = 1
        d2[t][edge_index[(u, w)]] = -1
        d2[t][edge_index[(u, v)]] = 1
    rank_d1 = matrix_rank(d1) if edges else 0
    rank_d2 = matrix_rank(d2) if triangles else 0
    return len(edges) - rank_d1 - rank_d2


def fs_adjacency(n: int, bound: int) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    verts = fs_vertices(n, bound)
    adj: dict[tuple[int, ...], list[tuple[int, ...]]] = {v: [] for v in verts}
    for u, v in fs_edges(n, bound):
        adj[u].append(v)
        adj[v].append(u)
    return adj


def fs_dot(n: int, bound: int) -> str:
    """The 1-skeleton in DOT format."""
    lines = ["graph fs {"]
    for v in fs_vertices(n, bound):
        label = ",".join(str(x) for x in v)
        lines.append(f'  "{label}";')
    for u, v in fs_edges(n, bound):
        lu = ",".join(str(x) for x in u)
        lv = ",".join(str(x) for x in v)
        lines.append(f'  "{lu}" -- "{lv}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
