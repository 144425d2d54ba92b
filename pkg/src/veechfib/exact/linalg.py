"""Exact integer/rational matrix helpers: charpoly and rank.

Characteristic polynomials of adjacency matrices are computed by a
division-free tree recursion when the graph is a (weighted) forest,
falling back to the Berkowitz algorithm for general integer matrices.
All arithmetic is integer or Fraction; results are exact.
"""

from __future__ import annotations

from fractions import Fraction

from .polynomials import IntPolynomial


def charpoly(matrix):
    """det(x*I - M) for a square integer matrix M, as an IntPolynomial."""
    n = len(matrix)
    if n == 0:
        return IntPolynomial([1])
    tree = _tree_structure(matrix)
    if tree is not None:
        return _charpoly_tree(matrix, tree)
    return _charpoly_berkowitz(matrix)


def _tree_structure(matrix):
    """Rooted forest orientation of the symmetric support, or None."""
    n = len(matrix)
    for i in range(n):
        if matrix[i][i] != 0:
            return None
        for j in range(n):
            if matrix[i][j] != matrix[j][i]:
                return None
    edges = sum(1 for i in range(n) for j in range(i + 1, n) if matrix[i][j] != 0)
    parent = [None] * n
    seen = [False] * n
    order = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            order.append(v)
            for u in range(n):
                if matrix[v][u] != 0 and not seen[u]:
                    seen[u] = True
                    parent[u] = v
                    stack.append(u)
    components = sum(1 for p in range(n) if parent[p] is None)
    if edges != n - components:
        return None  # has a cycle
    return parent, order


def _charpoly_tree(matrix, tree):
    # A_v = charpoly of subtree at v; B_v = charpoly of subtree minus v.
    # A_v = x * prod(A_c) - sum_c w_c^2 * B_c * prod(A_c' != c).
    parent, order = tree
    n = len(matrix)
    children = [[] for _ in range(n)]
    for v, p in enumerate(parent):
        if p is not None:
            children[p].append(v)
    x = IntPolynomial([0, 1])
    a_poly = [None] * n
    b_poly = [None] * n
    for v in reversed(order):
        kids = children[v]
        prod_all = IntPolynomial([1])
        for c in kids:
            prod_all = prod_all * a_poly[c]
        acc = x * prod_all
        for c in kids:
            rest = IntPolynomial([1])
            for c2 in kids:
                if c2 != c:
                    rest = rest * a_poly[c2]
            w = matrix[v][c]
            acc = acc - (w * w) * (b_poly[c] * rest)
        a_poly[v] = acc
        b_poly[v] = prod_all
    out = IntPolynomial([1])
    for v in range(n):
        if parent[v] is None:
            out = out * a_poly[v]
    return out


def _charpoly_berkowitz(matrix):
    """Division-free characteristic polynomial (Berkowitz)."""
    n = len(matrix)
    # vector of coefficients of det(xI - M), highest degree first
    coeffs = [1, -matrix[0][0]]
    for i in range(1, n):
        # principal submatrix M[0..i][0..i]
        a = matrix[i][i]
        row = [matrix[i][j] for j in range(i)]
        col = [matrix[j][i] for j in range(i)]
        sub = [[matrix[r][c] for c in range(i)] for r in range(i)]
        # Toeplitz column: [1, -a, -row*col, -row*sub*col, ...]
        toep = [1, -a]
        vec = col
        for _ in range(i - 1):
            toep.append(-sum(x * y for x, y in zip(row, vec)))
            vec = [sum(sub[r][c] * vec[c] for c in range(i)) for r in range(i)]
        toep.append(-sum(x * y for x, y in zip(row, vec)))
        new = [0] * (i + 2)
        for k, c in enumerate(coeffs):
            for m, t in enumerate(toep):
                if k + m <= i + 1:
                    new[k + m] += c * t
        coeffs = new
    return IntPolynomial(list(reversed(coeffs)))


def rank(matrix):
    """Rank over Q of a matrix given as rows of ints or Fractions."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    rank_count = 0
    n_cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        rank_count += 1
        if r == len(rows):
            break
    return rank_count
