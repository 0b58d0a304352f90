"""Independent reference computations used to freeze expected values.

None of these import the code paths they check.
"""

import itertools
from fractions import Fraction


def poly_divmod_mod_p(a, b, p):
    """Schoolbook long division of coefficient lists (lowest degree first) over GF(p)."""
    a = [x % p for x in a]
    q = [0] * max(len(a) - len(b) + 1, 1)
    inv = pow(b[-1], p - 2, p)
    for shift in range(len(a) - len(b), -1, -1):
        c = a[shift + len(b) - 1] * inv % p
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] = (a[shift + i] - c * y) % p
    return q, a[: len(b) - 1]


def solve_exact(M, rhs):
    """Gauss-Jordan over Fractions; None when singular."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            return None
        A[col], A[piv] = A[piv], A[col]
        pv = A[col][col]
        A[col] = [x / pv for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    return [row[-1] for row in A]


def nu_star_by_vertices(n, edges):
    """max sum m(e) over {m >= 0, load <= 1} by enumerating every vertex.

    A vertex of the polytope is the solution of e linearly independent
    tight constraints chosen among the n load rows and the e rows m >= 0.
    """
    e = len(edges)
    if e == 0:
        return Fraction(0)
    rows = []
    for v in range(n):
        rows.append(([1 if v in edge else 0 for edge in edges], 1))
    for j in range(e):
        rows.append(([1 if k == j else 0 for k in range(e)], 0))
    best = None
    for chosen in itertools.combinations(rows, e):
        m = solve_exact([r[0] for r in chosen], [r[1] for r in chosen])
        if m is None or any(x < 0 for x in m):
            continue
        if any(sum(m[j] for j, edge in enumerate(edges) if v in edge) > 1 for v in range(n)):
            continue
        val = sum(m)
        if best is None or val > best:
            best = val
    return best


def components_bfs(n, colored_edges):
    """Per-color component orders by plain BFS over adjacency lists."""
    adj = {}
    for c, u, v in colored_edges:
        adj.setdefault(c, {}).setdefault(u, []).append(v)
        adj[c].setdefault(v, []).append(u)
    out = {}
    for c, g in adj.items():
        seen, orders = set(), []
        for s in g:
            if s in seen:
                continue
            stack, size = [s], 0
            seen.add(s)
            while stack:
                x = stack.pop()
                size += 1
                for y in g[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            orders.append(size)
        out[c] = sorted(orders, reverse=True)
    return out


def mc_by_product(n, r):
    """mc_r(K_n) by trying every coloring in itertools.product order, no pruning."""
    pairs = list(itertools.combinations(range(n), 2))
    best = n
    for colors in itertools.product(range(r), repeat=len(pairs)):
        biggest = 0
        for c in range(r):
            orders = components_bfs(n, [(c, u, v) for (u, v), k in zip(pairs, colors) if k == c])
            if orders.get(c):
                biggest = max(biggest, orders[c][0])
        best = min(best, biggest)
    return best
