"""Pure-Python implementations of the search and checking kernels.

These mirror ``_ckernels.pyx`` exactly (same loop order, same witnesses, same
output order) and are used when the compiled module is unavailable or when
``MONEXT_PURE=1`` is set.  Inputs are nested lists of ints; -1 marks an
unassigned cell inside the backtracking searches.
"""

from itertools import product


def assoc_witness(t):
    """First triple (i, j, k) in lexicographic order with (ij)k != i(jk)."""
    n = len(t)
    for i in range(n):
        ti = t[i]
        for j in range(n):
            ij = ti[j]
            tij = t[ij]
            tj = t[j]
            for k in range(n):
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def _partial_assoc_ok(t, n):
    for i in range(n):
        ti = t[i]
        for j in range(n):
            ij = ti[j]
            if ij < 0:
                continue
            tij = t[ij]
            tj = t[j]
            for k in range(n):
                jk = tj[k]
                if jk < 0:
                    continue
                left = tij[k]
                right = ti[jk]
                if left >= 0 and right >= 0 and left != right:
                    return False
    return True


def unital_tables(n):
    """All associative n x n tables with two-sided identity 0, lexicographic."""
    t = [[-1] * n for _ in range(n)]
    for i in range(n):
        t[0][i] = i
        t[i][0] = i
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    out = []

    def rec(pos):
        if pos == len(cells):
            out.append([row[:] for row in t])
            return
        i, j = cells[pos]
        for v in range(n):
            t[i][j] = v
            if _partial_assoc_ok(t, n):
                rec(pos + 1)
        t[i][j] = -1

    rec(0)
    return out


def act07_witness(X, B, rho, phi, gamma):
    """First (x, x', x'', b, b', b'') violating the seven-variable law."""
    nx, nb = len(X), len(B)
    for x, x1, x2 in product(range(nx), repeat=3):
        for b, b1, b2 in product(range(nb), repeat=3):
            bb1 = B[b][b1]
            b12 = B[b1][b2]
            bbb = B[bb1][b2]
            t = X[X[x][phi[b][x1]]][gamma[b][b1]]
            u = rho[t][bb1]
            t = X[X[u][phi[bb1][x2]]][gamma[bb1][b2]]
            left = rho[t][bbb]
            v = X[X[x1][phi[b1][x2]]][gamma[b1][b2]]
            w = rho[v][b12]
            t = X[X[x][phi[b][w]]][gamma[b][b12]]
            right = rho[t][bbb]
            if left != right:
                return (x, x1, x2, b, b1, b2)
    return None


def _partial_system_ok(X, B, rho, phi, gamma):
    nx, nb = len(X), len(B)

    def xm(a, c):
        if a < 0 or c < 0:
            return -1
        return X[a][c]

    def r(a, b):
        if a < 0:
            return -1
        return rho[a][b]

    def f(b, a):
        if a < 0:
            return -1
        return phi[b][a]

    for x in range(nx):
        for b in range(nb):
            v = rho[x][b]
            if v >= 0:
                w = rho[v][b]
                if w >= 0 and w != v:
                    return False
    for b in range(nb):
        for x in range(nx):
            v = phi[b][x]
            if v >= 0:
                w = rho[v][b]
                if w >= 0 and w != v:
                    return False
    for b in range(nb):
        for b1 in range(nb):
            v = gamma[b][b1]
            if v >= 0:
                w = rho[v][B[b][b1]]
                if w >= 0 and w != v:
                    return False
    for x, x1, x2 in product(range(nx), repeat=3):
        for b, b1, b2 in product(range(nb), repeat=3):
            bb1 = B[b][b1]
            b12 = B[b1][b2]
            bbb = B[bb1][b2]
            left = r(xm(xm(r(xm(xm(x, phi[b][x1]), gamma[b][b1]), bb1),
                           phi[bb1][x2]), gamma[bb1][b2]), bbb)
            if left < 0:
                continue
            w = r(xm(xm(x1, phi[b1][x2]), gamma[b1][b2]), b12)
            right = r(xm(xm(x, f(b, w)), gamma[b][b12]), bbb)
            if right >= 0 and left != right:
                return False
    return True


def action_systems(X, B):
    """All (rho, phi, gamma) over (X, B) satisfying the action-system axioms.

    Backtracking over the free cells (rho first, then phi, then gamma, each
    row-major, values ascending); the identity-row/column cells are fixed by
    the pointedness axioms.
    """
    nx, nb = len(X), len(B)
    rho = [[-1] * nb for _ in range(nx)]
    phi = [[-1] * nx for _ in range(nb)]
    gamma = [[-1] * nb for _ in range(nb)]
    for x in range(nx):
        rho[x][0] = x
        phi[0][x] = x
    for b in range(nb):
        rho[0][b] = 0
        phi[b][0] = 0
        gamma[b][0] = 0
        gamma[0][b] = 0
    cells = ([(rho, x, b) for x in range(1, nx) for b in range(1, nb)]
             + [(phi, b, x) for b in range(1, nb) for x in range(1, nx)]
             + [(gamma, b, c) for b in range(1, nb) for c in range(1, nb)])
    out = []

    def rec(pos):
        if pos == len(cells):
            out.append(([row[:] for row in rho], [row[:] for row in phi],
                        [row[:] for row in gamma]))
            return
        m, i, j = cells[pos]
        for v in range(nx):
            m[i][j] = v
            if _partial_system_ok(X, B, rho, phi, gamma):
                rec(pos + 1)
        m[i][j] = -1

    if _partial_system_ok(X, B, rho, phi, gamma):
        rec(0)
    return out
