# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search and checking kernels.

Loop order, witnesses and output order are identical to ``_pykernels``.
All tables arrive as C-contiguous int64 arrays; -1 marks an unassigned cell.
"""

import numpy as np
from libc.stdlib cimport malloc, free

ctypedef long long idx_t


def assoc_witness(const idx_t[:, ::1] t):
    cdef Py_ssize_t n = t.shape[0]
    cdef Py_ssize_t i, j, k
    cdef idx_t ij
    for i in range(n):
        for j in range(n):
            ij = t[i, j]
            for k in range(n):
                if t[ij, k] != t[i, t[j, k]]:
                    return (i, j, k)
    return None


cdef bint _partial_assoc_ok(idx_t* t, int n) noexcept nogil:
    cdef int i, j, k
    cdef idx_t ij, jk, left, right
    for i in range(n):
        for j in range(n):
            ij = t[i * n + j]
            if ij < 0:
                continue
            for k in range(n):
                jk = t[j * n + k]
                if jk < 0:
                    continue
                left = t[ij * n + k]
                right = t[i * n + jk]
                if left >= 0 and right >= 0 and left != right:
                    return False
    return True


cdef void _tables_rec(idx_t* t, int n, int pos, int ncells, list out):
    cdef int i, j, v
    if pos == ncells:
        out.append([t[i] for i in range(n * n)])
        return
    i = 1 + pos // (n - 1)
    j = 1 + pos % (n - 1)
    for v in range(n):
        t[i * n + j] = v
        if _partial_assoc_ok(t, n):
            _tables_rec(t, n, pos + 1, ncells, out)
    t[i * n + j] = -1


def unital_tables(int n):
    cdef idx_t* t = <idx_t*> malloc(n * n * sizeof(idx_t))
    cdef int i
    cdef list out = []
    try:
        for i in range(n * n):
            t[i] = -1
        for i in range(n):
            t[i] = i
            t[i * n] = i
        _tables_rec(t, n, 0, (n - 1) * (n - 1), out)
    finally:
        free(t)
    return np.array(out, dtype=np.int64).reshape(-1, n, n)


def act07_witness(const idx_t[:, ::1] X, const idx_t[:, ::1] B,
                  const idx_t[:, ::1] rho, const idx_t[:, ::1] phi,
                  const idx_t[:, ::1] gamma):
    cdef Py_ssize_t nx = X.shape[0], nb = B.shape[0]
    cdef Py_ssize_t x, x1, x2, b, b1, b2
    cdef idx_t bb1, b12, bbb, t, u, v, w, left, right
    for x in range(nx):
        for x1 in range(nx):
            for x2 in range(nx):
                for b in range(nb):
                    for b1 in range(nb):
                        bb1 = B[b, b1]
                        for b2 in range(nb):
                            b12 = B[b1, b2]
                            bbb = B[bb1, b2]
                            t = X[X[x, phi[b, x1]], gamma[b, b1]]
                            u = rho[t, bb1]
                            t = X[X[u, phi[bb1, x2]], gamma[bb1, b2]]
                            left = rho[t, bbb]
                            v = X[X[x1, phi[b1, x2]], gamma[b1, b2]]
                            w = rho[v, b12]
                            t = X[X[x, phi[b, w]], gamma[b, b12]]
                            right = rho[t, bbb]
                            if left != right:
                                return (x, x1, x2, b, b1, b2)
    return None


cdef struct Sys:
    int nx
    int nb
    idx_t* X
    idx_t* B
    idx_t* rho      # nx * nb, [x][b]
    idx_t* phi      # nb * nx, [b][x]
    idx_t* gamma    # nb * nb, [b][b']


cdef inline idx_t _xm(Sys* s, idx_t a, idx_t c) noexcept nogil:
    if a < 0 or c < 0:
        return -1
    return s.X[a * s.nx + c]


cdef inline idx_t _r(Sys* s, idx_t a, idx_t b) noexcept nogil:
    if a < 0:
        return -1
    return s.rho[a * s.nb + b]


cdef inline idx_t _f(Sys* s, idx_t b, idx_t a) noexcept nogil:
    if a < 0:
        return -1
    return s.phi[b * s.nx + a]


cdef bint _partial_system_ok(Sys* s) noexcept nogil:
    cdef int nx = s.nx, nb = s.nb
    cdef int x, x1, x2, b, b1, b2
    cdef idx_t v, w, bb1, b12, bbb, left, right
    for x in range(nx):
        for b in range(nb):
            v = s.rho[x * nb + b]
            if v >= 0:
                w = s.rho[v * nb + b]
                if w >= 0 and w != v:
                    return False
    for b in range(nb):
        for x in range(nx):
            v = s.phi[b * nx + x]
            if v >= 0:
                w = s.rho[v * nb + b]
                if w >= 0 and w != v:
                    return False
    for b in range(nb):
        for b1 in range(nb):
            v = s.gamma[b * nb + b1]
            if v >= 0:
                w = s.rho[v * nb + s.B[b * nb + b1]]
                if w >= 0 and w != v:
                    return False
    for x in range(nx):
        for x1 in range(nx):
            for x2 in range(nx):
                for b in range(nb):
                    for b1 in range(nb):
                        bb1 = s.B[b * nb + b1]
                        for b2 in range(nb):
                            b12 = s.B[b1 * nb + b2]
                            bbb = s.B[bb1 * nb + b2]
                            left = _xm(s, x, s.phi[b * nx + x1])
                            left = _xm(s, left, s.gamma[b * nb + b1])
                            left = _r(s, left, bb1)
                            left = _xm(s, left, s.phi[bb1 * nx + x2])
                            left = _xm(s, left, s.gamma[bb1 * nb + b2])
                            left = _r(s, left, bbb)
                            if left < 0:
                                continue
                            w = _xm(s, x1, s.phi[b1 * nx + x2])
                            w = _xm(s, w, s.gamma[b1 * nb + b2])
                            w = _r(s, w, b12)
                            right = _xm(s, x, _f(s, b, w))
                            right = _xm(s, right, s.gamma[b * nb + b12])
                            right = _r(s, right, bbb)
                            if right >= 0 and left != right:
                                return False
    return True


cdef void _systems_rec(Sys* s, idx_t** cells, int pos, int ncells, list out):
    cdef int v, i
    cdef int nx = s.nx, nb = s.nb
    if pos == ncells:
        out.append(([s.rho[i] for i in range(nx * nb)],
                    [s.phi[i] for i in range(nb * nx)],
                    [s.gamma[i] for i in range(nb * nb)]))
        return
    for v in range(nx):
        cells[pos][0] = v
        if _partial_system_ok(s):
            _systems_rec(s, cells, pos + 1, ncells, out)
    cells[pos][0] = -1


def action_systems(const idx_t[:, ::1] X, const idx_t[:, ::1] B):
    cdef int nx = X.shape[0], nb = B.shape[0]
    cdef Sys s
    cdef int i, j, c, ncells
    cdef list out = []
    s.nx = nx
    s.nb = nb
    s.X = <idx_t*> malloc(nx * nx * sizeof(idx_t))
    s.B = <idx_t*> malloc(nb * nb * sizeof(idx_t))
    s.rho = <idx_t*> malloc(nx * nb * sizeof(idx_t))
    s.phi = <idx_t*> malloc(nb * nx * sizeof(idx_t))
    s.gamma = <idx_t*> malloc(nb * nb * sizeof(idx_t))
    ncells = 2 * (nx - 1) * (nb - 1) + (nb - 1) * (nb - 1)
    cdef idx_t** cells = <idx_t**> malloc((ncells + 1) * sizeof(idx_t*))
    try:
        for i in range(nx):
            for j in range(nx):
                s.X[i * nx + j] = X[i, j]
        for i in range(nb):
            for j in range(nb):
                s.B[i * nb + j] = B[i, j]
        for i in range(nx * nb):
            s.rho[i] = -1
            s.phi[i] = -1
        for i in range(nb * nb):
            s.gamma[i] = -1
        for i in range(nx):
            s.rho[i * nb] = i
            s.phi[i] = i
        for j in range(nb):
            s.rho[j] = 0
            s.phi[j * nx] = 0
            s.gamma[j * nb] = 0
            s.gamma[j] = 0
        c = 0
        for i in range(1, nx):
            for j in range(1, nb):
                cells[c] = &s.rho[i * nb + j]
                c += 1
        for i in range(1, nb):
            for j in range(1, nx):
                cells[c] = &s.phi[i * nx + j]
                c += 1
        for i in range(1, nb):
            for j in range(1, nb):
                cells[c] = &s.gamma[i * nb + j]
                c += 1
        if _partial_system_ok(&s):
            _systems_rec(&s, cells, 0, ncells, out)
    finally:
        free(s.X)
        free(s.B)
        free(s.rho)
        free(s.phi)
        free(s.gamma)
        free(cells)
    return [(np.array(r, dtype=np.int64).reshape(nx, nb),
             np.array(p, dtype=np.int64).reshape(nb, nx),
             np.array(g, dtype=np.int64).reshape(nb, nb)) for r, p, g in out]
