# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled table kernels; same API as ``_kernels_py``.

Orders up to ``MAX_N`` are handled here; callers fall back to the
pure-Python module for anything larger.
"""

DEF CMAX = 8

MAX_N = CMAX


cdef int _load(object seq, int *dst, int count) except -1:
    cdef int i
    if len(seq) != count:
        raise ValueError("table has wrong length")
    for i in range(count):
        dst[i] = seq[i]
    return 0


cdef void _extensions(int *add, int n, int *left, int *right) noexcept nogil:
    cdef int x, y, m, low, size = 1 << n
    for x in range(n):
        left[x * size] = 0
        right[x * size] = 0
        for m in range(1, size):
            low = m & -m
            y = 0
            while (1 << y) != low:
                y += 1
            left[x * size + m] = left[x * size + (m ^ low)] | add[x * n + y]
            right[x * size + m] = right[x * size + (m ^ low)] | add[y * n + x]


def set_add(add, int n, int a, int b):
    cdef int x, y, out = 0
    for x in range(n):
        if (a >> x) & 1:
            for y in range(n):
                if (b >> y) & 1:
                    out |= <int>add[x * n + y]
    return out


def assoc_failures(add, int n, int limit=-1):
    if n > CMAX:
        raise ValueError("order too large for compiled kernel")
    cdef int cadd[CMAX * CMAX]
    cdef int left[CMAX * (1 << CMAX)]
    cdef int right[CMAX * (1 << CMAX)]
    cdef int x, y, z, lhs, rhs, size = 1 << n
    _load(add, cadd, n * n)
    _extensions(cadd, n, left, right)
    out = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = right[z * size + cadd[x * n + y]]
                rhs = left[x * size + cadd[y * n + z]]
                if lhs != rhs:
                    out.append((x, y, z, lhs, rhs))
                    if len(out) == limit:
                        return out
    return out


cdef bint _is_hyperfield(int *add, int *mul, int n, int neg_one) noexcept nogil:
    cdef int left[CMAX * (1 << CMAX)]
    cdef int right[CMAX * (1 << CMAX)]
    cdef int neg[CMAX]
    cdef int full = (1 << n) - 1
    cdef int size = 1 << n
    cdef int a, x, y, z, u, s, img, cell, expect
    for x in range(n * n):
        if add[x] == 0 or (add[x] & ~full):
            return False
    for x in range(n):
        if add[x] != (1 << x):
            return False
        for y in range(x + 1, n):
            if add[x * n + y] != add[y * n + x]:
                return False
    for x in range(n):
        expect = mul[neg_one * n + x]
        for y in range(n):
            if (add[x * n + y] & 1) != (y == expect):
                return False
        neg[x] = expect
    for x in range(n):
        for y in range(n):
            cell = add[x * n + neg[y]]
            for z in range(n):
                if ((add[y * n + z] >> x) & 1) != ((cell >> z) & 1):
                    return False
    for a in range(1, n):
        for x in range(n):
            for y in range(x, n):
                s = add[x * n + y]
                img = 0
                for u in range(n):
                    if (s >> u) & 1:
                        img |= 1 << mul[a * n + u]
                if img != add[mul[a * n + x] * n + mul[a * n + y]]:
                    return False
    _extensions(add, n, left, right)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if right[z * size + add[x * n + y]] != left[x * size + add[y * n + z]]:
                    return False
    return True


def is_hyperfield(add, mul, int n, int neg_one):
    if n > CMAX:
        raise ValueError("order too large for compiled kernel")
    cdef int cadd[CMAX * CMAX]
    cdef int cmul[CMAX * CMAX]
    cdef bint ok
    _load(add, cadd, n * n)
    _load(mul, cmul, n * n)
    with nogil:
        ok = _is_hyperfield(cadd, cmul, n, neg_one)
    return ok
