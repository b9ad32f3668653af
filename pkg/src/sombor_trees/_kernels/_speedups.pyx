# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False, cdivision=True
"""Compiled level-sequence kernels.

Same encoding, iteration order, and floating-point accumulation order as the
pure backend; the two must produce bit-identical results.
"""

from libc.math cimport sqrt
from libc.stdlib cimport free, malloc

BACKEND = "compiled"


cdef int _natural_p(int* L, int n) noexcept nogil:
    cdef int p = n - 1
    while p > 0 and L[p] == 1:
        p -= 1
    return p


cdef bint _advance(int* L, int n, int p) noexcept nogil:
    # Chop-and-replicate successor at position p; False when exhausted.
    cdef int q, d, i
    if p <= 0:
        return False
    if L[p] < 2:
        p = _natural_p(L, n)
        if p <= 0:
            return False
    q = p - 1
    while L[q] != L[p] - 1:
        q -= 1
    d = p - q
    for i in range(p, n):
        L[i] = L[i - d]
    return True


cdef int _free_check(int* L, int n) noexcept nogil:
    # Returns m (start of the second root subtree) when the sequence is the
    # canonical free-tree representative, else -m.
    cdef int m = n
    cdef int i, v, a, b
    for i in range(2, n):
        if L[i] == 1:
            m = i
            break
    cdef int h_left = 0, h_rest = 0
    for i in range(1, m):
        v = L[i] - 1
        if v > h_left:
            h_left = v
    for i in range(m, n):
        if L[i] > h_rest:
            h_rest = L[i]
    if h_rest > h_left:
        return m
    if h_rest < h_left:
        return -m
    cdef int len_left = m - 1
    cdef int len_rest = n - m + 1
    if len_left > len_rest:
        return -m
    if len_left < len_rest:
        return m
    for i in range(1, len_left):
        a = L[1 + i] - 1
        b = L[m + i - 1]
        if a < b:
            return m
        if a > b:
            return -m
    return m


cdef void _init_start(int* L, int n) noexcept nogil:
    # The path rooted at its center: 0..n//2 then 1..(n+1)//2-1.
    cdef int i
    for i in range(n // 2 + 1):
        L[i] = i
    for i in range(1, (n + 1) // 2):
        L[n // 2 + i] = i


cdef class _FreeTreeIterator:
    cdef int n
    cdef int* L
    cdef bint use_jump
    cdef bint done

    def __cinit__(self, int n, bint use_jump):
        self.n = n
        self.use_jump = use_jump
        self.done = False
        self.L = <int*> malloc(n * sizeof(int))
        if self.L == NULL:
            raise MemoryError()
        _init_start(self.L, n)

    def __dealloc__(self):
        if self.L != NULL:
            free(self.L)

    def __iter__(self):
        return self

    def __next__(self):
        cdef int m, i
        if self.done:
            raise StopIteration
        while True:
            m = _free_check(self.L, self.n)
            if m > 0:
                out = tuple([self.L[i] for i in range(self.n)])
                if not _advance(self.L, self.n, _natural_p(self.L, self.n)):
                    self.done = True
                return out
            if self.use_jump:
                i = (-m) - 1
            else:
                i = _natural_p(self.L, self.n)
            if not _advance(self.L, self.n, i):
                self.done = True
                raise StopIteration


def iter_level_sequences(int n, bint use_jump=True):
    """One canonical level sequence per free tree on n vertices."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return iter([(0,)])
    if n == 2:
        return iter([(0, 1)])
    return _FreeTreeIterator(n, use_jump)


def iter_rooted_level_sequences(n):
    """All canonical rooted trees on n vertices, decreasing lexicographic."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        yield (0,)
        return
    L = list(range(n))
    while True:
        yield tuple(L)
        p = n - 1
        while p > 0 and L[p] == 1:
            p -= 1
        if p == 0:
            return
        q = p - 1
        while L[q] != L[p] - 1:
            q -= 1
        d = p - q
        for i in range(p, n):
            L[i] = L[i - d]


cdef double _stats(int* L, int n, int* parent, int* deg, int* incl,
                   int* excl, int* last_at, int* alpha_out) noexcept nogil:
    # Fill parent/deg from the level sequence, run the independence DP, and
    # accumulate the Sombor sum in ascending vertex order.
    cdef int i, p, ii, ei, du, dv
    cdef double so = 0.0
    last_at[0] = 0
    for i in range(1, n):
        p = last_at[L[i] - 1]
        parent[i] = p
        last_at[L[i]] = i
    for i in range(n):
        deg[i] = 0
        incl[i] = 1
        excl[i] = 0
    for i in range(1, n):
        deg[i] += 1
        deg[parent[i]] += 1
    for i in range(n - 1, 0, -1):
        p = parent[i]
        ii = incl[i]
        ei = excl[i]
        excl[p] += ii if ii > ei else ei
        incl[p] += ei
    alpha_out[0] = incl[0] if incl[0] > excl[0] else excl[0]
    for i in range(1, n):
        du = deg[i]
        dv = deg[parent[i]]
        so += sqrt(<double> (du * du + dv * dv))
    return so


def tree_stats_from_levels(levels):
    """(Sombor index, independence number) of the encoded tree."""
    cdef int n = len(levels)
    cdef int i, alpha
    cdef double so
    if n < 1:
        raise ValueError("empty level sequence")
    cdef int* buf = <int*> malloc(6 * (n + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* L = buf
    cdef int* parent = buf + (n + 1)
    cdef int* deg = buf + 2 * (n + 1)
    cdef int* incl = buf + 3 * (n + 1)
    cdef int* excl = buf + 4 * (n + 1)
    cdef int* last_at = buf + 5 * (n + 1)
    try:
        for i in range(n):
            L[i] = levels[i]
        so = _stats(L, n, parent, deg, incl, excl, last_at, &alpha)
        return so, alpha
    finally:
        free(buf)


def family_sweep(int n, int alpha, double tol=1e-9):
    """Fold the whole order-n stream, keeping only trees with this alpha.

    Returns (family_size, best_so, runner_up_so, maximizer_levels).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    cdef long count = 0
    cdef double best = float("-inf")
    cdef double runner = float("-inf")
    cdef list maximizers = []
    cdef double so
    cdef int a, m, i
    cdef bint done = False
    cdef int* buf = <int*> malloc(6 * (n + 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int* L = buf
    cdef int* parent = buf + (n + 1)
    cdef int* deg = buf + 2 * (n + 1)
    cdef int* incl = buf + 3 * (n + 1)
    cdef int* excl = buf + 4 * (n + 1)
    cdef int* last_at = buf + 5 * (n + 1)
    try:
        if n == 1:
            L[0] = 0
        elif n == 2:
            L[0] = 0
            L[1] = 1
        else:
            _init_start(L, n)
        while not done:
            if n <= 2:
                m = 1  # the unique layout is already canonical
                done = True
            else:
                m = _free_check(L, n)
            if m > 0:
                so = _stats(L, n, parent, deg, incl, excl, last_at, &a)
                if a == alpha:
                    count += 1
                    if so > best + tol:
                        if best > runner:
                            runner = best
                        best = so
                        maximizers = [tuple([L[i] for i in range(n)])]
                    elif so >= best - tol:
                        maximizers.append(tuple([L[i] for i in range(n)]))
                        if so > best:
                            best = so
                    elif so > runner:
                        runner = so
                if not done and not _advance(L, n, _natural_p(L, n)):
                    done = True
            else:
                if not _advance(L, n, (-m) - 1):
                    done = True
        return count, best, runner, maximizers
    finally:
        free(buf)
