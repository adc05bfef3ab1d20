# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contracts as ``_pykernels`` for n <= 64."""

from libc.stdint cimport uint64_t

MAX_N = 64

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int low_bit(uint64_t m) noexcept nogil:
    return __builtin_ctzll(m)


cdef inline uint64_t full_mask(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef inline uint64_t above(int v) noexcept nogil:
    # bits strictly greater than v
    if v >= 63:
        return 0
    return ~((((<uint64_t>1) << v) << 1) - 1)


cdef int load(int n, object adj, uint64_t* out) except -1:
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef int i
    for i in range(n):
        out[i] = <uint64_t>adj[i]
    return 0


cdef int c_components(int n, uint64_t* a, uint64_t within, uint64_t* out) noexcept nogil:
    cdef uint64_t todo = full_mask(n) & within
    cdef uint64_t comp, frontier, fresh
    cdef int v, k = 0
    while todo:
        comp = todo & (~todo + 1)
        frontier = comp
        while frontier:
            v = low_bit(frontier)
            frontier &= frontier - 1
            fresh = a[v] & todo & ~comp
            comp |= fresh
            frontier |= fresh
        todo &= ~comp
        out[k] = comp
        k += 1
    return k


def components(int n, adj, within=-1):
    cdef uint64_t a[64]
    cdef uint64_t out[64]
    load(n, adj, a)
    cdef uint64_t w = full_mask(n) & <uint64_t>(within & 0xFFFFFFFFFFFFFFFF)
    cdef int k = c_components(n, a, w, out)
    cdef int i
    res = []
    for i in range(k):
        res.append(out[i])
    return res


def is_connected(int n, adj):
    cdef uint64_t a[64]
    cdef uint64_t out[64]
    load(n, adj, a)
    return c_components(n, a, full_mask(n), out) == 1


cdef void c_odd_even(int n, uint64_t* a, uint64_t removed, int* odd, int* even) noexcept nogil:
    cdef uint64_t out[64]
    cdef int k = c_components(n, a, full_mask(n) & ~removed, out)
    cdef int i
    odd[0] = 0
    even[0] = 0
    for i in range(k):
        if __builtin_popcountll(out[i]) & 1:
            odd[0] += 1
        else:
            even[0] += 1


def odd_even_counts(int n, adj, removed):
    cdef uint64_t a[64]
    cdef int odd, even
    load(n, adj, a)
    c_odd_even(n, a, <uint64_t>removed, &odd, &even)
    return odd, even


def find_claw(int n, adj):
    cdef uint64_t a[64]
    cdef uint64_t nb, ra, rb, ta, tb
    cdef int v, x, y
    load(n, adj, a)
    for v in range(n):
        nb = a[v]
        ta = nb
        while ta:
            x = low_bit(ta)
            ta &= ta - 1
            ra = nb & ~a[x] & above(x)
            tb = ra
            while tb:
                y = low_bit(tb)
                tb &= tb - 1
                rb = ra & ~a[y] & above(y)
                if rb:
                    return v, x, y, low_bit(rb)
    return None


def find_independent_triple(int n, adj):
    cdef uint64_t a[64]
    cdef uint64_t na, common, t
    cdef uint64_t full
    cdef int x, y
    load(n, adj, a)
    full = full_mask(n)
    for x in range(n):
        na = full & ~a[x] & above(x)
        t = na
        while t:
            y = low_bit(t)
            t &= t - 1
            common = na & ~a[y] & above(y)
            if common:
                return x, y, low_bit(common)
    return None


def find_bad_triple(int n, adj):
    cdef uint64_t a[64]
    cdef uint64_t na, nb, t, s, full
    cdef int x, y, z, odd, even
    load(n, adj, a)
    full = full_mask(n)
    for x in range(n):
        na = full & ~a[x] & above(x)
        t = na
        while t:
            y = low_bit(t)
            t &= t - 1
            nb = na & ~a[y] & above(y)
            s = nb
            while s:
                z = low_bit(s)
                s &= s - 1
                c_odd_even(n, a, ((<uint64_t>1) << x) | ((<uint64_t>1) << y) | ((<uint64_t>1) << z),
                           &odd, &even)
                if odd < 2:
                    return x, y, z
    return None


cdef struct MState:
    uint64_t* a
    long long count
    long long limit
    uint64_t sizes
    int early
    int stop
    int depth
    int pu[32]
    int pv[32]
    int min_k
    int max_k
    int min_u[32]
    int min_v[32]
    int max_u[32]
    int max_v[32]


cdef void m_leaf(MState* st, uint64_t free, uint64_t exposed) noexcept nogil:
    cdef uint64_t left = exposed | free
    cdef uint64_t t = free
    cdef int w, i, k
    while t:
        w = low_bit(t)
        t &= t - 1
        if st.a[w] & left:
            return
    st.count += 1
    k = st.depth
    st.sizes |= (<uint64_t>1) << k
    if st.min_k < 0 or k < st.min_k:
        st.min_k = k
        for i in range(k):
            st.min_u[i] = st.pu[i]
            st.min_v[i] = st.pv[i]
    if st.max_k < 0 or k > st.max_k:
        st.max_k = k
        for i in range(k):
            st.max_u[i] = st.pu[i]
            st.max_v[i] = st.pv[i]
    if st.count > st.limit:
        st.stop = 1
    elif st.early and (st.sizes & (st.sizes - 1)):
        st.stop = 1


cdef void m_search(MState* st, uint64_t free, uint64_t exposed) noexcept nogil:
    cdef uint64_t rest = free
    cdef uint64_t nb
    cdef int v = -1, u, w
    while rest:
        w = low_bit(rest)
        rest &= rest - 1
        if st.a[w] & free:
            v = w
            break
    if v < 0:
        m_leaf(st, free, exposed)
        return
    nb = st.a[v] & free
    while nb:
        u = low_bit(nb)
        nb &= nb - 1
        st.pu[st.depth] = v
        st.pv[st.depth] = u
        st.depth += 1
        m_search(st, free & ~(((<uint64_t>1) << v) | ((<uint64_t>1) << u)), exposed)
        st.depth -= 1
        if st.stop:
            return
    if not (st.a[v] & exposed):
        m_search(st, free & ~((<uint64_t>1) << v), exposed | ((<uint64_t>1) << v))


def matching_profile(int n, adj, long long limit, bint early_exit=False):
    cdef uint64_t a[64]
    cdef MState st
    load(n, adj, a)
    st.a = a
    st.count = 0
    st.limit = limit
    st.sizes = 0
    st.early = early_exit
    st.stop = 0
    st.depth = 0
    st.min_k = -1
    st.max_k = -1
    with nogil:
        m_search(&st, full_mask(n), 0)
    cdef int i
    count = -1 if st.count > limit else st.count
    mn = mx = None
    if st.min_k >= 0:
        mn = []
        for i in range(st.min_k):
            mn.append((st.min_u[i], st.min_v[i]))
        mn = tuple(mn)
    if st.max_k >= 0:
        mx = []
        for i in range(st.max_k):
            mx.append((st.max_u[i], st.max_v[i]))
        mx = tuple(mx)
    return count, st.sizes, mn, mx


cdef int has_cut(int n, uint64_t* a, uint64_t full, int size, int start, uint64_t removed) noexcept nogil:
    cdef uint64_t out[64]
    cdef uint64_t left
    cdef int v
    if size == 0:
        left = full & ~removed
        return left != 0 and c_components(n, a, left, out) > 1
    for v in range(start, n - size + 1):
        if has_cut(n, a, full, size - 1, v + 1, removed | ((<uint64_t>1) << v)):
            return 1
    return 0


def vertex_connectivity(int n, adj, int cap):
    cdef uint64_t a[64]
    cdef uint64_t out[64]
    cdef uint64_t full
    cdef int k, v
    load(n, adj, a)
    if n <= 1:
        return 0
    full = full_mask(n)
    if c_components(n, a, full, out) != 1:
        return 0
    for k in range(1, min(cap, n - 2) + 1):
        if has_cut(n, a, full, k, 0, 0):
            return k
    for v in range(n):
        if (a[v] | ((<uint64_t>1) << v)) != full:
            return None
    return n - 1 if n - 1 <= cap else None
