# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse echelon rank over Z (fraction-free) or GF(p).

Same algorithm as ``_echelon_py``; values live in 64-bit integers and every
product is overflow-checked. On overflow ``OverflowError`` is raised and the
caller reruns the pure-Python version, so results are always exact.
"""
from libcpp.vector cimport vector
from libcpp.unordered_map cimport unordered_map
from libcpp.pair cimport pair
from libcpp.utility cimport move

cdef extern from *:
    """
    static inline int enbc_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int enbc_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    bint enbc_mul_ovf(long long a, long long b, long long *r) nogil
    bint enbc_sub_ovf(long long a, long long b, long long *r) nogil

ctypedef pair[long long, long long] Entry
ctypedef vector[Entry] Row


cdef inline long long _gcd(long long a, long long b) noexcept nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef inline long long _inv_mod(long long a, long long m) noexcept nogil:
    cdef long long t = 0, nt = 1, r = m, nr = a % m, q, tmp
    if nr < 0:
        nr += m
    while nr:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += m
    return t


cdef void _make_primitive(Row& row) noexcept nogil:
    cdef long long g = 0
    cdef size_t i
    for i in range(row.size()):
        g = _gcd(g, row[i].second)
        if g == 1:
            break
    if row[0].second < 0:
        g = -g
    if g != 1:
        for i in range(row.size()):
            row[i].second = row[i].second // g


cdef int _combine_z(const Row& r, const Row& p, Row& out) except -1 nogil:
    # out = mb'*r - ma'*p with the leading entries cancelling
    cdef long long a = r[0].second, b = p[0].second
    cdef long long g = _gcd(a, b)
    cdef long long ma = b // g, mb = a // g
    cdef long long x, y, w
    cdef size_t i = 0, j = 0
    out.clear()
    while i < r.size() or j < p.size():
        if j >= p.size() or (i < r.size() and r[i].first < p[j].first):
            if enbc_mul_ovf(ma, r[i].second, &w):
                with gil:
                    raise OverflowError("int64 overflow in echelon kernel")
            out.push_back(Entry(r[i].first, w))
            i += 1
        elif i >= r.size() or p[j].first < r[i].first:
            if enbc_mul_ovf(mb, p[j].second, &w) or enbc_sub_ovf(0, w, &w):
                with gil:
                    raise OverflowError("int64 overflow in echelon kernel")
            out.push_back(Entry(p[j].first, w))
            j += 1
        else:
            if enbc_mul_ovf(ma, r[i].second, &x) or enbc_mul_ovf(mb, p[j].second, &y) \
                    or enbc_sub_ovf(x, y, &w):
                with gil:
                    raise OverflowError("int64 overflow in echelon kernel")
            if w != 0:
                out.push_back(Entry(r[i].first, w))
            i += 1
            j += 1
    if out.size():
        _make_primitive(out)
    return 0


cdef void _combine_p(const Row& r, const Row& p, Row& out, long long m) noexcept nogil:
    # pivot rows are monic: out = r - a*p (mod m)
    cdef long long a = r[0].second, w
    cdef size_t i = 0, j = 0
    out.clear()
    while i < r.size() or j < p.size():
        if j >= p.size() or (i < r.size() and r[i].first < p[j].first):
            out.push_back(r[i])
            i += 1
        elif i >= r.size() or p[j].first < r[i].first:
            w = (m - (a * p[j].second) % m) % m
            if w:
                out.push_back(Entry(p[j].first, w))
            j += 1
        else:
            w = (r[i].second - (a * p[j].second) % m) % m
            if w < 0:
                w += m
            if w:
                out.push_back(Entry(r[i].first, w))
            i += 1
            j += 1


def echelon_rank(rows, long long modulus=0):
    """Rank of the sparse integer matrix ``rows`` (over Q, or GF(modulus))."""
    if modulus < 0 or modulus >= (1LL << 31):
        raise OverflowError("modulus outside the kernel range")
    cdef unordered_map[long long, Row] pivots
    cdef Row row, tmp
    cdef long long c, v, inv
    cdef size_t k
    cdef unordered_map[long long, Row].iterator it
    for pairs in rows:
        row.clear()
        for c, v in sorted(pairs):
            if modulus:
                v = v % modulus
                if v < 0:
                    v += modulus
            if v != 0:
                row.push_back(Entry(c, v))
        with nogil:
            while row.size():
                it = pivots.find(row[0].first)
                if it == pivots.end():
                    if modulus:
                        inv = _inv_mod(row[0].second, modulus)
                        for k in range(row.size()):
                            row[k].second = (row[k].second * inv) % modulus
                    else:
                        _make_primitive(row)
                    pivots[row[0].first] = row
                    break
                if modulus:
                    _combine_p(row, pivots[row[0].first], tmp, modulus)
                else:
                    _combine_z(row, pivots[row[0].first], tmp)
                row.swap(tmp)
    return pivots.size()
