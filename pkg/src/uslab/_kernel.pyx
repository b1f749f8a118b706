# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled PBW straightening kernel; same contract as ``_kernel_py``."""

from uslab._kernel_py import StraighteningError


cdef inline void _acc(dict out, tuple mono, object c):
    cdef object v = out.get(mono, 0) + c
    if v:
        out[mono] = v
    else:
        out.pop(mono, None)


cdef tuple _bump(tuple m, Py_ssize_t idx, long delta):
    cdef list lst = list(m)
    lst[idx] = <long>lst[idx] + delta
    return tuple(lst)


cdef class Kernel:
    cdef public Py_ssize_t size
    cdef public Py_ssize_t e0_start
    cdef public list brackets
    cdef dict _gen_cache
    cdef dict _inv_cache
    cdef dict _mono_cache

    implementation = "cython"

    def __init__(self, size, e0_start, brackets):
        self.size = size
        self.e0_start = e0_start
        self.brackets = [[tuple(entry) for entry in row] for row in brackets]
        self._gen_cache = {}
        self._inv_cache = {}
        self._mono_cache = {}

    def clear(self):
        self._gen_cache.clear()
        self._inv_cache.clear()
        self._mono_cache.clear()

    def cache_size(self):
        return len(self._gen_cache) + len(self._inv_cache) + len(self._mono_cache)

    cpdef dict gen_mono(self, Py_ssize_t g, tuple m):
        cdef tuple key = (g, m)
        cdef object hit = self._gen_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef Py_ssize_t i, first = -1, nm = len(m)
        cdef long a
        for i in range(nm):
            if <long>m[i] != 0:
                first = i
                break
        cdef dict res = {}
        if first < 0 or g <= first:
            res[_bump(m, g, 1)] = 1
            self._gen_cache[key] = res
            return res
        a = m[first]
        if a < 0:
            res[_bump(m, g, 1)] = 1
            self._gen_cache[key] = res
            return res
        cdef tuple rest = _bump(m, first, -1)
        cdef tuple mono, mono2
        cdef object c, c2, cy
        cdef Py_ssize_t y
        for mono, c in self.gen_mono(g, rest).items():
            for mono2, c2 in self.gen_mono(first, mono).items():
                _acc(res, mono2, c * c2)
        for y, cy in (<list>self.brackets[g])[first]:
            for mono2, c2 in self.gen_mono(y, rest).items():
                _acc(res, mono2, cy * c2)
        self._gen_cache[key] = res
        return res

    cpdef dict inv_mono(self, Py_ssize_t k, tuple m):
        cdef tuple key = (k, m)
        cdef object hit = self._inv_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef long deg = 0
        cdef Py_ssize_t i
        for i in range(self.e0_start):
            deg += <long>m[i]
        cdef long cap = 2 * deg + 1
        cdef dict res = {}
        cdef dict cur = {m: 1}
        cdef dict nxt
        cdef long j = 0
        cdef int sign = 1
        cdef tuple mono, mono2
        cdef object c, c2
        while cur:
            if j > cap:
                raise StraighteningError(
                    f"adjoint expansion did not terminate within {cap} steps")
            for mono, c in cur.items():
                _acc(res, _bump(mono, k, -1 - j), sign * c)
            nxt = {}
            for mono, c in cur.items():
                for mono2, c2 in self.gen_mono(k, mono).items():
                    _acc(nxt, mono2, c * c2)
                _acc(nxt, _bump(mono, k, 1), -c)
            cur = nxt
            j += 1
            sign = -sign
        self._inv_cache[key] = res
        return res

    cpdef dict mono_mono(self, tuple m1, tuple m2):
        cdef tuple key = (m1, m2)
        cdef object hit = self._mono_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef Py_ssize_t i, idx, last1 = -1, first2, n1 = len(m1), n2 = len(m2)
        cdef long e, r
        for i in range(n1 - 1, -1, -1):
            if <long>m1[i] != 0:
                last1 = i
                break
        first2 = n2
        for i in range(n2):
            if <long>m2[i] != 0:
                first2 = i
                break
        cdef dict res
        if last1 <= first2 or (last1 >= self.e0_start and first2 >= self.e0_start):
            res = {tuple([<long>m1[i] + <long>m2[i] for i in range(n1)]): 1}
            self._mono_cache[key] = res
            return res
        cdef dict cur = {m2: 1}
        cdef dict nxt
        cdef tuple mono, mono2
        cdef object c, c2
        for idx in range(n1 - 1, -1, -1):
            e = m1[idx]
            if e > 0:
                for r in range(e):
                    nxt = {}
                    for mono, c in cur.items():
                        for mono2, c2 in self.gen_mono(idx, mono).items():
                            _acc(nxt, mono2, c * c2)
                    cur = nxt
            elif e < 0:
                for r in range(-e):
                    nxt = {}
                    for mono, c in cur.items():
                        for mono2, c2 in self.inv_mono(idx, mono).items():
                            _acc(nxt, mono2, c * c2)
                    cur = nxt
        self._mono_cache[key] = cur
        return cur
