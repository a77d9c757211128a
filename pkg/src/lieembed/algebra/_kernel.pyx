# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled PBW multiplication kernel.

Same algorithm and cache layout as the pure-Python kernel in
``_kernel_py.py``; the two are checked against each other in the tests.
"""

from ._kernel_py import TermLimitError


cdef inline void _acc(dict out, object mono, object coeff):
    cdef object v = out.get(mono)
    if v is None:
        out[mono] = coeff
    else:
        v = v + coeff
        if v:
            out[mono] = v
        else:
            del out[mono]


cdef tuple _bump(tuple a, Py_ssize_t i, int delta):
    cdef list b = list(a)
    b[i] = b[i] + delta
    return tuple(b)


cdef class Kernel:
    cdef public Py_ssize_t n
    cdef public Py_ssize_t s
    cdef public dict br
    cdef public dict roots
    cdef public object max_terms
    cdef dict _gen_cache
    cdef dict _nc_cache
    cdef dict _mono_cache

    backend = "compiled"

    def __init__(self, ngens, brackets, central_start, roots=None, max_terms=50_000_000):
        self.n = ngens
        self.s = central_start
        self.br = {k: tuple(v) for k, v in brackets.items()}
        self.roots = dict(roots or {})
        self.max_terms = max_terms
        self.clear()

    def clear(self):
        self._gen_cache = {}
        self._nc_cache = {}
        self._mono_cache = {}

    def cache_sizes(self):
        return len(self._gen_cache), len(self._nc_cache), len(self._mono_cache)

    cdef dict _mul_gen(self, tuple a, Py_ssize_t x):
        cdef tuple key = (a, x)
        cdef object hit = self._gen_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef Py_ssize_t k = self.s - 1
        cdef dict r, inner
        cdef tuple ap
        cdef object t, c, t2, c2, z, cz
        while k > x and a[k] == 0:
            k -= 1
        if k <= x:
            r = {_bump(a, x, 1): 1}
        else:
            ap = _bump(a, k, -1)
            r = {}
            for t, c in self._mul_gen(ap, x).items():
                for t2, c2 in self._mul_gen(<tuple>t, k).items():
                    _acc(r, t2, c * c2)
            for z, cz in self.br.get((k, x), ()):
                if z < 0:
                    _acc(r, ap, cz)
                else:
                    for t2, c2 in self._mul_gen(ap, <Py_ssize_t>z).items():
                        _acc(r, t2, cz * c2)
        self._gen_cache[key] = r
        return r

    cdef dict _mul_nc(self, tuple a, tuple b):
        cdef tuple key = (a, b)
        cdef object hit = self._nc_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef Py_ssize_t s = self.s
        cdef Py_ssize_t j = 0, k, i
        cdef dict r
        cdef tuple bp
        cdef object t, c, t2, c2
        while j < s and b[j] == 0:
            j += 1
        if j == s:
            r = {a: 1}
        else:
            k = s - 1
            while k >= 0 and a[k] == 0:
                k -= 1
            if k <= j:
                r = {tuple([a[i] + b[i] for i in range(s)]): 1}
            else:
                bp = _bump(b, j, -1)
                r = {}
                for t, c in self._mul_gen(a, j).items():
                    for t2, c2 in self._mul_nc(<tuple>t, bp).items():
                        _acc(r, t2, c * c2)
        self._nc_cache[key] = r
        return r

    cpdef dict mul_mono(self, tuple a, tuple b):
        cdef tuple key = (a, b)
        cdef object hit = self._mono_cache.get(key)
        if hit is not None:
            return <dict>hit
        cdef Py_ssize_t s = self.s
        cdef dict nc = self._mul_nc(a[:s], b[:s])
        cdef list tail = [x + y for x, y in zip(a[s:], b[s:])]
        cdef list extra = []
        cdef object g, square, e, m, c, ms, cs, m2, c2
        cdef dict r, nxt
        for g, square in self.roots.items():
            e = tail[g - s]
            if e >= 2:
                tail[g - s] = e % 2
                extra.extend([square] * (e // 2))
        cdef tuple ttail = tuple(tail)
        r = {m + ttail: c for m, c in nc.items()}
        for square in extra:
            nxt = {}
            for m, c in r.items():
                for ms, cs in square.items():
                    for m2, c2 in self.mul_mono(m, ms).items():
                        _acc(nxt, m2, c * cs * c2)
            r = nxt
        self._mono_cache[key] = r
        return r

    def mul_terms(self, dict A, dict B):
        cdef dict res = {}
        cdef object limit = self.max_terms
        cdef object ma, mb, ar, ai, br_, bi, cr, ci, m, k
        cdef list v
        cdef object hit
        for ma, pa in A.items():
            ar, ai = pa
            for mb, pb in B.items():
                br_, bi = pb
                cr = ar * br_ - ai * bi
                ci = ar * bi + ai * br_
                if not cr and not ci:
                    continue
                for m, k in self.mul_mono(ma, mb).items():
                    hit = res.get(m)
                    if hit is None:
                        res[m] = [cr * k, ci * k]
                    else:
                        v = <list>hit
                        v[0] = v[0] + cr * k
                        v[1] = v[1] + ci * k
            if len(res) > limit:
                raise TermLimitError(
                    f"intermediate polynomial exceeded {limit} terms")
        return {m: v for m, v in res.items() if v[0] or v[1]}
