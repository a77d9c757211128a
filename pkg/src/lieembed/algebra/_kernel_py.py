"""Pure-Python PBW multiplication kernel.

Monomials are dense exponent tuples in the global generator order. The
kernel multiplies two normal-ordered monomials and returns the normal form
of the product as a dict ``monomial -> coefficient`` with int or Fraction
coefficients. Gaussian coefficients are handled one level up, in the
polynomial class, so the kernel only ever sees rational structure constants.

Generators at the tail of the order that have no brackets with anything are
treated as central: their exponents are added directly and, for adjoined
square roots, reduced with ``root^2 -> square``.
"""

from fractions import Fraction


class TermLimitError(RuntimeError):
    """Raised when an intermediate polynomial exceeds the configured size."""


def _accumulate(out, mono, coeff):
    v = out.get(mono)
    if v is None:
        out[mono] = coeff
    else:
        v += coeff
        if v:
            out[mono] = v
        else:
            del out[mono]


class Kernel:
    backend = "python"

    def __init__(self, ngens, brackets, central_start, roots=None, max_terms=50_000_000):
        """Set up the rewriting tables.

        ``brackets`` maps (a, b) with a > b and both below ``central_start`` to
        a sequence of (z, c) pairs meaning [g_a, g_b] = sum c * g_z, where
        z is a generator index or -1 for the identity.
        ``roots`` maps a central generator index to the square it reduces to,
        given as a dict of full monomials to rational coefficients.
        """
        self.n = ngens
        self.s = central_start
        self.br = {k: tuple(v) for k, v in brackets.items()}
        self.roots = dict(roots or {})
        self.max_terms = max_terms
        self._unit_nc = (0,) * central_start
        self.clear()

    def clear(self):
        self._gen_cache = {}
        self._nc_cache = {}
        self._mono_cache = {}

    def cache_sizes(self):
        return len(self._gen_cache), len(self._nc_cache), len(self._mono_cache)

    def _mul_gen(self, a, x):
        """Normal form of (noncentral monomial a) * (generator x)."""
        key = (a, x)
        r = self._gen_cache.get(key)
        if r is not None:
            return r
        k = self.s - 1
        while k > x and a[k] == 0:
            k -= 1
        if k <= x:
            b = list(a)
            b[x] += 1
            r = {tuple(b): 1}
        else:
            # a = a' * g_k with g_k > x:  a*x = (a'*x)*g_k + a'*[g_k, x]
            ap = list(a)
            ap[k] -= 1
            ap = tuple(ap)
            r = {}
            for t, c in self._mul_gen(ap, x).items():
                for t2, c2 in self._mul_gen(t, k).items():
                    _accumulate(r, t2, c * c2)
            for z, cz in self.br.get((k, x), ()):
                if z < 0:
                    _accumulate(r, ap, cz)
                else:
                    for t2, c2 in self._mul_gen(ap, z).items():
                        _accumulate(r, t2, cz * c2)
        self._gen_cache[key] = r
        return r

    def _mul_nc(self, a, b):
        """Normal form of a product of two noncentral monomials."""
        key = (a, b)
        r = self._nc_cache.get(key)
        if r is not None:
            return r
        s = self.s
        j = 0
        while j < s and b[j] == 0:
            j += 1
        if j == s:
            r = {a: 1}
        else:
            k = s - 1
            while k >= 0 and a[k] == 0:
                k -= 1
            if k <= j:
                r = {tuple(x + y for x, y in zip(a, b)): 1}
            else:
                bp = list(b)
                bp[j] -= 1
                bp = tuple(bp)
                r = {}
                for t, c in self._mul_gen(a, j).items():
                    for t2, c2 in self._mul_nc(t, bp).items():
                        _accumulate(r, t2, c * c2)
        self._nc_cache[key] = r
        return r

    def mul_mono(self, a, b):
        key = (a, b)
        r = self._mono_cache.get(key)
        if r is not None:
            return r
        s = self.s
        nc = self._mul_nc(a[:s], b[:s])
        tail = [x + y for x, y in zip(a[s:], b[s:])]
        extra = []
        for g, square in self.roots.items():
            e = tail[g - s]
            if e >= 2:
                tail[g - s] = e % 2
                extra.extend([square] * (e // 2))
        tail = tuple(tail)
        r = {m + tail: c for m, c in nc.items()}
        for square in extra:
            nxt = {}
            for m, c in r.items():
                for ms, cs in square.items():
                    for m2, c2 in self.mul_mono(m, ms).items():
                        _accumulate(nxt, m2, c * cs * c2)
            r = nxt
        self._mono_cache[key] = r
        return r

    def mul_terms(self, A, B):
        """Multiply coefficient maps with (re, im) numerator pairs.

        Returns a dict ``monomial -> [re, im]`` with zero entries removed.
        """
        res = {}
        limit = self.max_terms
        mul_mono = self.mul_mono
        for ma, (ar, ai) in A.items():
            for mb, (br, bi) in B.items():
                cr = ar * br - ai * bi
                ci = ar * bi + ai * br
                if not cr and not ci:
                    continue
                for m, k in mul_mono(ma, mb).items():
                    v = res.get(m)
                    if v is None:
                        res[m] = [cr * k, ci * k]
                    else:
                        v[0] += cr * k
                        v[1] += ci * k
            if len(res) > limit:
                raise TermLimitError(
                    f"intermediate polynomial exceeded {limit} terms")
        return {m: v for m, v in res.items() if v[0] or v[1]}


def uses_fractions(brackets, roots):
    """Whether any structure constant or root square is a non-integer."""
    for pairs in brackets.values():
        for _, c in pairs:
            if isinstance(c, Fraction) and c.denominator != 1:
                return True
    for square in (roots or {}).values():
        for c in square.values():
            if isinstance(c, Fraction) and c.denominator != 1:
                return True
    return False
