"""Pure-Python PBW straightening kernel.

Monomials are dense exponent tuples in PBW order; the last ``n`` slots are the
mutually commuting generators e_{01}..e_{0n}, the only ones allowed negative
exponents.  All structure constants are integers, so products of monomials
are returned as ``{monomial: int}`` dicts.
"""


class StraighteningError(RuntimeError):
    pass


def _acc(out, mono, c):
    v = out.get(mono, 0) + c
    if v:
        out[mono] = v
    else:
        out.pop(mono, None)


class Kernel:
    implementation = "python"

    def __init__(self, size, e0_start, brackets):
        # brackets[a][b]: tuple of (index, int coefficient) for [g_a, g_b]
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

    def gen_mono(self, g, m):
        """Normal form of g * m as {monomial: int}."""
        key = (g, m)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        first = -1
        for i in range(len(m)):
            if m[i]:
                first = i
                break
        if first < 0 or g <= first:
            lst = list(m)
            lst[g] += 1
            mono = tuple(lst)
            res = {mono: 1}
            self._gen_cache[key] = res
            return res
        a = m[first]
        res = {}
        if a < 0:
            # first factor is some e_{0k}; then g is a later e_{0j}, all commute
            lst = list(m)
            lst[g] += 1
            res[tuple(lst)] = 1
            self._gen_cache[key] = res
            return res
        lst = list(m)
        lst[first] -= 1
        rest = tuple(lst)
        for mono, c in self.gen_mono(g, rest).items():
            for mono2, c2 in self.gen_mono(first, mono).items():
                _acc(res, mono2, c * c2)
        for y, cy in self.brackets[g][first]:
            for mono2, c2 in self.gen_mono(y, rest).items():
                _acc(res, mono2, cy * c2)
        self._gen_cache[key] = res
        return res

    def inv_mono(self, k, m):
        """Normal form of e^{-1} * m for the generator e with index ``k``
        (an e_{0j}), via e^{-1} m = sum_j (-1)^j (ad e)^j(m) e^{-1-j}."""
        key = (k, m)
        hit = self._inv_cache.get(key)
        if hit is not None:
            return hit
        deg = 0
        for i in range(self.e0_start):
            deg += m[i]
        cap = 2 * deg + 1
        res = {}
        cur = {m: 1}
        j = 0
        sign = 1
        while cur:
            if j > cap:
                raise StraighteningError(
                    f"adjoint expansion did not terminate within {cap} steps")
            for mono, c in cur.items():
                lst = list(mono)
                lst[k] -= 1 + j
                _acc(res, tuple(lst), sign * c)
            nxt = {}
            for mono, c in cur.items():
                for mono2, c2 in self.gen_mono(k, mono).items():
                    _acc(nxt, mono2, c * c2)
                lst = list(mono)
                lst[k] += 1
                _acc(nxt, tuple(lst), -c)
            cur = nxt
            j += 1
            sign = -sign
        self._inv_cache[key] = res
        return res

    def mono_mono(self, m1, m2):
        """Normal form of m1 * m2 as {monomial: int}."""
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        last1 = -1
        for i in range(len(m1) - 1, -1, -1):
            if m1[i]:
                last1 = i
                break
        first2 = len(m2)
        for i in range(len(m2)):
            if m2[i]:
                first2 = i
                break
        if last1 <= first2 or (last1 >= self.e0_start and first2 >= self.e0_start):
            res = {tuple(a + b for a, b in zip(m1, m2)): 1}
            self._mono_cache[key] = res
            return res
        cur = {m2: 1}
        for idx in range(len(m1) - 1, -1, -1):
            e = m1[idx]
            if e > 0:
                for _ in range(e):
                    nxt = {}
                    for mono, c in cur.items():
                        for mono2, c2 in self.gen_mono(idx, mono).items():
                            _acc(nxt, mono2, c * c2)
                    cur = nxt
            elif e < 0:
                for _ in range(-e):
                    nxt = {}
                    for mono, c in cur.items():
                        for mono2, c2 in self.inv_mono(idx, mono).items():
                            _acc(nxt, mono2, c * c2)
                    cur = nxt
        self._mono_cache[key] = cur
        return cur
