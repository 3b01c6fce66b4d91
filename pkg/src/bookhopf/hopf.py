"""The book Hopf algebra H(p, s) over Q(zeta_p) and its structure maps.

H(p, s) is the p^3-dimensional algebra with generators g, x, y subject to

    g x = q x g,   g y = q^(-s) y g,   g^p = 1,   x^p = y^p = 0,
    x y = q^(-s) y x,

where q = zeta_p, carrying the Hopf structure

    Delta(g) = g (x) g
    Delta(x) = 1 (x) x + x (x) g
    Delta(y) = 1 (x) y + y (x) g^s
    eps(g) = 1, eps(x) = eps(y) = 0
    S(g) = g^(-1), S(x) = -x g^(-1), S(y) = -y g^(-s)

for 0 < s < p.  At s = 0 the coproduct fails to respect y^p = 0 in
characteristic zero (Delta(y)^p != 0), so H(p, 0) is not a bialgebra; the
constructor refuses it unless ``permissive=True``, which builds the maps
anyway so that the failure can be exhibited by the axiom checker.

Structure maps are extended from the generators: Delta and eps as algebra
maps over the PBW normal form, S as an anti-algebra map
(S(x^b y^c g^a) = S(g)^a S(y)^c S(x)^b).  Images of basis monomials are
memoized per instance; the fill is idempotent (pure values, insertion only),
so racing first computations are harmless.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic, cyc_zero, root_power
from .pbw import ONE, Element, Monomial, Tensor2, Tensor3

__all__ = ["BookAlgebra", "is_odd_prime"]


def is_odd_prime(p):
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class BookAlgebra:
    """A concrete H(p, s) with exact structure maps over Q(zeta_p)."""

    def __init__(self, p, s, permissive=False, debug_checks=False):
        if not is_odd_prime(p):
            raise ValueError(f"p must be an odd prime, got {p!r}")
        if not isinstance(s, int) or not 0 <= s < p:
            raise ValueError(f"s must be an integer with 0 <= s < {p}, got {s!r}")
        if s == 0 and not permissive:
            raise ValueError(
                f"s = 0 is rejected: H({p}, 0) is not a bialgebra in characteristic "
                f"zero (Delta(y)^{p} != 0 although y^{p} = 0); "
                "pass permissive=True to build it anyway"
            )
        self.p = p
        self.s = s
        self.permissive = permissive
        self.debug_checks = debug_checks
        self.q = root_power(p, 1)

        self.one = Element.unit(p, s)
        self.g = Element.monomial(p, s, Monomial(0, 0, 1))
        self.x = Element.monomial(p, s, Monomial(1, 0, 0))
        self.y = Element.monomial(p, s, Monomial(0, 1, 0))

        # generator images of the three structure maps
        self._delta_gen = {
            "x": Tensor2(p, s, {(ONE, Monomial(1, 0, 0)): 1, (Monomial(1, 0, 0), Monomial(0, 0, 1)): 1}),
            "y": Tensor2(p, s, {(ONE, Monomial(0, 1, 0)): 1, (Monomial(0, 1, 0), Monomial(0, 0, s % p)): 1}),
            "g": Tensor2(p, s, {(Monomial(0, 0, 1), Monomial(0, 0, 1)): 1}),
        }
        self._antipode_gen = {
            "x": Element(p, s, {Monomial(1, 0, p - 1): -1}),
            "y": Element(p, s, {Monomial(0, 1, (p - s) % p): -1}),
            "g": Element(p, s, {Monomial(0, 0, p - 1): 1}),
        }

        # lazily grown generator-power tables and per-monomial caches
        self._delta_pows = {k: [Tensor2.unit(p, s)] for k in ("x", "y", "g")}
        self._antipode_pows = {k: [Element.unit(p, s)] for k in ("x", "y", "g")}
        self._delta_mono = {}
        self._antipode_mono = {}
        self._s2_mono = {}
        self._delta2_mono = {}
        self._basis = None

    # -- basis ----------------------------------------------------------------

    @property
    def dimension(self):
        return self.p ** 3

    def basis(self):
        """All p^3 basis monomials, in the fixed (b, c, a) lexicographic order."""
        if self._basis is None:
            p = self.p
            self._basis = tuple(
                Monomial(b, c, a) for b in range(p) for c in range(p) for a in range(p)
            )
        return self._basis

    def monomial_element(self, mono, coeff=1):
        return Element.monomial(self.p, self.s, mono, coeff)

    # -- structure maps on basis monomials ---------------------------------------

    def _gen_power(self, table, gen, images, k):
        lst = table[gen]
        while len(lst) <= k:
            lst.append(lst[-1] * images[gen])
        return lst[k]

    def coproduct_monomial(self, mono):
        """Delta(x^b y^c g^a) = Delta(x)^b Delta(y)^c Delta(g)^a, memoized."""
        t = self._delta_mono.get(mono)
        if t is None:
            t = (
                self._gen_power(self._delta_pows, "x", self._delta_gen, mono.b)
                * self._gen_power(self._delta_pows, "y", self._delta_gen, mono.c)
                * self._gen_power(self._delta_pows, "g", self._delta_gen, mono.a)
            )
            self._delta_mono[mono] = t
        return t

    def counit_monomial(self, mono):
        """eps(x^b y^c g^a) = 1 if b = c = 0 else 0."""
        if mono.b == 0 and mono.c == 0:
            return root_power(self.p, 0)
        return cyc_zero(self.p)

    def antipode_monomial(self, mono):
        """S(x^b y^c g^a) = S(g)^a S(y)^c S(x)^b, memoized."""
        el = self._antipode_mono.get(mono)
        if el is None:
            el = (
                self._gen_power(self._antipode_pows, "g", self._antipode_gen, mono.a)
                * self._gen_power(self._antipode_pows, "y", self._antipode_gen, mono.c)
                * self._gen_power(self._antipode_pows, "x", self._antipode_gen, mono.b)
            )
            self._antipode_mono[mono] = el
        return el

    def s_squared_monomial(self, mono):
        el = self._s2_mono.get(mono)
        if el is None:
            el = self.antipode(self.antipode_monomial(mono))
            self._s2_mono[mono] = el
        return el

    def delta2_monomial(self, mono):
        """(Delta (x) id) Delta on a basis monomial, memoized."""
        t = self._delta2_mono.get(mono)
        if t is None:
            acc = {}
            for (m1, m2), c in self.coproduct_monomial(mono).terms.items():
                for (u, v), d in self.coproduct_monomial(m1).terms.items():
                    key = (u, v, m2)
                    coeff = c * d
                    prev = acc.get(key)
                    tot = coeff if prev is None else prev + coeff
                    if tot:
                        acc[key] = tot
                    elif prev is not None:
                        del acc[key]
            t = Tensor3._raw(self.p, self.s, acc)
            if self.debug_checks:
                other = {}
                for (m1, m2), c in self.coproduct_monomial(mono).terms.items():
                    for (u, v), d in self.coproduct_monomial(m2).terms.items():
                        key = (m1, u, v)
                        coeff = c * d
                        prev = other.get(key)
                        tot = coeff if prev is None else prev + coeff
                        if tot:
                            other[key] = tot
                        elif prev is not None:
                            del other[key]
                if other != acc:
                    raise AssertionError(
                        f"coassociativity breach at {mono.render()} (debug check)"
                    )
            self._delta2_mono[mono] = t
        return t

    # -- linear extensions ---------------------------------------------------------

    def _extend(self, h, image, result_cls):
        acc = {}
        for mono, c in h.terms.items():
            for key, d in image(mono).terms.items():
                coeff = c * d
                prev = acc.get(key)
                tot = coeff if prev is None else prev + coeff
                if tot:
                    acc[key] = tot
                elif prev is not None:
                    del acc[key]
        return result_cls._raw(self.p, self.s, acc)

    def _own(self, h):
        if not isinstance(h, Element):
            raise TypeError(f"expected an Element, got {type(h).__name__}")
        if (h.p, h.s) != (self.p, self.s):
            raise ValueError(f"element of H({h.p},{h.s}) passed to H({self.p},{self.s})")
        return h

    def coproduct(self, h):
        return self._extend(self._own(h), self.coproduct_monomial, Tensor2)

    def counit(self, h):
        total = cyc_zero(self.p)
        for mono, c in self._own(h).terms.items():
            if mono.b == 0 and mono.c == 0:
                total = total + c
        return total

    def antipode(self, h):
        return self._extend(self._own(h), self.antipode_monomial, Element)

    def s_squared(self, h):
        return self._extend(self._own(h), self.s_squared_monomial, Element)

    def delta2(self, h):
        return self._extend(self._own(h), self.delta2_monomial, Tensor3)

    def __repr__(self):
        flag = ", permissive" if self.permissive else ""
        return f"BookAlgebra(p={self.p}, s={self.s}{flag})"
