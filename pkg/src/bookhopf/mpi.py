"""Search for modular pairs in involution on the book Hopf algebras H(p, s).

A modular pair in involution is a group-like element l together with a
character beta such that twisting by the pair reproduces the square of the
antipode and beta kills l:

    S^2(h) = beta(h_1) l h_2 l^{-1} beta^{-1}(h_3)   and   beta(l) = 1,

where h_1 (x) h_2 (x) h_3 runs over the iterated coproduct of h and
beta^{-1} = beta o S is the convolution inverse of beta.

This module enumerates the candidate group-likes l = g^i and the characters
beta_j (determined by beta(g) = q^j), evaluates the twist by brute force on
every basis monomial, and classifies all p^2 pairs.  Each brute-force verdict
is cross-checked against the closed-form congruences

    implements S^2  <=>  j = i - 1  and  (1 - 2i + s) s = 0   (mod p),
    stable on the implementing locus  <=>  i (i - 1) = 0      (mod p),

and any disagreement aborts the run: the agreement of the two routes is the
point of the computation, so neither side is ever silently preferred.
"""

from .cyclotomic import Cyclotomic, cyc_one, cyc_zero, root_power
from .hopf import BookAlgebra
from .pbw import Element, Monomial, Tensor2


class ConsistencyError(RuntimeError):
    """Two independently computed routes to the same fact disagree.

    Raised when a verified-at-construction invariant fails or when the
    brute-force classification contradicts the closed-form congruences;
    either way it signals a kernel bug, not bad user input.
    """


class GroupLike:
    """A group-like element l = g^i of H(p, s), verified at construction.

    Group-likeness (Delta(l) = l (x) l and eps(l) = 1) is checked through the
    actual structure maps rather than assumed from the form of l.
    """

    __slots__ = ("algebra", "i", "element", "inverse")

    def __init__(self, algebra, i):
        p = algebra.p
        self.algebra = algebra
        self.i = i % p
        mono = Monomial(0, 0, self.i)
        self.element = algebra.monomial_element(mono)
        self.inverse = algebra.monomial_element(Monomial(0, 0, (p - self.i) % p))
        if algebra.coproduct_monomial(mono) != Tensor2.pure(p, algebra.s, mono, mono):
            raise ConsistencyError(f"candidate g^{self.i} is not group-like under Delta")
        if algebra.counit_monomial(mono) != cyc_one(p):
            raise ConsistencyError(f"candidate g^{self.i} has counit != 1")
        if self.element * self.inverse != Element.unit(p, algebra.s):
            raise ConsistencyError(f"g^{self.i} * g^{p - self.i} != 1")

    def __repr__(self):
        return f"GroupLike(g^{self.i})"


class Character:
    """The algebra character beta_j of H(p, s): beta(g) = q^j, beta(x) = beta(y) = 0.

    Any character must kill x and y (the commutation relation g x = q x g
    forces (1 - q) beta(g) beta(x) = 0 with beta(g) invertible, likewise for
    y), so it is determined by its value on g, a p-th root of unity.  The
    constructor re-checks each defining relation under this assignment;
    ``enumerate_characters`` additionally verifies full multiplicativity on
    every basis pair.
    """

    __slots__ = ("algebra", "j", "on_g")

    def __init__(self, algebra, j):
        p = algebra.p
        self.algebra = algebra
        self.j = j % p
        self.on_g = root_power(p, self.j)
        self._verify_relations()

    def __call__(self, h):
        """Evaluate the character on a Monomial or an Element."""
        if isinstance(h, Monomial):
            if h.b or h.c:
                return cyc_zero(self.algebra.p)
            return root_power(self.algebra.p, (self.j * h.a) % self.algebra.p)
        total = cyc_zero(self.algebra.p)
        for mono, coeff in h.terms.items():
            total = total + coeff * self(mono)
        return total

    def _verify_relations(self):
        p, s, q = self.algebra.p, self.algebra.s, self.algebra.q
        vg, vx, vy = self.on_g, cyc_zero(p), cyc_zero(p)
        checks = [
            ("beta(g)^p = 1", vg ** p, cyc_one(p)),
            ("beta(x)^p = 0", vx ** p, cyc_zero(p)),
            ("beta(y)^p = 0", vy ** p, cyc_zero(p)),
            ("g x = q x g", vg * vx, q * vx * vg),
            ("g y = q^-s y g", vg * vy, q ** (-s) * vy * vg),
            ("x y = q^-s y x", vx * vy, q ** (-s) * vy * vx),
        ]
        for name, lhs, rhs in checks:
            if lhs != rhs:
                raise ConsistencyError(f"character beta_{self.j} violates {name}")

    def __repr__(self):
        return f"Character(beta(g)=q^{self.j})"


def enumerate_group_likes(algebra):
    """The p verified group-like candidates g^0, ..., g^(p-1)."""
    return [GroupLike(algebra, i) for i in range(algebra.p)]


def enumerate_characters(algebra):
    """The p characters beta_j, each verified multiplicative on all basis pairs."""
    p, s = algebra.p, algebra.s
    basis = algebra.basis()
    characters = []
    elements = [Element.monomial(p, s, m) for m in basis]
    for j in range(p):
        beta = Character(algebra, j)
        values = [beta(m) for m in basis]
        for m1, e1, v1 in zip(basis, elements, values):
            for m2, e2, v2 in zip(basis, elements, values):
                if beta(e1 * e2) != v1 * v2:
                    raise ConsistencyError(
                        f"beta_{j} not multiplicative at "
                        f"m1={m1.render()}, m2={m2.render()}"
                    )
        characters.append(beta)
    return characters


def check_convolution_inverse(algebra, beta):
    """Whether beta o S is the two-sided convolution inverse of beta.

    Verifies sum beta(m_1) beta(S(m_2)) = eps(m) = sum beta(S(m_1)) beta(m_2)
    over the coproduct legs of every basis monomial.
    """
    A = algebra
    p = A.p
    for m in A.basis():
        eps = A.counit_monomial(m)
        left = cyc_zero(p)
        right = cyc_zero(p)
        for (m1, m2), coeff in A.coproduct_monomial(m).terms.items():
            left = left + coeff * beta(m1) * beta(A.antipode_monomial(m2))
            right = right + coeff * beta(A.antipode_monomial(m1)) * beta(m2)
        if left != eps or right != eps:
            return False
    return True


def _twist_monomial(algebra, l, beta, mono):
    """The twist of one basis monomial, summed over the iterated coproduct."""
    A = algebra
    total = Element.zero(A.p, A.s)
    for (m1, m2, m3), coeff in A.delta2_monomial(mono).terms.items():
        v1 = beta(m1)
        if not v1:
            continue
        v3 = beta(A.antipode_monomial(m3))
        if not v3:
            continue
        conjugated = l.element * A.monomial_element(m2) * l.inverse
        total = total + (coeff * v1 * v3) * conjugated
    return total


def twist(algebra, l, beta, h):
    """T(h) = beta(h_1) l h_2 l^{-1} beta^{-1}(h_3), extended linearly.

    beta^{-1} is evaluated as beta o S (see check_convolution_inverse).
    """
    algebra._own(h)
    total = Element.zero(algebra.p, algebra.s)
    for mono, coeff in h.terms.items():
        total = total + coeff * _twist_monomial(algebra, l, beta, mono)
    return total


def implements_s_squared(algebra, l, beta):
    """Whether the twist by (l, beta) equals S^2 on every basis monomial.

    Full brute force: although both maps are algebra maps (so the generators
    would suffice), every one of the p^3 monomials is compared.
    """
    for mono in algebra.basis():
        if _twist_monomial(algebra, l, beta, mono) != algebra.s_squared_monomial(mono):
            return False
    return True


def is_stable(algebra, l, beta):
    """Evaluate beta(l); the pair is stable when the value is 1."""
    value = beta(l.element)
    return value == cyc_one(algebra.p), value


def closed_form_predicate(p, s, i, j):
    """(implements, stable) from the proof congruences; pure modular arithmetic.

    implements  <=>  j = i - 1 (mod p)  and  (1 - 2i + s) s = 0 (mod p)
    stable      <=>  i (i - 1) = 0 (mod p)

    The stable congruence is the exponent test for beta(l) = q^(i(i-1)) and
    therefore presupposes j = i - 1; it is only meaningful on implementing
    pairs (see classify for how the two routes are reconciled off that locus).
    """
    implements = (j - i + 1) % p == 0 and ((1 - 2 * i + s) * s) % p == 0
    stable = (i * (i - 1)) % p == 0
    return implements, stable


class PairReport:
    """Brute-force verdict for one candidate pair (l = g^i, beta = beta_j)."""

    __slots__ = ("i", "j", "implements_s2", "stable", "stability_value", "closed_form_agrees")

    def __init__(self, i, j, implements_s2, stable, stability_value, closed_form_agrees):
        self.i = i
        self.j = j
        self.implements_s2 = implements_s2
        self.stable = stable
        self.stability_value = stability_value
        self.closed_form_agrees = closed_form_agrees

    @property
    def is_mpi(self):
        return self.implements_s2 and self.stable

    def to_dict(self):
        return {
            "i": self.i,
            "j": self.j,
            "implements_s2": self.implements_s2,
            "stable": self.stable,
            "beta_l": self.stability_value.render(),
        }

    @classmethod
    def from_dict(cls, p, payload):
        return cls(
            payload["i"],
            payload["j"],
            payload["implements_s2"],
            payload["stable"],
            Cyclotomic.parse(p, payload["beta_l"]),
            True,
        )

    def __eq__(self, other):
        if not isinstance(other, PairReport):
            return NotImplemented
        return (
            self.i == other.i
            and self.j == other.j
            and self.implements_s2 == other.implements_s2
            and self.stable == other.stable
            and self.stability_value == other.stability_value
        )

    def __repr__(self):
        return (
            f"PairReport(i={self.i}, j={self.j}, implements_s2={self.implements_s2}, "
            f"stable={self.stable}, beta_l={self.stability_value.render()!r})"
        )


class Classification:
    """All p^2 pair verdicts for one H(p, s), with the MPI and implements subsets."""

    __slots__ = ("p", "s", "pairs", "mpi", "implements")

    def __init__(self, p, s, pairs):
        self.p = p
        self.s = s
        self.pairs = tuple(pairs)
        self.mpi = tuple((r.i, r.j) for r in self.pairs if r.is_mpi)
        self.implements = tuple((r.i, r.j) for r in self.pairs if r.implements_s2)

    def to_dict(self):
        return {
            "p": self.p,
            "s": self.s,
            "pairs": [r.to_dict() for r in self.pairs],
            "mpi": [{"i": i, "j": j} for (i, j) in self.mpi],
            "implements": [{"i": i, "j": j} for (i, j) in self.implements],
        }

    @classmethod
    def from_dict(cls, payload):
        p = payload["p"]
        pairs = [PairReport.from_dict(p, row) for row in payload["pairs"]]
        out = cls(p, payload["s"], pairs)
        if out.mpi != tuple((row["i"], row["j"]) for row in payload["mpi"]):
            raise ValueError("mpi subset inconsistent with pair flags")
        if out.implements != tuple((row["i"], row["j"]) for row in payload["implements"]):
            raise ValueError("implements subset inconsistent with pair flags")
        return out

    def __eq__(self, other):
        if not isinstance(other, Classification):
            return NotImplemented
        return (self.p, self.s, self.pairs) == (other.p, other.s, other.pairs)

    def __repr__(self):
        return f"Classification(p={self.p}, s={self.s}, mpi={list(self.mpi)})"


def classify(algebra):
    """Brute-force all p^2 pairs (g^i, beta_j) and cross-check the closed form.

    For every pair the twist is compared with S^2 on all basis monomials and
    beta(l) is evaluated; the verdicts must agree with closed_form_predicate.
    The implements flags are compared on every pair.  The stable flags are
    compared on implementing pairs only, because the closed-form stable
    congruence presupposes the implementing locus; off that locus the check
    that keeps both routes honest is the exponent shadow beta(l) = q^(i*j),
    which is asserted for every pair.  Any disagreement raises
    ConsistencyError naming the offending (i, j).
    """
    A = algebra
    p, s = A.p, A.s
    group_likes = enumerate_group_likes(A)
    characters = enumerate_characters(A)
    reports = []
    for l in group_likes:
        for beta in characters:
            i, j = l.i, beta.j
            implements = implements_s_squared(A, l, beta)
            stable, value = is_stable(A, l, beta)
            if value != root_power(p, (i * j) % p):
                raise ConsistencyError(
                    f"beta(l) != q^(i*j) at (i={i}, j={j}): got {value.render()}"
                )
            cf_implements, cf_stable = closed_form_predicate(p, s, i, j)
            agrees = implements == cf_implements and (not implements or stable == cf_stable)
            if not agrees:
                raise ConsistencyError(
                    f"brute force disagrees with closed form at (i={i}, j={j}): "
                    f"brute (implements={implements}, stable={stable}) vs "
                    f"closed form (implements={cf_implements}, stable={cf_stable})"
                )
            reports.append(PairReport(i, j, implements, stable, value, agrees))
    return Classification(p, s, reports)
