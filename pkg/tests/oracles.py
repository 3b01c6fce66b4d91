"""Independent slow-route oracles used only by the tests.

The library multiplies PBW monomials through a closed-form exponent and
builds coproducts by multiplying out generator images.  The oracles here
recompute the same objects by more elementary means — one adjacent-letter
swap at a time, or a textbook recurrence — so tests can compare two genuinely
different routes to the same value.
"""

from bookhopf import Monomial, cyc_one, cyc_zero, root_power

_ORDER = {"x": 0, "y": 1, "g": 2}


def word_of(mono):
    """The letters of a monomial in normal order, e.g. (2,1,1) -> 'xxyg'."""
    return "x" * mono.b + "y" * mono.c + "g" * mono.a


def normal_form(word, p, s):
    """Straighten a word in the letters x, y, g one adjacent swap at a time.

    Returns (e, Monomial) meaning q^e * x^b y^c g^a, or None when a letter
    count reaches p (x^p = y^p = 0 kill the word).  Only the two-letter
    exchange rules are used:

        g x -> q     x g    (exponent +1)
        g y -> q^-s  y g    (exponent -s)
        y x -> q^s   x y    (exponent +s)
    """
    letters = list(word)
    e = 0
    swapped = True
    while swapped:
        swapped = False
        for k in range(len(letters) - 1):
            u, v = letters[k], letters[k + 1]
            if _ORDER[u] <= _ORDER[v]:
                continue
            if u == "g" and v == "x":
                e += 1
            elif u == "g" and v == "y":
                e -= s
            else:  # y x
                e += s
            letters[k], letters[k + 1] = v, u
            swapped = True
    b = letters.count("x")
    c = letters.count("y")
    a = letters.count("g")
    if b >= p or c >= p:
        return None
    return e % p, Monomial(b, c, a % p)


def gaussian_binomial(n, k, p, base_exp=1):
    """The Gaussian binomial [n choose k] in base q^base_exp over Q(zeta_p).

    Computed by the q-Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k],
    which is the convention the coproduct construction realises:
    Delta(x^b) = sum_k [b k]_q x^k (x) x^(b-k) g^k, and Delta(y^c) the same
    shape in base q^(-s^2) with g^(s k) on the right leg.
    """
    if k < 0 or k > n:
        return cyc_zero(p)
    if k == 0 or k == n:
        return cyc_one(p)
    return gaussian_binomial(n - 1, k - 1, p, base_exp) + root_power(
        p, (base_exp * k) % p
    ) * gaussian_binomial(n - 1, k, p, base_exp)
