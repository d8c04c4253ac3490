"""Independent brute-force references shared by the unit and acceptance tests."""

import itertools
import random

from intervalcat.gamma import build_gamma, example_one
from intervalcat.rep import (
    hom_space,
    injective_module,
    interval_module,
    projective_module,
    pushforward,
    pushforward_map,
    random_module,
    random_short_exact,
    restriction,
)


def indicator_hom_dim(P, supp_m, supp_n):
    """Hom between two modules with value k on a support and identity maps.

    Scalars are forced equal along covers inside the overlap and forced to zero
    where a cover leaves the overlap into N only or enters it from M only; the
    dimension counts surviving components of the overlap.
    """
    both = supp_m & supp_n
    parent = {u: u for u in both}

    def find(u):
        while parent[u] != u:
            u = parent[u]
        return u

    killed = set()
    for u, v in P.covers:
        if u in both and v in both:
            parent[find(u)] = find(v)
        elif u in both and v in supp_n:
            killed.add(u)
        elif v in both and u in supp_m:
            killed.add(v)
    dead = {find(u) for u in killed}
    return len({find(u) for u in both} - dead)


def interval_support(X, a, b):
    return {w for w in range(X.size) if X.leq(a, w) and X.leq(w, b)}


def interval_hom_mismatches(X):
    """Pairs of intervals where hom_space disagrees with c <= a <= d <= b or with the component oracle."""
    iv = [(a, b) for a in range(X.size) for b in range(X.size) if X.leq(a, b)]
    mods = {p: interval_module(X, *p) for p in iv}
    bad = []
    for (a, b), (c, d) in itertools.product(iv, repeat=2):
        got = hom_space(mods[(a, b)], mods[(c, d)]).dimension
        formula = int(X.leq(c, a) and X.leq(a, d) and X.leq(d, b))
        brute = indicator_hom_dim(X, interval_support(X, a, b), interval_support(X, c, d))
        if not got == formula == brute:
            bad.append(((a, b), (c, d), got, formula, brute))
    return bad


def projective_hom_mismatches(X):
    bad = []
    for x, y in itertools.product(range(X.size), repeat=2):
        want = int(X.leq(y, x))
        if hom_space(projective_module(X, x), projective_module(X, y)).dimension != want:
            bad.append(("P", x, y))
        # injectives: Hom(I_x, I_y) = k iff y <= x as well
        if hom_space(injective_module(X, x), injective_module(X, y)).dimension != want:
            bad.append(("I", x, y))
    return bad


def restricted_pushforward_mismatches(g):
    """Restriction at y' of the pushforward along y of P_x against its predicted value."""
    bad = []
    for y in range(g.Y.size):
        fib = g.fiber(y)
        Fy = g.fiber_poset(y)
        for k, x in enumerate(fib):
            pushed = pushforward(g, y, projective_module(Fy, k))
            for y2 in range(g.Y.size):
                R = restriction(g, y2, pushed)
                fib2 = g.fiber(y2)
                if g.Y.leq(y2, y) and x in fib2:
                    ok = R.same_as(projective_module(g.fiber_poset(y2), fib2.index(x)))
                else:
                    ok = R.is_zero()
                if not ok:
                    bad.append((x, y, y2))
    return bad


def adjunction_holds(g, y, seed):
    rng = random.Random(seed)
    G = random_module(g.gamma, rng)
    phi = random_module(g.fiber_poset(y), rng)
    left = hom_space(restriction(g, y, G), phi).dimension
    right = hom_space(G, pushforward(g, y, phi)).dimension
    return left == right


def pushforward_exact(g, y, seed):
    """0 -> K -> P -> Q -> 0 over F(y) stays exact after pushing forward."""
    inc, proj = random_short_exact(g.fiber_poset(y), random.Random(seed))
    pi, pp = pushforward_map(g, y, inc), pushforward_map(g, y, proj)
    if not (pi.is_natural() and pp.is_natural() and pp.after(pi).is_zero()):
        return False
    for w in range(g.gamma.size):
        k, p, q = pi.source.dims[w], pi.target.dims[w], pp.target.dims[w]
        if k + q != p:
            return False
        # injective on the left, surjective on the right, exact in the middle
        if pi.rank(w) != k or pp.rank(w) != q or p - pp.rank(w) != pi.rank(w):
            return False
    return True


def example_one_gamma():
    return build_gamma(example_one())
