"""Embeddings between hyperballeans of the ordinal omega with the ideal of finite sets.

Windowed to subsets of ``[0, h)``. The odd-ordinal embedding is
``f(F) = {2 min F} | {2n + 1 : n in F}``, i.e. the increasing bijection onto
the odd numbers is ``n -> 2n + 1`` and the extra point is the predecessor of
the least odd image.
"""

from __future__ import annotations

import numpy as np

from .core import ContractViolation
from .hyper import HyperBallean, cartesian_ball, exp_ball_iary, exp_ball_point_ideal
from .ideals import Ideal
from .maps import BalleanMap
from .subsets import GroundSet, bits, interval, lowest, mask, submasks
from .verdict import Verdict


class WindowTooSmall(ValueError):
    pass


def phi(n: int) -> int:
    return 2 * n + 1


def spread_odd(m: int) -> int:
    """Image of a set under ``n -> 2n + 1``."""
    return mask(phi(n) for n in bits(m))


def kcube_f(m: int) -> int:
    if m == 0:
        return 0
    return spread_odd(m) | 1 << (phi(lowest(m)) - 1)


def in_image(z: int) -> bool:
    """Membership in ``f(P(omega))``: empty, or an even minimum ``e`` with ``e + 1`` present and all else odd."""
    if z == 0:
        return True
    e, *rest = bits(z)
    return e % 2 == 0 and e + 1 in rest and all(v % 2 for v in rest)


def shape_ok(z: int) -> bool:
    """Exactly one even element, and it is the minimum."""
    evens = [e for e in bits(z) if e % 2 == 0]
    return len(evens) == 1 and evens[0] == min(bits(z))


def f_table(h: int) -> np.ndarray:
    return np.array([kcube_f(w) for w in range(1 << h)], dtype=np.int64)


def _submask_array(k: int) -> np.ndarray:
    return np.array(list(submasks(k)), dtype=np.int64)


def check_embedding_identity(h: int) -> Verdict:
    """``f(expB_K(A, [0,a])) == expB_Kary(f(A), [0, phi(a)]) & S`` for all ``A`` in ``P([0,h))``, ``a < h``.

    The left side uses the point-ideal hyperball formula; the right side
    filters the whole windowed image ``S`` by the I-ary hyperball bounds,
    which is exact because every member of ``S`` under the upper bound
    comes from a subset of the window.
    """
    if 2 * h > 62:
        raise WindowTooSmall("horizon too large for 64-bit masks")
    table = f_table(h)
    nonzero = table[1:]
    for a in range(h):
        k = interval(0, a)
        kk = interval(0, phi(a))
        subs = _submask_array(k)[1:]
        for A in range(1, 1 << h):
            if A & k == 0:
                left = np.array([table[A]])
            else:
                left = np.unique(table[(A & ~k) | subs])
            fa = int(table[A])
            lo, hi = fa & ~kk, fa | kk
            right = nonzero[((nonzero & lo) == lo) & ((nonzero & ~hi) == 0)]
            right = np.unique(right)
            if left.shape != right.shape or not np.array_equal(left, right):
                return Verdict.fails({"A": bits(A), "alpha": a,
                                      "left": [bits(int(z)) for z in left],
                                      "right": [bits(int(z)) for z in right]})
    return Verdict.holds(horizon=h)


def check_parity_lemma(h: int) -> Verdict:
    """For non-empty ``Z`` between ``A - [0,a]`` and ``A | [0,a]``: ``Z != A - [0,a]`` iff ``2 min Z <= phi(a)``."""
    lows = np.array([0] + [lowest(z) for z in range(1, 1 << h)], dtype=np.int64)
    for a in range(h):
        k = interval(0, a)
        subs = _submask_array(k)
        for A in range(1 << h):
            base = A & ~k
            z = base | subs
            z = z[z != 0]
            lhs = z != base
            rhs = 2 * lows[z] <= phi(a)
            bad = np.nonzero(lhs != rhs)[0]
            if bad.size:
                return Verdict.fails({"A": bits(A), "alpha": a, "Z": bits(int(z[bad[0]]))})
    return Verdict.holds(horizon=h)


def check_image_shape(h: int) -> Verdict:
    for w in range(1, 1 << h):
        z = kcube_f(w)
        if not shape_ok(z) or not in_image(z):
            return Verdict.fails({"F": bits(w), "image": bits(z)})
    return Verdict.holds(horizon=h)


def segment_radii(n: int) -> tuple[int, ...]:
    return tuple(interval(0, a) for a in range(n))


def map_kcube_omega(h: int) -> BalleanMap:
    """The odd-ordinal embedding as a map of windowed hyperballeans (small ``h`` only)."""
    small = Ideal.frechet(h)
    big = Ideal.frechet(2 * h)
    dom = HyperBallean(small, "expPointIdeal", small.ground.subsets, segment_radii(h),
                       segment_radii(h), lambda a, k: exp_ball_point_ideal(small, a, k))
    image = tuple(sorted(kcube_f(w) for w in range(1 << h)))
    in_s = frozenset(image)
    cod = HyperBallean(big, "expIary|S", lambda: image, segment_radii(2 * h),
                       segment_radii(2 * h), lambda a, k: exp_ball_iary(big, a, k) & in_s)
    return BalleanMap(dom, cod, kcube_f, "kcubeOmega")


def kcube_psi(h: int) -> dict:
    return {interval(0, a): interval(0, phi(a)) for a in range(h)}


def default_shift(x: int, window: int) -> list[int]:
    """Order-preserving bijection from ``[0, window - x - 1)`` onto ``(x, window)``."""
    return [n + x + 1 for n in range(window - x - 1)]


def map_kcube_i(x: int, window: int, g: list[int] | None = None) -> BalleanMap:
    """``X -> g(X) | {x}`` from the windowed Cartesian ballean onto sets with minimum ``x``."""
    if g is None:
        g = default_shift(x, window)
    m = len(g)
    if m < 1 or x < 0:
        raise WindowTooSmall(f"no room above {x} in a window of {window}")
    if sorted(g) != list(range(x + 1, window)):
        raise WindowTooSmall(f"g={g} is not a bijection onto ({x}, {window})")
    dom_ideal = Ideal(GroundSet.naturals(m), "frechet")
    cod_ideal = Ideal(GroundSet.naturals(window), "frechet")
    every = tuple(range(1 << m))
    dom = HyperBallean(dom_ideal, "cartesian", lambda: every, every, every,
                       lambda a, k: cartesian_ball(dom_ideal, a, k))
    upper = tuple(upper_family(x, window))
    in_upper = frozenset(upper)
    radii = tuple(range(1 << window))
    cod = HyperBallean(cod_ideal, "expPointIdeal|U>=x", lambda: upper, radii, radii,
                       lambda a, k: exp_ball_point_ideal(cod_ideal, a, k) & in_upper)

    def f(s):
        return mask(g[n] for n in bits(s)) | 1 << x

    return BalleanMap(dom, cod, f, "kcubeI")


def check_cube_identity(fm: BalleanMap) -> Verdict:
    """``f(B_C(X, K)) == expB_K(f(X), g(K) | {x}) & U>=x`` on the whole window."""
    dom, cod = fm.domain, fm.codomain
    x = lowest(fm(0))
    for k in dom.radii:
        psi = fm(k)
        for s in dom.points:
            left = frozenset(fm(y) for y in dom.ball(s, k))
            right = cod.ball(fm(s), psi)
            if left != right:
                return Verdict.fails({"X": bits(s), "K": bits(k), "x": x})
    return Verdict.holds(horizon=dom.ideal.ground.size)


def upper_family(x: int, window: int) -> list[int]:
    return [u for u in range(1, 1 << window) if lowest(u) == x]


def check_copies_close(window: int) -> Verdict:
    """Each copy lies in the hyperball of radius ``[x, y]`` around the other, for all ``x < y``."""
    ideal = Ideal.frechet(window)
    fams = {x: upper_family(x, window) for x in range(window)}
    for x in range(window):
        for y in range(x + 1, window):
            k = interval(x, y)
            for src, dst in ((x, y), (y, x)):
                reach = set()
                for a in fams[dst]:
                    reach |= exp_ball_point_ideal(ideal, a, k)
                if not set(fams[src]) <= reach:
                    return Verdict.fails({"x": x, "y": y, "uncovered": src})
    return Verdict.holds(horizon=window)


def check_copies_partition(window: int) -> Verdict:
    seen = {}
    for x in range(window):
        for u in upper_family(x, window):
            if u in seen:
                return Verdict.fails({"set": bits(u), "copies": [seen[u], x]})
            seen[u] = x
    if len(seen) != (1 << window) - 1:
        missing = next(u for u in range(1, 1 << window) if u not in seen)
        return Verdict.fails({"missing": bits(missing)})
    return Verdict.holds(horizon=window)


def check_finite_images(h: int) -> Verdict:
    """Non-empty finite sets go to non-empty finite (bounded) members of the image."""
    for w in range(1, 1 << h):
        z = kcube_f(w)
        if z == 0 or not in_image(z) or z >= 1 << (2 * h):
            return Verdict.fails({"F": bits(w)})
    return Verdict.holds(horizon=h)


def require_injective(fm: BalleanMap):
    if not fm.is_injective():
        raise ContractViolation(f"{fm.name} is not injective")
