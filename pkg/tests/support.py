"""Independent oracles and random generators for the test suite.

The steady-state count on an invariant line is recomputed here from
scratch: restricted to the line, the rate balance is a polynomial in the
line parameter, which we expand with exact rational coefficients and
count with a Sturm chain, also exact.  None of the package's interval
walking, bracketing or sampling code is involved, so agreement between
the two is meaningful evidence.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from crn1d import (
    GProblem,
    Reaction,
    ReactionNetwork,
    critical_points,
    eval_g,
    is_constant,
    one_dim_structure,
)


def _exact(value) -> Fraction:
    if isinstance(value, float):
        return Fraction(value)
    return Fraction(value)


# ---------------------------------------------------------------------------
# Line geometry.


def line_coordinates(struct, c):
    """Each species as an exact linear function a*t + b of the parameter
    t = value of the base species, returned in original species order."""
    g = struct.gamma
    cs = [_exact(v) for v in c]
    coords = [None] * len(g)
    for p, orig in enumerate(struct.species_perm):
        if p == 0:
            coords[orig] = (Fraction(1), Fraction(0))
        else:
            coords[orig] = (Fraction(g[p], g[0]), -cs[p - 1] / g[0])
    return coords


def positive_window(coords):
    """Open t-interval on which every coordinate is positive.

    Returns exact (lo, hi) Fractions, hi being None for an unbounded
    window, or None when the window is empty.
    """
    lo, hi = Fraction(0), None
    for a, b in coords:
        if a == 0:
            if b <= 0:
                return None
            continue
        bound = -b / a
        if a > 0:
            lo = max(lo, bound)
        elif hi is None or bound < hi:
            hi = bound
    if hi is not None and lo >= hi:
        return None
    return lo, hi


def _poly_mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def line_polynomial(net: ReactionNetwork, kappa, c):
    """Exact coefficients (ascending powers of t) of the scalar rate
    balance restricted to the line pinned by ``c``."""
    struct = one_dim_structure(net)
    coords = line_coordinates(struct, c)
    lam = struct.lambda_user()
    total: list[Fraction] = [Fraction(0)]
    for j, rx in enumerate(net.reactions):
        mono = [Fraction(1)]
        for k, exp in enumerate(rx.reactant):
            a, b = coords[k]
            for _ in range(exp):
                mono = _poly_mul(mono, [b, a])
        scale = _exact(kappa[j]) * lam[j]
        if len(mono) > len(total):
            total += [Fraction(0)] * (len(mono) - len(total))
        for i, mi in enumerate(mono):
            total[i] += scale * mi
    return total, coords


def _poly_eval(p, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for coeff in reversed(p):
        acc = acc * x + coeff
    return acc


def _poly_deflate(p, root: Fraction):
    """Exact division of p by (t - root); p(root) must be zero."""
    n = len(p) - 1
    q = [Fraction(0)] * n
    acc = p[n]
    for i in range(n - 1, -1, -1):
        q[i] = acc
        acc = p[i] + root * acc
    assert acc == 0
    return q


def _poly_rem(num, den):
    num = list(num)
    while len(num) >= len(den):
        if num[-1] == 0:
            num.pop()
            continue
        f = num[-1] / den[-1]
        off = len(num) - len(den)
        for i, coeff in enumerate(den):
            num[off + i] -= f * coeff
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def _sturm_chain(p):
    chain = [p]
    deriv = [i * coeff for i, coeff in enumerate(p)][1:]
    if deriv:
        chain.append(deriv)
    while len(chain[-1]) > 1:
        rem = _poly_rem(chain[-2], chain[-1])
        if not rem:
            break
        chain.append([-coeff for coeff in rem])
    return chain


def _sign_changes(signs) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a * b < 0)


def _variations_at(chain, x: Fraction) -> int:
    return _sign_changes(
        [0 if (v := _poly_eval(p, x)) == 0 else (1 if v > 0 else -1) for p in chain]
    )


def _variations_at_plus_inf(chain) -> int:
    return _sign_changes([1 if p[-1] > 0 else -1 for p in chain])


def count_line_states(net: ReactionNetwork, kappa, c):
    """Number of distinct positive steady states on the line pinned by
    ``c``, counted exactly by a Sturm chain.

    Returns None when the balance vanishes identically on the line (a
    continuum of steady states).
    """
    total, coords = line_polynomial(net, kappa, c)
    window = positive_window(coords)
    if window is None:
        return 0
    if all(v == 0 for v in total):
        return None
    lo, hi = window
    while total[-1] == 0:
        total.pop()
    while _poly_eval(total, lo) == 0:
        total = _poly_deflate(total, lo)
    if hi is not None:
        while _poly_eval(total, hi) == 0:
            total = _poly_deflate(total, hi)
    if len(total) == 1:
        return 0
    chain = _sturm_chain(total)
    v_hi = _variations_at(chain, hi) if hi is not None else _variations_at_plus_inf(chain)
    return _variations_at(chain, lo) - v_hi


def state_residual(net: ReactionNetwork, kappa, x) -> float:
    """Relative infinity-norm of the full vector rate balance at x,
    computed straight from the reaction list."""
    s = net.num_species
    acc = [0.0] * s
    scale = [0.0] * s
    for j, rx in enumerate(net.reactions):
        mono = float(kappa[j])
        for k, exp in enumerate(rx.reactant):
            mono *= float(x[k]) ** exp
        for k, d in enumerate(rx.change):
            acc[k] += d * mono
            scale[k] += abs(d) * mono
    return max(
        abs(a) / (1.0 + sc) for a, sc in zip(acc, scale)
    )


# ---------------------------------------------------------------------------
# Random generators (plain ``random.Random``, fixed seeds in the tests).


def random_bi_network(
    rng: random.Random, max_species: int = 5, max_coeff: int = 5
) -> ReactionNetwork:
    """A random two-reaction network with collinear change vectors.

    Every species participates, entries of both change vectors stay within
    ``max_coeff``, and reactant coefficients stay within ``max_coeff``.
    """
    while True:
        s = rng.randint(1, max_species)
        e = [rng.randint(-2, 2) for _ in range(s)]
        if not any(e):
            continue
        cmax = max_coeff // max(abs(v) for v in e)
        mults = [v for v in range(-cmax, cmax + 1) if v != 0]
        deltas = []
        for _ in range(2):
            m = rng.choice(mults)
            deltas.append([m * v for v in e])

        def side(delta):
            out = []
            for dk in delta:
                lo, hi = max(0, -dk), max_coeff - max(0, dk)
                if lo > hi:
                    return None
                out.append(rng.randint(lo, hi))
            return tuple(out)

        sides = [side(d) for d in deltas]
        if any(v is None for v in sides):
            continue
        rxs = tuple(
            Reaction(a, tuple(ak + dk for ak, dk in zip(a, d)))
            for a, d in zip(sides, deltas)
        )
        if rxs[0] == rxs[1]:
            continue
        if not all(
            e[k] != 0 or any(rx.reactant[k] > 0 for rx in rxs) for k in range(s)
        ):
            continue
        return ReactionNetwork(tuple(f"X{k + 1}" for k in range(s)), rxs)


def random_gproblem(rng: random.Random, max_species: int = 6) -> GProblem:
    """A random g-problem with positive offsets, so 0 is always interior."""
    while True:
        s = rng.randint(1, max_species)
        alphas = tuple(rng.randint(-4, 4) for _ in range(s))
        if not any(alphas):
            continue
        gammas = tuple(rng.randint(-3, 3) for _ in range(s))
        offsets = tuple(
            Fraction(rng.randint(1, 64), rng.randint(1, 8)) for _ in range(s)
        )
        gp = GProblem(alphas, gammas, offsets)
        if is_constant(gp):
            continue
        return gp


def sample_level(rng: random.Random, gp: GProblem, tries: int = 60):
    """A level K for g that stays relatively clear of critical values.

    Returns None when no such level was found (g nearly flat); callers
    skip those draws.
    """
    lo, hi = gp.lower, gp.upper
    finite = [abs(v) for v in (lo, hi) if math.isfinite(v)]
    reach = 8.0 * (1.0 + (max(finite) if finite else 1.0))
    a = lo if math.isfinite(lo) else (hi if math.isfinite(hi) else 0.0) - reach
    b = hi if math.isfinite(hi) else (lo if math.isfinite(lo) else 0.0) + reach
    crit_vals = []
    for z in critical_points(gp):
        try:
            crit_vals.append(eval_g(gp, z)[0])
        except Exception:
            pass
    for _ in range(tries):
        u = rng.uniform(0.03, 0.97)
        z0 = a + u * (b - a)
        try:
            k = eval_g(gp, z0)[0]
        except Exception:
            continue
        if rng.random() < 0.25:
            k += rng.choice((-1.0, 1.0)) * rng.uniform(4.0, 24.0)
        if not math.isfinite(k):
            continue
        if all(abs(k - v) > 1e-5 * (1.0 + abs(k) + abs(v)) for v in crit_vals):
            return k
    return None
