"""Construction of verified steady-state witnesses.

Two goals are supported.  ``witness_three`` targets bi-reaction networks in
the finite-at-least-three capacity class: it picks exact rational offsets by
the class-driven recipes (balancing the first derivative of the scalar
reduction at the origin while forcing the right curvature), picks a level K
between the origin's critical value and an adjacent one, confirms at least
three crossings, and converts roots back to positive states.

``witness_two_general`` works for any reaction count once the sufficient
pair certificate and the pair-diagram test hold.  It first tries to lift a
nondegenerate opposed pair (balanced offsets give a critical point at the
origin; a nearby level yields two crossings; the remaining reactions are
embedded with small rates and the roots re-bracketed on the full balance).
If no pair lifts, it builds two explicit positive points on a shared line
whose rate-balance ratios can be equalized by moving the rates between two
concentrated limits, then rescales, and finally polishes two rates exactly
by solving a rational 2x2 system.

Every returned witness has been replayed through the verifier at 1e-9.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arrows import ad_count, diagram_pair_witnesses
from .classify import (
    CAP_AT_LEAST_THREE,
    BiReactionProfile,
    LambdaNotOpposed,
    NotBiReaction,
    bi_profile,
    capacity_class_bi,
    necessary_pair_test,
    sufficient_two_test,
    _pair_sign_data,
)
from .network import (
    CrnError,
    OneDimStructure,
    ReactionNetwork,
    conservation_constants,
    one_dim_structure,
)
from .numeric import GProblem, critical_points, eval_g, find_roots, verify_witness


class GoalUnattainable(CrnError):
    """The requested witness is ruled out (or not certified) for this network."""


class RecipeFailed(CrnError):
    """An offset recipe did not reach its postcondition."""


class NoSecondCriticalPoint(CrnError):
    """No level with three confirmed crossings was found."""


class RootOutsideInterval(CrnError):
    """A claimed root does not correspond to a positive state."""


class ClaimEndpointFailed(CrnError):
    """The concentrated-rate endpoints do not straddle a balanced ratio."""


class BisectionStalled(CrnError):
    """The ratio-matching bisection failed to converge."""


@dataclass(frozen=True)
class Witness:
    """Parameters plus states claimed steady, in user order.

    ``kappa`` follows the reaction order, ``states`` the species order;
    ``c`` is in the permuted species order used by the conservation
    relations.  The scalar-reduction fields (``z_roots``, ``level``,
    ``offsets``) are present when the witness came from a line
    parametrization.
    """

    kappa: tuple
    c: tuple
    states: tuple[tuple, ...]
    z_roots: tuple[float, ...] | None = None
    level: float | None = None
    offsets: tuple | None = None
    nondegenerate: tuple[bool, ...] | None = None


def g_problem(profile: BiReactionProfile, d) -> GProblem:
    """Scalar reduction of a bi-reaction profile for offsets ``d``."""
    if len(d) != len(profile.alphas):
        raise ValueError("offset vector length does not match the species count")
    return GProblem(profile.alphas, profile.gammas, tuple(d))


# ---------------------------------------------------------------------------
# Offset recipes for three states.

_ALPHA_NEG = {1: 4, 4: 1, 2: 3, 3: 2, 5: 5}
_GAMMA_NEG = {1: 3, 3: 1, 2: 4, 4: 2, 5: 5}


def _class_index(name: str) -> int:
    return int(name[1])


def _effective(cls: int, neg_alpha: bool, neg_gamma: bool) -> int:
    if neg_alpha:
        cls = _ALPHA_NEG[cls]
    if neg_gamma:
        cls = _GAMMA_NEG[cls]
    return cls


def _recipe_transform(profile: BiReactionProfile) -> tuple[bool, bool]:
    """Sign changes mapping the populated classes onto the canonical recipes.

    Negating alpha turns g into -g, negating gamma mirrors z; both preserve
    the root structure, so a recipe worked out for the canonical orientation
    serves the original profile with adjusted target curvature.
    """
    populated = frozenset(profile.nonempty())
    s1, s2, s3, s4 = profile.sums
    m1, m2, m3, m4 = profile.mins
    if len(populated) == 2:
        na, ng = (False, False) if populated == frozenset({1, 4}) else (False, True)
        eff_sum = {1: 0, 4: 0}
        for k, cls in enumerate(profile.classes):
            c = _class_index(cls)
            if c != 5:
                eff_sum[_effective(c, na, ng)] += abs(profile.alphas[k])
        if eff_sum[1] > eff_sum[4]:
            na = not na
        return na, ng
    if len(populated) == 3:
        return {
            frozenset({1, 2, 4}): (False, False),
            frozenset({1, 3, 4}): (True, False),
            frozenset({2, 3, 4}): (False, True),
            frozenset({1, 2, 3}): (True, True),
        }[populated]
    if s4 > m1:
        return False, False
    if s1 > m4:
        return True, False
    if s3 > m2:
        return True, True
    return False, True


def _exact_g1_at_zero(profile: BiReactionProfile, weights: dict[int, Fraction]) -> Fraction:
    total = Fraction(0)
    for k, w in weights.items():
        sigma = 1 if profile.alphas[k] * profile.gammas[k] > 0 else -1
        total += sigma * abs(profile.alphas[k]) * w
    return total

def _exact_g2_at_zero(profile: BiReactionProfile, weights: dict[int, Fraction]) -> Fraction:
    return -sum(profile.alphas[k] * w * w for k, w in weights.items())


def _weights_to_offsets(profile: BiReactionProfile, weights: dict[int, Fraction]):
    d = []
    for k, (a, g) in enumerate(zip(profile.alphas, profile.gammas)):
        if k in weights:
            d.append(Fraction(abs(g)) / weights[k])
        elif g != 0:
            d.append(Fraction(abs(g)))
        else:
            d.append(Fraction(1))
    return tuple(d)


def choose_d_three(profile: BiReactionProfile):
    """Exact offsets putting a correctly-curved critical point at the origin.

    Requires the finite-at-least-three capacity class.  The weights (the
    values ``|gamma_k| / d_k``) follow the populated-class recipe after
    normalizing the orientation; the epsilon is halved until the exact
    curvature check passes.
    """
    cap = capacity_class_bi(profile, profile.lambda2)
    if cap.tag != CAP_AT_LEAST_THREE:
        raise GoalUnattainable(f"three steady states need capacity class "
                               f"{CAP_AT_LEAST_THREE}, got {cap.tag}")
    na, ng = _recipe_transform(profile)
    absa = [abs(a) for a in profile.alphas]
    eff: dict[int, list[int]] = {1: [], 2: [], 3: [], 4: []}
    for k, cls in enumerate(profile.classes):
        c = _class_index(cls)
        if c != 5:
            eff[_effective(c, na, ng)].append(k)
    one = Fraction(1)
    if not eff[2] and not eff[3]:
        s1e, s4e = eff[1], eff[4]
        pivot = min(s4e, key=lambda k: (absa[k], k))
        rest4 = [k for k in s4e if k != pivot]
        sum1 = sum(absa[k] for k in s1e)
        target = 1 if not na else -1
        eps = Fraction(1, 16)
        for _ in range(41):
            y = (sum1 * one - sum(absa[k] for k in rest4) * eps) / absa[pivot]
            if y > 0:
                weights = {k: one for k in s1e}
                weights[pivot] = y
                weights.update({k: eps for k in rest4})
                if _exact_g1_at_zero(profile, weights) == 0:
                    g2 = _exact_g2_at_zero(profile, weights)
                    if (g2 > 0) == (target > 0) and g2 != 0:
                        return _weights_to_offsets(profile, weights)
            eps /= 2
        raise RecipeFailed("pair recipe: no epsilon met the curvature condition")
    s1e, s2e, s3e, s4e = eff[1], eff[2], eff[3], eff[4]
    pivot = min(s1e, key=lambda k: (absa[k], k))
    spread = [k for k in s1e + s2e if k != pivot]
    target = -1 if not na else 1
    eps1 = Fraction(1, 16)
    for _ in range(41):
        eps2 = eps1 / 2
        den4 = sum(absa[k] for k in s4e)
        y = (absa[pivot] * one + sum(absa[k] for k in spread) * eps1
             - sum(absa[k] for k in s3e) * eps2) / den4
        if y > 0:
            weights = {pivot: one}
            weights.update({k: eps1 for k in spread})
            weights.update({k: eps2 for k in s3e})
            weights.update({k: y for k in s4e})
            if _exact_g1_at_zero(profile, weights) == 0:
                g2 = _exact_g2_at_zero(profile, weights)
                if (g2 > 0) == (target > 0) and g2 != 0:
                    return _weights_to_offsets(profile, weights)
        eps1 /= 2
    raise RecipeFailed("spread recipe: no epsilon met the curvature condition")


def choose_K_three(gp: GProblem) -> float:
    """A level with at least three confirmed crossings.

    Expects a critical point at the origin with nonzero curvature (what the
    offset recipes guarantee).  Prefers the midpoint between the origin's
    value and an adjacent critical value; falls back to a shrinking offset
    from the origin's value.
    """
    g0, g1_0, g2_0 = eval_g(gp, 0.0)
    scale1 = sum(abs(a * g) / float(d) for a, g, d in zip(gp.alphas, gp.gammas, gp.offsets) if g != 0)
    if abs(g1_0) > 1e-9 * (1.0 + scale1):
        raise RecipeFailed(f"no critical point at the origin (g'(0) = {g1_0})")
    scale2 = sum(abs(a) * g * g / float(d) ** 2 for a, g, d in zip(gp.alphas, gp.gammas, gp.offsets) if g != 0)
    if abs(g2_0) <= 1e-12 * (1.0 + scale2):
        raise RecipeFailed("flat curvature at the origin")
    crits = [c for c in critical_points(gp) if abs(c) > 1e-8]
    below = max((c for c in crits if c < 0), default=None)
    above = min((c for c in crits if c > 0), default=None)
    candidates = [c for c in (above, below) if c is not None]
    candidates.sort(key=lambda c: -abs(eval_g(gp, c)[0] - g0))
    for c in candidates:
        K = 0.5 * (g0 + eval_g(gp, c)[0])
        rs = find_roots(gp, K)
        if len(rs.roots) >= 3 and not rs.suspected_degenerate:
            return K
    for k in range(1, 61):
        delta = (1.0 + abs(g0)) * 2.0**-k
        K = g0 - delta if g2_0 < 0 else g0 + delta
        rs = find_roots(gp, K)
        if len(rs.roots) >= 3 and not rs.suspected_degenerate:
            return K
    raise NoSecondCriticalPoint("no level produced three confirmed crossings")


def assemble_witness(net: ReactionNetwork, struct: OneDimStructure, d, K, roots) -> Witness:
    """Package roots of the scalar reduction as a bi-reaction witness.

    Sets the base rate to 1 and solves the level equation for the second
    rate; converts each root to a state and records exact conservation
    constants from the offsets.
    """
    if net.num_reactions != 2:
        raise NotBiReaction("witness assembly from a level needs two reactions")
    lam2 = struct.lambda_user()[1]
    if lam2 > 0:
        raise LambdaNotOpposed("both multipliers are positive; no level equation")
    r1, r2 = net.reactions
    alphas = tuple(r1.reactant[k] - r2.reactant[k] for k in range(net.num_species))
    gammas = struct.gamma_user()
    gp = GProblem(alphas, gammas, tuple(d))
    K = float(K)
    zs = sorted(float(z) for z in roots)
    states = []
    flags = []
    for z in zs:
        if not (gp.lower < z < gp.upper):
            raise RootOutsideInterval(f"root {z} outside ({gp.lower}, {gp.upper})")
        x = tuple(g * z + float(dk) for g, dk in zip(gammas, gp.offsets))
        if any(v <= 0 for v in x):
            raise RootOutsideInterval(f"state at z = {z} is not strictly positive")
        _g, g1, _g2 = eval_g(gp, z)
        scale = sum(abs(a * g) / xv for a, g, xv in zip(alphas, gammas, x) if g != 0) + 1e-300
        flags.append(abs(g1) > 1e-8 * scale)
        states.append(x)
    kappa = (1.0, math.exp(K) / float(-lam2))
    dp = [gp.offsets[orig] for orig in struct.species_perm]
    gperm = struct.gamma
    c = tuple(gperm[i] * dp[0] - gperm[0] * dp[i] for i in range(1, len(gperm)))
    return Witness(
        kappa=kappa,
        c=c,
        states=tuple(states),
        z_roots=tuple(zs),
        level=K,
        offsets=tuple(gp.offsets),
        nondegenerate=tuple(flags),
    )


def _widened_offsets(d, gammas, passive, roots):
    """Push the poles of weightless moving species far past the used roots."""
    zmax = max(abs(float(r)) for r in roots)
    w = 2 * (1 + math.ceil(zmax))
    out = list(d)
    for k in passive:
        out[k] = Fraction(abs(gammas[k]) * w)
    return tuple(out)


def witness_three(net: ReactionNetwork) -> Witness:
    """Three verified positive steady states for a qualifying bi-reaction network.

    Species that carry no weight in the scalar reduction but still move are
    first masked out (they do not change g), and their offsets are widened
    after the roots are known so every pole clears the root span.
    """
    struct = one_dim_structure(net)
    if net.num_reactions != 2:
        raise NotBiReaction(f"expected 2 reactions, got {net.num_reactions}")
    profile = bi_profile(net, struct)
    cap = capacity_class_bi(profile, profile.lambda2)
    if cap.tag != CAP_AT_LEAST_THREE:
        raise GoalUnattainable(f"capacity class is {cap.tag}; three states are not available")
    d0 = choose_d_three(profile)
    passive = [k for k in range(net.num_species)
               if profile.alphas[k] == 0 and profile.gammas[k] != 0]
    probe_gammas = tuple(0 if k in passive else g for k, g in enumerate(profile.gammas))
    probe_d = tuple(Fraction(1) if k in passive else d0[k] for k in range(len(d0)))
    probe = GProblem(profile.alphas, probe_gammas, probe_d)
    K = choose_K_three(probe)
    probe_roots = find_roots(probe, K).roots
    if len(probe_roots) < 3:
        raise RecipeFailed("confirmed level lost its crossings")
    d_final = _widened_offsets(d0, profile.gammas, passive, probe_roots)
    rs = find_roots(GProblem(profile.alphas, profile.gammas, d_final), K)
    if len(rs.roots) < 3:
        raise RecipeFailed("crossings lost after widening passive offsets")
    witness = assemble_witness(net, struct, d_final, K, rs.roots)
    report = verify_witness(net, witness, 1e-9)
    if not report.passed:
        worst = max(c.rate_residual for c in report.states)
        raise RecipeFailed(f"witness failed verification (worst residual {worst})")
    return witness


# ---------------------------------------------------------------------------
# Two states for general networks.


def _pair_nondegenerate(alphas, gammas) -> bool:
    products = [a * g for a, g in zip(alphas, gammas)]
    pos = [k for k, p in enumerate(products) if p > 0]
    neg = [k for k, p in enumerate(products) if p < 0]
    if not pos or not neg:
        return False
    if len(pos) == 1 and len(neg) == 1 and alphas[pos[0]] == -alphas[neg[0]]:
        return False
    return True


def _balanced_pair_weights(alphas, gammas):
    """Weights making the pair reduction critical at the origin with
    nonzero exact curvature, by a deterministic jitter if needed."""
    pos = [k for k, (a, g) in enumerate(zip(alphas, gammas)) if a * g > 0]
    neg = [k for k, (a, g) in enumerate(zip(alphas, gammas)) if a * g < 0]
    up = Fraction(1, sum(abs(alphas[k]) for k in pos))
    un = Fraction(1, sum(abs(alphas[k]) for k in neg))
    weights = {k: up for k in pos}
    weights.update({k: un for k in neg})
    for n in range(20):
        g2 = -sum(alphas[k] * w * w for k, w in weights.items())
        if g2 != 0:
            return weights, (1 if g2 > 0 else -1)
        bump = 1 + Fraction(1, 2 ** (3 + n))
        weights = {k: w for k, w in weights.items()}
        weights[pos[0]] *= bump
        s_pos = sum(abs(alphas[k]) * weights[k] for k in pos)
        s_neg = sum(abs(alphas[k]) * weights[k] for k in neg)
        for k in neg:
            weights[k] *= s_pos / s_neg
    return None, 0


def _line_domain(gammas, offsets) -> tuple[float, float]:
    lows = [-d / Fraction(g) for g, d in zip(gammas, offsets) if g > 0]
    highs = [-d / Fraction(g) for g, d in zip(gammas, offsets) if g < 0]
    lo = float(max(lows)) if lows else -math.inf
    hi = float(min(highs)) if highs else math.inf
    return lo, hi


def _balance(net: ReactionNetwork, lam, kappa, x) -> float:
    terms = []
    for j, rx in enumerate(net.reactions):
        mono = 1.0
        for k, e in enumerate(rx.reactant):
            if e:
                mono *= x[k] ** e
        terms.append(lam[j] * kappa[j] * mono)
    return math.fsum(terms)


def _balance_slope(net: ReactionNetwork, lam, kappa, gammas, x) -> float:
    total = []
    for j, rx in enumerate(net.reactions):
        mono = 1.0
        inner = 0.0
        for k, e in enumerate(rx.reactant):
            if e:
                mono *= x[k] ** e
                inner += e * gammas[k] / x[k]
        total.append(lam[j] * kappa[j] * mono * inner)
    return math.fsum(total)


def _lift_pair(net: ReactionNetwork, struct: OneDimStructure, i: int, j: int) -> Witness | None:
    """Two states from one nondegenerate opposed pair, then full embedding."""
    alphas, pair_gammas = _pair_sign_data(net, i, j)
    if not _pair_nondegenerate(alphas, pair_gammas):
        return None
    weights, g2_sign = _balanced_pair_weights(alphas, pair_gammas)
    if weights is None:
        return None
    s = net.num_species
    passive = [k for k in range(s) if alphas[k] == 0 and pair_gammas[k] != 0]
    d0 = []
    for k in range(s):
        if k in weights:
            d0.append(Fraction(abs(pair_gammas[k])) / weights[k])
        elif pair_gammas[k] != 0:
            d0.append(Fraction(abs(pair_gammas[k])))
        else:
            d0.append(Fraction(1))
    probe_gammas = tuple(0 if k in passive else g for k, g in enumerate(pair_gammas))
    probe_d = tuple(Fraction(1) if k in passive else d0[k] for k in range(s))
    try:
        probe = GProblem(alphas, probe_gammas, probe_d)
        g0 = eval_g(probe, 0.0)[0]
    except CrnError:
        return None
    r_lo = r_hi = None
    K = None
    for kk in range(1, 61):
        delta = (1.0 + abs(g0)) * 2.0**-kk
        K = g0 + delta if g2_sign > 0 else g0 - delta
        try:
            roots = find_roots(probe, K).roots
        except CrnError:
            continue
        lows = [r for r in roots if r < 0]
        highs = [r for r in roots if r > 0]
        if lows and highs:
            r_lo, r_hi = max(lows), min(highs)
            break
    if r_lo is None:
        return None
    d_final = _widened_offsets(d0, pair_gammas, passive, (r_lo, r_hi))
    try:
        pair_gp = GProblem(alphas, pair_gammas, d_final)
        rs = find_roots(pair_gp, K)
    except CrnError:
        return None
    lows = [r for r in rs.roots if r < 0]
    highs = [r for r in rs.roots if r > 0]
    if not lows or not highs:
        return None
    r_lo, r_hi = max(lows), min(highs)

    lam = [float(v) for v in struct.lambda_user()]
    gammas = struct.gamma_user()
    li, lj = lam[i], lam[j]
    z_pair = sorted((li * r_lo, li * r_hi))
    lo_dom, hi_dom = _line_domain(gammas, d_final)
    gap = z_pair[1] - z_pair[0]
    all_z = sorted(li * r for r in rs.roots)
    kappa_j = math.exp(K) * li / (-lj)
    d_float = [float(v) for v in d_final]
    eps = 1e-2
    for _ in range(12):
        kappa = [eps] * net.num_reactions
        kappa[i] = 1.0
        kappa[j] = kappa_j
        polished = []
        ok = True
        def x_of(zz):
            return [g * zz + dv for g, dv in zip(gammas, d_float)]

        for zr in z_pair:
            # the bracket must not swallow a neighbouring pair root
            near = min(
                (abs(zr - o) for o in all_z if abs(zr - o) > 1e-12 * (1 + abs(zr))),
                default=math.inf,
            )
            h = min(gap / 4.0, near / 2.0, (zr - lo_dom) / 2.0, (hi_dom - zr) / 2.0)
            lo, hi = zr - h, zr + h
            flo = _balance(net, lam, kappa, x_of(lo))
            fhi = _balance(net, lam, kappa, x_of(hi))
            if flo == 0.0 or fhi == 0.0 or (flo > 0) == (fhi > 0):
                ok = False
                break
            for _b in range(200):
                mid = 0.5 * (lo + hi)
                if mid <= lo or mid >= hi:
                    break
                fm = _balance(net, lam, kappa, x_of(mid))
                if fm == 0.0:
                    lo = hi = mid
                    break
                if (fm > 0) == (flo > 0):
                    lo, flo = mid, fm
                else:
                    hi = mid
            z = 0.5 * (lo + hi)
            for _n in range(8):
                xs = x_of(z)
                f = _balance(net, lam, kappa, xs)
                fp = _balance_slope(net, lam, kappa, gammas, xs)
                if fp == 0.0:
                    break
                nz = z - f / fp
                if not (z_pair[0] - gap <= nz <= z_pair[1] + gap) or nz == z:
                    break
                z = nz
            polished.append(z)
        if ok and abs(polished[1] - polished[0]) > 1e-9 * (1 + abs(polished[1])):
            states = tuple(tuple(g * z + dv for g, dv in zip(gammas, d_float)) for z in polished)
            dp = [d_final[orig] for orig in struct.species_perm]
            gperm = struct.gamma
            c = tuple(gperm[q] * dp[0] - gperm[0] * dp[q] for q in range(1, len(gperm)))
            flags = []
            for z, x in zip(polished, states):
                slope = _balance_slope(net, lam, kappa, gammas, list(x))
                scale = sum(
                    abs(lam[jj] * kappa[jj])
                    * math.prod(x[k] ** net.reactions[jj].reactant[k] for k in range(s))
                    * sum(net.reactions[jj].reactant[k] * abs(gammas[k]) / x[k] for k in range(s))
                    for jj in range(net.num_reactions)
                ) + 1e-300
                flags.append(abs(slope) > 1e-8 * scale)
            witness = Witness(
                kappa=tuple(kappa),
                c=c,
                states=states,
                z_roots=tuple(polished),
                level=None,
                offsets=tuple(d_final),
                nondegenerate=tuple(flags),
            )
            if verify_witness(net, witness, 1e-9).passed:
                return witness
        eps /= 4.0
    return None


def _endpoint_points(net: ReactionNetwork, struct: OneDimStructure, k3: int, flip: bool):
    """Two positive points on one line whose monomial ratios are ordered.

    The anchor species takes values 2 and 1; every other moving species is
    placed through a ratio offset r chosen inside its positivity window,
    with the species sharing the anchor-constraint orientation ordered
    relative to the constrained species ``k3``.
    """
    gammas = struct.gamma_user()
    b = struct.species_perm[0]
    yb, zb = Fraction(2), Fraction(1)
    ascending = (gammas[k3] > 0) != flip
    rs: dict[int, Fraction] = {}
    for k in range(net.num_species):
        if k == b or gammas[k] == 0:
            continue
        sigma_pos = gammas[k] * gammas[b] > 0
        constrained = gammas[k] * gammas[k3] > 0
        if constrained:
            is_k3 = k == k3
            if sigma_pos:
                if k3 == b:
                    rs[k] = Fraction(1) if ascending else Fraction(-1, 2)
                elif ascending:
                    rs[k] = Fraction(0) if is_k3 else Fraction(1)
                else:
                    rs[k] = Fraction(1) if is_k3 else Fraction(0)
            else:
                if ascending:
                    rs[k] = Fraction(-4) if is_k3 else Fraction(-3)
                else:
                    rs[k] = Fraction(-3) if is_k3 else Fraction(-4)
        else:
            rs[k] = Fraction(0) if sigma_pos else Fraction(-3)
    y = [Fraction(1)] * net.num_species
    z = [Fraction(1)] * net.num_species
    y[b], z[b] = yb, zb
    for k, r in rs.items():
        ratio = Fraction(gammas[k], gammas[b])
        y[k] = ratio * (yb + r)
        z[k] = ratio * (zb + r)
    if any(v <= 0 for v in y) or any(v <= 0 for v in z):
        return None
    return tuple(y), tuple(z)


def _log_ratio_gap(net: ReactionNetwork, lam, kappa, y, z) -> float:
    """ln of the up/down rate ratio at y minus the same at z."""
    up_y, down_y, up_z, down_z = [], [], [], []
    for j, rx in enumerate(net.reactions):
        mono_y = math.prod(float(y[k]) ** e for k, e in enumerate(rx.reactant) if e)
        mono_z = math.prod(float(z[k]) ** e for k, e in enumerate(rx.reactant) if e)
        if lam[j] > 0:
            up_y.append(lam[j] * kappa[j] * mono_y)
            up_z.append(lam[j] * kappa[j] * mono_z)
        else:
            down_y.append(-lam[j] * kappa[j] * mono_y)
            down_z.append(-lam[j] * kappa[j] * mono_z)
    return (math.log(math.fsum(up_y)) - math.log(math.fsum(down_y))
            - math.log(math.fsum(up_z)) + math.log(math.fsum(down_z)))


def _two_by_endpoints(net: ReactionNetwork, struct: OneDimStructure) -> Witness:
    """Two states on an explicit line by matching rate ratios between
    concentrated-rate endpoints, with an exact rational polish."""
    pairs = diagram_pair_witnesses(net, struct)
    if not pairs.left_right:
        raise GoalUnattainable("no left-right diagram triple to anchor the construction")
    k3 = pairs.left_right[0][0] - 1
    lam_exact = struct.lambda_user()
    lam = [float(v) for v in lam_exact]
    m = net.num_reactions
    opposed = [
        (struct.reaction_perm[ip], struct.reaction_perm[jp])
        for ip in range(struct.t)
        for jp in range(struct.t, m)
    ]
    last_error = None
    for flip in (False, True):
        points = _endpoint_points(net, struct, k3, flip)
        if points is None:
            continue
        y, z = points
        gaps = []
        for (i, j) in opposed:
            d = math.fsum(
                (net.reactions[i].reactant[k] - net.reactions[j].reactant[k])
                * (math.log(float(y[k])) - math.log(float(z[k])))
                for k in range(net.num_species)
            )
            gaps.append((d, i, j))
        neg = min(gaps)
        pos = max(gaps)
        if not (neg[0] < -1e-12 and pos[0] > 1e-12):
            last_error = ClaimEndpointFailed(
                "monomial-ratio gaps do not take both signs across opposed pairs"
            )
            continue
        witness = _match_and_polish(net, struct, lam_exact, lam, y, z, neg, pos)
        if witness is not None:
            return witness
        last_error = ClaimEndpointFailed("endpoint matching did not verify")
    raise last_error or ClaimEndpointFailed("no positive endpoint construction available")


def _match_and_polish(net, struct, lam_exact, lam, y, z, neg, pos) -> Witness | None:
    m = net.num_reactions
    background = 1e-9
    for _ in range(4):
        k1 = [background] * m
        k1[neg[1]] = 1.0
        k1[neg[2]] = 1.0
        k2 = [background] * m
        k2[pos[1]] = 1.0
        k2[pos[2]] = 1.0
        f1 = _log_ratio_gap(net, lam, k1, y, z)
        f2 = _log_ratio_gap(net, lam, k2, y, z)
        if f1 < 0 < f2:
            break
        background *= 1e-3
    else:
        return None
    lo_t, hi_t = 0.0, 1.0
    f_lo = f1
    kappa = None
    for _ in range(200):
        mid = 0.5 * (lo_t + hi_t)
        kappa = [(1 - mid) * a + mid * b for a, b in zip(k1, k2)]
        fm = _log_ratio_gap(net, lam, kappa, y, z)
        if abs(fm) <= 1e-13:
            break
        if (fm > 0) == (f_lo > 0):
            lo_t, f_lo = mid, fm
        else:
            hi_t = mid
        if hi_t - lo_t <= 1e-17:
            break
    if kappa is None or abs(_log_ratio_gap(net, lam, kappa, y, z)) > 1e-6:
        raise BisectionStalled("ratio-matching bisection left a visible gap")
    up = math.fsum(
        lam[j] * kappa[j] * math.prod(float(z[k]) ** e for k, e in enumerate(net.reactions[j].reactant) if e)
        for j in range(m) if lam[j] > 0
    )
    down = math.fsum(
        -lam[j] * kappa[j] * math.prod(float(z[k]) ** e for k, e in enumerate(net.reactions[j].reactant) if e)
        for j in range(m) if lam[j] < 0
    )
    kappa = [kappa[j] / up if lam[j] > 0 else kappa[j] / down for j in range(m)]

    mono_y = [
        math.prod(Fraction(y[k]) ** e for k, e in enumerate(rx.reactant) if e)
        for rx in net.reactions
    ]
    mono_z = [
        math.prod(Fraction(z[k]) ** e for k, e in enumerate(rx.reactant) if e)
        for rx in net.reactions
    ]
    kf = [Fraction(v) for v in kappa]
    positives = sorted((j for j in range(m) if lam[j] > 0), key=lambda j: -kappa[j])
    negatives = sorted((j for j in range(m) if lam[j] < 0), key=lambda j: -kappa[j])
    exact = None
    tried = 0
    for i_star in positives:
        for j_star in negatives:
            if tried >= 6:
                break
            tried += 1
            a11 = lam_exact[i_star] * mono_y[i_star]
            a12 = lam_exact[j_star] * mono_y[j_star]
            a21 = lam_exact[i_star] * mono_z[i_star]
            a22 = lam_exact[j_star] * mono_z[j_star]
            det = a11 * a22 - a12 * a21
            if det == 0:
                continue
            r1 = -sum(lam_exact[j] * kf[j] * mono_y[j] for j in range(m) if j not in (i_star, j_star))
            r2 = -sum(lam_exact[j] * kf[j] * mono_z[j] for j in range(m) if j not in (i_star, j_star))
            ka = (r1 * a22 - a12 * r2) / det
            kb = (a11 * r2 - r1 * a21) / det
            if ka > 0 and kb > 0:
                exact = list(kf)
                exact[i_star] = ka
                exact[j_star] = kb
                break
        if exact is not None:
            break
    final_kappa = tuple(exact) if exact is not None else tuple(kappa)
    witness = Witness(
        kappa=final_kappa,
        c=conservation_constants(struct, y),
        states=(tuple(y), tuple(z)),
    )
    if verify_witness(net, witness, 1e-9).passed:
        return witness
    return None


def witness_two_general(net: ReactionNetwork) -> Witness:
    """Two verified positive steady states on one line, any reaction count.

    Requires the sufficient pair certificate together with the pair-diagram
    test; raises :class:`GoalUnattainable` otherwise.  Tries to lift a
    nondegenerate opposed pair first, then the endpoint construction.
    """
    struct = one_dim_structure(net)
    m = net.num_reactions
    if struct.t == m:
        raise GoalUnattainable("no opposed reaction pair exists")
    ad = ad_count(net, struct)
    necessary = necessary_pair_test(net, struct, ad)
    cert = sufficient_two_test(net, struct)
    if cert is None:
        raise GoalUnattainable("no opposed pair with finite capacity")
    if not necessary.passes:
        raise GoalUnattainable("pair-diagram test fails; two nondegenerate states "
                               "are excluded while the capacity is finite")
    for ip in range(struct.t):
        for jp in range(struct.t, m):
            i, j = struct.reaction_perm[ip], struct.reaction_perm[jp]
            witness = _lift_pair(net, struct, i, j)
            if witness is not None:
                return witness
    return _two_by_endpoints(net, struct)
