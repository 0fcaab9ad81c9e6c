"""Scalar reduction of steady-state counting, and its numeric machinery.

On an invariant line ``x_k = gamma_k * z + d_k`` the steady-state condition
of an opposed reaction pair collapses to ``g(z) = K`` with

    g(z) = sum_k alpha_k * ln(gamma_k * z + d_k)

on the interval where every argument is positive.  This module owns that
function: exact interval endpoints and pole bookkeeping (offsets are stored
as ``Fraction``), evaluation with derivatives, critical points, a bracketing
root finder with verified residuals, a deliberately independent grid oracle
used to cross-check root counts, and the witness verifier that replays a
claimed set of steady states against the full network.

The root finder and the oracle share no code beyond ``GProblem`` itself;
agreement between them is part of the test contract.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .network import CrnError, ReactionNetwork, one_dim_structure


class EmptyInterval(CrnError):
    """The offsets leave no open interval of positive concentrations."""


class OutOfDomain(CrnError):
    """Evaluation outside the open interval where all arguments are positive."""


class ConstantG(CrnError):
    """g is constant on its interval; root counting is all-or-nothing."""


class DimensionMismatch(CrnError):
    """Witness data has the wrong arity for the network."""


def _exact(value) -> Fraction:
    """Coerce to Fraction.  Floats convert exactly (binary64 is rational)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"offset must be finite, got {value!r}")
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact offset")


@dataclass(frozen=True)
class GProblem:
    """The function g plus its exact domain data.

    ``alphas`` and ``gammas`` are integers per species; ``offsets`` are kept
    as exact rationals so pole coincidences and the interval endpoints are
    decided without floating point.  ``lower_exact``/``upper_exact`` are
    ``None`` for an unbounded side.
    """

    alphas: tuple[int, ...]
    gammas: tuple[int, ...]
    offsets: tuple[Fraction, ...]

    def __post_init__(self):
        alphas = tuple(int(a) for a in self.alphas)
        gammas = tuple(int(g) for g in self.gammas)
        offsets = tuple(_exact(d) for d in self.offsets)
        if not (len(alphas) == len(gammas) == len(offsets)) or not alphas:
            raise ValueError("alphas, gammas and offsets must be equally sized and nonempty")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "gammas", gammas)
        object.__setattr__(self, "offsets", offsets)
        for a, g, d in zip(alphas, gammas, offsets):
            if g == 0 and a != 0 and d <= 0:
                raise EmptyInterval("a fixed species with weight needs a positive offset")
        lo = self.lower_exact
        hi = self.upper_exact
        if lo is not None and hi is not None and lo >= hi:
            raise EmptyInterval(f"interval is empty: lower {lo} >= upper {hi}")

    @property
    def lower_exact(self) -> Fraction | None:
        vals = [-d / g for g, d in zip(self.gammas, self.offsets) if g > 0]
        return max(vals) if vals else None

    @property
    def upper_exact(self) -> Fraction | None:
        vals = [-d / g for g, d in zip(self.gammas, self.offsets) if g < 0]
        return min(vals) if vals else None

    @property
    def lower(self) -> float:
        lo = self.lower_exact
        return -math.inf if lo is None else float(lo)

    @property
    def upper(self) -> float:
        hi = self.upper_exact
        return math.inf if hi is None else float(hi)


@lru_cache(maxsize=512)
def _float_data(gp: GProblem):
    a = np.array(gp.alphas, dtype=float)
    g = np.array(gp.gammas, dtype=float)
    d = np.array([float(v) for v in gp.offsets], dtype=float)
    return a, g, d


@lru_cache(maxsize=512)
def _pole_groups(gp: GProblem) -> tuple[tuple[Fraction, int], ...]:
    """Exact poles of g' with their residues (sum of alphas sharing the pole)."""
    groups: dict[Fraction, int] = {}
    for a, g, d in zip(gp.alphas, gp.gammas, gp.offsets):
        if g == 0:
            continue
        p = -d / Fraction(g)
        groups[p] = groups.get(p, 0) + a
    return tuple(sorted(groups.items()))


def is_constant(gp: GProblem) -> bool:
    """g is constant iff every pole group of g' has zero residue."""
    return all(res == 0 for _p, res in _pole_groups(gp))


def eval_g(gp: GProblem, z) -> tuple[float, float, float]:
    """Evaluate (g, g', g'') at ``z``; raises OutOfDomain off the interval."""
    z = float(z)
    if not (gp.lower < z < gp.upper):
        raise OutOfDomain(f"z={z} outside ({gp.lower}, {gp.upper})")
    g0 = []
    g1 = []
    g2 = []
    for a, g, d in zip(gp.alphas, gp.gammas, gp.offsets):
        arg = g * z + float(d)
        if arg <= 0.0:
            raise OutOfDomain(f"argument for slope {g} vanished at z={z}")
        if a == 0:
            continue
        g0.append(a * math.log(arg))
        g1.append(a * g / arg)
        g2.append(a * g * g / (arg * arg))
    return math.fsum(g0), math.fsum(g1), -math.fsum(g2)


def _limit(gp: GProblem, side: str) -> tuple[str, float]:
    """Limit of g at an interval endpoint: ('+inf'|'-inf'|'finite', value)."""
    if side == "lower":
        end = gp.lower_exact
        inf_coeff = sum(a for a, g in zip(gp.alphas, gp.gammas) if g < 0)
    else:
        end = gp.upper_exact
        inf_coeff = sum(a for a, g in zip(gp.alphas, gp.gammas) if g > 0)
    if end is None:
        if inf_coeff > 0:
            return "+inf", math.inf
        if inf_coeff < 0:
            return "-inf", -math.inf
        val = math.fsum(
            a * math.log(abs(g)) if g != 0 else a * math.log(float(d))
            for a, g, d in zip(gp.alphas, gp.gammas, gp.offsets)
            if a != 0
        )
        return "finite", val
    sigma = 0
    finite_terms = []
    for a, g, d in zip(gp.alphas, gp.gammas, gp.offsets):
        if g != 0 and -d / Fraction(g) == end:
            sigma += a
            if a != 0:
                finite_terms.append(a * math.log(abs(g)))
        elif a != 0:
            arg = g * float(end) + float(d)
            finite_terms.append(a * math.log(arg))
    if sigma > 0:
        return "-inf", -math.inf
    if sigma < 0:
        return "+inf", math.inf
    return "finite", math.fsum(finite_terms)


def _scan_points(gp: GProblem, n: int = 4096) -> np.ndarray:
    """Strictly increasing sample of the open interval, dense near the ends."""
    lo, hi = gp.lower, gp.upper
    base = np.linspace(1.0 / (n + 1), n / (n + 1.0), n)
    geo = 2.0 ** -np.arange(2, 49)
    u = np.unique(np.concatenate([base, geo, 1.0 - geo]))
    if math.isfinite(lo) and math.isfinite(hi):
        z = lo + (hi - lo) * u
    elif math.isfinite(lo):
        scale = 1.0 + abs(lo)
        z = lo + scale * u / (1.0 - u)
    elif math.isfinite(hi):
        scale = 1.0 + abs(hi)
        z = hi - scale * (1.0 - u) / u
    else:
        raise ConstantG("g has no poles; it is constant on the whole line")
    if lo < 0.0 < hi:
        z = np.unique(np.append(z, 0.0))
    return z[(z > lo) & (z < hi)]


def _g1_values(gp: GProblem, z: np.ndarray) -> np.ndarray:
    """Vectorized g' with NaN where any argument is nonpositive."""
    a, g, d = _float_data(gp)
    args = g[:, None] * z[None, :] + d[:, None]
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        vals = (a[:, None] * g[:, None] / args).sum(axis=0)
    vals[(args <= 0.0).any(axis=0)] = np.nan
    return vals


def critical_points(gp: GProblem) -> tuple[float, ...]:
    """Zeros of g' inside the interval, by sign scan plus bisection.

    Raises :class:`ConstantG` when g' vanishes identically (decided
    exactly from the pole residues).
    """
    if is_constant(gp):
        raise ConstantG("every pole group of g' has zero residue")
    z = _scan_points(gp)
    vals = _g1_values(gp, z)
    crits: list[float] = []
    prev_z = None
    prev_v = None
    for zi, vi in zip(z, vals):
        if not math.isfinite(vi):
            prev_z = None
            continue
        if vi == 0.0:
            crits.append(float(zi))
            prev_z = None
            continue
        if prev_z is not None and (prev_v > 0.0) != (vi > 0.0):
            crits.append(_refine_crit(gp, prev_z, float(zi)))
        prev_z, prev_v = float(zi), float(vi)
    crits.sort()
    out: list[float] = []
    for c in crits:
        if not out or abs(c - out[-1]) > 1e-12 * (1.0 + abs(c)):
            out.append(c)
    return tuple(out)


def _refine_crit(gp: GProblem, lo: float, hi: float) -> float:
    flo = eval_g(gp, lo)[1]
    for _ in range(200):
        if hi - lo <= 1e-15 * max(1.0, abs(lo), abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = eval_g(gp, mid)[1]
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    z = 0.5 * (lo + hi)
    for _ in range(6):
        _g, g1, g2 = eval_g(gp, z)
        if g2 == 0.0:
            break
        step = g1 / g2
        nz = z - step
        if not (lo <= nz <= hi):
            break
        z = nz
        if abs(step) <= 1e-16 * max(1.0, abs(z)):
            break
    return z


@dataclass(frozen=True)
class RootSet:
    """Roots of g = K with the brackets and residuals that certify them.

    ``suspected_degenerate`` lists critical points whose value sits on K to
    within tolerance; crossings there are tangential and not counted.
    """

    roots: tuple[float, ...]
    brackets: tuple[tuple[float, float], ...]
    residuals: tuple[float, ...]
    suspected_degenerate: tuple[float, ...]


def _march_to_sign(gp: GProblem, K: float, start: float, endpoint: float, want_positive: bool) -> float | None:
    """Walk from ``start`` toward ``endpoint`` until g-K has the wanted sign."""
    for n in range(1, 62):
        if math.isinf(endpoint):
            step = max(1.0, abs(start)) * 3.0**n
            zn = start + step if endpoint > 0 else start - step
        else:
            zn = endpoint + (start - endpoint) * 4.0**-n
            if zn == endpoint:
                return None
        try:
            val = eval_g(gp, zn)[0] - K
        except OutOfDomain:
            return None
        if val == 0.0:
            continue
        if (val > 0.0) == want_positive:
            return zn
    return None


def _bisect_root(gp: GProblem, K: float, lo: float, hi: float) -> float:
    flo = eval_g(gp, lo)[0] - K
    for _ in range(300):
        if hi - lo <= 1e-15 * max(1.0, abs(lo), abs(hi)):
            break
        if lo > 0.0 and hi / lo > 4.0:
            mid = math.sqrt(lo * hi)
        elif hi < 0.0 and lo / hi > 4.0:
            mid = -math.sqrt(lo * hi)
        else:
            mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = eval_g(gp, mid)[0] - K
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    z = 0.5 * (lo + hi)
    for _ in range(10):
        g, g1, _g2 = eval_g(gp, z)
        if g1 == 0.0:
            break
        nz = z - (g - K) / g1
        if not (lo <= nz <= hi):
            break
        if nz == z:
            break
        z = nz
    return z


def find_roots(gp: GProblem, K) -> RootSet:
    """All solutions of g(z) = K, one per strictly monotone piece.

    Pieces are delimited by the critical points; a root is claimed only when
    K lies strictly between the piece's end values (limits at the interval
    endpoints are classified exactly).  Each root is bracketed, bisected and
    polished; the residual |g - K| is recorded.
    """
    K = float(K)
    crits = critical_points(gp)
    kind_lo, val_lo = _limit(gp, "lower")
    kind_hi, val_hi = _limit(gp, "upper")
    tol_deg = 1e-12 * (1.0 + abs(K))
    crit_vals = [eval_g(gp, c)[0] for c in crits]
    suspected = tuple(c for c, v in zip(crits, crit_vals) if abs(v - K) <= tol_deg)

    bounds: list[tuple[float, float | None]] = [(gp.lower, None)]
    bounds += [(c, v) for c, v in zip(crits, crit_vals)]
    bounds.append((gp.upper, None))
    values = [val_lo] + crit_vals + [val_hi]

    roots: list[float] = []
    brackets: list[tuple[float, float]] = []
    residuals: list[float] = []
    for i in range(len(bounds) - 1):
        zl, vl = bounds[i][0], values[i]
        zr, vr = bounds[i + 1][0], values[i + 1]
        if math.isfinite(vl) and abs(vl - K) <= tol_deg:
            continue
        if math.isfinite(vr) and abs(vr - K) <= tol_deg:
            continue
        if not (min(vl, vr) < K < max(vl, vr)):
            continue
        left_is_crit = i > 0
        right_is_crit = i + 1 < len(bounds) - 1
        if left_is_crit:
            lo = zl
        else:
            start = zr if right_is_crit else _interior_start(gp)
            lo = _march_to_sign(gp, K, start, zl, want_positive=vl > K)
        if right_is_crit:
            hi = zr
        else:
            start = zl if left_is_crit else _interior_start(gp)
            hi = _march_to_sign(gp, K, start, zr, want_positive=vr > K)
        if lo is None or hi is None or not (lo < hi):
            raise CrnError(f"failed to bracket the root of g = {K} in piece ({zl}, {zr})")
        z = _bisect_root(gp, K, lo, hi)
        gz, slope, _ = eval_g(gp, z)
        res = abs(gz - K)
        # Steep pieces (root hugging a pole) cannot beat a few ulps of
        # backward error; allow the residual the slope explains there.
        slack = 1e-10 * (1.0 + abs(K)) + 8.0 * abs(slope) * 1e-15 * max(1.0, abs(z))
        if res > slack:
            raise CrnError(f"root residual {res} too large near z = {z}")
        roots.append(z)
        brackets.append((lo, hi))
        residuals.append(res)

    order = sorted(range(len(roots)), key=lambda q: roots[q])
    out_r: list[float] = []
    out_b: list[tuple[float, float]] = []
    out_res: list[float] = []
    for q in order:
        if out_r and abs(roots[q] - out_r[-1]) <= 1e-9 * (1.0 + abs(roots[q])):
            continue
        out_r.append(roots[q])
        out_b.append(brackets[q])
        out_res.append(residuals[q])
    return RootSet(tuple(out_r), tuple(out_b), tuple(out_res), suspected)


def _interior_start(gp: GProblem) -> float:
    lo, hi = gp.lower, gp.upper
    if math.isfinite(lo) and math.isfinite(hi):
        return 0.5 * (lo + hi)
    if math.isfinite(lo):
        return lo + (1.0 + abs(lo))
    if math.isfinite(hi):
        return hi - (1.0 + abs(hi))
    raise ConstantG("g has no poles; it is constant on the whole line")


# ---------------------------------------------------------------------------
# Independent oracle.  Separate compactification, separate evaluation path:
# this code must not share root-finding logic with find_roots.


def _oracle_tail(gp: GProblem, K: float, side: str) -> float:
    """How far toward an infinite end the grid must reach to settle g vs K."""
    a, g, d = _float_data(gp)
    if side == "upper":
        coeff = float(np.sum(a[g > 0]))
        with np.errstate(divide="ignore"):
            const = float(np.sum(a[g > 0] * np.log(np.abs(g[g > 0])))) + float(
                np.sum(a[(g == 0) & (a != 0)] * np.log(d[(g == 0) & (a != 0)]))
            )
        anchor = abs(gp.lower) if math.isfinite(gp.lower) else 1.0
    else:
        coeff = float(np.sum(a[g < 0]))
        const = float(np.sum(a[g < 0] * np.log(np.abs(g[g < 0])))) + float(
            np.sum(a[(g == 0) & (a != 0)] * np.log(d[(g == 0) & (a != 0)]))
        )
        anchor = abs(gp.upper) if math.isfinite(gp.upper) else 1.0
    if coeff == 0.0:
        return (anchor + 1.0) * 1e12
    need = (abs(K) + abs(const) + 40.0) / abs(coeff)
    return min(math.exp(min(need, 640.0)), 1e280) + 8.0 * (anchor + 1.0)


def _log_offsets(end: float, reach: float, n: int) -> np.ndarray:
    """Log-uniform distances from a finite endpoint, from below float
    granularity at that endpoint out to ``reach``."""
    eps0 = max((1.0 + abs(end)) * 1e-20, abs(end) * 4e-16)
    return np.exp(np.linspace(math.log(eps0), math.log(reach), n))


def _oracle_grid(gp: GProblem, K: float, n: int) -> np.ndarray:
    lo, hi = gp.lower, gp.upper
    geo = 2.0 ** -np.arange(3, 121)
    if math.isfinite(lo) and math.isfinite(hi):
        w = hi - lo
        core = lo + w * np.linspace(1.0 / (n + 1), 1.0, n, endpoint=False)
        z = np.concatenate([core, lo + w * geo, hi - w * geo])
    elif math.isfinite(lo):
        reach = _oracle_tail(gp, K, "upper")
        z = lo + _log_offsets(lo, reach, n)
    elif math.isfinite(hi):
        reach = _oracle_tail(gp, K, "lower")
        z = hi - _log_offsets(hi, reach, n)
    else:
        raise ConstantG("g has no poles; it is constant on the whole line")
    z = np.unique(z)
    return z[(z > lo) & (z < hi)]


def _oracle_g(gp: GProblem, z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(valid z, g values) on the given grid, computed with numpy only."""
    a, g, d = _float_data(gp)
    args = g[:, None] * z[None, :] + d[:, None]
    ok = (args > 0.0).all(axis=0)
    z = z[ok]
    args = args[:, ok]
    keep = a != 0.0
    vals = a[keep] @ np.log(args[keep, :]) if keep.any() else np.zeros(len(z))
    return z, vals


def oracle_count(gp: GProblem, K, samples: int = 200_001) -> int:
    """Count solutions of g = K by dense sign scanning; independent of find_roots.

    The grid size is a configuration value; the default is sized for
    cross-checking the root finder.  Close crossings are deduplicated after
    a local bisection refinement.
    """
    K = float(K)
    if is_constant(gp):
        raise ConstantG("every pole group of g' has zero residue")
    z, vals = _oracle_g(gp, _oracle_grid(gp, K, samples))
    f = vals - K
    roots: list[float] = []
    idx = np.nonzero(f == 0.0)[0]
    roots.extend(float(z[i]) for i in idx)
    sign_change = np.nonzero(f[:-1] * f[1:] < 0.0)[0]
    for i in sign_change:
        lo, hi = float(z[i]), float(z[i + 1])
        flo = float(f[i])
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            zz, vv = _oracle_g(gp, np.array([mid]))
            if len(vv) == 0:
                break
            fm = float(vv[0]) - K
            if fm == 0.0:
                lo = hi = mid
                break
            if (fm > 0.0) == (flo > 0.0):
                lo, flo = mid, fm
            else:
                hi = mid
        roots.append(0.5 * (lo + hi))
    roots.sort()
    count = 0
    last = None
    for r in roots:
        if last is None or abs(r - last) > 1e-9 * (1.0 + abs(r)):
            count += 1
        last = r
    return count


def oracle_counts(gp: GProblem, Ks: Sequence[float], samples: int = 4001) -> list[int]:
    """Sign-change counts for many levels on one shared grid (screening only).

    No refinement or deduplication: answers can overcount very close roots,
    so callers re-check interesting hits with :func:`oracle_count`.
    """
    if is_constant(gp):
        raise ConstantG("every pole group of g' has zero residue")
    zs = _oracle_grid(gp, float(max((abs(float(k)) for k in Ks), default=1.0)), samples)
    _z, vals = _oracle_g(gp, zs)
    out = []
    for K in Ks:
        f = vals - float(K)
        n = int(np.count_nonzero(f[:-1] * f[1:] < 0.0)) + int(np.count_nonzero(f == 0.0))
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Witness verification against the full network.


@dataclass(frozen=True)
class StateCheck:
    """Replay of one claimed steady state."""

    state: tuple[float, ...]
    positive: bool
    rate_residual: float
    conservation_residual: float
    nondegenerate: bool
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    tol: float
    states: tuple[StateCheck, ...]
    passed: bool


def verify_witness(net: ReactionNetwork, witness, tol: float = 1e-9) -> VerificationReport:
    """Check a witness against the network it claims to certify.

    Works from ``(kappa, c, states)`` alone.  For each state it checks
    strict positivity, the relative residual of the rate balance
    ``sum_j lambda_j kappa_j x^(alpha_j)``, the conservation relations pinned
    by ``c``, and flags numeric nondegeneracy (the directional derivative of
    the balance along gamma, relatively bounded away from zero).
    """
    struct = one_dim_structure(net)
    s = net.num_species
    m = net.num_reactions
    kappa = [float(v) for v in witness.kappa]
    cs = [float(v) for v in witness.c]
    if len(kappa) != m:
        raise DimensionMismatch(f"expected {m} rate constants, got {len(kappa)}")
    if len(cs) != s - 1:
        raise DimensionMismatch(f"expected {s - 1} conservation constants, got {len(cs)}")
    if any(k <= 0 for k in kappa):
        raise ValueError("rate constants must be positive")
    lam = [float(v) for v in struct.lambda_user()]
    gamma_user = struct.gamma_user()
    perm = struct.species_perm
    gperm = struct.gamma
    checks = []
    for raw in witness.states:
        x = [float(v) for v in raw]
        if len(x) != s:
            raise DimensionMismatch(f"state has {len(x)} coordinates, expected {s}")
        positive = all(v > 0.0 for v in x)
        if not positive:
            checks.append(StateCheck(tuple(x), False, math.inf, math.inf, False, False))
            continue
        terms = []
        slopes = []
        for j in range(m):
            mono = 1.0
            for k in range(s):
                e = net.reactions[j].reactant[k]
                if e:
                    mono *= x[k] ** e
            term = lam[j] * kappa[j] * mono
            terms.append(term)
            slopes.append(math.fsum(net.reactions[j].reactant[k] * gamma_user[k] / x[k] for k in range(s)))
        denom = math.fsum(abs(t) for t in terms)
        rate_residual = abs(math.fsum(terms)) / denom if denom > 0 else math.inf
        cons = 0.0
        for i in range(1, s):
            lhs = gperm[i] * x[perm[0]] - gperm[0] * x[perm[i]] - cs[i - 1]
            scale = abs(gperm[i] * x[perm[0]]) + abs(gperm[0] * x[perm[i]]) + abs(cs[i - 1]) + 1e-300
            cons = max(cons, abs(lhs) / scale)
        dh = math.fsum(t * sl for t, sl in zip(terms, slopes))
        dh_scale = math.fsum(abs(t) * abs(sl) for t, sl in zip(terms, slopes)) + 1e-300
        nondeg = abs(dh) / dh_scale > 1e-8
        ok = positive and rate_residual <= tol and cons <= tol
        checks.append(StateCheck(tuple(x), positive, rate_residual, cons, nondeg, ok))
    return VerificationReport(tol=tol, states=tuple(checks), passed=all(c.passed for c in checks))
