"""Capacity classification of one-dimensional networks.

For a two-reaction (bi-reaction) network the number of positive steady
states an invariant line can carry is decided combinatorially.  Writing
``alpha_k`` for the reactant difference of species ``k`` between the two
reactions and ``gamma_k`` for its net change under the first, species split
into sign classes

    S1: alpha>0, gamma>0    S2: alpha<0, gamma<0
    S3: alpha>0, gamma<0    S4: alpha<0, gamma>0    S5: alpha*gamma = 0

and a short ladder of tests on the absolute-alpha totals of these classes
yields one of: no positive steady states, a forced continuum for tuned
rates, at most two, or at least three for suitable parameters.

Networks with more reactions get the exact degenerate cases plus the
necessary/sufficient pair tests built on the bi-arrow count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .arrows import (
    AdReport,
    BOTH,
    DiagramPairs,
    ad_count,
    diagram_pair_witnesses,
    one_species_diagram,
)
from .network import (
    CrnError,
    EssentialEmpty,
    EssentialReduction,
    EssentialSets,
    OneDimStructure,
    ReactionNetwork,
    essential_sets,
    one_dim_structure,
    parse_network,
    reduce_to_essential,
)

CAP_ZERO = "zero"
CAP_INFINITE = "infinitely-many"
CAP_AT_MOST_TWO = "finite-at-most-two"
CAP_AT_LEAST_THREE = "finite-at-least-three"
CAP_UNKNOWN = "unknown"


class NotBiReaction(CrnError):
    """The operation needs a network with exactly two reactions."""


class LambdaNotOpposed(CrnError):
    """Both reactions move the same way; no positive steady state exists."""


@dataclass(frozen=True)
class BiReactionProfile:
    """Sign data of a bi-reaction network, in user species order.

    ``classes[k]`` is the class name of species ``k``; ``sets`` holds the
    five classes as 1-based index sets; ``sums`` and ``mins`` store the
    absolute-alpha totals and minima of S1..S4 (``None`` when empty).
    """

    alphas: tuple[int, ...]
    gammas: tuple[int, ...]
    lambda2: Fraction
    classes: tuple[str, ...]
    sets: tuple[frozenset[int], ...]
    sums: tuple[int, int, int, int]
    mins: tuple[int | None, int | None, int | None, int | None]

    def nonempty(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, 5) if self.sets[i - 1])


def _class_of(alpha: int, gamma: int) -> str:
    if alpha > 0 and gamma > 0:
        return "S1"
    if alpha < 0 and gamma < 0:
        return "S2"
    if alpha > 0 and gamma < 0:
        return "S3"
    if alpha < 0 and gamma > 0:
        return "S4"
    return "S5"


def _profile_from_sign_data(alphas, gammas, lambda2) -> BiReactionProfile:
    classes = tuple(_class_of(a, g) for a, g in zip(alphas, gammas))
    sets = tuple(
        frozenset(k + 1 for k, c in enumerate(classes) if c == f"S{i}") for i in range(1, 6)
    )
    sums = []
    mins = []
    for i in range(4):
        members = [abs(alphas[k - 1]) for k in sets[i]]
        sums.append(sum(members))
        mins.append(min(members) if members else None)
    return BiReactionProfile(
        alphas=tuple(alphas),
        gammas=tuple(gammas),
        lambda2=Fraction(lambda2),
        classes=classes,
        sets=sets,
        sums=tuple(sums),
        mins=tuple(mins),
    )


def bi_profile(net: ReactionNetwork, struct: OneDimStructure) -> BiReactionProfile:
    """Sign profile of a two-reaction network (first reaction is the base)."""
    if net.num_reactions != 2:
        raise NotBiReaction(f"expected 2 reactions, got {net.num_reactions}")
    r1, r2 = net.reactions
    alphas = tuple(r1.reactant[k] - r2.reactant[k] for k in range(net.num_species))
    gammas = struct.gamma_user()
    return _profile_from_sign_data(alphas, gammas, struct.lambda_user()[1])


@dataclass(frozen=True)
class CapacityClass:
    """Outcome of the capacity ladder with its audit trail.

    ``rule`` is a stable identifier of the branch that decided the class;
    ``inequalities`` shows the instantiated comparisons that fired.
    """

    tag: str
    rule: str
    detail: str
    inequalities: tuple[str, ...] = ()


# Three populated classes determine which total is compared against which
# minimum: {classes present} -> (k, l) meaning "sum over S_l vs min over S_k".
_TRIPLE_RULE = {
    frozenset({1, 2, 4}): (1, 4),
    frozenset({1, 3, 4}): (4, 1),
    frozenset({2, 3, 4}): (3, 2),
    frozenset({1, 2, 3}): (2, 3),
}


def capacity_class_bi(profile: BiReactionProfile, lambda2) -> CapacityClass:
    """Decide the steady-state capacity of a bi-reaction profile.

    The ladder order matters: the sign gate and the flatness gate come
    first because the populated-class rules presuppose a finite count.
    """
    lambda2 = Fraction(lambda2)
    if lambda2 > 0:
        return CapacityClass(
            tag=CAP_ZERO,
            rule="lambda-same-sign",
            detail="both reactions move along the base direction, so the rate "
            "balance is a sum of positive terms with no positive root",
        )
    s1, s2, s3, s4 = profile.sums
    if s1 == s4 and s2 == s3:
        return CapacityClass(
            tag=CAP_INFINITE,
            rule="co-located-poles",
            detail="offsets proportional to the slopes make the scalar balance "
            "constant on its whole interval, so tuned rates yield a continuum",
        )
    mins = profile.mins
    populated = profile.nonempty()
    if len(populated) == 1:
        return CapacityClass(
            tag=CAP_AT_MOST_TWO,
            rule="case-a",
            detail=f"only S{populated[0]} is populated; the scalar balance has "
            "at most one interior extremum",
        )
    if len(populated) == 2:
        pair = frozenset(populated)
        if pair == frozenset({1, 4}):
            k, l = 1, 4
        elif pair == frozenset({2, 3}):
            k, l = 2, 3
        else:
            return CapacityClass(
                tag=CAP_AT_MOST_TWO,
                rule="case-b",
                detail=f"classes S{populated[0]} and S{populated[1]} do not "
                "alternate in both sign sequences; at most one interior extremum",
            )
        lhs1, rhs1 = profile.sums[k - 1], mins[l - 1]
        lhs2, rhs2 = profile.sums[l - 1], mins[k - 1]
        if lhs1 > rhs1 and lhs2 > rhs2:
            return CapacityClass(
                tag=CAP_AT_LEAST_THREE,
                rule="case-b",
                detail=f"S{k} and S{l} populated and each total beats the "
                "opposite minimum",
                inequalities=(f"{lhs1} > {rhs1}", f"{lhs2} > {rhs2}"),
            )
        failed = f"{lhs1} > {rhs1}" if not (lhs1 > rhs1) else f"{lhs2} > {rhs2}"
        return CapacityClass(
            tag=CAP_AT_MOST_TWO,
            rule="case-b",
            detail=f"S{k} and S{l} populated but the comparison {failed} fails",
        )
    if len(populated) == 3:
        k, l = _TRIPLE_RULE[frozenset(populated)]
        lhs, rhs = profile.sums[l - 1], mins[k - 1]
        if lhs > rhs:
            return CapacityClass(
                tag=CAP_AT_LEAST_THREE,
                rule="case-c",
                detail=f"classes S{populated[0]}, S{populated[1]}, S{populated[2]} "
                f"populated and the S{l} total beats the S{k} minimum",
                inequalities=(f"{lhs} > {rhs}",),
            )
        return CapacityClass(
            tag=CAP_AT_MOST_TWO,
            rule="case-c",
            detail=f"three classes populated but {lhs} > {rhs} fails",
        )
    conditions = (
        (s4, mins[0], "S4 total vs S1 minimum"),
        (s1, mins[3], "S1 total vs S4 minimum"),
        (s3, mins[1], "S3 total vs S2 minimum"),
        (s2, mins[2], "S2 total vs S3 minimum"),
    )
    holding = [(lhs, rhs, label) for lhs, rhs, label in conditions if lhs > rhs]
    if holding:
        return CapacityClass(
            tag=CAP_AT_LEAST_THREE,
            rule="case-d",
            detail=f"all four classes populated; {holding[0][2]} fires",
            inequalities=tuple(f"{lhs} > {rhs}" for lhs, rhs, _ in holding),
        )
    return CapacityClass(
        tag=CAP_AT_MOST_TWO,
        rule="case-d",
        detail="all four classes populated but no total beats the opposite minimum",
    )


@dataclass(frozen=True)
class TwoReactionReport:
    """Nondegenerate-pair criterion for a bi-reaction network."""

    nondegenerate_multistationary: bool
    products: tuple[int, ...]
    reason: str


def two_nondeg_bi(net: ReactionNetwork, struct: OneDimStructure) -> TwoReactionReport:
    """Decide whether a bi-reaction network admits two nondegenerate
    positive steady states on some invariant line.

    The per-species products ``(alpha_k1 - alpha_k2) * gamma_k`` must take
    both signs, excluding the exceptional cancellation when exactly one
    species is active on each side.
    """
    if net.num_reactions != 2:
        raise NotBiReaction(f"expected 2 reactions, got {net.num_reactions}")
    if struct.lambda_user()[1] > 0:
        raise LambdaNotOpposed("both multipliers are positive")
    r1, r2 = net.reactions
    gamma = struct.gamma_user()
    alphas = [r1.reactant[k] - r2.reactant[k] for k in range(net.num_species)]
    products = tuple(a * g for a, g in zip(alphas, gamma))
    pos = [k for k, p in enumerate(products) if p > 0]
    neg = [k for k, p in enumerate(products) if p < 0]
    if not pos or not neg:
        return TwoReactionReport(False, products, "the per-species products do not take both signs")
    if len(pos) == 1 and len(neg) == 1 and alphas[pos[0]] == -alphas[neg[0]]:
        return TwoReactionReport(
            False, products, "exactly one species on each side and their reactant differences cancel"
        )
    return TwoReactionReport(True, products, "products take both signs without exact cancellation")


@dataclass(frozen=True)
class TestReport:
    passes: bool
    note: str


def necessary_pair_test(net: ReactionNetwork, struct: OneDimStructure, ad: AdReport) -> TestReport:
    """Necessary condition for nondegenerate multistationarity: the signed
    diagram triples must occur with both orientations.

    Failing this rules out multiple nondegenerate steady states whenever the
    parameter capacity is finite; a network with infinite capacity can still
    carry degenerate continua.
    """
    has_pos = any(sign > 0 for *_ijk, sign in ad.triples)
    has_neg = any(sign < 0 for *_ijk, sign in ad.triples)
    if has_pos and has_neg:
        return TestReport(True, "one-sided embedded diagrams occur with both orientations")
    missing = "left-right" if not has_pos else "right-left"
    return TestReport(
        False,
        f"no {missing} embedded diagram; with finite capacity this excludes "
        "multiple nondegenerate steady states (degenerate continua are not excluded)",
    )


def necessary_three_test(ad: AdReport) -> TestReport:
    """At least three signed triples are needed for three or more
    nondegenerate positive steady states on a line."""
    if ad.total >= 3:
        return TestReport(True, f"bi-arrow count {ad.total} >= 3")
    return TestReport(
        False,
        f"bi-arrow count {ad.total} < 3 rules out three nondegenerate steady "
        "states when the capacity is finite",
    )


@dataclass(frozen=True)
class SufficientCertificate:
    """An opposed reaction pair whose own capacity is positive and finite.

    ``pair`` is (reaction moving along gamma, reaction moving against it),
    1-based.  Together with a passing pair test this certifies at least two
    positive steady states for suitable rates.
    """

    pair: tuple[int, int]
    necessary_pair_passes: bool
    satisfied: bool
    note: str


def _pair_sign_data(net: ReactionNetwork, i: int, j: int):
    """(alphas, gammas) of the two-reaction subnetwork (i, j), user order."""
    ri, rj = net.reactions[i], net.reactions[j]
    alphas = tuple(ri.reactant[k] - rj.reactant[k] for k in range(net.num_species))
    gammas = ri.change
    return alphas, gammas


def _pair_is_finite(alphas, gammas) -> bool:
    """A pair has finite capacity iff some side's signed alpha total is nonzero."""
    up = sum(a for a, g in zip(alphas, gammas) if g > 0)
    down = sum(a for a, g in zip(alphas, gammas) if g < 0)
    return up != 0 or down != 0


def sufficient_two_test(net: ReactionNetwork, struct: OneDimStructure) -> SufficientCertificate | None:
    """Find an opposed pair with positive finite capacity, if any.

    Scans pairs in permuted lexicographic order and returns the first hit;
    ``satisfied`` also requires the pair-diagram necessary test, which is
    what turns the certificate into a two-state guarantee.
    """
    m = net.num_reactions
    ad = ad_count(net, struct)
    necessary = necessary_pair_test(net, struct, ad)
    for ip in range(struct.t):
        for jp in range(struct.t, m):
            i, j = struct.reaction_perm[ip], struct.reaction_perm[jp]
            alphas, gammas = _pair_sign_data(net, i, j)
            if _pair_is_finite(alphas, gammas):
                return SufficientCertificate(
                    pair=(i + 1, j + 1),
                    necessary_pair_passes=necessary.passes,
                    satisfied=necessary.passes,
                    note="pair capacity is positive and finite; with the pair "
                    "test this yields two positive steady states for tuned rates",
                )
    return None


@dataclass(frozen=True)
class Notice:
    id: str
    message: str


@dataclass(frozen=True)
class Report:
    """Everything :func:`classify` derives for one network."""

    network: ReactionNetwork
    structure: OneDimStructure
    essential: EssentialSets
    pairs: DiagramPairs
    ad: AdReport
    necessary_pair: TestReport
    necessary_three: TestReport
    sufficient_two: SufficientCertificate | None
    capacity: CapacityClass
    profile: BiReactionProfile | None
    two_reaction: TwoReactionReport | None
    reduction: EssentialReduction | None
    reduced: "Report | None"
    warnings: tuple[Notice, ...]


def _canonical_key(net: ReactionNetwork):
    """Isomorphism key: minimal coefficient table over species and reaction
    relabelings.  Intended for small networks (the known-issue registry and
    the enumerator)."""
    s = net.num_species
    best = None
    for sperm in itertools.permutations(range(s)):
        rows = [
            tuple(rx.reactant[k] for k in sperm) + tuple(rx.product[k] for k in sperm)
            for rx in net.reactions
        ]
        for rperm in itertools.permutations(range(len(rows))):
            key = tuple(rows[j] for j in rperm)
            if best is None or key < best:
                best = key
    return best


_W1_TEXT = """
X1 + 2 X2 -> X2
2 X1 -> 3 X1 + X2
2 X2 -> X1 + 3 X2
"""

_W2_TEXT = """
2 X1 + X2 -> X1
X1 + 2 X2 -> 2 X1 + 3 X2
X1 + X2 -> 0
"""

_KNOWN_ISSUES: dict = {}


def _known_issue_registry() -> dict:
    if not _KNOWN_ISSUES:
        _KNOWN_ISSUES[_canonical_key(parse_network(_W1_TEXT))] = Notice(
            id="reference-witness-mismatch",
            message="a commonly quoted two-state witness for this network "
            "(rates (1, 9, 1), conservation constant 0.5) does not satisfy its "
            "steady-state equation; those states solve the sign-flipped cubic "
            "x1*x2^2 - 9*x1^2 + x2^2 = 0 instead. Witnesses here are derived "
            "independently and verified numerically.",
        )
        _KNOWN_ISSUES[_canonical_key(parse_network(_W2_TEXT))] = Notice(
            id="reference-claim-mismatch",
            message="this network is sometimes claimed to admit no "
            "multistationarity; the certificate test disagrees. A degenerate "
            "continuum of positive steady states occurs exactly when the two "
            "opposed rates are equal and the conservation constant is tuned "
            "(kappa2 = kappa1 with c1 = kappa3/kappa1); all other parameters "
            "give at most one positive steady state on a line.",
        )
    return _KNOWN_ISSUES


def known_issue_warnings(net: ReactionNetwork) -> tuple[Notice, ...]:
    """Warnings for networks matching the registry up to relabeling."""
    if net.num_species > 6 or net.num_reactions > 4:
        return ()
    hit = _known_issue_registry().get(_canonical_key(net))
    return (hit,) if hit else ()


def structural_warnings(net: ReactionNetwork) -> tuple[Notice, ...]:
    out = []
    if net.num_species == 1:
        diagram = one_species_diagram(net)
        if BOTH in diagram.glyphs:
            out.append(
                Notice(
                    id="both-arrow-level",
                    message="some reactant level sends arrows both ways; the "
                    "network admits infinitely many degenerate positive steady "
                    "states for tuned rates",
                )
            )
    return tuple(out)


def _multi_reaction_capacity(
    net: ReactionNetwork,
    struct: OneDimStructure,
    sets: EssentialSets,
    necessary: TestReport,
    three: TestReport,
    cert: SufficientCertificate | None,
) -> CapacityClass:
    m = net.num_reactions
    if struct.t == m:
        return CapacityClass(
            tag=CAP_ZERO,
            rule="lambda-same-sign",
            detail="every multiplier is positive, so the rate balance is a sum "
            "of positive terms with no positive root",
        )
    if not sets.eh:
        return CapacityClass(
            tag=CAP_INFINITE,
            rule="free-species-balance",
            detail="no species is both rate-relevant and moved, and both "
            "directions occur, so tuned rates make every point of a line steady",
        )
    notes = []
    if cert is not None and cert.satisfied:
        notes.append("at least two positive steady states for suitable rates (certificate pair "
                     f"{cert.pair[0]} and {cert.pair[1]})")
    elif not necessary.passes:
        notes.append("multiple nondegenerate steady states excluded while the capacity is finite")
    if not three.passes:
        notes.append("three or more nondegenerate states excluded while the capacity is finite")
    detail = "; ".join(notes) if notes else "the pair tests alone do not bound the count"
    return CapacityClass(tag=CAP_UNKNOWN, rule="tests-only", detail=detail)


def classify(net: ReactionNetwork) -> Report:
    """Full structural classification of a one-dimensional network.

    Bi-reaction networks get the exact capacity ladder; others get the
    exact degenerate cases plus the test outcomes.  When the essential
    species form a proper nonempty subset the reduced network is classified
    as well (reduction preserves steady-state counts per line).
    """
    struct = one_dim_structure(net)
    sets = essential_sets(net, struct)
    pairs = diagram_pair_witnesses(net, struct)
    ad = ad_count(net, struct)
    necessary = necessary_pair_test(net, struct, ad)
    three = necessary_three_test(ad)
    cert = sufficient_two_test(net, struct)
    profile = None
    two_report = None
    if net.num_reactions == 2:
        profile = bi_profile(net, struct)
        capacity = capacity_class_bi(profile, profile.lambda2)
        if profile.lambda2 < 0:
            two_report = two_nondeg_bi(net, struct)
    else:
        capacity = _multi_reaction_capacity(net, struct, sets, necessary, three, cert)
    reduction = None
    reduced = None
    eh = sets.eh
    if eh and len(eh) < net.num_species:
        try:
            reduction = reduce_to_essential(net)
        except EssentialEmpty:  # pragma: no cover - eh nonempty rules this out
            reduction = None
        if reduction is not None:
            reduced = classify(reduction.network)
    warnings = structural_warnings(net) + known_issue_warnings(net)
    return Report(
        network=net,
        structure=struct,
        essential=sets,
        pairs=pairs,
        ad=ad,
        necessary_pair=necessary,
        necessary_three=three,
        sufficient_two=cert,
        capacity=capacity,
        profile=profile,
        two_reaction=two_report,
        reduction=reduction,
        reduced=reduced,
        warnings=warnings,
    )
