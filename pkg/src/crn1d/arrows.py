"""Arrow diagrams of one-species restrictions and the bi-arrow count.

A one-species network is summarized by its sorted distinct reactant levels
and, per level, whether all reactions there raise the species, lower it, or
both.  For multi-species networks we never rebuild those diagrams: a pair of
opposed reactions (i, j) embeds onto species k as a two-reaction one-species
network showing "up at one level, down at another" exactly when the product

    (alpha[k][i] - alpha[k][j]) * (beta[k][i] - alpha[k][i])

is nonzero, with the sign telling the orientation.  Counting these signed
triples gives the bi-arrow number Ad, the quantity the multistationarity
tests read.
"""

from __future__ import annotations

from dataclasses import dataclass

from .network import OneDimStructure, ReactionNetwork

RIGHT = "right"
LEFT = "left"
BOTH = "both"


@dataclass(frozen=True)
class ArrowDiagram:
    """Distinct reactant levels of a one-species network with directions."""

    reactant_values: tuple[int, ...]
    glyphs: tuple[str, ...]


@dataclass(frozen=True)
class DiagramPairs:
    """Signed triples (species k, reaction i, reaction j), all 1-based.

    ``i`` runs over reactions moving along gamma, ``j`` against it.
    ``right_left`` collects negative products (k rises under i at the lower
    reactant level), ``left_right`` positive ones.
    """

    right_left: tuple[tuple[int, int, int], ...]
    left_right: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class AdReport:
    """Bi-arrow count: total, per-species breakdown, and signed triples."""

    total: int
    per_species: tuple[int, ...]
    triples: tuple[tuple[int, int, int, int], ...]


def one_species_diagram(net: ReactionNetwork) -> ArrowDiagram:
    """Arrow diagram of a network with exactly one species."""
    if net.num_species != 1:
        raise ValueError("one_species_diagram needs a single-species network")
    levels = sorted({rx.reactant[0] for rx in net.reactions})
    glyphs = []
    for a in levels:
        ups = any(rx.reactant[0] == a and rx.product[0] > a for rx in net.reactions)
        downs = any(rx.reactant[0] == a and rx.product[0] < a for rx in net.reactions)
        glyphs.append(BOTH if ups and downs else RIGHT if ups else LEFT)
    return ArrowDiagram(tuple(levels), tuple(glyphs))


def _signed_triples(net: ReactionNetwork, struct: OneDimStructure):
    """Yield (k, i, j, sign) over permuted order, reported with 1-based user indices."""
    m = net.num_reactions
    for kp in range(net.num_species):
        k = struct.species_perm[kp]
        for ip in range(struct.t):
            i = struct.reaction_perm[ip]
            ri = net.reactions[i]
            rise = ri.product[k] - ri.reactant[k]
            if rise == 0:
                continue
            for jp in range(struct.t, m):
                j = struct.reaction_perm[jp]
                product = (ri.reactant[k] - net.reactions[j].reactant[k]) * rise
                if product != 0:
                    yield k + 1, i + 1, j + 1, 1 if product > 0 else -1


def diagram_pair_witnesses(net: ReactionNetwork, struct: OneDimStructure) -> DiagramPairs:
    """All species/reaction-pair triples whose embedded diagram is one-sided."""
    right_left = []
    left_right = []
    for k, i, j, sign in _signed_triples(net, struct):
        (left_right if sign > 0 else right_left).append((k, i, j))
    return DiagramPairs(tuple(right_left), tuple(left_right))


def ad_count(net: ReactionNetwork, struct: OneDimStructure) -> AdReport:
    """Count signed diagram triples; the total is the bi-arrow number."""
    triples = tuple(_signed_triples(net, struct))
    per = [0] * net.num_species
    for k, _i, _j, _sign in triples:
        per[k - 1] += 1
    return AdReport(total=len(triples), per_species=tuple(per), triples=triples)
