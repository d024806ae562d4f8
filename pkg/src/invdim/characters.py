"""Weyl characters as Laurent polynomials.

Builds the two characters used throughout (SU(N) fundamental and adjoint)
and turns explicit weight multisets into characters, including the JSON
weight-file format accepted by the CLI.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .laurent import Exponent, LaurentPolynomial
from .roots import build_root_system


@dataclass
class CharacterSpec:
    """A representation described by its weight multiset."""

    rank: int
    weights: dict[Exponent, int]
    label: str = ""

    def __post_init__(self):
        if not self.weights:
            raise ValueError("a character needs at least one weight")
        for w, mult in self.weights.items():
            if len(w) != self.rank:
                raise ValueError(
                    f"weight {w} has length {len(w)}, expected rank {self.rank}")
            if mult < 1:
                raise ValueError(f"weight {w} has non-positive multiplicity {mult}")

    @property
    def dimension(self) -> int:
        return sum(self.weights.values())


def fundamental_character(n_group: int) -> LaurentPolynomial:
    """Character of the defining N-dimensional representation of SU(N):
    z_1 + sum_{k=2}^{N-1} z_k/z_{k-1} + 1/z_{N-1}."""
    if n_group < 2:
        raise ValueError(f"SU(N) requires N >= 2, got {n_group}")
    rank = n_group - 1
    terms: dict[Exponent, int] = {}
    first = [0] * rank
    first[0] = 1
    terms[tuple(first)] = 1
    for k in range(2, n_group):
        vec = [0] * rank
        vec[k - 1] = 1
        vec[k - 2] = -1
        terms[tuple(vec)] = 1
    last = [0] * rank
    last[rank - 1] = -1
    terms[tuple(last)] = 1
    return LaurentPolynomial(rank, terms)


def adjoint_character(n_group: int) -> LaurentPolynomial:
    """Character of the adjoint representation of SU(N): the rank as constant
    term plus one unit monomial per root (positive and negative)."""
    rs = build_root_system(n_group)
    terms: dict[Exponent, int] = {(0,) * rs.rank: rs.rank}
    for root in rs.positive_roots:
        terms[root] = 1
        terms[tuple(-x for x in root)] = 1
    return LaurentPolynomial(rs.rank, terms)


def character_from_weights(spec: CharacterSpec) -> LaurentPolynomial:
    """Sum of multiplicity * z^weight over the weight multiset."""
    return LaurentPolynomial(spec.rank, dict(spec.weights))


def character_spec_to_json_dict(spec: CharacterSpec) -> dict:
    return {
        "rank": spec.rank,
        "label": spec.label,
        "weights": [{"w": list(w), "m": spec.weights[w]} for w in sorted(spec.weights)],
    }


def character_spec_from_json_dict(data: dict) -> CharacterSpec:
    rank = int(data["rank"])
    weights: dict[Exponent, int] = {}
    for item in data["weights"]:
        w = tuple(int(x) for x in item["w"])
        weights[w] = weights.get(w, 0) + int(item["m"])
    return CharacterSpec(rank=rank, weights=weights, label=data.get("label", ""))


def load_weight_file(path: str) -> CharacterSpec:
    """Read a weight multiset from a JSON file:
    {"rank": r, "label": "...", "weights": [{"w": [..], "m": k}, ...]}."""
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    try:
        return character_spec_from_json_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"invalid weight file {path}: {exc}") from exc
