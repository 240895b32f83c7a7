import logging
from collections import Counter
from itertools import product
from typing import Dict, List, Sequence, Tuple

from theta_orbits.characters.formal import FormalCharacter, ProductGroup, Weight
from theta_orbits.characters.irreps import Label, product_irrep_character
from theta_orbits.characters.labels import OLabel, interlacing, is_split, make_o_label
from theta_orbits.errors import NonCharacterError, ParameterError

logger = logging.getLogger(__name__)

Labels = Tuple[Label, ...]


def _dominant_labels(group: ProductGroup, top: Weight) -> Tuple[List[Label], List[int]]:
    """Per-factor labels of the highest weight `top`, plus the factors whose det-sign is undetermined."""
    labels: List[Label] = []
    split: List[int] = []
    for index, factor in enumerate(group.factors):
        block = top[group.block(index)]
        if factor.kind == "U":
            if any(a < b for a, b in zip(block, block[1:])):
                raise NonCharacterError(f"top weight {top} is not dominant for {factor}", {"weight": top})
            labels.append(tuple(block))
            continue
        if any(a < b for a, b in zip(block, block[1:])) or (block and block[-1] < 0):
            raise NonCharacterError(f"top weight {top} is not dominant for {factor}", {"weight": top})
        labels.append(make_o_label(factor.size, block, 1))
        if factor.size >= 1 and is_split(factor.size, block):
            split.append(index)
    return labels, split


def decompose(ch: FormalCharacter) -> Dict[Labels, int]:
    """
    Decompose an exact character into irreps by highest-weight stripping.

    The lexicographically largest ordinary weight is a highest weight; the
    det-signs of split orthogonal factors are recovered from the twisted
    sectors by inverting the sign table.
    """
    group = ch.group
    positions = {index: pos for pos, index in enumerate(group.sector_factors)}
    remaining = ch
    result: Dict[Labels, int] = {}
    while remaining.ordinary:
        top = max(remaining.ordinary)
        labels, split = _dominant_labels(group, top)
        coefficients = {}
        for chosen in product((0, 1), repeat=len(split)):
            key = [0] * len(positions)
            for index, bit in zip(split, chosen):
                key[positions[index]] = bit
            coefficients[chosen] = remaining.sector(tuple(key)).get(top, 0)
        for signs in product((1, -1), repeat=len(split)):
            total = 0
            for chosen, c in coefficients.items():
                weight = 1
                for bit, s in zip(chosen, signs):
                    if bit:
                        weight *= s
                total += weight * c
            count, rest = divmod(total, 2 ** len(split))
            if rest or count < 0:
                raise NonCharacterError(
                    f"no irrep combination has highest weight {top} with sector data {coefficients}",
                    {"weight": top},
                )
            if not count:
                continue
            for index, s in zip(split, signs):
                labels[index] = OLabel(labels[index].nu, s)
            key = tuple(labels)
            result[key] = result.get(key, 0) + count
            remaining = remaining - product_irrep_character(group, key).scaled(count)
        if top in remaining.ordinary:
            raise NonCharacterError(f"weight {top} survives stripping", {"weight": top})
    if not remaining.is_zero():
        raise NonCharacterError("twisted sectors do not match the ordinary character")
    return result


def multiplicity(ch: FormalCharacter, labels: Sequence[Label]) -> int:
    return decompose(ch).get(tuple(labels), 0)


def branch_one(b: int, label: OLabel) -> List[OLabel]:
    """Labels of O(b-1) in the restriction of an O(b) irrep, with multiplicity."""
    if b < 1:
        raise ParameterError("O(0) has nothing to branch to")
    nu, eps = make_o_label(b, *label)
    m = b // 2
    out: List[OLabel] = []
    if b % 2:
        for kappa in interlacing(nu, m):
            sign = eps if not kappa or kappa[-1] == 0 else 1
            out.append(make_o_label(b - 1, kappa, sign))
    elif is_split(b, nu):
        out.extend(make_o_label(b - 1, kappa, eps) for kappa in interlacing(nu, m - 1))
    else:
        for kappa in interlacing(nu, m - 1):
            out.extend(make_o_label(b - 1, kappa, s) for s in (1, -1))
    return out


def branch_O(label: OLabel, b: int, steps: int) -> Counter:
    """Iterated restriction O(b) -> O(b - steps) as a Counter of labels."""
    if steps < 0 or steps > b:
        raise ParameterError(f"cannot branch O({b}) by {steps} steps")
    current = Counter({make_o_label(b, *label): 1})
    for size in range(b, b - steps, -1):
        following: Counter = Counter()
        for lab, mult in current.items():
            for lower in branch_one(size, lab):
                following[lower] += mult
        current = following
    logger.debug("branched %s from O(%d) to O(%d): %d labels", label, b, b - steps, len(current))
    return current
