"""
Exact formal characters of products of compact groups U(a) and O(b).

A character is stored sector by sector. For every orthogonal factor O(b)
with b >= 1 a sector bit selects either the identity component (bit 0) or
the coset of the reflection r = diag(1, ..., 1, -1) (bit 1). A sector maps
torus weights to integer coefficients:

- bit 0: ordinary weights of the maximal torus of SO(b), b // 2 entries;
- bit 1, b odd: the trace of r.t for t in the same torus;
- bit 1, b even: the trace of r.t for t in the torus of SO(b-1), stored
  with the last entry fixed to 0.
"""

from collections import defaultdict
from itertools import product
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from theta_orbits.errors import ParameterError

Weight = Tuple[int, ...]
Poly = Dict[Weight, int]
SectorKey = Tuple[int, ...]


class GroupFactor(NamedTuple):
    kind: str
    size: int

    @property
    def rank(self) -> int:
        return self.size if self.kind == "U" else self.size // 2

    @property
    def has_sector(self) -> bool:
        return self.kind == "O" and self.size >= 1

    def __str__(self) -> str:
        return f"{self.kind}({self.size})"


def U(a: int) -> GroupFactor:
    return GroupFactor("U", a)


def O(b: int) -> GroupFactor:
    return GroupFactor("O", b)


class ProductGroup(BaseModel):
    model_config = ConfigDict(frozen=True)

    factors: Tuple[GroupFactor, ...]

    @field_validator("factors")
    @classmethod
    def _known_factors(cls, factors: Tuple[GroupFactor, ...]) -> Tuple[GroupFactor, ...]:
        for f in factors:
            if f.kind not in ("U", "O") or f.size < 0:
                raise ValueError(f"unsupported group factor {f}")
        return factors

    @classmethod
    def of(cls, *factors: GroupFactor) -> "ProductGroup":
        try:
            return cls(factors=tuple(factors))
        except ValidationError as exc:
            raise ParameterError(str(exc)) from exc

    @property
    def rank(self) -> int:
        return sum(f.rank for f in self.factors)

    def offset(self, index: int) -> int:
        return sum(f.rank for f in self.factors[:index])

    def block(self, index: int) -> slice:
        start = self.offset(index)
        return slice(start, start + self.factors[index].rank)

    @property
    def sector_factors(self) -> Tuple[int, ...]:
        """Indices of the factors that carry a sector bit."""
        return tuple(i for i, f in enumerate(self.factors) if f.has_sector)

    def sector_position(self, index: int) -> int:
        return self.sector_factors.index(index)

    def sector_keys(self) -> Iterator[SectorKey]:
        yield from product((0, 1), repeat=len(self.sector_factors))

    @property
    def identity_sector(self) -> SectorKey:
        return (0,) * len(self.sector_factors)

    @property
    def zero_weight(self) -> Weight:
        return (0,) * self.rank

    def replace(self, index: int, factor: GroupFactor) -> "ProductGroup":
        return ProductGroup.of(*self.factors[:index], factor, *self.factors[index + 1 :])

    def __add__(self, other: "ProductGroup") -> "ProductGroup":
        return ProductGroup.of(*self.factors, *other.factors)

    def __str__(self) -> str:
        return " x ".join(str(f) for f in self.factors) or "1"


def poly_add(a: Poly, b: Poly, scale: int = 1) -> Poly:
    out = dict(a)
    for w, c in b.items():
        value = out.get(w, 0) + scale * c
        if value:
            out[w] = value
        else:
            out.pop(w, None)
    return out


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: Dict[Weight, int] = defaultdict(int)
    for w1, c1 in a.items():
        for w2, c2 in b.items():
            out[tuple(x + y for x, y in zip(w1, w2))] += c1 * c2
    return {w: c for w, c in out.items() if c}


def shift(poly: Poly, v: Weight) -> Poly:
    return {tuple(x + y for x, y in zip(w, v)): c for w, c in poly.items()}


class FormalCharacter(BaseModel):
    model_config = ConfigDict(frozen=True)

    group: ProductGroup
    sectors: Dict[SectorKey, Poly] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _sector_shapes(self) -> "FormalCharacter":
        bits, rank = len(self.group.sector_factors), self.group.rank
        for key, poly in self.sectors.items():
            if len(key) != bits or any(bit not in (0, 1) for bit in key):
                raise ValueError(f"sector {key} does not fit {self.group}")
            if any(len(w) != rank for w in poly):
                raise ValueError(f"weights in sector {key} must have {rank} entries")
        return self

    @classmethod
    def of(cls, group: ProductGroup, sectors: Optional[Dict[SectorKey, Poly]] = None) -> "FormalCharacter":
        """Wrap sectors computed by this package; no shape validation."""
        return cls.model_construct(group=group, sectors=sectors or {})

    @classmethod
    def zero(cls, group: ProductGroup) -> "FormalCharacter":
        return cls.of(group)

    @classmethod
    def trivial(cls, group: ProductGroup) -> "FormalCharacter":
        return cls.of(group, {key: {group.zero_weight: 1} for key in group.sector_keys()})

    def sector(self, key: SectorKey) -> Poly:
        return self.sectors.get(key, {})

    @property
    def ordinary(self) -> Poly:
        return self.sector(self.group.identity_sector)

    def _check_group(self, other: "FormalCharacter") -> None:
        if self.group != other.group:
            raise ParameterError(f"characters of {self.group} and {other.group} do not combine")

    def _combine(self, other: "FormalCharacter", scale: int) -> "FormalCharacter":
        self._check_group(other)
        out = {}
        for key in set(self.sectors) | set(other.sectors):
            poly = poly_add(self.sector(key), other.sector(key), scale)
            if poly:
                out[key] = poly
        return FormalCharacter.of(self.group, out)

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self._combine(other, 1)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self._combine(other, -1)

    def scaled(self, k: int) -> "FormalCharacter":
        if k == 0:
            return FormalCharacter.of(self.group)
        return FormalCharacter.of(
            self.group, {key: {w: k * c for w, c in poly.items()} for key, poly in self.sectors.items()}
        )

    def tensor(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check_group(other)
        out = {}
        for key in set(self.sectors) & set(other.sectors):
            poly = poly_mul(self.sectors[key], other.sectors[key])
            if poly:
                out[key] = poly
        return FormalCharacter.of(self.group, out)

    def outer(self, other: "FormalCharacter") -> "FormalCharacter":
        """Character of the external tensor product over the product of both groups."""
        out = {}
        for k1, p1 in self.sectors.items():
            for k2, p2 in other.sectors.items():
                poly = {w1 + w2: c1 * c2 for w1, c1 in p1.items() for w2, c2 in p2.items()}
                if poly:
                    out[k1 + k2] = poly
        return FormalCharacter.of(self.group + other.group, out)

    def shift_U(self, index: int, k: int) -> "FormalCharacter":
        """Tensor with det**k of the unitary factor at `index`."""
        factor = self.group.factors[index]
        if factor.kind != "U":
            raise ParameterError(f"factor {index} is {factor}, not unitary")
        v = [0] * self.group.rank
        for i in range(self.group.block(index).start, self.group.block(index).stop):
            v[i] = k
        return FormalCharacter.of(self.group, {key: shift(poly, tuple(v)) for key, poly in self.sectors.items()})

    def restrict_orthogonal(self, index: int) -> "FormalCharacter":
        """Restrict the factor O(b) at `index` to O(b-1), embedded as the upper-left block."""
        factor = self.group.factors[index]
        if factor.kind != "O" or factor.size < 1:
            raise ParameterError(f"cannot restrict factor {factor}")
        b = factor.size
        new_group = self.group.replace(index, O(b - 1))
        block = self.group.block(index)
        pos = self.group.sector_position(index)
        out: Dict[SectorKey, Dict[Weight, int]] = defaultdict(lambda: defaultdict(int))
        for key, poly in self.sectors.items():
            twisted = key[pos] == 1
            if b == 1:
                # O(0) has a single component
                if twisted:
                    continue
                new_key = key[:pos] + key[pos + 1 :]
            else:
                new_key = key
            for w, c in poly.items():
                head, part, tail = w[: block.start], w[block], w[block.stop :]
                if b % 2 == 0:
                    part = part[:-1]
                elif twisted and part:
                    part = part[:-1] + (0,)
                out[new_key][head + part + tail] += c
        sectors = {}
        for key, poly in out.items():
            kept = {w: c for w, c in poly.items() if c}
            if kept:
                sectors[key] = kept
        return FormalCharacter.of(new_group, sectors)

    def dim(self) -> int:
        return sum(self.ordinary.values())

    def is_zero(self) -> bool:
        return not any(self.sectors.values())

    def negative_ordinary(self) -> List[Tuple[Weight, int]]:
        return sorted((w, c) for w, c in self.ordinary.items() if c < 0)
