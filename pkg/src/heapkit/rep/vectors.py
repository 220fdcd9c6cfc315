"""
Basis vectors and sparse vectors of the ideal module.

A proper ideal is stored as its cut: N_p per vertex, the ideal holding E(p, t) for t < N_p.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from typing import Any

from heapkit.cartan.roots import RootVector
from heapkit.core.errors import DimensionMismatch
from heapkit.rep.laurent import Coefficient, LaurentPoly


@dataclass(frozen=True, order=True)
class IdealCut:
    """Chain cuts of a proper ideal."""

    levels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "levels", tuple(int(n) for n in self.levels))

    @classmethod
    def of(cls, levels: Iterable[int]) -> IdealCut:
        return cls(tuple(levels))

    def __len__(self) -> int:
        return len(self.levels)

    def __getitem__(self, p: int) -> int:
        return self.levels[p]

    def __iter__(self) -> Iterator[int]:
        return iter(self.levels)

    def moved(self, p: int, by: int = 1) -> IdealCut:
        levels = list(self.levels)
        levels[p] += by
        return IdealCut(tuple(levels))

    def plus(self, vector: RootVector | Sequence[int], sign: int = 1) -> IdealCut:
        if len(vector) != len(self.levels):
            raise DimensionMismatch(f"Cut of length {len(self.levels)} shifted by {len(vector)}")
        return IdealCut(tuple(n + sign * c for n, c in zip(self.levels, vector, strict=True)))

    def meet(self, other: IdealCut) -> IdealCut:
        return IdealCut(tuple(min(a, b) for a, b in zip(self.levels, other.levels, strict=True)))

    def join(self, other: IdealCut) -> IdealCut:
        return IdealCut(tuple(max(a, b) for a, b in zip(self.levels, other.levels, strict=True)))

    def contains(self, p: int, t: int) -> bool:
        return t < self.levels[p]

    def to_json_value(self) -> list[int]:
        return list(self.levels)

    def __str__(self) -> str:
        return "(" + ",".join(str(n) for n in self.levels) + ")"


def _nonzero(c: Coefficient) -> bool:
    return bool(c) if isinstance(c, LaurentPoly) else c != 0


class ModuleVector:
    """Sparse linear combination of basis vectors v_I; zero coefficients are never stored."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[IdealCut, Coefficient] | None = None):
        self._coeffs: dict[IdealCut, Coefficient] = {}
        if coeffs:
            for cut, c in coeffs.items():
                if _nonzero(c):
                    self._coeffs[cut] = c

    @classmethod
    def basis(cls, cut: IdealCut, coefficient: Coefficient = 1) -> ModuleVector:
        return cls({cut: coefficient})

    @classmethod
    def zero(cls) -> ModuleVector:
        return cls()

    def items(self) -> Iterator[tuple[IdealCut, Coefficient]]:
        return iter(sorted(self._coeffs.items(), key=lambda kv: kv[0]))

    def support(self) -> list[IdealCut]:
        return sorted(self._coeffs)

    def coefficient(self, cut: IdealCut) -> Coefficient:
        return self._coeffs.get(cut, 0)

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __add__(self, other: ModuleVector) -> ModuleVector:
        out: dict[IdealCut, Coefficient] = dict(self._coeffs)
        for cut, c in other._coeffs.items():
            out[cut] = out.get(cut, 0) + c
        return ModuleVector(out)

    def __neg__(self) -> ModuleVector:
        return ModuleVector({cut: -c for cut, c in self._coeffs.items()})

    def __sub__(self, other: ModuleVector) -> ModuleVector:
        return self + (-other)

    def scale(self, factor: Coefficient) -> ModuleVector:
        return ModuleVector({cut: c * factor for cut, c in self._coeffs.items()})

    def __rmul__(self, factor: Coefficient) -> ModuleVector:
        return self.scale(factor)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleVector):
            return NotImplemented
        if self._coeffs.keys() != other._coeffs.keys():
            return False
        return all(c == other._coeffs[k] for k, c in self._coeffs.items())

    __hash__ = None  # type: ignore[assignment]

    def single(self) -> tuple[IdealCut, Coefficient] | None:
        """The (cut, coefficient) of a vector with one term, None otherwise."""
        if len(self._coeffs) != 1:
            return None
        return next(iter(self._coeffs.items()))

    def to_json_value(self) -> list[Any]:
        out = []
        for cut, c in self.items():
            value = c.to_json_value() if isinstance(c, LaurentPoly) else c
            out.append([cut.to_json_value(), value])
        return out

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(f"{c}*v{cut}" for cut, c in self.items())
