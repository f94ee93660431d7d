"""Stress-tensor value types shared by the 2D and 4D pipelines."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

FRAMES_2D = ("rindler_coords", "flat_conformal_coords")
FRAMES_4D = ("flat_conformal", "curved")


@dataclass(frozen=True)
class StressTensor2:
    """Covariant components of a symmetric 2D stress tensor.

    In the ``rindler_coords`` frame the indices are (tau, chi). In the
    ``flat_conformal_coords`` frame the spatial index is the conformal
    coordinate xi (or x for a generic conformal factor); the field names keep
    the Rindler labels.
    """

    T_tautau: float
    T_tauchi: float
    T_chichi: float
    frame: str = "flat_conformal_coords"

    def __post_init__(self):
        if self.frame not in FRAMES_2D:
            raise ValueError(f"unknown 2D frame {self.frame!r}")

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.T_tautau, self.T_tauchi], [self.T_tauchi, self.T_chichi]])

    def __add__(self, other: "StressTensor2") -> "StressTensor2":
        if other.frame != self.frame:
            raise ValueError("cannot add stress tensors in different frames")
        return StressTensor2(
            self.T_tautau + other.T_tautau,
            self.T_tauchi + other.T_tauchi,
            self.T_chichi + other.T_chichi,
            self.frame,
        )

    def __sub__(self, other: "StressTensor2") -> "StressTensor2":
        return self + other.scaled(-1.0)

    def scaled(self, k: float) -> "StressTensor2":
        return StressTensor2(k * self.T_tautau, k * self.T_tauchi, k * self.T_chichi, self.frame)

    def flat_trace(self) -> float:
        """Trace with the flat metric diag(+1, -1)."""
        return self.T_tautau - self.T_chichi


@dataclass(frozen=True)
class StressTensor4:
    """Diagonal 4D stress tensor ``diag(T_etaeta, T_xx, T_yy, T_zz)``.

    The de Sitter anomaly term is isotropic, but the flat-space Casimir state
    between plates normal to z is not, so all four entries are kept.
    """

    diag: tuple[float, float, float, float]
    frame: str = "flat_conformal"

    def __post_init__(self):
        if self.frame not in FRAMES_4D:
            raise ValueError(f"unknown 4D frame {self.frame!r}")
        if len(self.diag) != 4:
            raise ValueError("a 4D diagonal stress tensor needs four entries")
        object.__setattr__(self, "diag", tuple(float(v) for v in self.diag))

    @classmethod
    def isotropic(cls, T_etaeta: float, T_space: float, frame: str = "flat_conformal"):
        return cls((T_etaeta, T_space, T_space, T_space), frame)

    @classmethod
    def zero(cls, frame: str = "flat_conformal"):
        return cls((0.0, 0.0, 0.0, 0.0), frame)

    @property
    def T_etaeta(self) -> float:
        return self.diag[0]

    @property
    def T_space(self) -> float:
        """Common spatial entry; only defined for isotropic tensors."""
        xx, yy, zz = self.diag[1:]
        scale = max(abs(xx), abs(yy), abs(zz), 1e-300)
        if max(abs(xx - yy), abs(xx - zz)) > 1e-12 * scale:
            raise ValueError("tensor is not spatially isotropic")
        return xx

    @property
    def T_zz(self) -> float:
        return self.diag[3]

    def trace(self, g_diag) -> float:
        return math.fsum(t / g for t, g in zip(self.diag, g_diag))
