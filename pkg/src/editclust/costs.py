"""Symbols, sequences and elementary edit costs.

Tokens are interned to dense integer ids ``0 .. |A|-1`` in the order the
alphabet was declared. A sequence is a non-empty tuple of such ids. The gap
marker used inside aligned rows is :data:`GAP`, which is never a valid
symbol id, so it cannot collide with data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence, Tuple

import numpy as np

from .errors import ConfigurationError

Symbol = int
#: Aligned symbol: either a symbol id or GAP.
AlignedSymbol = int
Seq = Tuple[int, ...]

GAP: AlignedSymbol = -1


@dataclass(frozen=True, eq=False)
class CostModel:
    """Deletion cost plus a substitution matrix indexed by symbol id.

    Build instances with :func:`make_unit_cost_model` or
    :func:`make_matrix_cost_model`; the constructor validates, but does not
    copy-protect, whatever it is given.
    """

    alphabet: Tuple[str, ...]
    sub_matrix: np.ndarray
    del_cost: float = 1.0
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        if not alphabet:
            raise ConfigurationError("alphabet must not be empty")
        if len(set(alphabet)) != len(alphabet):
            raise ConfigurationError("alphabet tokens must be distinct")
        sub = np.array(self.sub_matrix, dtype=np.float64)
        n = len(alphabet)
        if sub.shape != (n, n):
            raise ConfigurationError(
                f"substitution matrix must be {n}x{n}, got {sub.shape}")
        if not np.all(np.isfinite(sub)) or np.any(sub < 0):
            raise ConfigurationError("substitution costs must be finite and >= 0")
        if np.any(np.diag(sub) != 0):
            bad = alphabet[int(np.flatnonzero(np.diag(sub))[0])]
            raise ConfigurationError(f"d({bad},{bad}) must be 0")
        de = float(self.del_cost)
        if not np.isfinite(de) or de < 0:
            raise ConfigurationError("deletion cost must be finite and >= 0")
        sub.flags.writeable = False
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "sub_matrix", sub)
        object.__setattr__(self, "del_cost", de)
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(alphabet)})

    @property
    def size(self) -> int:
        return len(self.alphabet)

    @cached_property
    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.sub_matrix, self.sub_matrix.T))

    @cached_property
    def is_integral(self) -> bool:
        """True when every cost is a small integer, so DP sums are exact."""
        vals = np.append(self.sub_matrix.ravel(), self.del_cost)
        return bool(np.all(vals == np.round(vals)) and np.all(vals < 2**40))

    def sub(self, x: Symbol, y: Symbol) -> float:
        return float(self.sub_matrix[x, y])

    def elem(self, a: AlignedSymbol, b: AlignedSymbol) -> float:
        """Cost of one edit-sequence column ``(a, b)``; ``b`` may be GAP."""
        if b == GAP:
            return self.del_cost
        return float(self.sub_matrix[a, b])

    def token_id(self, token: str) -> Symbol:
        try:
            return self._index[token]
        except KeyError:
            raise KeyError(token) from None

    def encode(self, tokens: Sequence[str]) -> Seq:
        return tuple(self._index[t] for t in tokens)

    def decode(self, seq: Sequence[AlignedSymbol], gap: str = "-") -> list:
        return [gap if s == GAP else self.alphabet[s] for s in seq]


def make_unit_cost_model(alphabet: Sequence[str]) -> CostModel:
    """d_e = 1 and d(x, y) = 1 for every effective substitution."""
    alphabet = tuple(alphabet)
    if not alphabet:
        raise ConfigurationError("alphabet must not be empty")
    n = len(alphabet)
    return CostModel(alphabet, np.ones((n, n)) - np.eye(n), 1.0)


def make_matrix_cost_model(alphabet: Sequence[str], sub_matrix, del_cost: float = 1.0) -> CostModel:
    return CostModel(tuple(alphabet), np.asarray(sub_matrix, dtype=np.float64), del_cost)
