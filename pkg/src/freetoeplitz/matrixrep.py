"""Float matrix truncations of Toeplitz operators.

The degree-<=L truncation of the holomorphic space is spanned by the
multi-indices in graded-lex order; matrix entries are exact form values
in the orthonormal basis, with the square roots (and only those) taken
in floating point at the very end.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass

import numpy as np

from .expr import format_element
from .freealg import AlgebraElement, theta_word
from .toeplitz import ToeplitzOperator


@dataclass(frozen=True)
class TruncatedSpace:
    n: int
    max_length: int
    basis: tuple
    index: dict

    @classmethod
    def build(cls, n, max_length):
        basis = tuple(
            i
            for r in range(max_length + 1)
            for i in itertools.product(range(1, n + 1), repeat=r)
        )
        index = {i: k for k, i in enumerate(basis)}
        return cls(n=n, max_length=max_length, basis=basis, index=index)

    @property
    def dim(self):
        return len(self.basis)


@dataclass(frozen=True)
class OperatorMatrix:
    space: TruncatedSpace
    symbol_text: str
    entries: np.ndarray

    @property
    def dim(self):
        return self.entries.shape[0]


def matrix_of(ws, g, space):
    """Matrix of T_g on the truncation, in the orthonormal basis.

    Column k holds the expansion of T_g applied to the k-th basis word;
    images of degree above the truncation are dropped.
    """
    op = ToeplitzOperator(g, ws)
    dim = space.dim
    entries = np.zeros((dim, dim), dtype=complex)
    weights = [float(ws.weight(i)) for i in space.basis]
    for col, k in enumerate(space.basis):
        image = op.apply(AlgebraElement.from_word(theta_word(k)))
        for w, c in image.items():
            row = space.index.get(w)
            if row is None:
                continue
            entries[row, col] = complex(c) * math.sqrt(
                weights[row] / weights[col]
            )
    return OperatorMatrix(
        space=space, symbol_text=format_element(g), entries=entries
    )


def adjoint_defect(ws, g, space):
    """Max-abs deviation of the matrix of g* from the conjugate transpose."""
    m = matrix_of(ws, g, space)
    ms = matrix_of(ws, g.star(), space)
    diff = m.entries - ms.entries.conj().T
    return float(np.abs(diff).max()) if diff.size else 0.0


def commutator_matrix(m1, m2):
    if m1.dim != m2.dim:
        raise ValueError("dimension mismatch: %d vs %d" % (m1.dim, m2.dim))
    entries = m1.entries @ m2.entries - m2.entries @ m1.entries
    return OperatorMatrix(
        space=m1.space,
        symbol_text="[%s, %s]" % (m1.symbol_text, m2.symbol_text),
        entries=entries,
    )


def _nonzero_entries(m):
    rows, cols = np.nonzero(m.entries)
    for r, c in zip(rows.tolist(), cols.tolist()):
        v = m.entries[r, c]
        yield r, c, v.real, v.imag


def to_csv(m):
    """CSV export: header plus one line per nonzero entry."""
    lines = ["row,col,re,im"]
    for r, c, re, im in _nonzero_entries(m):
        lines.append("%d,%d,%.17g,%.17g" % (r, c, re, im))
    return "\n".join(lines) + "\n"


def to_json(m):
    obj = {
        "n": m.space.n,
        "L": m.space.max_length,
        "order": "graded-lex",
        "symbol": m.symbol_text,
        "entries": [[r, c, re, im] for r, c, re, im in _nonzero_entries(m)],
    }
    return json.dumps(obj)
