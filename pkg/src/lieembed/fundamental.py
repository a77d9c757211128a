"""Fundamental n x n matrix realization of so(p+1, q).

Used as an oracle independent of the symbolic bracket table: generator
matrices are written down case by case from elementary matrices E_ij and
their commutators are compared with the structure constants.
"""

import itertools

import numpy as np

from .exact.gaussian import GaussianRational
from .presets import Signature, build_so, rotation_name
from .report import VerificationReport

_ZERO = GaussianRational(0)
_ONE = GaussianRational(1)


class ExactMatrix:
    """Square matrix of Gaussian rationals backed by a numpy object array."""

    def __init__(self, entries):
        arr = np.array(entries, dtype=object)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError("ExactMatrix must be square")
        self.a = np.vectorize(GaussianRational.coerce, otypes=[object])(arr)

    @classmethod
    def zeros(cls, n):
        return cls([[_ZERO] * n for _ in range(n)])

    @classmethod
    def identity(cls, n):
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def elementary(cls, n, i, j):
        m = cls.zeros(n)
        m.a[i, j] = _ONE
        return m

    @property
    def n(self):
        return self.a.shape[0]

    def __add__(self, o):
        return ExactMatrix(self.a + o.a)

    def __sub__(self, o):
        return ExactMatrix(self.a - o.a)

    def __neg__(self):
        return ExactMatrix(-self.a)

    def __matmul__(self, o):
        n = self.n
        out = [[sum((self.a[i, k] * o.a[k, j] for k in range(n)), _ZERO) for j in range(n)]
               for i in range(n)]
        return ExactMatrix(out)

    def scale(self, c):
        c = GaussianRational.coerce(c)
        return ExactMatrix(self.a * c)

    def transpose(self):
        return ExactMatrix(self.a.T)

    def is_zero(self):
        return all(x.is_zero() for x in self.a.flat)

    def scalar_value(self):
        """The lambda with self == lambda * identity, or None."""
        n = self.n
        lam = self.a[0, 0]
        for i, j in itertools.product(range(n), range(n)):
            want = lam if i == j else _ZERO
            if self.a[i, j] != want:
                return None
        return lam

    def __eq__(self, o):
        return isinstance(o, ExactMatrix) and self.n == o.n and all(
            x == y for x, y in zip(self.a.flat, o.a.flat))

    def __str__(self):
        return "[" + "; ".join(" ".join(str(x) for x in row) for row in self.a) + "]"

    __repr__ = __str__


def commutator_matrix(x, y):
    return x @ y - y @ x


def metric_matrix(sig):
    n = sig.n
    return ExactMatrix([[sig.metric[i] if i == j else 0 for j in range(n)] for i in range(n)])


def generator_matrix(sig, i, j):
    """Matrix of L_ij for 0 <= i < j <= p+q.

    Both indices in the positive block: -(E_ij - E_ji).
    Both in the negative block: E_ij - E_ji.
    Mixed: E_ij + E_ji.
    """
    if not (0 <= i < j < sig.n):
        raise IndexError(f"need 0 <= i < j <= {sig.n - 1}, got ({i}, {j})")
    n, p = sig.n, sig.p
    eij = ExactMatrix.elementary(n, i, j)
    eji = ExactMatrix.elementary(n, j, i)
    if j <= p:
        return -(eij - eji)
    if i > p:
        return eij - eji
    return eij + eji


def all_generator_matrices(sig):
    return {(i, j): generator_matrix(sig, i, j) for i in range(sig.n) for j in range(i + 1, sig.n)}


def verify_matrix_brackets(sig, corrupt=None):
    """Compare matrix commutators with the symbolic bracket table pair by pair.

    ``corrupt`` names an index pair whose matrix is transposed before the
    comparison (negative control).
    """
    rep = VerificationReport("fundamental-brackets", {"p": sig.p, "q": sig.q})
    frame = build_so(sig.p, sig.q)
    mats = all_generator_matrices(sig)
    if corrupt is not None:
        mats[corrupt] = mats[corrupt].transpose()
    pairs = list(mats)
    for a, b in itertools.combinations(pairs, 2):
        lhs = commutator_matrix(mats[a], mats[b])
        sym = frame.algebra.bracket(rotation_name(*a), rotation_name(*b))
        rhs = ExactMatrix.zeros(sig.n)
        for mono, c in sym.terms().items():
            (gen, _), = frame.algebra.monomial_word(mono)
            rhs = rhs + mats[gen.indices].scale(c)
        diff = lhs - rhs
        name = f"bracket[{rotation_name(*a)},{rotation_name(*b)}]"
        nz = sum(not x.is_zero() for x in diff.a.flat)
        rep.add(name, nz == 0, f"{nz} nonzero entries", detail="" if nz == 0 else str(diff))
    if not pairs or len(pairs) == 1:
        rep.add("bracket[trivial]", True, "0", detail="single generator; nothing to compare")
    rep.note("pairs", len(pairs) * (len(pairs) - 1) // 2)
    return rep


def verify_membership(sig):
    """Every generator matrix X satisfies X^T beta + beta X = 0."""
    rep = VerificationReport("fundamental-membership", {"p": sig.p, "q": sig.q})
    beta = metric_matrix(sig)
    for (i, j), x in all_generator_matrices(sig).items():
        r = x.transpose() @ beta + beta @ x
        rep.add(f"membership[{rotation_name(i, j)}]", r.is_zero(), "0" if r.is_zero() else str(r))
    return rep


def casimir_matrix(sig):
    """Matrix of Q_2 = -sum_{i<j} e_i e_j L_ij^2 and its scalar value (or None)."""
    mats = all_generator_matrices(sig)
    if not mats:
        raise ValueError("zero algebra")
    out = ExactMatrix.zeros(sig.n)
    for (i, j), x in mats.items():
        out = out + (x @ x).scale(-sig.metric[i] * sig.metric[j])
    return out, out.scalar_value()


__all__ = ["ExactMatrix", "Signature", "all_generator_matrices", "casimir_matrix",
           "commutator_matrix", "generator_matrix", "metric_matrix",
           "verify_matrix_brackets", "verify_membership"]
