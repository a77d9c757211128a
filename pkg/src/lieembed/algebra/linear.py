"""Exact linear algebra over the Gaussian rationals for polynomial spans."""

from ..exact.gaussian import GaussianRational

_ZERO = GaussianRational(0)


def solve_linear(rows, rhs):
    """Solve rows * x = rhs exactly; returns one solution or None.

    ``rows`` is a list of lists of GaussianRational. Free variables are
    set to zero.
    """
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if not a[i][ncols].is_zero():
            return None
    x = [_ZERO] * ncols
    for i, c in enumerate(pivots):
        x[c] = a[i][ncols]
    return x


def solve_in_span(target, basis):
    """Coefficients c with target == sum c_j basis_j, or None if not in the span."""
    monos = set(target.terms())
    for b in basis:
        monos.update(b.terms())
    monos = sorted(monos)
    bterms = [b.terms() for b in basis]
    tterms = target.terms()
    rows = [[bt.get(m, _ZERO) for bt in bterms] for m in monos]
    rhs = [tterms.get(m, _ZERO) for m in monos]
    if not rows:
        return [_ZERO] * len(basis)
    return solve_linear(rows, rhs)
