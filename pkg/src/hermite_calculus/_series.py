"""Summation of convergent series with the three-small-terms stopping rule."""

from __future__ import annotations

from typing import Iterable

from ._types import SeriesResult

_EPS = 2.220446049250313e-16

MAX_TERMS = 500


def tail_estimate(last, prev):
    """Estimate of the omitted tail from the last two terms.

    Alternating decreasing tails are bounded by the next term; same-sign
    tails are treated as geometric.
    """
    a = abs(last)
    b = abs(prev)
    if a == 0 or b == 0:
        return a
    r = a / b
    if r >= 1:
        return a
    same_sign = (last * prev.conjugate()).real > 0 if isinstance(last, complex) else last * prev > 0
    return a * r / (1.0 - r) if same_sign else a * r


def accumulate(terms: Iterable, tol: float, max_terms: int = MAX_TERMS, run: int = 3,
               details: dict | None = None) -> SeriesResult:
    """Sum ``terms`` until ``run`` consecutive ones fall below ``tol * |sum|``.

    The error estimate combines the tail estimate with a rounding floor of
    ``n * eps * sum|term|``.
    """
    total = 0.0
    abs_total = 0.0
    trace = []
    small = 0
    stopped = False
    for term in terms:
        trace.append(term)
        total += term
        abs_total += abs(term)
        if abs(term) < tol * abs(total) or (term == 0 and total == 0):
            small += 1
        else:
            small = 0
        if small >= run:
            stopped = True
            break
        if len(trace) >= max_terms:
            break
    n = len(trace)
    last = trace[-1]
    # the last nonzero pair sets the tail ratio; trailing exact zeros mean a terminated sum
    nonzero = [t for t in trace[-(run + 2):] if t != 0]
    if stopped and len(nonzero) < 2 and trace[-1] == 0:
        tail = 0.0
    elif len(nonzero) >= 2:
        tail = tail_estimate(nonzero[-1], nonzero[-2])
    else:
        tail = abs(last)
    err = tail + n * _EPS * abs_total
    converged = stopped and err <= tol * abs(total)
    return SeriesResult(
        value=total,
        terms_used=n,
        last_term=float(abs(last)),
        converged=bool(converged),
        error_estimate=float(err),
        terms=tuple(trace),
        details=dict(details or {}),
    )
