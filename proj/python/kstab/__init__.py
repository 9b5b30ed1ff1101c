"""Exact log canonical thresholds, Berman-Gibbs invariants and Donaldson-Futaki invariants.

Rationals come back from the extension as "p/q" strings; the wrappers here turn the
numeric fields into fractions.Fraction.
"""

from fractions import Fraction

from . import _kstab
from ._kstab import SizeError, StabilizationError

__all__ = [
    "SizeError",
    "StabilizationError",
    "lct_braid",
    "lct_arrangement",
    "diagonal_discrepancy",
    "gamma_at_k",
    "gamma_report",
    "veronese_determinant",
    "interpolate",
    "df_coefficient",
    "donaldson_futaki",
    "multiplier_ideal",
    "lct_monomial",
    "summation_check",
    "verify",
]

_RATIONAL_KEYS = {"lct", "gamma_k", "gamma", "s", "DF", "DF0", "inferred_Lbar_sq"}


def _fractions(obj):
    if isinstance(obj, dict):
        return {k: Fraction(v) if k in _RATIONAL_KEYS and isinstance(v, str) else _fractions(v)
                for k, v in obj.items()}
    if isinstance(obj, list):
        return [_fractions(x) for x in obj]
    return obj


def _text(value):
    return str(value) if isinstance(value, Fraction) else value


def lct_braid(g):
    return _fractions(_kstab.lct_braid(g))


def lct_arrangement(forms):
    """forms: list of coefficient lists, all of one length."""
    forms = [[_text(c) for c in row] for row in forms]
    return _fractions(_kstab.lct_arrangement({"n": len(forms[0]) if forms else 0, "forms": forms}))


def diagonal_discrepancy(g, c):
    return Fraction(_kstab.diagonal_discrepancy(g, _text(c)))


def gamma_at_k(k, matrix=False):
    return _fractions(_kstab.gamma_at_k(k, matrix))


def gamma_report(k_max):
    return _fractions(_kstab.gamma_report(k_max))


def veronese_determinant(k):
    return _kstab.veronese_determinant(k)


def interpolate(samples):
    """samples: iterable of (k, value); returns the polynomial as text in k."""
    return _kstab.interpolate([(k, _text(v)) for k, v in samples])


def df_coefficient(w, N, n):
    """w, N: coefficient lists, constant term first."""
    return Fraction(_kstab.df_coefficient([_text(c) for c in w], [_text(c) for c in N], n))


def donaldson_futaki(divisors, s=None, k_max=480):
    """divisors: list of {point: multiplicity} dicts, D_1 <= ... <= D_M."""
    points = sorted({p for d in divisors for p in d})
    flag = {"M": len(divisors), "points": points, "divisors": divisors}
    report = _kstab.donaldson_futaki(flag, None if s is None else _text(s), k_max)
    return _fractions(report)


def _ideal(generators, arity=None):
    generators = [list(g) for g in generators]
    n = arity if arity is not None else len(generators[0])
    return {"n": n, "generators": generators}


def multiplier_ideal(factors):
    """factors: list of (generators, c). Returns the generator list and its text form."""
    doc = {"factors": [{"ideal": _ideal(g), "c": _text(c)} for g, c in factors]}
    ideal, text = _kstab.multiplier_ideal(doc)
    return ideal["generators"], text


def lct_monomial(generators):
    return Fraction(_kstab.lct_monomial(_ideal(generators)))


def summation_check(a0, c0, parts, c, denom_bound=24):
    return _kstab.summation_check(_ideal(a0), _text(c0), [_ideal(p) for p in parts], _text(c), denom_bound)


def verify(seed=42, quick=True):
    return _kstab.verify(seed, quick)
