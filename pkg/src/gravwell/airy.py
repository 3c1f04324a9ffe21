"""Real-line Airy kernel: Ai, Bi and first derivatives, plus log-space variants.

Everything downstream (eigenvalue ladders, wall coefficients, scattering
rates) reduces to Ai/Bi evaluations, so this kernel is self-contained and
tuned for the argument ranges the solvers actually hit:

* Maclaurin series, summed in 80-bit extended precision, on [-8, 5.5].
  Extended precision absorbs the alternating-sum cancellation, which grows
  like exp(2*zeta) on the positive side and caps the series at x ~ 5.5
  if Ai is to keep ~1e-12 accuracy.
* Taylor propagation from tabulated 28-digit anchor values on (5.5, 9.5),
  stepping at most 0.25 via the ODE recurrence y'' = x y.  This bridges
  the window where the Maclaurin sum has lost digits but the asymptotic
  series has not yet reached 1e-12.
* Poincare-type asymptotic expansions outside: the monotonic exponential
  forms for x >= 9.5, the oscillatory modulus/phase forms for x < -8.
* Log-magnitude variants for x >= 0 that stay finite far beyond the point
  where Bi (or 1/Ai) overflows a double; wall-coefficient code works in
  this representation whenever the barrier argument is large.

All entry points accept scalars or arrays and are stateless.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import DomainError, RangeOverflowError

__all__ = [
    "AiryPair",
    "airy_eval",
    "airy_ai_log",
    "airy_bi_log",
    "airy_log_scaled",
    "wronskian",
    "AIRY_EVAL_MAX",
]

# Branch boundaries; see module docstring.
_SERIES_POS_MAX = 5.5
_SERIES_NEG_MIN = -8.0
_ANCHOR_MAX = 9.5
# Bi(x) exceeds 1e207 already at x = 80; the linear-domain evaluator stops
# there and callers must switch to the log-space variants.
AIRY_EVAL_MAX = 80.0

_LD = np.longdouble
# Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3); 25 digits.
_AI0 = _LD("0.3550280538878172392600632")
_DAI0 = _LD("0.2588194037928067984051836")
_SQRT3 = np.sqrt(_LD(3))
_SQRTPI = np.sqrt(np.pi)
_LOG_2SQRTPI = float(np.log(2.0 * _SQRTPI))
_LOG_SQRTPI = float(np.log(_SQRTPI))

_SERIES_TERMS = 140
_ASYM_TERMS_POS = 22  # terms still decreasing at zeta(9.5) ~ 19.5
_ASYM_TERMS_NEG = 20  # terms still decreasing at xi(8.0) ~ 15.1
_TAYLOR_TERMS = 26    # |delta| <= 0.25 from an anchor; terms ~ 0.75^n/n!

# u_k coefficients of the asymptotic series, u_k = u_{k-1}(6k-5)(6k-1)/(72k),
# and the derivative-series companions v_k = -u_k (6k+1)/(6k-1).
_UK = np.ones(_ASYM_TERMS_POS + 4, dtype=np.longdouble)
_VK = np.ones(_ASYM_TERMS_POS + 4, dtype=np.longdouble)
for _k in range(1, _UK.size):
    _UK[_k] = _UK[_k - 1] * (6 * _k - 5) * (6 * _k - 1) / (72.0 * _k)
    _VK[_k] = -_UK[_k] * (6 * _k + 1) / (6 * _k - 1)

# 28-digit anchor values (Ai, Ai', Bi, Bi') spaced 0.5 apart across the
# bridging window.
_ANCHOR_X = np.array([5.75, 6.25, 6.75, 7.25, 7.75, 8.25, 8.75, 9.25])
_ANCHOR_VALS = [
    ("0.00001842124619773024582063210167", "-0.00004494062122298348062874345444",
     "3606.045906654999422038583494", "8482.159203722640300332186821"),
    ("0.000005305861748752081026322708937", "-0.00001346911345145098343914944543",
     "12006.22219746055925193535902", "29513.90833349478691081232411"),
    ("0.000001455812744578875868998232086", "-0.000003834455740949934238658678740",
     "42100.37948672693705753101587", "107759.6311400061984007701231"),
    ("0.0000003811563018337377610797492563", "-0.000001039046294628025735228307461",
     "155141.4326275030975839598844", "412195.0882434381511883212852"),
    ("0.00000009537038961641585223672617612", "-0.0000002684928867953261859794279548",
     "599656.6290060068373830522128", "1649425.439161016497553098985"),
    ("0.00000002283713944482228170923726480", "-0.00000006626952666987631228217076207",
     "2427018.456122873616239405647", "6895457.386769015934610282971"),
    ("5.240114231891752419198105427e-9", "-0.00000001564676202757794909372219715",
     "10270159.47443929706747558910", "30078570.41411533568005065189"),
    ("1.153504155728340160840033630e-9", "-3.538763310465634886516643362e-9",
     "45374957.29019726741781245271", "136747363.5252720863449240155"),
]
_ANCHOR_AI = np.array([_LD(v[0]) for v in _ANCHOR_VALS])
_ANCHOR_DAI = np.array([_LD(v[1]) for v in _ANCHOR_VALS])
_ANCHOR_BI = np.array([_LD(v[2]) for v in _ANCHOR_VALS])
_ANCHOR_DBI = np.array([_LD(v[3]) for v in _ANCHOR_VALS])


class AiryPair(NamedTuple):
    """Ai, Bi and their derivatives at a common argument."""

    ai: np.ndarray | float
    bi: np.ndarray | float
    dai: np.ndarray | float
    dbi: np.ndarray | float


def wronskian(pair: AiryPair) -> np.ndarray | float:
    """ai*dbi - dai*bi; identically 1/pi for exact Airy functions."""
    return pair.ai * pair.dbi - pair.dai * pair.bi


def _series_sums(x):
    """Maclaurin sums f, g, f', g' of the two Airy basis solutions.

    f = sum c_k x^{3k}, g = sum d_k x^{3k+1} with
    c_k = c_{k-1}/((3k)(3k-1)), d_k = d_{k-1}/((3k+1)(3k)).
    Runs in longdouble; callers combine with Ai(0), Ai'(0) weights.
    """
    x = np.asarray(x, dtype=np.longdouble)
    x3 = x * x * x
    f = np.ones_like(x)
    g = x.copy()
    df = np.zeros_like(x)
    dg = np.ones_like(x)
    tf = np.ones_like(x)
    tg = x.copy()
    tdf = np.full_like(x, 0.5) * x * x  # first f' term: x^2/2
    tdg = np.ones_like(x)
    eps = np.finfo(np.longdouble).eps
    for k in range(1, _SERIES_TERMS):
        k3 = 3.0 * k
        tf = tf * x3 / (k3 * (k3 - 1.0))
        tg = tg * x3 / ((k3 + 1.0) * k3)
        tdg = tdg * x3 / (k3 * (k3 - 2.0))
        if k > 1:
            tdf = tdf * x3 / ((k3 - 1.0) * (k3 - 3.0))
        f = f + tf
        g = g + tg
        df = df + tdf
        dg = dg + tdg
        if k % 8 == 0:
            bound = max(np.max(np.abs(tf)), np.max(np.abs(tg)))
            scale = max(np.max(np.abs(f)), np.max(np.abs(g)), 1.0)
            if bound < eps * scale:
                break
    return f, g, df, dg


def _airy_series(x):
    f, g, df, dg = _series_sums(x)
    ai = _AI0 * f - _DAI0 * g
    dai = _AI0 * df - _DAI0 * dg
    bi = _SQRT3 * (_AI0 * f + _DAI0 * g)
    dbi = _SQRT3 * (_AI0 * df + _DAI0 * dg)
    return ai, bi, dai, dbi


def _airy_anchor(x):
    """5.5 < x < 9.5: propagate from the nearest tabulated anchor."""
    x = np.asarray(x, dtype=np.longdouble)
    idx = np.clip(np.rint((np.asarray(x, dtype=float) - 5.75) / 0.5).astype(int),
                  0, len(_ANCHOR_X) - 1)
    ai = np.empty_like(x)
    bi = np.empty_like(x)
    dai = np.empty_like(x)
    dbi = np.empty_like(x)
    for i in np.unique(idx):
        m = idx == i
        x0 = _LD(_ANCHOR_X[i])
        delta = x[m] - x0
        ai[m], dai[m] = _taylor_pair(delta, _ANCHOR_AI[i], _ANCHOR_DAI[i], x0)
        bi[m], dbi[m] = _taylor_pair(delta, _ANCHOR_BI[i], _ANCHOR_DBI[i], x0)
    return ai, bi, dai, dbi


def _taylor_pair(delta, y0, dy0, x0):
    # c_{n+2} = (x0 c_n + c_{n-1}) / ((n+2)(n+1)), c_{-1} = 0
    coeffs = np.empty(_TAYLOR_TERMS + 2, dtype=np.longdouble)
    coeffs[0] = y0
    coeffs[1] = dy0
    for n in range(_TAYLOR_TERMS):
        prev = coeffs[n - 1] if n >= 1 else _LD(0)
        coeffs[n + 2] = (x0 * coeffs[n] + prev) / ((n + 2.0) * (n + 1.0))
    y = np.zeros_like(delta)
    dy = np.zeros_like(delta)
    for n in range(_TAYLOR_TERMS + 1, 0, -1):  # Horner
        y = (y + coeffs[n]) * delta
        dy = (dy + n * coeffs[n]) * delta if n > 1 else (dy + coeffs[1])
    y = y + coeffs[0]
    return y, dy


def _asym_sums_pos(zeta, terms=_ASYM_TERMS_POS):
    """Alternating / same-sign tail sums for the exponential branch."""
    t = 1.0 / zeta
    s_alt = np.ones_like(zeta)
    s_pos = np.ones_like(zeta)
    d_alt = np.ones_like(zeta)
    d_pos = np.ones_like(zeta)
    tk = np.ones_like(zeta)
    for k in range(1, terms):
        tk = tk * t
        uk = _UK[k] * tk
        vk = _VK[k] * tk
        sgn = -1.0 if k % 2 else 1.0
        s_alt = s_alt + sgn * uk
        s_pos = s_pos + uk
        d_alt = d_alt + sgn * vk
        d_pos = d_pos + vk
    return s_alt, s_pos, d_alt, d_pos


def _airy_asym_pos(x):
    """x >= 9.5: monotonic asymptotic forms."""
    x = np.asarray(x, dtype=np.longdouble)
    zeta = (2.0 / 3.0) * x ** 1.5
    q = x ** 0.25
    e = np.exp(-zeta)
    s_alt, s_pos, d_alt, d_pos = _asym_sums_pos(zeta)
    ai = e * s_alt / (2.0 * _SQRTPI * q)
    dai = -q * e * d_alt / (2.0 * _SQRTPI)
    bi = np.exp(zeta) * s_pos / (_SQRTPI * q)
    dbi = q * np.exp(zeta) * d_pos / _SQRTPI
    return ai, bi, dai, dbi


def _airy_asym_neg(x):
    """x <= -8: oscillatory asymptotic forms with phase xi - pi/4."""
    z = -np.asarray(x, dtype=np.longdouble)
    xi = (2.0 / 3.0) * z ** 1.5
    q = z ** 0.25
    t = 1.0 / xi
    even_u = np.ones_like(z)
    odd_u = np.zeros_like(z)
    even_v = np.ones_like(z)
    odd_v = np.zeros_like(z)
    tk = np.ones_like(z)
    for k in range(1, _ASYM_TERMS_NEG):
        tk = tk * t
        uk = _UK[k] * tk
        vk = _VK[k] * tk
        half = k // 2
        sgn = -1.0 if half % 2 else 1.0
        if k % 2:
            odd_u = odd_u + sgn * uk
            odd_v = odd_v + sgn * vk
        else:
            even_u = even_u + sgn * uk
            even_v = even_v + sgn * vk
    theta = xi - np.longdouble(np.pi) / 4.0
    c = np.cos(theta)
    s = np.sin(theta)
    ai = (c * even_u + s * odd_u) / (_SQRTPI * q)
    bi = (-s * even_u + c * odd_u) / (_SQRTPI * q)
    dai = q * (s * even_v - c * odd_v) / _SQRTPI
    dbi = q * (c * even_v + s * odd_v) / _SQRTPI
    return ai, bi, dai, dbi


def airy_eval(x) -> AiryPair:
    """Evaluate Ai, Bi, Ai', Bi' on the real line.

    Accepts scalars or arrays.  Arguments must be finite and not exceed
    AIRY_EVAL_MAX on the positive side (Bi would leave the comfortable
    double range; use the log variants there).  Arbitrarily negative
    arguments are fine: both functions stay bounded and oscillatory.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if not np.all(np.isfinite(arr)):
        raise DomainError("airy_eval requires finite arguments")
    if np.any(arr > AIRY_EVAL_MAX):
        raise RangeOverflowError(
            f"airy_eval limited to x <= {AIRY_EVAL_MAX:g}; "
            "use airy_ai_log/airy_bi_log beyond"
        )
    ai = np.empty_like(arr)
    bi = np.empty_like(arr)
    dai = np.empty_like(arr)
    dbi = np.empty_like(arr)
    neg = arr < _SERIES_NEG_MIN
    gap = (arr > _SERIES_POS_MAX) & (arr < _ANCHOR_MAX)
    high = arr >= _ANCHOR_MAX
    mid = ~(neg | gap | high)
    for mask, impl in ((mid, _airy_series), (gap, _airy_anchor),
                       (high, _airy_asym_pos), (neg, _airy_asym_neg)):
        if np.any(mask):
            a, b, da, db = impl(arr[mask])
            ai[mask] = a
            bi[mask] = b
            dai[mask] = da
            dbi[mask] = db
    if scalar:
        return AiryPair(float(ai[0]), float(bi[0]), float(dai[0]), float(dbi[0]))
    return AiryPair(ai, bi, dai, dbi)


def _log_all_pos(x):
    """log|Ai|, log|Ai'|, log Bi, log Bi' for x >= 0 (longdouble internals)."""
    x = np.asarray(x, dtype=np.longdouble)
    la = np.empty_like(x)
    lda = np.empty_like(x)
    lb = np.empty_like(x)
    ldb = np.empty_like(x)
    ser = x <= _SERIES_POS_MAX
    gap = (x > _SERIES_POS_MAX) & (x < _ANCHOR_MAX)
    tail = x >= _ANCHOR_MAX
    for mask, impl in ((ser, _airy_series), (gap, _airy_anchor)):
        if np.any(mask):
            a, b, da, db = impl(x[mask])
            la[mask] = np.log(a)
            lda[mask] = np.log(np.abs(da))
            lb[mask] = np.log(b)
            ldb[mask] = np.log(db)
    if np.any(tail):
        xt = x[tail]
        zeta = (2.0 / 3.0) * xt ** 1.5
        lq = 0.25 * np.log(xt)
        s_alt, s_pos, d_alt, d_pos = _asym_sums_pos(zeta)
        la[tail] = -zeta - lq - _LOG_2SQRTPI + np.log(s_alt)
        lda[tail] = -zeta + lq - _LOG_2SQRTPI + np.log(d_alt)
        lb[tail] = zeta - lq - _LOG_SQRTPI + np.log(s_pos)
        ldb[tail] = zeta + lq - _LOG_SQRTPI + np.log(d_pos)
    return la, lda, lb, ldb


def airy_log_scaled(x):
    """Log-magnitude quadruple (log|Ai|, log|Ai'|, log Bi, log Bi') for x >= 0.

    Signs are fixed on the non-negative axis: Ai, Bi, Bi' > 0 and Ai' < 0
    (Ai'(0) < 0 and Ai is positive decreasing).  Valid far beyond the
    linear-domain overflow point; used for wall coefficients that span
    hundreds of decades.
    """
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    arr = np.atleast_1d(arr)
    if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
        raise DomainError("airy_log_scaled requires finite x >= 0")
    la, lda, lb, ldb = _log_all_pos(arr)
    out = tuple(np.asarray(v, dtype=float) for v in (la, lda, lb, ldb))
    if scalar:
        return tuple(float(v[0]) for v in out)
    return out


def airy_ai_log(x):
    """(log magnitude, sign) of Ai(x) for x >= 0; finite out to x ~ 1e3."""
    la = airy_log_scaled(x)[0]
    return la, _ones_like(la)


def airy_bi_log(x):
    """(log magnitude, sign) of Bi(x) for x >= 0; immune to Bi overflow."""
    lb = airy_log_scaled(x)[2]
    return lb, _ones_like(lb)


def _ones_like(v):
    if np.ndim(v) == 0:
        return 1
    return np.ones_like(v, dtype=int)
