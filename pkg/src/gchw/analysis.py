"""Plain/cipher statistics: Pearson correlation, t-tests, contrast series.

Ciphertext series are the flattened block entries as real numbers (scaled
integers divided by 2**scale_exp).  When a paired statistic needs equal
lengths, the two series are truncated to the shorter one - normally the
plaintext, since encryption inflates the compressed stream back up with
block padding.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, replace

from . import auth
from .envelope import CipherEnvelope, seal
from .errors import StatisticsError
from .keyschedule import CipherKey


@dataclass(frozen=True)
class AnalysisReport:
    """One seed variant's relationship between plaintext and ciphertext."""

    correlation: float
    paired_t: float
    paired_p: float
    unpaired_t: float
    unpaired_p: float
    n_pairs: int


def correlation(x, y) -> float:
    """Pearson product-moment correlation coefficient."""
    if len(x) != len(y):
        raise StatisticsError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 2:
        raise StatisticsError("need at least two pairs")
    mx = sum(x) / n
    my = sum(y) / n
    sxx = sum((a - mx) ** 2 for a in x)
    syy = sum((b - my) ** 2 for b in y)
    if sxx == 0 or syy == 0:
        raise StatisticsError("zero variance")
    sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
    return sxy / math.sqrt(sxx * syy)


def paired_t(x, y) -> tuple[float, float]:
    """Paired t statistic and two-tailed p for equal-length samples."""
    if len(x) != len(y):
        raise StatisticsError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 2:
        raise StatisticsError("need at least two pairs")
    d = [a - b for a, b in zip(x, y)]
    md = sum(d) / n
    ss = sum((v - md) ** 2 for v in d)
    if ss == 0:
        raise StatisticsError("zero variance of differences")
    sd = math.sqrt(ss / (n - 1))
    t = md / (sd / math.sqrt(n))
    return t, student_t_p_two_sided(t, n - 1)


def unpaired_t(x, y) -> tuple[float, float]:
    """Welch's two-sample t and two-tailed p (Welch-Satterthwaite df)."""
    n1, n2 = len(x), len(y)
    if n1 < 2 or n2 < 2:
        raise StatisticsError("need at least two values per sample")
    m1 = sum(x) / n1
    m2 = sum(y) / n2
    v1 = sum((a - m1) ** 2 for a in x) / (n1 - 1)
    v2 = sum((b - m2) ** 2 for b in y) / (n2 - 1)
    se2 = v1 / n1 + v2 / n2
    if se2 == 0:
        raise StatisticsError("both samples have zero variance")
    t = (m1 - m2) / math.sqrt(se2)
    df = se2**2 / ((v1 / n1) ** 2 / (n1 - 1) + (v2 / n2) ** 2 / (n2 - 1))
    return t, student_t_p_two_sided(t, df)


def student_t_p_two_sided(t: float, df: float) -> float:
    """P(|T| >= |t|) for Student's t with df degrees of freedom.

    Evaluated as the regularized incomplete beta I_x(df/2, 1/2) with
    x = df / (df + t^2).
    """
    if df <= 0:
        raise StatisticsError(f"degrees of freedom must be positive, got {df}")
    x = df / (df + t * t)
    p = _regularized_incomplete_beta(df / 2.0, 0.5, x)
    return min(1.0, max(0.0, p))


_BETA_EPS = 1e-13
_BETA_FPMIN = 1e-300
_BETA_MAX_ITER = 500


def _beta_continued_fraction(a: float, b: float, x: float) -> float:
    """Lentz's continued fraction for the incomplete beta integral."""
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _BETA_FPMIN:
        d = _BETA_FPMIN
    d = 1.0 / d
    h = d
    for m in range(1, _BETA_MAX_ITER + 1):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETA_FPMIN:
            d = _BETA_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _BETA_FPMIN:
            c = _BETA_FPMIN
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _BETA_FPMIN:
            d = _BETA_FPMIN
        c = 1.0 + aa / c
        if abs(c) < _BETA_FPMIN:
            c = _BETA_FPMIN
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _BETA_EPS:
            return h
    raise StatisticsError("incomplete beta continued fraction did not converge")


def _regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    if x <= 0.0:
        return 0.0
    if x >= 1.0:
        return 1.0
    log_front = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(x)
        + b * math.log1p(-x)
    )
    front = math.exp(log_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _beta_continued_fraction(a, b, x) / a
    return 1.0 - front * _beta_continued_fraction(b, a, 1.0 - x) / b


def cipher_series(env: CipherEnvelope) -> list[float]:
    """Flattened ciphertext entries as reals (scaled ints / 2**scale_exp)."""
    scale = float(1 << env.scale_exp)
    return [v / scale for block in env.blocks for v in block.scaled]


def seed_variant(key: CipherKey, index: int) -> CipherKey:
    """Variant 0 is the key itself; others replace the seed deterministically."""
    if index == 0:
        return key
    return replace(key, seed=auth.mac(key.seed, b"seed-variant" + index.to_bytes(4, "big")))


def analyze_message(message: bytes, key: CipherKey, seeds: int = 1) -> list[AnalysisReport]:
    """Encrypt under ``seeds`` seed variants and report the statistics.

    Each variant's cipher series is compared pairwise against the plaintext
    bytes (correlation and paired t) and, unpaired, against variant 0's
    cipher series.
    """
    if seeds < 1:
        raise StatisticsError("need at least one seed")
    reports = []
    baseline = None
    for index in range(seeds):
        env = seal(message, seed_variant(key, index))
        series = cipher_series(env)
        n = min(len(message), len(series))
        plain = [float(b) for b in message[:n]]
        cipher = series[:n]
        corr = correlation(plain, cipher)
        t, p = paired_t(plain, cipher)
        if baseline is None:
            baseline = series
        ut, up = unpaired_t(series, baseline)
        reports.append(AnalysisReport(corr, t, p, ut, up, n))
    return reports


def contrast_csv(plain: bytes, env: CipherEnvelope, char: str | None = None) -> str:
    """CSV of index,plain_value,cipher_value rows, padded to the longer series.

    When ``char`` is given, one extra row ``char,position,cipher_value`` is
    appended per occurrence of that character in the plaintext.
    """
    series = cipher_series(env)
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["index", "plain_value", "cipher_value"])
    for i in range(max(len(plain), len(series))):
        writer.writerow(
            [
                i,
                plain[i] if i < len(plain) else "",
                repr(series[i]) if i < len(series) else "",
            ]
        )
    if char is not None:
        target = ord(char)
        for position, byte in enumerate(plain):
            if byte == target:
                value = repr(series[position]) if position < len(series) else ""
                writer.writerow([char, position, value])
    return out.getvalue()
