"""Statistics against quadrature oracles, plus the replication properties."""

import math

import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from conftest import make_key
from gchw import envelope
from gchw.analysis import (
    analyze_message,
    cipher_series,
    contrast_csv,
    correlation,
    paired_t,
    seed_variant,
    student_t_p_two_sided,
    unpaired_t,
)
from gchw.errors import StatisticsError

MESSAGE = b"Cryptographist is the science of overt secret writing"
MESSAGE_2 = b"meet me after party"


def t_density(u, df):
    log_norm = math.lgamma((df + 1) / 2) - math.lgamma(df / 2) - 0.5 * math.log(df * math.pi)
    return math.exp(log_norm) * (1 + u * u / df) ** (-(df + 1) / 2)


def quad_two_sided_p(t, df):
    """Oracle: numerically integrate the t density over both tails."""
    tail, _ = integrate.quad(t_density, abs(t), math.inf, args=(df,))
    return 2 * tail


def test_correlation_examples():
    x = [1.0, 2.0, 4.0, 7.0]
    assert correlation(x, x) == pytest.approx(1.0, abs=1e-12)
    assert correlation(x, [-v for v in x]) == pytest.approx(-1.0, abs=1e-12)
    # by-hand Pearson: 9 / (2 sqrt(21))
    assert correlation([1, 2, 3], [1, 2, 4]) == pytest.approx(
        9 / (2 * math.sqrt(21)), abs=1e-9
    )


def test_correlation_errors():
    with pytest.raises(StatisticsError):
        correlation([1, 2], [1, 2, 3])
    with pytest.raises(StatisticsError):
        correlation([1], [1])
    with pytest.raises(StatisticsError):
        correlation([3, 3, 3], [1, 2, 3])


@given(
    a=st.integers(-5, 5).filter(bool),
    b=st.integers(-10, 10),
    seed=st.integers(0, 10**6),
)
def test_correlation_symmetry_and_scale_invariance(a, b, seed):
    import random

    r = random.Random(seed)
    x = [r.uniform(-10, 10) for _ in range(8)]
    y = [r.uniform(-10, 10) for _ in range(8)]
    base = correlation(x, y)
    assert correlation(y, x) == pytest.approx(base, abs=1e-12)
    scaled = correlation([a * v + b for v in x], y)
    expected = base if a > 0 else -base
    assert scaled == pytest.approx(expected, abs=1e-9)


def test_paired_t_degenerate():
    with pytest.raises(StatisticsError):
        paired_t([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])


def test_paired_t_against_quadrature_oracle():
    x = [12.1, 14.3, 9.8, 11.0, 13.7, 10.2, 12.9, 11.4]
    y = [11.0, 13.1, 10.4, 10.1, 12.2, 10.0, 11.1, 10.9]
    t, p = paired_t(x, y)
    d = [a - b for a, b in zip(x, y)]
    n = len(d)
    md = sum(d) / n
    sd = math.sqrt(sum((v - md) ** 2 for v in d) / (n - 1))
    t_oracle = md / (sd / math.sqrt(n))
    assert t == pytest.approx(t_oracle, abs=1e-6)
    assert p == pytest.approx(quad_two_sided_p(t_oracle, n - 1), abs=1e-4)


def test_unpaired_t_identical_samples():
    t, p = unpaired_t([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
    assert t == 0.0
    assert p == pytest.approx(1.0, abs=1e-12)


def test_unpaired_t_against_quadrature_oracle():
    x = [5.1, 4.9, 6.2, 5.8, 5.5, 4.7]
    y = [6.8, 7.1, 6.5, 7.4, 6.9]
    t, p = unpaired_t(x, y)
    n1, n2 = len(x), len(y)
    m1, m2 = sum(x) / n1, sum(y) / n2
    v1 = sum((a - m1) ** 2 for a in x) / (n1 - 1)
    v2 = sum((b - m2) ** 2 for b in y) / (n2 - 1)
    se2 = v1 / n1 + v2 / n2
    t_oracle = (m1 - m2) / math.sqrt(se2)
    df = se2**2 / ((v1 / n1) ** 2 / (n1 - 1) + (v2 / n2) ** 2 / (n2 - 1))
    assert t == pytest.approx(t_oracle, abs=1e-6)
    assert p == pytest.approx(quad_two_sided_p(t_oracle, df), abs=1e-4)


def test_unpaired_t_degenerate():
    with pytest.raises(StatisticsError):
        unpaired_t([2.0, 2.0, 2.0], [5.0, 5.0])


def test_student_t_p_matches_quadrature():
    for t in (0.0, 0.3, 1.0, 2.5, 4.0, -1.7):
        for df in (1, 2, 5, 9.5, 30, 100):
            assert student_t_p_two_sided(t, df) == pytest.approx(
                quad_two_sided_p(t, df), abs=1e-9
            )


def test_p_monotone_in_t():
    df = 12
    ps = [student_t_p_two_sided(t, df) for t in (0.0, 0.5, 1.0, 2.0, 4.0, 8.0)]
    assert all(a > b for a, b in zip(ps, ps[1:]))
    assert 0.0 <= min(ps) and max(ps) <= 1.0


def test_replication_small(key):
    """Scaled-down version of the security replication: 3 seeds."""
    reports = analyze_message(MESSAGE_2, key, seeds=3)
    assert len(reports) == 3
    for r in reports:
        assert abs(r.correlation) < 0.5
        assert r.paired_p < 0.05
        assert r.n_pairs == len(MESSAGE_2)


def test_seed_variants_differ(key):
    assert seed_variant(key, 0) == key
    v1 = seed_variant(key, 1)
    v2 = seed_variant(key, 2)
    assert v1.seed != key.seed and v2.seed != v1.seed
    assert v1.mac_key == key.mac_key


def test_repeated_characters_disperse(key):
    """Same plaintext byte maps to differing cipher values across positions."""
    env = envelope.seal(MESSAGE, key)
    series = cipher_series(env)
    positions = [i for i, b in enumerate(MESSAGE) if b == ord("e")]
    assert len(positions) == 6  # 'e' occurs six times in the message
    values = {series[i] for i in positions}
    assert len(values) > 1


def test_contrast_csv_empty(key):
    env = envelope.seal(b"", key)
    assert contrast_csv(b"", env) == "index,plain_value,cipher_value\n"


def test_contrast_csv_row_counts(key):
    env = envelope.seal(MESSAGE, key)
    series_len = len(cipher_series(env))
    text = contrast_csv(MESSAGE, env, char="e")
    lines = text.strip().split("\n")
    distribution = [line for line in lines if line.startswith("e,")]
    assert len(distribution) == 6
    assert len(lines) == 1 + max(len(MESSAGE), series_len) + len(distribution)


def test_analyze_message_rejects_zero_seeds(key):
    with pytest.raises(StatisticsError):
        analyze_message(MESSAGE_2, key, seeds=0)
