import functools

import mpmath
import pytest

FRAC_BITS = 256


@functools.lru_cache(maxsize=None)
def scaled_constants(k):
    """alpha_k and beta_k as 256-bit fixed-point integers, from mpmath at 320-bit precision."""
    with mpmath.workprec(320):
        root = mpmath.sqrt(mpmath.mpf(k * k + 4 * k))
        alpha = (k + root) / (2 * k)
        beta = (k + 2 + root) / 2
        scale = mpmath.mpf(2) ** FRAC_BITS
        return int(mpmath.floor(alpha * scale)), int(mpmath.floor(beta * scale))


def hp_floor_a(k, n):
    return (n * scaled_constants(k)[0]) >> FRAC_BITS


def hp_floor_b(k, n):
    return (n * scaled_constants(k)[1]) >> FRAC_BITS


@pytest.fixture(scope="session")
def hp():
    return hp_floor_a, hp_floor_b


# Acceptance outcomes, keyed by criterion number then sub-check label.
ACCEPTANCE: dict[int, dict[str, tuple[bool, str]]] = {}


def record(criterion, label, passed, detail=""):
    ACCEPTANCE.setdefault(criterion, {})[label] = (bool(passed), detail)
    mark = "PASS" if passed else "FAIL"
    print(f"\n[{mark}] criterion {criterion} / {label}" + (f": {detail}" if detail else ""))
    return passed


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(ACCEPTANCE):
        subs = ACCEPTANCE[criterion]
        failed = [f"{label}: {detail}" for label, (ok, detail) in subs.items() if not ok]
        mark = "FAIL" if failed else "PASS"
        line = f"criterion {criterion}: {mark} ({len(subs) - len(failed)}/{len(subs)} sub-checks)"
        if failed:
            line += " | " + " | ".join(failed)
        terminalreporter.write_line(line)
