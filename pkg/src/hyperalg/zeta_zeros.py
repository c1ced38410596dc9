"""Imaginary parts of the nontrivial zeta zeros: a vectorized Riemann-Siegel
scan locates sign changes of Z(t), each bracket is polished with mpmath, and
the result is cross-checked against mpmath.zetazero at spot indices and
against the Riemann-von Mangoldt count.

The package ships the first 10^4 ordinates as a data file (one decimal per
line, ascending, the layout of the published tables); regenerate with

    python -m hyperalg.zeta_zeros --count 10000 --out <file>
"""

from __future__ import annotations

import argparse
from importlib import resources
from pathlib import Path

import numpy as np

TWO_PI = 2.0 * np.pi
DATA_RESOURCE = "zeta_zeros_10k.txt"


def rs_theta(t):
    """Riemann-Siegel theta, asymptotic expansion (double precision)."""
    t = np.asarray(t, dtype=float)
    return (t / 2 * np.log(t / TWO_PI) - t / 2 - np.pi / 8
            + 1 / (48 * t) + 7 / (5760 * t**3) + 31 / (80640 * t**5))


def rs_z(t):
    """Hardy Z(t) via the Riemann-Siegel main sum with the leading remainder
    term; absolute accuracy roughly (t/2pi)^(-3/4), enough to bracket sign
    changes which are then polished at full precision."""
    t = np.asarray(t, dtype=float)
    tau = np.sqrt(t / TWO_PI)
    n_terms = np.floor(tau).astype(int)
    theta = rs_theta(t)
    total = np.zeros_like(t)
    for n in range(1, int(n_terms.max()) + 1):
        mask = n_terms >= n
        total[mask] += np.cos(theta[mask] - t[mask] * np.log(n)) / np.sqrt(n)
    p = tau - n_terms
    c0 = np.cos(TWO_PI * (p * p - p - 1.0 / 16.0)) / np.cos(TWO_PI * p)
    remainder = (-1.0) ** (n_terms - 1) * tau ** (-0.5) * c0
    return 2.0 * total + remainder


def riemann_von_mangoldt(t: float) -> float:
    """Main term of the zero-counting function N(t)."""
    return float(rs_theta(np.array([t]))[0] / np.pi + 1.0)


def _scan_brackets(t_lo: float, t_hi: float, step: float) -> list:
    grid = np.arange(t_lo, t_hi + step, step)
    out = []
    chunk = 200_000
    prev_t = prev_z = None
    for start in range(0, len(grid), chunk):
        ts = grid[start:start + chunk]
        zs = rs_z(ts)
        if prev_t is not None:
            ts = np.concatenate(([prev_t], ts))
            zs = np.concatenate(([prev_z], zs))
        flips = np.nonzero(np.sign(zs[:-1]) * np.sign(zs[1:]) < 0)[0]
        out.extend((float(ts[i]), float(ts[i + 1])) for i in flips)
        prev_t, prev_z = float(ts[-1]), float(zs[-1])
    return out


def _polish(lo: float, hi: float) -> float:
    import mpmath
    from scipy.optimize import brentq

    f = lambda t: float(mpmath.siegelz(t))
    flo, fhi = f(lo), f(hi)
    while flo * fhi > 0:
        # the coarse scan misjudged the bracket edge; widen slightly
        lo -= 0.002
        hi += 0.002
        flo, fhi = f(lo), f(hi)
    return float(brentq(f, lo, hi, xtol=1e-11))


def compute_zeros(count: int, check_indices=(1, 100, 1000, 5000, 10000),
                  verbose: bool = False) -> np.ndarray:
    """First `count` zero ordinates to about 1e-9, with consistency checks:
    the bracket count is compared with the Riemann-von Mangoldt formula and
    spot values are compared with mpmath.zetazero."""
    import mpmath

    # locate an upper bound via the counting formula
    t_hi = 50.0
    while riemann_von_mangoldt(t_hi) < count + 3:
        t_hi *= 1.3
    brackets = _scan_brackets(10.0, t_hi, 0.01)
    if len(brackets) < count:
        raise ArithmeticError("scan found too few sign changes; decrease the step")
    expected = riemann_von_mangoldt(brackets[count - 1][1])
    if abs(expected - count) > 2.5:
        raise ArithmeticError(
            f"zero count near index {count} disagrees with the counting formula: {expected}")
    zeros = []
    for i, (lo, hi) in enumerate(brackets[:count]):
        zeros.append(_polish(lo, hi))
        if verbose and (i + 1) % 500 == 0:
            print(f"  refined {i + 1}/{count}")
    zeros = np.array(zeros)
    if np.any(np.diff(zeros) <= 0):
        raise ArithmeticError("refined ordinates are not strictly increasing")
    for n in check_indices:
        if n <= count:
            ref = float(mpmath.zetazero(n).imag)
            if abs(ref - zeros[n - 1]) > 1e-6:
                raise ArithmeticError(
                    f"zero #{n}: scan gives {zeros[n-1]}, reference {ref}")
    return zeros


def save_zeros(zeros: np.ndarray, path: str) -> None:
    with open(path, "w") as fh:
        for g in zeros:
            fh.write(f"{g:.10f}\n")


def load_zeros(path: str | None = None, count: int | None = None) -> np.ndarray:
    """Load ordinates (one per line, ascending). Defaults to the bundled
    table of the first 10^4."""
    if path is None:
        ref = resources.files("hyperalg").joinpath("data").joinpath(DATA_RESOURCE)
        text = ref.read_text()
    else:
        text = Path(path).read_text()
    values = np.array([float(line) for line in text.split() if line.strip()])
    if np.any(np.diff(values) <= 0):
        raise ValueError("zeros file must be strictly ascending")
    if count is not None:
        if count > len(values):
            raise ValueError(f"requested {count} zeros, file has {len(values)}")
        values = values[:count]
    return values


def main(argv=None):
    ap = argparse.ArgumentParser(description="regenerate the zeta-zero table")
    ap.add_argument("--count", type=int, default=10000)
    ap.add_argument("--out", required=True)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args(argv)
    zeros = compute_zeros(args.count, verbose=args.verbose)
    save_zeros(zeros, args.out)
    print(f"wrote {len(zeros)} zeros to {args.out}")


if __name__ == "__main__":
    main()
