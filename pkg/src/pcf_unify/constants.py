"""High-precision reference constants, shipped as checksummed digit files.

The digits are not computed by this library's own evaluators (that would be
circular: the tool validates formulas *for* these constants).  Each file
holds one integer-part line followed by 10,050 decimal digits in rows of
100, with a SHA-256 sidecar verified at load time.  The files were produced
once with mpmath's independent implementations (AGM/Chudnovsky machinery
for pi, series summation for e, zeta(3) and Catalan's constant); see
README for regeneration instructions.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import mpmath as mp

SUPPORTED = ("pi", "e", "zeta3", "catalan")


class ConstantError(ValueError):
    pass


@dataclass(frozen=True)
class ConstantRef:
    name: str
    digits_available: int = 10_050

    def __post_init__(self):
        if self.name not in SUPPORTED:
            raise ConstantError(
                f"unknown constant {self.name!r}; supported: {', '.join(SUPPORTED)}"
            )


@lru_cache(maxsize=None)
def _load_digits(name: str) -> tuple[str, str]:
    """(integer part, fractional digits) after checksum verification."""
    if name not in SUPPORTED:
        raise ConstantError(f"unknown constant {name!r}")
    pkg = resources.files("pcf_unify.data")
    raw = pkg.joinpath(f"{name}.txt").read_bytes()
    want = pkg.joinpath(f"{name}.sha256").read_text().strip()
    got = hashlib.sha256(raw).hexdigest()
    if got != want:
        raise ConstantError(f"digit file for {name!r} failed checksum verification")
    lines = raw.decode("ascii").split()
    return lines[0], "".join(lines[1:])


def digits_available(name: str) -> int:
    return len(_load_digits(name)[1])


def constant_value(c: ConstantRef | str, precision_digits: int) -> mp.mpf:
    """The constant rounded to the requested number of decimal digits."""
    name = c.name if isinstance(c, ConstantRef) else c
    intpart, frac = _load_digits(name)
    if precision_digits > len(frac):
        raise ConstantError(
            f"requested {precision_digits} digits of {name!r}, "
            f"only {len(frac)} are shipped"
        )
    with mp.workdps(precision_digits + 10):
        return mp.mpf(f"{intpart}.{frac[:precision_digits + 5]}")
