# SPDX-License-Identifier: Apache-2.0
"""Factor detection from quadratic-phase autocorrelation signals.

The heavy lifting lives in the compiled extension; this package just
re-exports its submodules.
"""

from ._core import __version__, gauss, numtheory, rotor, wavepacket

__all__ = ["__version__", "gauss", "numtheory", "rotor", "wavepacket"]
