"""percensus: exact census of periodic points of rational maps mod p.

Library layout:

- polynomials: exact dense polynomials over Q, F_p, Q[t]; resultants; DDF
- maps: rational maps over Q, expression parser, iteration, reduction mod p
- graphs: functional graphs on P^1(F_p), periodic sets, image iteration
- wreath: fixed-point spectra and iterated wreath-power statistics
- critical: critical orbits, collisions, preperiodicity, discriminants
- frobenius: empirical Frobenius cycle types vs wreath predictions
- bounds: effective Chebotarev calculators
- sweep / presets: prime sweeps, persistence, preset experiments
- plots / cli: report figures and the command-line surface
"""

from .maps import INFINITY, RationalMapQ, lattes_duplication, parse_map, render_map
from .polynomials import PolyFp, PolyQ, PolyQt, distinct_degree_factor, resultant_qt
from .wreath import (
    FixedPointSpectrum,
    enumerate_wreath,
    fix_distribution,
    iterate_fpp,
    spectrum_cyclic,
    spectrum_symmetric,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "RationalMapQ",
    "lattes_duplication",
    "parse_map",
    "render_map",
    "PolyFp",
    "PolyQ",
    "PolyQt",
    "distinct_degree_factor",
    "resultant_qt",
    "FixedPointSpectrum",
    "enumerate_wreath",
    "fix_distribution",
    "iterate_fpp",
    "spectrum_cyclic",
    "spectrum_symmetric",
    "__version__",
]
