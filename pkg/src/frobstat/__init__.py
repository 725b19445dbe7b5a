"""Frobenius decomposition statistics over finite fields.

Core layers:

- `ff`, `poly`, `mpoly`: exact arithmetic (fields, univariate and bivariate
  polynomials, resultants, point counts).
- `groups`, `frob`, `stats`: predicted class laws, type extraction, and the
  distance/decay metrics.
- `experiments`: seeded, shardable drivers comparing empirical laws against
  the exact predictions.
- `api`, `cli`: a FastAPI service wrapping the drivers and a thin-client
  command line.
"""

__version__ = "0.1.0"

from .errors import FrobstatError  # noqa: F401
