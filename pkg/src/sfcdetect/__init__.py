"""Roundabout maneuver detection on space-filling curves.

Subpackages by concern:

* :mod:`sfcdetect.sfc` -- quantization grids, Morton and Hilbert codecs
* :mod:`sfcdetect.signals` -- kinematic time-series: load, down-sample,
  normalize, project
* :mod:`sfcdetect.geofence` -- GPS baseline detector (Morton range query
  plus point-in-polygon filter)
* :mod:`sfcdetect.csp` -- stripe-pattern calibration and detection
* :mod:`sfcdetect.evaluation` -- interval metrics (Boolean and
  time-based) and ranking
* :mod:`sfcdetect.experiments` -- configuration grid runner and reports
* :mod:`sfcdetect.synthgen` -- synthetic trip generator with exact
  ground truth
"""

from sfcdetect.sfc import CurveKind, GridSpec, SfcCode

__version__ = "0.1.0"

__all__ = ["CurveKind", "GridSpec", "SfcCode", "__version__"]
