"""Symbolic-plus-numeric verification engine for a curvature elimination
system on three-curvature hypersurfaces.

Subpackages:

* ``symcore``   exact rational scalars and sparse multivariate polynomials
* ``geomsys``   the encoded derivation system and the key-polynomial check
* ``eliminate`` the kappa-elimination endgame and degenerate branches
* ``numcheck``  the independent numerical oracle and real-root isolation
* ``cli``       batch command-line front end
"""

__version__ = "0.1.0"

from .symcore import Polynomial, Variable, canonical_text, parse  # noqa: F401
