"""K3 surfaces in weighted P^3 with a non-symplectic involution, and their Borcea-Voisin threefolds."""
from ._k3atlas import *  # noqa: F401,F403
from ._k3atlas import __doc__  # noqa: F401
