"""Associated quadratic functions of Calabi-Yau fourfolds in P^n, P^a x P^b and G(l, n).

For a clean embedding X in V the function Q(alpha) = deg([X] alpha^2 - [X] alpha c2(T_X))
on N^2(V) agrees with deg(c1^2 - c2) on smooth surfaces whose class comes from V.
The modules compute Q exactly and count the lattice points it confines.
"""

__version__ = "0.1.0"

from .algebra import Poly, elementary_symmetric, symmetric_reduce
from .catalog import get_pair, pair_to_json, parse_pair_spec
from .chow import Grassmannian, Product, Projective, codim2_basis, degree
from .lattice import (
    Domain,
    Empty,
    Finite,
    Infinite,
    closed_form_bound,
    enumerate_sublevel,
    representable,
    restricted_count_n3,
)
from .pairs import (
    PairSpec,
    QForm,
    ci_qform,
    derive_qform,
    is_decent,
    lawrence_discriminant,
    q_eval,
    q_minimum,
)
from .schubert import lr_expand
from .surfaces import blowup_invariant, chi_noether, invariant_from_chern, invariant_threshold
