"""Alternative models for set-valued tableaux: excited Young diagrams and marked Gelfand-Tsetlin patterns."""

from .eyd import (
    ExcitedYoungDiagram,
    elementary_move,
    enumerate_eyd,
    eyd_crystal_op,
    eyd_signature,
    theta,
    theta_inverse,
    young_diagram,
)
from .gt import (
    MarkedGTPattern,
    allowed_marks,
    enumerate_gt,
    enumerate_marked_gt,
    grothendieck_via_gt,
    marked_gt_to_svt,
    single_variable_grothendieck,
    svt_to_marked_gt,
)
