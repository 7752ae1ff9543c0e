"""Integer binary quadratic forms on the hyperboloids K^2 + D^2 - S^2 = d.

Exact arithmetic lives in forms/action/farey/partition/classify;
floating point is quarantined in projections/render; cli wires it all
to a console script.
"""

from .action import (
    LETTERS,
    Sl2,
    TMatrix,
    apply_generator,
    apply_tmatrix,
    apply_word,
    homography_of_word,
    invert_word,
    is_positive_word,
    lift_sl2,
    mirror_word,
    shadow_of_word,
    vsu_normal_form,
)
from .classify import (
    Chain,
    Cycle,
    OrbitClass,
    chain_of,
    classify_parabolic,
    cycle_of,
    enumerate_classes,
    enumerate_classes_elliptic,
    enumerate_h0,
    reduce_form,
    seed_point,
    symmetry_type,
)
from .farey import (
    Rational,
    farey_son,
    generation_of_rational,
    is_simple,
    mirror_rational,
    pythagorean_of_rational,
    rational_of_pythagorean,
    rational_of_word,
    word_of_rational,
)
from .forms import (
    Discriminant,
    Form,
    KdsPoint,
    apply_involution,
    classify_discriminant,
    discriminant,
    evaluate,
    form,
    from_kds,
    is_good_point,
    to_kds,
)
from .partition import (
    RegionLabel,
    classify_region,
    domain_word,
    generation_of,
)
from .projections import (
    CylinderPoint,
    DiscPoint,
    apply_homography,
    disc_to_halfplane,
    eclipse_project,
    halfplane_to_disc,
    project_one_sheet,
    project_two_sheet,
)
from .render import SceneSpec, render_scene

__version__ = "0.1.0"

__all__ = [
    "LETTERS",
    "Sl2",
    "TMatrix",
    "apply_generator",
    "apply_tmatrix",
    "apply_word",
    "homography_of_word",
    "invert_word",
    "is_positive_word",
    "lift_sl2",
    "mirror_word",
    "shadow_of_word",
    "vsu_normal_form",
    "Chain",
    "Cycle",
    "OrbitClass",
    "chain_of",
    "classify_parabolic",
    "cycle_of",
    "enumerate_classes",
    "enumerate_classes_elliptic",
    "enumerate_h0",
    "reduce_form",
    "seed_point",
    "symmetry_type",
    "Rational",
    "farey_son",
    "generation_of_rational",
    "is_simple",
    "mirror_rational",
    "pythagorean_of_rational",
    "rational_of_pythagorean",
    "rational_of_word",
    "word_of_rational",
    "Discriminant",
    "Form",
    "KdsPoint",
    "apply_involution",
    "classify_discriminant",
    "discriminant",
    "evaluate",
    "form",
    "from_kds",
    "is_good_point",
    "to_kds",
    "RegionLabel",
    "classify_region",
    "domain_word",
    "generation_of",
    "CylinderPoint",
    "DiscPoint",
    "apply_homography",
    "disc_to_halfplane",
    "eclipse_project",
    "halfplane_to_disc",
    "project_one_sheet",
    "project_two_sheet",
    "SceneSpec",
    "render_scene",
    "__version__",
]
