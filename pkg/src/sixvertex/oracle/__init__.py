"""Exhaustive enumeration of small rooted maps and their orientations."""

from .bijections import (
    LabelledMap,
    ambjorn_budd,
    dual_labelling,
    labelled_maps,
    labelled_quadrangulations,
    labellings,
)
from .maps import RootedMap, cycle_notation, enumerate_maps, enumerate_quartic
from .orientations import (
    EulerOrientation,
    PartialOrientation,
    count_euler_orientations,
    count_partial_orientations,
    euler_orientations,
    general_eo_counts,
    partial_counts,
    partial_orientations,
    quartic_eo_counts,
    series_from_counts,
)

__all__ = [
    "EulerOrientation",
    "LabelledMap",
    "PartialOrientation",
    "RootedMap",
    "ambjorn_budd",
    "count_euler_orientations",
    "count_partial_orientations",
    "cycle_notation",
    "dual_labelling",
    "enumerate_maps",
    "enumerate_quartic",
    "euler_orientations",
    "general_eo_counts",
    "labelled_maps",
    "labelled_quadrangulations",
    "labellings",
    "partial_counts",
    "partial_orientations",
    "quartic_eo_counts",
    "series_from_counts",
]
