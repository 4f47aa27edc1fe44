"""Quaternion spectral color image enhancement."""

from ._core import (
    Quaternion,
    alpha_root,
    ceme,
    ceme_rgb,
    compare,
    eme,
    enhance_dft,
    enhance_qdft,
    hist_eq_v,
    hsv_to_rgb,
    iqdft,
    load_image,
    qdft,
    rgb_to_hsv,
    save_image,
    sweep_dft,
    sweep_qdft,
)

__all__ = [
    "Quaternion",
    "alpha_root",
    "ceme",
    "ceme_rgb",
    "compare",
    "eme",
    "enhance_dft",
    "enhance_qdft",
    "hist_eq_v",
    "hsv_to_rgb",
    "iqdft",
    "load_image",
    "qdft",
    "rgb_to_hsv",
    "save_image",
    "sweep_dft",
    "sweep_qdft",
]
