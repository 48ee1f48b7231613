"""Binary PPM (P6) output for basin grids, with a fixed label palette."""

from __future__ import annotations

import numpy as np

__all__ = ["PALETTE", "UNDECIDED_COLOR", "label_colors", "labels_to_rgb", "write_ppm"]

# fixed basin colors, cycled when a map has more attractors than entries
PALETTE = (
    (230, 57, 70),    # red
    (69, 123, 157),   # steel blue
    (82, 183, 136),   # green
    (244, 162, 97),   # orange
    (131, 56, 236),   # violet
    (255, 209, 102),  # yellow
    (6, 214, 160),    # teal
    (239, 71, 111),   # pink
)
UNDECIDED_COLOR = (0, 0, 0)


def label_colors(count):
    """Colors for labels 0..count-1."""
    return [PALETTE[k % len(PALETTE)] for k in range(count)]


def labels_to_rgb(labels):
    """(H, W) int labels to an (H, W, 3) uint8 image; -1 maps to black."""
    labels = np.asarray(labels)
    n = int(labels.max()) + 1 if labels.size and labels.max() >= 0 else 0
    table = np.array(
        [UNDECIDED_COLOR] + label_colors(n), dtype=np.uint8
    )  # row 0 is the undecided color
    return table[labels + 1]


def write_ppm(labels, path):
    """Write the label image as binary PPM (P6)."""
    rgb = labels_to_rgb(labels)
    h, w = rgb.shape[:2]
    with open(path, "wb") as fh:
        fh.write(f"P6\n{w} {h}\n255\n".encode("ascii"))
        fh.write(rgb.tobytes())
