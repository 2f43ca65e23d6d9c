import numpy as np


def interior_relative_error(field, expected, margin):
    """max |field - expected| / max |expected| over nodes at least ``margin`` from the ends"""
    mask = field.grid.interior_mask(margin)
    actual = field.to_numpy()[mask]
    target = np.asarray(expected(field.grid.nodes))[mask]
    return float(np.max(np.abs(actual - target)) / np.max(np.abs(target)))
