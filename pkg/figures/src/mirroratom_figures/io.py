"""Readers for the mirroratom CLI CSV schemas.

Two file kinds are understood, identified by their header row:

    ratio   -> columns x,ratio
    angular -> columns theta,phi,p

Leading '#' comment lines carry the parameter echo of the producing command;
key=value tokens from it are returned so captions can quote ka, bc, axis.
Anything that deviates from the expected schema raises SchemaError: this
package renders files, it never repairs or recomputes them.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

__all__ = ["SchemaError", "RatioTable", "AngularTable",
           "read_ratio_csv", "read_angular_csv"]


class SchemaError(ValueError):
    """Input file does not match the producing CLI's schema."""


@dataclass(frozen=True)
class RatioTable:
    x: np.ndarray
    ratio: np.ndarray
    params: dict


@dataclass(frozen=True)
class AngularTable:
    theta: np.ndarray  # sorted unique polar angles
    phi: np.ndarray    # sorted unique azimuths
    values: np.ndarray  # shape (len(theta), len(phi))
    params: dict


def _load(path, expected_header):
    params: dict = {}
    rows = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row:
                continue
            if row[0].lstrip().startswith("#"):
                for token in ",".join(row).split():
                    if "=" in token:
                        key, _, value = token.partition("=")
                        params[key.lstrip("# ")] = value
                continue
            rows.append(row)
    if not rows:
        raise SchemaError(f"{path}: empty file")
    header = [c.strip() for c in rows[0]]
    if header != expected_header:
        raise SchemaError(
            f"{path}: expected columns {expected_header}, found {header}")
    try:
        data = np.array([[float(c) for c in row] for row in rows[1:]])
    except ValueError as exc:
        raise SchemaError(f"{path}: non-numeric cell: {exc}") from exc
    if data.ndim != 2 or data.shape[0] < 1 or data.shape[1] != len(expected_header):
        raise SchemaError(f"{path}: malformed data block")
    return data, params


def read_ratio_csv(path) -> RatioTable:
    data, params = _load(path, ["x", "ratio"])
    return RatioTable(x=data[:, 0], ratio=data[:, 1], params=params)


def read_angular_csv(path) -> AngularTable:
    data, params = _load(path, ["theta", "phi", "p"])
    theta = np.unique(data[:, 0])
    phi = np.unique(data[:, 1])
    if theta.size * phi.size != data.shape[0]:
        raise SchemaError(f"{path}: (theta, phi) rows do not form a full grid")
    values = np.full((theta.size, phi.size), np.nan)
    t_idx = np.searchsorted(theta, data[:, 0])
    p_idx = np.searchsorted(phi, data[:, 1])
    values[t_idx, p_idx] = data[:, 2]
    if np.any(np.isnan(values)):
        raise SchemaError(f"{path}: grid has holes")
    return AngularTable(theta=theta, phi=phi, values=values, params=params)
