"""Murphy bases of Brauer algebras and kernels of tensor-space representations."""

import json

from . import _core
from ._core import CapExceeded, diagram_count

__all__ = ["CapExceeded", "basis", "split_basis", "certify", "dims", "diagram_count"]


def basis(flavor, r, dual=False):
    return json.loads(_core.basis_json(flavor, r, dual))


def split_basis(flavor, N, r, jobs=1):
    return json.loads(_core.split_basis_json(flavor, N, r, jobs))


def certify(flavor, N, r, p=0, max_tensor_dim=65536, jobs=1):
    return json.loads(_core.certify_json(flavor, N, r, p, max_tensor_dim, jobs))


def dims(flavor, N, max_r, p=0, max_tensor_dim=65536, jobs=1):
    return json.loads(_core.dims_json(flavor, N, max_r, p, max_tensor_dim, jobs))
