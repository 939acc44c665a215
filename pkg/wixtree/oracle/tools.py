#!/usr/bin/python
import json
import os
import sys
import numpy as np
from ..trees.tree import U64_MAX


def _walk(value, name):
    if isinstance(value, dict):
        for k, v in value.items():
            yield from _walk(v, f"{name}.{k}")
    elif isinstance(value, (list, tuple)):
        for i, v in enumerate(value):
            yield from _walk(v, f"{name}[{i}]")
    elif isinstance(value, (int, float, np.integer, np.floating)) and \
            not isinstance(value, bool):
        yield name, value


def _to_builtin(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def save_json(fname, threshold=U64_MAX, **kwargs):
    """
    Write the keyword arguments as a JSON object.

    Parameters
    ----------
    fname: str
        Output file. Its directory is created if needed.
    threshold: int
        Numbers larger (in absolute value) than this, or nan, make the
        function stop before writing anything.
    """
    print(f"Saving {fname}", file=sys.stderr)
    for kn, kv in kwargs.items():
        for name, v in _walk(kv, kn):
            isnan = isinstance(v, (float, np.floating)) and np.isnan(v)
            if isnan or (abs(v) > threshold):
                raise RuntimeError(f"Some values in {kn} are nan or "
                                   f">{threshold} (e.g. {name}={v}). "
                                   "Stopping here")

    outdir = os.path.dirname(fname)
    if outdir:
        os.makedirs(outdir, exist_ok=True)
    with open(fname, 'w') as f:
        json.dump(kwargs, f, default=_to_builtin, indent=2)
