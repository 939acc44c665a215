#!/usr/bin/python
import json
import os
from .tree import Tree
from ..errors import InvalidTree


def to_json(t):
    """
    Serialize a tree as `{"n": <int>, "edges": [[u, v], ...]}` with u < v and
    the edges sorted lexicographically.
    """
    return json.dumps(t.to_dict(), separators=(', ', ': '))


def _is_int(x):
    return isinstance(x, int) and not isinstance(x, bool)


def from_json(s):
    try:
        d = json.loads(s)
    except json.JSONDecodeError as e:
        raise InvalidTree(f"Not valid JSON: {e}")
    if (not isinstance(d, dict)) or ('n' not in d) or ('edges' not in d):
        raise InvalidTree("Tree JSON must have the keys 'n' and 'edges'")
    if not _is_int(d['n']):
        raise InvalidTree(f"'n' must be an integer, got {d['n']!r}")
    edges = d['edges']
    if (not isinstance(edges, list)) or not all(
            isinstance(e, list) and (len(e) == 2) and all(map(_is_int, e))
            for e in edges):
        raise InvalidTree("'edges' must be a list of integer pairs")
    return Tree.from_dict(d)


def read_tree(fname):
    """Read a tree stored in the JSON format of `to_json`."""
    if not os.path.isfile(fname):
        raise ValueError(f"File {fname} does not exist")
    with open(fname) as f:
        return from_json(f.read())


def to_dot(t, wiener=None):
    """
    Undirected DOT description of the tree with the vertex ids as node
    names. If given, the Wiener index goes into a leading comment.
    """
    lines = []
    if wiener is not None:
        lines.append(f"// wiener {wiener}")
    lines.append("graph {")
    if t.n == 1:
        lines.append("  0;")
    for u, v in t.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return '\n'.join(lines)
