"""JSON documents for every twistlab object.

This is the only place where indices change base: vertices, basis indices,
function values and permutations are 1-based on disk and 0-based in memory.
Scalars are integers over F_p and "num/den" strings over the rationals.
"""

import json
import logging
import os
import sys

from absred.blocks import FiberPartition
from absred.omega import OmegaMatrix
from algebra.field import FieldSpec
from algebra.linalg import EndoMap, Matrix
from algebra.structure import AlgebraStructure
from oracle.compare import GridSet
from quiver.quiver import Quiver, validate_admissible_shape
from twisting.grid import EGrid
from utils.config import SCHEMA_VERSION
from utils.errors import InputError, TwistlabError

logger = logging.getLogger(__name__)


def _require(doc, *keys):
    if not isinstance(doc, dict):
        raise InputError(f"expected a JSON object, got {type(doc).__name__}")
    missing = [key for key in keys if key not in doc]
    if missing:
        raise InputError(f"missing field(s) {', '.join(missing)}")


def _one_based(values):
    return [v + 1 for v in values]


def _zero_based(values, size, what):
    out = []
    for v in values:
        if not isinstance(v, int) or not 1 <= v <= size:
            raise InputError(f"{what} entry {v!r} outside 1..{size}")
        out.append(v - 1)
    return tuple(out)


def field_from_json(text):
    return FieldSpec.parse(text)


def vector_to_json(v):
    return [v.field.to_json(a) for a in v.coords]


def matrix_to_json(M):
    return [[M.field.to_json(a) for a in row] for row in M.rows]


def matrix_from_json(field, rows):
    if not isinstance(rows, list) or any(not isinstance(row, list) for row in rows):
        raise InputError("matrix must be an array of arrays")
    return Matrix.of(field, rows)


def quiver_to_json(q):
    return {'n': q.n, 'arrows': [_one_based(arrow) for arrow in q.arrows]}


def quiver_from_json(doc):
    _require(doc, 'n', 'arrows')
    n = doc['n']
    if not isinstance(n, int) or n < 1:
        raise InputError(f"n must be a positive integer, got {n!r}")
    arrows = []
    for arrow in doc['arrows']:
        if not isinstance(arrow, list) or len(arrow) != 2:
            raise InputError(f"arrow {arrow!r} is not a [source, target] pair")
        arrows.append(_zero_based(arrow, n, 'arrow'))
    return Quiver(n, tuple(arrows))


def shape_from_json(doc):
    return validate_admissible_shape(quiver_from_json(doc))


def algebra_to_json(algebra):
    return {
        'table': [[vector_to_json(v) for v in row] for row in algebra.table],
        'unit': vector_to_json(algebra.unit),
    }


def grid_to_json(g):
    doc = {
        'n': g.n,
        'm': g.m,
        'field': g.field.label,
        'E': [[matrix_to_json(g.entry(i, j)) for j in range(g.n)] for i in range(g.n)],
    }
    if not g.algebra.componentwise:
        doc['algebra'] = algebra_to_json(g.algebra)
    return doc


def grid_from_json(doc):
    """
    Read an EGrid; A = K^m unless an "algebra" table is given.

    Raises:
        InputError: missing fields or entries of the wrong size
    """
    _require(doc, 'n', 'm', 'field', 'E')
    field = field_from_json(doc['field'])
    n, m = doc['n'], doc['m']
    if 'algebra' in doc:
        _require(doc['algebra'], 'table', 'unit')
        algebra = AlgebraStructure.from_table(field, doc['algebra']['table'], doc['algebra']['unit'])
    else:
        algebra = AlgebraStructure.diagonal(field, m)
    rows = doc['E']
    if not isinstance(rows, list) or len(rows) != n \
            or any(not isinstance(row, list) or len(row) != n for row in rows):
        raise InputError(f"E must be a {n} x {n} array of matrices")
    try:
        entries = tuple(tuple(EndoMap.from_matrix(matrix_from_json(field, entry)) for entry in row) for row in rows)
        return EGrid(algebra, entries)
    except TwistlabError as error:
        raise InputError(f"malformed grid: {error}")


def twisted_algebra_to_json(t):
    structure = t.structure
    return {
        'n': t.n,
        'm': t.m,
        'dim': t.dim,
        'field': structure.field.label,
        'unit': vector_to_json(structure.unit),
        'structure': [[vector_to_json(v) for v in row] for row in structure.table],
    }


def omega_to_json(w):
    return {
        'field': w.field.label,
        'n': w.n,
        'm': w.m,
        'omega': [[[w.field.to_json(c) for c in f.coeffs] for f in row] for row in w.entries],
    }


def omega_from_json(doc):
    _require(doc, 'field', 'omega')
    field = field_from_json(doc['field'])
    rows = doc['omega']
    if not isinstance(rows, list) or any(not isinstance(row, list) or any(not isinstance(f, list) for f in row)
                                         for row in rows):
        raise InputError("omega must be an n x n array of coefficient arrays")
    try:
        return OmegaMatrix.of(field, rows)
    except TwistlabError as error:
        raise InputError(f"malformed omega matrix: {error}")


def omega_list_from_json(doc):
    """
    Read omega^1, ..., omega^m for extraction.

    Accepts {"field", "omegas": [omega, ...]} with one n x n array of
    coefficient arrays per coordinate, or an array of omega documents.

    Raises:
        InputError: neither form, or an empty list
    """
    if isinstance(doc, dict):
        _require(doc, 'field', 'omegas')
        if not isinstance(doc['omegas'], list):
            raise InputError("'omegas' must be an array")
        docs = [{'field': doc['field'], 'omega': omega} for omega in doc['omegas']]
    elif isinstance(doc, list):
        docs = doc
    else:
        raise InputError("expected an object with 'omegas' or an array of omega documents")
    if not docs:
        raise InputError("no omega matrices given")
    return [omega_from_json(d) for d in docs]


def normalized_to_json(nm):
    return {
        'field': nm.source.field.label,
        'u': _one_based(nm.partition.u),
        'fibers': [_one_based(fiber) for fiber in nm.partition.fibers],
        'X': matrix_to_json(nm.source),
        'normalized': matrix_to_json(nm.matrix),
        'sigmas': [_one_based(sigma) for sigma in nm.sigmas],
        'residuals': [matrix_to_json(z) for z in nm.residuals],
        'transform': matrix_to_json(nm.transform),
    }


def matrix_problem_from_json(doc):
    """Read {"field", "X", "u"} into (X, FiberPartition)."""
    _require(doc, 'field', 'X', 'u')
    field = field_from_json(doc['field'])
    X = matrix_from_json(field, doc['X'])
    u = doc['u']
    if len(u) != X.nrows:
        raise InputError(f"u has {len(u)} entries for a {X.nrows}-row matrix")
    if any(not isinstance(v, int) or v < 1 for v in u):
        raise InputError("u entries must be positive integers")
    return X, FiberPartition.from_function(v - 1 for v in u)


def canonical_form_to_json(form, field):
    return {
        'form': form.form,
        'x': field.to_json(form.x),
        'y': field.to_json(form.y),
        'alpha1': form.alpha1 + 1,
        'alpha2': form.alpha2 + 1,
    }


def rank_one_datum_to_json(d):
    return {'field': d.field.label, 'shape': quiver_to_json(d.shape.quiver), 'u': [_one_based(u) for u in d.u]}


def cycle_datum_to_json(d):
    return {'field': d.field.label, 'u': _one_based(d.u), 'a': [d.field.to_json(x) for x in d.a]}


def cycle_family_to_json(family):
    return {
        'u': _one_based(family.u),
        'a': family.describe(),
        'parameters': [f"a_{p + 1}" for p in family.parameters],
    }


def gridset_to_json(grids):
    return [grid_to_json(g) for g in grids]


def gridset_from_json(docs):
    if isinstance(docs, dict):
        docs = docs.get('grids')
    if not isinstance(docs, list):
        raise InputError("grid set must be an array of grids or an object with a 'grids' array")
    return GridSet(grid_from_json(doc) for doc in docs)


def axiom_report_to_json(report):
    return {
        'passed': report.passed,
        'axioms': [
            {'name': r.name, 'passed': r.passed, 'witness': None if r.witness is None else _one_based(r.witness)}
            for r in report.results
        ],
    }


def document(payload, seed):
    """Wrap a payload as a top-level output document."""
    return {'schema_version': SCHEMA_VERSION, 'seed': seed, **payload}


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def write_document(doc, path=None):
    """
    Write a document with sorted keys and a trailing newline.

    Args:
        doc: JSON-ready dict or list
        path: Output file; None prints to stdout
    """
    text = dumps(doc)
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        handle.write(text)
    logger.info(f"Wrote {path}")


def read_document(path):
    """
    Load a JSON file.

    Raises:
        InputError: the file is missing or not valid JSON
    """
    try:
        with open(path, encoding='utf-8') as handle:
            return json.load(handle)
    except OSError as error:
        raise InputError(f"cannot read {path}: {error.strerror}")
    except json.JSONDecodeError as error:
        raise InputError(f"{path} is not valid JSON: {error.msg} (line {error.lineno})")
