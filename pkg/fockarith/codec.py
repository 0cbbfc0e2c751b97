"""
A self-describing JSON record for :class:`FockOperator`:

    {"dim": D, "kind": "diagonal", "entries": [[re, im], ...]}
    {"dim": D, "kind": "sparse", "entries": [[row, col, [re, im]], ...]}
    {"dim": D, "kind": "up-shift", "entries": []}

Values must be finite. A sparse record whose entries all lie on the
diagonal is read back as a diagonal operator, so it is written again as a
diagonal record.
"""
import json
import math

from fockarith.operators import (
    DIAGONAL, DOWN_SHIFT, KINDS, SPARSE, UP_SHIFT, FockOperator)


class CodecError(ValueError):
    """ A malformed operator record. """


def _encode_complex(value):
    value = complex(value)
    return [value.real, value.imag]


def _decode_complex(pair):
    if not (isinstance(pair, list) and len(pair) == 2 and all(
            isinstance(x, (int, float)) and not isinstance(x, bool)
            for x in pair)):
        raise CodecError('complex values must be [re, im] pairs, got %r' % (
            pair,))
    if not all(math.isfinite(x) for x in pair):
        raise CodecError('complex values must be finite, got %r' % (pair,))
    return complex(pair[0], pair[1])


def operator_to_record(operator):
    if operator.kind == DIAGONAL:
        entries = [_encode_complex(v) for v in operator.diag()]
    elif operator.kind == SPARSE:
        entries = [[row, col, _encode_complex(value)]
                   for row, col, value in operator.entries()]
    else:
        entries = []
    return {'dim': operator.dim, 'kind': operator.kind, 'entries': entries}


def operator_from_record(record):
    if not isinstance(record, dict):
        raise CodecError('operator record must be an object, got %r' % (
            type(record).__name__,))
    missing = {'dim', 'kind', 'entries'} - set(record)
    if missing:
        raise CodecError('operator record is missing %s' % (
            ', '.join(sorted(missing)),))

    dim, kind, entries = record['dim'], record['kind'], record['entries']
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise CodecError('dim must be a positive integer, got %r' % (dim,))
    if kind not in KINDS:
        raise CodecError('unknown operator kind %r' % (kind,))
    if not isinstance(entries, list):
        raise CodecError('entries must be a list')

    if kind == DIAGONAL:
        if len(entries) != dim:
            raise CodecError('diagonal record has %d entries, expected %d' % (
                len(entries), dim))
        return FockOperator(
            dim, DIAGONAL, [_decode_complex(e) for e in entries])
    if kind in (UP_SHIFT, DOWN_SHIFT):
        if entries:
            raise CodecError('%s record must have no entries' % (kind,))
        return FockOperator(dim, kind)

    triples = []
    for entry in entries:
        if not (isinstance(entry, list) and len(entry) == 3):
            raise CodecError('sparse entries must be [row, col, [re, im]], '
                             'got %r' % (entry,))
        row, col, value = entry
        if not (isinstance(row, int) and isinstance(col, int)
                and 0 <= row < dim and 0 <= col < dim):
            raise CodecError('entry index (%r, %r) outside dimension %d' % (
                row, col, dim))
        triples.append((row, col, _decode_complex(value)))
    return FockOperator.from_entries(dim, triples)


def dumps(operator):
    try:
        text = json.dumps(
            operator_to_record(operator), sort_keys=True, allow_nan=False)
    except ValueError:
        raise CodecError(
            'operator has non-finite entries and cannot be written')
    return text + '\n'


def loads(text):
    try:
        record = json.loads(text)
    except ValueError as e:
        raise CodecError('operator record is not valid JSON: %s' % (e,))
    return operator_from_record(record)


def write_operator(stream, operator):
    stream.write(dumps(operator))


def read_operator(stream):
    return loads(stream.read())
