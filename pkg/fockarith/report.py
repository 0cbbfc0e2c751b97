import csv
import json
import math
import numbers

from twisted.logger import Logger


log = Logger()

PASS = 'pass'
FAIL = 'fail'
SKIP = 'skip'

SCHEDULE_COLUMNS = (
    'radius', 'direction-phase', 'value-re', 'value-im', 'error-bound')


class CheckResult(object):
    """
    The outcome of checking one identity at one point (an ``n``, a pair of
    moduli, a parameter tuple...).

    A failed identity is a record, never an exception. Identities checked
    outside their verified domain are recorded with ``status='skip'`` and a
    note saying why.
    """

    def __init__(self, identity, where, deviation, status, note=None,
                 detail=None):
        if status not in (PASS, FAIL, SKIP):
            raise ValueError('Unknown check status %r' % (status,))
        self.identity = identity
        self.where = where
        self.deviation = deviation
        self.status = status
        self.note = note
        self.detail = detail

    @classmethod
    def compare(cls, identity, where, deviation, tolerance, note=None,
                detail=None):
        """
        Build a result that passes iff ``deviation <= tolerance``. A NaN
        deviation always fails.
        """
        deviation = float(deviation)
        status = PASS if deviation <= tolerance else FAIL
        return cls(identity, where, deviation, status, note=note,
                   detail=detail)

    @classmethod
    def skipped(cls, identity, where, note):
        return cls(identity, where, None, SKIP, note=note)

    @property
    def passed(self):
        return self.status == PASS

    @property
    def failed(self):
        return self.status == FAIL

    def as_json(self):
        where = _jsonable(self.where)
        record = {
            'identity': self.identity,
            'where': where,
            'max-deviation': _jsonable(self.deviation),
            'pass': self.status != FAIL,
            'status': self.status,
        }
        if self.note is not None:
            record['note'] = self.note
        if self.detail is not None:
            record['detail'] = _jsonable(self.detail)
        return record

    def __repr__(self):
        return '<CheckResult %s at %r: %s (deviation=%r)>' % (
            self.identity, self.where, self.status, self.deviation)


def _jsonable(value):
    """ Plain JSON types for tuples, complex and numpy scalars. """
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, numbers.Integral) and not isinstance(value, bool):
        return int(value)
    if isinstance(value, numbers.Real):
        value = float(value)
        return value if math.isfinite(value) else None
    if isinstance(value, numbers.Complex):
        value = complex(value)
        return [value.real, value.imag]
    return value


class Report(object):
    """ An ordered collection of check results. """

    def __init__(self, results=()):
        self.results = list(results)

    def extend(self, results):
        self.results.extend(results)

    @property
    def violations(self):
        return [r for r in self.results if r.failed]

    @property
    def skips(self):
        return [r for r in self.results if r.status == SKIP]

    @property
    def ok(self):
        return not self.violations

    def summary(self):
        return {
            'checks': len(self.results),
            'violations': len(self.violations),
            'skipped': len(self.skips),
        }

    def as_json(self):
        return [r.as_json() for r in self.results]


def write_json(stream, obj):
    """
    Write a JSON document to a text stream, newline-terminated.
    """
    stream.write(json.dumps(obj, sort_keys=True, indent=2))
    stream.write('\n')


def write_report(stream, report):
    log.info('Writing report: {checks} checks, {violations} violations, '
             '{skipped} skipped', **report.summary())
    write_json(stream, report.as_json())


def write_schedule_csv(stream, rows):
    """
    Write Berezin symbol samples as CSV.

    :param rows:
        An iterable of ``(radius, phase, value, error)`` tuples where
        ``value`` is complex.
    """
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(SCHEDULE_COLUMNS)
    for radius, phase, value, error in rows:
        value = complex(value)
        writer.writerow(
            [repr(float(radius)), repr(float(phase)), repr(value.real),
             repr(value.imag), repr(float(error))])
