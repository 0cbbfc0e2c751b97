from testtools.assertions import assert_that
from testtools.matchers import Equals, Is, StartsWith

from twisted.python.failure import Failure

from fockarith.operators import FockOperator, identity, phase_up
from fockarith.report import CheckResult
from fockarith.tests.matchers import (
    Close, HasNoViolations, IsDiagonal, IsSkipped, OperatorEquals,
    WithErrorType)


class TestOperatorEquals(object):

    def test_equal(self):
        """
        When the operators are equal entrywise, match() should return None.
        """
        matcher = OperatorEquals(identity(3))
        assert_that(matcher.match(FockOperator.diagonal([1, 1, 1])), Is(None))

    def test_different_kinds_equal(self):
        """
        A sparse operator can match a diagonal one with the same entries.
        """
        sparse = FockOperator.from_entries(2, [(0, 0, 1), (1, 1, 1)])
        assert_that(OperatorEquals(identity(2)).match(sparse), Is(None))

    def test_dimension_mismatch(self):
        """
        When the dimensions differ, match() should say so.
        """
        match = OperatorEquals(identity(3)).match(identity(4))
        assert_that(match.describe(), Equals('Dimension 4 != 3'))

    def test_deviation(self):
        """
        When an entry differs by more than the tolerance, the mismatch should
        report the max deviation and where it first happens.
        """
        matcher = OperatorEquals(identity(3), tolerance=0.1)
        match = matcher.match(FockOperator.diagonal([1, 1.5, 1]))
        assert_that(match.describe(), Equals(
            'Max deviation 0.5 exceeds 0.1, first at (1, 1)'))

    def test_within_tolerance(self):
        """
        Differences up to the tolerance are accepted.
        """
        matcher = OperatorEquals(identity(2), tolerance=1e-9)
        assert_that(
            matcher.match(FockOperator.diagonal([1 + 1e-10, 1])), Is(None))


class TestIsDiagonal(object):

    def test_diagonal(self):
        """
        A diagonal operator with the expected values matches.
        """
        matcher = IsDiagonal([0, 1, 0])
        assert_that(
            matcher.match(FockOperator.diagonal([0, 1, 0])), Is(None))

    def test_not_diagonal(self):
        """
        A shift operator does not match.
        """
        match = IsDiagonal([0, 0]).match(phase_up(2))
        assert_that(match.describe(), StartsWith('<FockOperator'))

    def test_str(self):
        """
        The string representation should include the expected values.
        """
        assert_that(str(IsDiagonal([1, 2])), Equals('IsDiagonal([1, 2])'))


class TestClose(object):

    def test_close(self):
        """
        A value inside the tolerance matches.
        """
        assert_that(Close(1.0, 0.01).match(1.005), Is(None))

    def test_far(self):
        """
        A value outside the tolerance gives a mismatch naming both values.
        """
        match = Close(1.0, 0.01).match(1.5)
        assert_that(match.describe(),
                    Equals('1.5 is not within 0.01 of 1.0'))


class TestHasNoViolations(object):

    def test_all_passed(self):
        """
        Passing and skipped results are not violations.
        """
        results = [CheckResult.compare('a', 1, 0.0, 0.0),
                   CheckResult.skipped('b', 2, 'out of domain')]
        assert_that(HasNoViolations().match(results), Is(None))

    def test_failure(self):
        """
        A failed result gives a mismatch counting the failures.
        """
        results = [CheckResult.compare('a', 1, 0.0, 0.0),
                   CheckResult.compare('b', 2, 1.0, 0.0)]
        match = HasNoViolations().match(results)
        assert_that(match.describe(), StartsWith('1 of 2 checks failed'))

    def test_skipped_matcher(self):
        """
        IsSkipped matches skipped results of the given identity only.
        """
        skipped = CheckResult.skipped('ref1', 1, 'out of domain')
        assert_that(IsSkipped('ref1').match(skipped), Is(None))
        passed = CheckResult.compare('ref1', 1, 0.0, 0.0)
        assert IsSkipped('ref1').match(passed) is not None


class TestWithErrorType(object):

    def test_type_and_message(self):
        """
        A failure of the right type and message matches.
        """
        failure = Failure(ValueError('bad value'))
        assert_that(WithErrorType(ValueError, 'bad value').match(failure),
                    Is(None))
        assert_that(WithErrorType(ValueError).match(failure), Is(None))

    def test_wrong_type(self):
        """
        A failure of another type does not match.
        """
        failure = Failure(KeyError('x'))
        assert WithErrorType(ValueError).match(failure) is not None

    def test_wrong_message(self):
        """
        A failure with another message does not match.
        """
        failure = Failure(ValueError('bad value'))
        assert WithErrorType(ValueError, 'other').match(failure) is not None
