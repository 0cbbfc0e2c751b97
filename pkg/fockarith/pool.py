from twisted.internet.defer import FirstError, gatherResults, maybeDeferred
from twisted.internet.threads import deferToThreadPool
from twisted.logger import Logger
from twisted.python.threadpool import ThreadPool


log = Logger()


def _default_reactor(reactor=None):
    if reactor is None:
        from twisted.internet import reactor
    return reactor


def _run_serially(tasks):
    return [task() for task in tasks]


def run_tasks(tasks, jobs=1, reactor=None):
    """
    Run a list of zero-argument callables.

    :param int jobs:
        The number of worker threads. With a single job the tasks run
        synchronously, in order, and the Deferred has already fired when it
        is returned.
    :param reactor: The reactor to use for the thread pool.
    :return:
        A Deferred firing with the list of task results in task order,
        whatever order the workers finish in.
    """
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return maybeDeferred(_run_serially, tasks)

    reactor = _default_reactor(reactor)
    pool = ThreadPool(minthreads=0, maxthreads=jobs, name='fockarith')
    pool.start()
    log.debug('Running {count} tasks on {jobs} threads',
              count=len(tasks), jobs=jobs)

    d = gatherResults(
        [deferToThreadPool(reactor, pool, task) for task in tasks],
        consumeErrors=True)

    def unwrap(failure):
        failure.trap(FirstError)
        sub_failure = failure.value.subFailure
        log.failure('Verification task failed', sub_failure)
        return sub_failure

    def stop(result):
        pool.stop()
        return result

    d.addErrback(unwrap)
    return d.addBoth(stop)
