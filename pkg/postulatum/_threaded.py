import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from multiprocessing.dummy import Pool as ThreadPool

LOG = logging.getLogger(__name__)


def fan_out(func, partial_kwargs, payload, threads, processes=False):
    """
    Maps func over payload with `threads` workers; results keep the payload order.
    CPU-bound work passes processes=True, which needs func and its arguments to
    pickle.
    """
    if partial_kwargs:
        func = partial(func, **partial_kwargs)
    if threads <= 1 or len(payload) <= 1:
        return [func(item) for item in payload]
    if processes:
        with ProcessPoolExecutor(max_workers=threads) as executor:
            return list(executor.map(func, payload))
    pool = ThreadPool(threads)
    results = pool.map(func, payload)
    pool.close()
    pool.join()
    return results
