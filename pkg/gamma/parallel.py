"""Batch runner for the exhaustive sweeps.

``fn`` must be a module-level function so worker processes can import it.
Results come back in completion order; callers merge them.
"""

from multiprocessing import Pool
import logging

from tqdm import tqdm


def split_range(start, stop, pieces):
    """Cut [start, stop) into at most ``pieces`` contiguous (lo, hi) chunks."""
    total = stop - start
    if total <= 0:
        return []
    pieces = max(1, min(pieces, total))
    step = -(-total // pieces)
    return [(lo, min(lo + step, stop)) for lo in range(start, stop, step)]


def batched(items, size):
    items = list(items)
    return [items[i:i + size] for i in range(0, len(items), size)]


def run_chunks(fn, chunks, workers=1, progress=False, desc=None):
    chunks = list(chunks)
    bar = tqdm(total=len(chunks), desc=desc, leave=False, disable=not progress)
    results = []
    try:
        if workers <= 1 or len(chunks) <= 1:
            for chunk in chunks:
                results.append(fn(chunk))
                bar.update(1)
        else:
            logging.info(f"Running {len(chunks)} chunks of {desc or fn.__name__} on {workers} workers")
            with Pool(processes=workers) as pool:
                for result in pool.imap_unordered(fn, chunks):
                    results.append(result)
                    bar.update(1)
                    logging.debug(f"{desc or fn.__name__}: {len(results)}/{len(chunks)} chunks done")
    finally:
        bar.close()
    return results
