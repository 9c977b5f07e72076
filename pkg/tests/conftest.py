import time

import pytest

from qfideals import scan_h1
from qfideals.intkernel import primes_up_to


@pytest.fixture(scope="session")
def full_scan():
    """Single-threaded scan over |D| <= 20000, with its wall-clock time."""
    t0 = time.perf_counter()
    certs = scan_h1(1, 20000, jobs=1)
    elapsed = time.perf_counter() - t0
    return certs, elapsed


@pytest.fixture(scope="session")
def sieve_50k():
    return primes_up_to(50_000)
